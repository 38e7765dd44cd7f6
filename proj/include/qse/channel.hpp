// Copyright 2026 The QSE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Quantum channels on d-dimensional systems in two representations:
//
//  * KrausSet: operators {A_j} with Phi(X) = sum_j A_j X A_j^dagger.
//  * ChoiMatrix: sigma(Phi) = (Phi (x) id)(|phi+><phi+|), the dynamical matrix
//    D(Phi) = d sigma(Phi) rescaled to unit trace.
//
// Index convention. |phi+> = d^{-1/2} sum_v |v>|v> with basis index a*d + b
// for |a>|b>; the channel acts on the first factor. For an operator A,
//
//     vec(A)[i*d + v] = A(i, v),
//
// so (A (x) I)|phi+> = d^{-1/2} vec(A) and sigma = (1/d) sum_j vec(A_j) vec(A_j)^dagger.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qse/entropy.hpp"
#include "qse/errors.hpp"
#include "qse/linalg.hpp"
#include "qse/random.hpp"

namespace qse {

inline constexpr double kCompletenessTolerance = 1e-10;
inline constexpr double kTracePreservationTolerance = 1e-8;
inline constexpr double kChoiRankCutoff = 1e-10;

/// An unraveling of a channel: square Kraus operators of equal shape with
/// sum_j A_j^dagger A_j = I.
class KrausSet {
 public:
  KrausSet() = default;
  KrausSet(std::vector<ComplexMatrix> ops, std::string label = {}) : ops_(std::move(ops)), label_(std::move(label)) {
    if (ops_.empty()) throw ValidationError("KrausSet: no operators");
    const Eigen::Index d = ops_.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& a : ops_) {
      if (a.rows() != d || a.cols() != d)
        throw ValidationError("KrausSet: operators must all be square of the same size");
      if (!a.allFinite()) throw ValidationError("KrausSet: non-finite entries");
      sum += a.adjoint() * a;
    }
    const double dev = (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (dev > kCompletenessTolerance)
      throw ValidationError("KrausSet: completeness violated, max deviation " + std::to_string(dev));
  }

  const std::vector<ComplexMatrix>& operators() const { return ops_; }
  const ComplexMatrix& operator[](std::size_t i) const { return ops_[i]; }
  std::size_t size() const { return ops_.size(); }
  Eigen::Index dim() const { return ops_.empty() ? 0 : ops_.front().rows(); }
  const std::string& label() const { return label_; }

 private:
  std::vector<ComplexMatrix> ops_;
  std::string label_;
};

/// Outcome of a complete-positivity/trace-preservation check.
struct CptpReport {
  double min_eigenvalue = 0.0;
  double trace_deviation = 0.0;  // ||tr_out(D) - I||_inf (max entry)
  double hermiticity_deviation = 0.0;
  bool completely_positive = false;
  bool trace_preserving = false;
  bool pass = false;
};

/// Checks a candidate sigma on C^d (x) C^d at tolerance 1e-8: sigma Hermitian
/// and positive semidefinite, and tracing the output factor of d*sigma gives I.
inline CptpReport validate_cptp(const ComplexMatrix& sigma, Eigen::Index d, double tol = kTracePreservationTolerance) {
  CptpReport r;
  if (d < 1 || sigma.rows() != d * d || sigma.cols() != d * d)
    throw DimensionError("validate_cptp: sigma must be d^2 x d^2");
  r.hermiticity_deviation = (sigma - sigma.adjoint()).cwiseAbs().maxCoeff();
  ComplexMatrix sym = 0.5 * (sigma + sigma.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  ComplexMatrix reduced = static_cast<double>(d) * partial_trace(sym, Subsystem::B, d, d);
  r.trace_deviation = (reduced - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  r.completely_positive = r.hermiticity_deviation <= tol && r.min_eigenvalue >= -tol;
  r.trace_preserving = r.trace_deviation <= tol;
  r.pass = r.completely_positive && r.trace_preserving;
  return r;
}

/// Rescaled dynamical matrix sigma(Phi) of a CPTP map on d-dimensional states.
class ChoiMatrix {
 public:
  ChoiMatrix() = default;
  ChoiMatrix(const ComplexMatrix& sigma, Eigen::Index d) : d_(d) {
    auto report = validate_cptp(sigma, d);
    if (!report.pass)
      throw ValidationError("ChoiMatrix: not CPTP (min eigenvalue " + std::to_string(report.min_eigenvalue) +
                            ", trace deviation " + std::to_string(report.trace_deviation) + ")");
    sigma_ = DensityOperator(sigma);
  }

  const DensityOperator& sigma() const { return sigma_; }
  const ComplexMatrix& matrix() const { return sigma_.matrix(); }
  ComplexMatrix dynamical_matrix() const { return static_cast<double>(d_) * sigma_.matrix(); }
  Eigen::Index dim() const { return d_; }

  /// Number of eigenvalues of sigma above 1e-10.
  std::size_t rank() const {
    std::size_t r = 0;
    for (double v : sigma_.eigenvalues())
      if (v > kChoiRankCutoff) ++r;
    return r;
  }

 private:
  DensityOperator sigma_;
  Eigen::Index d_ = 0;
};

/// Unitary matrix, validated to U^dagger U = I within 1e-10.
class UnitaryMatrix {
 public:
  UnitaryMatrix() = default;
  explicit UnitaryMatrix(ComplexMatrix u) : u_(std::move(u)) {
    if (!is_unitary(u_)) throw ValidationError("UnitaryMatrix: matrix is not unitary");
  }
  const ComplexMatrix& matrix() const { return u_; }
  Eigen::Index dim() const { return u_.rows(); }

 private:
  ComplexMatrix u_;
};

/// vec(A)[i*d + v] = A(i, v).
inline ComplexVector vectorize(const ComplexMatrix& a) {
  const Eigen::Index d = a.rows();
  ComplexVector v(d * a.cols());
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  return v;
}

inline ComplexMatrix unvectorize(const ComplexVector& v, Eigen::Index d) {
  if (v.size() != d * d) throw DimensionError("unvectorize: length is not d^2");
  ComplexMatrix a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = v(i * d + j);
  return a;
}

/// Phi(X) = sum_j A_j X A_j^dagger on an arbitrary d x d operator.
inline ComplexMatrix apply_channel(const KrausSet& kraus, const ComplexMatrix& x) {
  const Eigen::Index d = kraus.dim();
  if (x.rows() != d || x.cols() != d)
    throw DimensionError("apply_channel: operator is " + detail::shape_str(x) + ", channel dimension " + std::to_string(d));
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& a : kraus.operators()) out += a * x * a.adjoint();
  return out;
}

inline DensityOperator apply_channel(const KrausSet& kraus, const DensityOperator& rho) {
  return DensityOperator(apply_channel(kraus, rho.matrix()));
}

inline ComplexMatrix kraus_to_choi_matrix(const KrausSet& kraus) {
  const Eigen::Index d = kraus.dim();
  ComplexMatrix sigma = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& a : kraus.operators()) {
    ComplexVector v = vectorize(a);
    sigma += v * v.adjoint();
  }
  return sigma / static_cast<double>(d);
}

inline ChoiMatrix kraus_to_choi(const KrausSet& kraus) {
  return ChoiMatrix(kraus_to_choi_matrix(kraus), kraus.dim());
}

/// Minimal unraveling from the eigendecomposition of D(Phi): one operator per
/// eigenvalue of sigma above 1e-10, A = sqrt(d lambda) unvec(v).
inline KrausSet choi_to_kraus(const ChoiMatrix& choi, std::string label = {}) {
  const Eigen::Index d = choi.dim();
  const auto& spec = choi.sigma().spectrum();
  std::vector<ComplexMatrix> ops;
  for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
    const double lam = spec.eigenvalues[k];
    if (lam <= kChoiRankCutoff) continue;
    ComplexVector v = spec.eigenvectors.col(static_cast<Eigen::Index>(k));
    ops.push_back(std::sqrt(static_cast<double>(d) * lam) * unvectorize(v, d));
  }
  return KrausSet(std::move(ops), std::move(label));
}

/// Phi(X) = tr_R( D(Phi) (I (x) X^T) ).
inline ComplexMatrix reconstruct_action(const ChoiMatrix& choi, const ComplexMatrix& x) {
  const Eigen::Index d = choi.dim();
  if (x.rows() != d || x.cols() != d) throw DimensionError("reconstruct_action: operator must be d x d");
  ComplexMatrix prod = choi.dynamical_matrix() * kron(ComplexMatrix::Identity(d, d), x.transpose());
  return partial_trace(prod, Subsystem::A, d, d);
}

/// Index reshuffle taking an operator on (Q1 R1)(Q2 R2) to (Q1 Q2)(R1 R2).
/// Applied to sigma(Phi1) (x) sigma(Phi2) it yields sigma(Phi1 (x) Phi2).
inline ComplexMatrix reorder_choi_product(const ComplexMatrix& product, Eigen::Index d1, Eigen::Index d2) {
  const Eigen::Index n = d1 * d1 * d2 * d2;
  if (product.rows() != n || product.cols() != n) throw DimensionError("reorder_choi_product: size mismatch");
  const Eigen::Index d12 = d1 * d2;
  // position in the product basis for |q1 r1>|q2 r2>
  auto src = [&](Eigen::Index q1, Eigen::Index r1, Eigen::Index q2, Eigen::Index r2) {
    return (q1 * d1 + r1) * (d2 * d2) + (q2 * d2 + r2);
  };
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  for (Eigen::Index q1 = 0; q1 < d1; ++q1)
    for (Eigen::Index q2 = 0; q2 < d2; ++q2)
      for (Eigen::Index r1 = 0; r1 < d1; ++r1)
        for (Eigen::Index r2 = 0; r2 < d2; ++r2)
          perm[static_cast<std::size_t>((q1 * d2 + q2) * d12 + (r1 * d2 + r2))] = src(q1, r1, q2, r2);
  ComplexMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = product(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  return out;
}

/// Choi matrix of Phi1 (x) Phi2 on dimension d1*d2.
inline ChoiMatrix tensor_channels(const ChoiMatrix& c1, const ChoiMatrix& c2) {
  ComplexMatrix prod = kron(c1.matrix(), c2.matrix());
  return ChoiMatrix(reorder_choi_product(prod, c1.dim(), c2.dim()), c1.dim() * c2.dim());
}

/// Kraus set {A_i (x) B_j} of Phi1 (x) Phi2.
inline KrausSet tensor_kraus(const KrausSet& k1, const KrausSet& k2) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(k1.size() * k2.size());
  for (const auto& a : k1.operators())
    for (const auto& b : k2.operators()) ops.push_back(kron(a, b));
  return KrausSet(std::move(ops), k1.label() + "*" + k2.label());
}

/// B_i = sum_j A_j u_{ji}. When u is larger than the number of operators the
/// set is padded with zero operators first.
inline KrausSet transform_unraveling(const KrausSet& kraus, const UnitaryMatrix& u) {
  const auto k = static_cast<Eigen::Index>(kraus.size());
  const Eigen::Index m = u.dim();
  if (m < k) throw DimensionError("transform_unraveling: unitary smaller than the Kraus set");
  const Eigen::Index d = kraus.dim();
  std::vector<ComplexMatrix> out(static_cast<std::size_t>(m), ComplexMatrix::Zero(d, d));
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < k; ++j) out[static_cast<std::size_t>(i)] += kraus[static_cast<std::size_t>(j)] * u.matrix()(j, i);
  return KrausSet(std::move(out), kraus.label());
}

// ---------------------------------------------------------------------------
// Standard channels

inline KrausSet identity_channel(Eigen::Index d) {
  if (d < 1) throw InvalidParameter("identity_channel: d must be >= 1");
  return KrausSet({ComplexMatrix::Identity(d, d)}, "identity");
}

inline KrausSet unitary_channel(const UnitaryMatrix& u) { return KrausSet({u.matrix()}, "unitary"); }

inline ComplexMatrix maximally_entangled_matrix(Eigen::Index d) {
  ComplexVector v = ComplexVector::Zero(d * d);
  for (Eigen::Index k = 0; k < d; ++k) v(k * d + k) = 1.0 / std::sqrt(static_cast<double>(d));
  return v * v.adjoint();
}

/// |phi+><phi+| on C^d (x) C^d.
inline DensityOperator maximally_entangled_state(Eigen::Index d) {
  if (d < 2) throw InvalidParameter("maximally_entangled_state: d must be >= 2");
  return DensityOperator(maximally_entangled_matrix(d));
}

/// Phi(rho) = (1-p) rho + p I/d, 0 <= p <= 1. For d = 2 the Kraus set is the
/// Pauli set {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}; for d > 2
/// it is the minimal unraveling of the Choi matrix (1-p)|phi+><phi+| + p I/d^2.
/// (Complete positivity extends to p <= d^2/(d^2-1); that range is not accepted.)
inline KrausSet depolarizing_channel(Eigen::Index d, double p) {
  if (d < 2) throw InvalidParameter("depolarizing_channel: d must be >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("depolarizing_channel: p must lie in [0,1]");
  if (d == 2) {
    const Complex i(0.0, 1.0);
    ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, -i, i, 0;
    z << 1, 0, 0, -1;
    const double a = std::sqrt(1.0 - 0.75 * p);
    const double b = std::sqrt(0.25 * p);
    return KrausSet({a * id, b * x, b * y, b * z}, "depolarizing");
  }
  const double dd = static_cast<double>(d);
  ComplexMatrix sigma = (1.0 - p) * maximally_entangled_matrix(d) + p * ComplexMatrix::Identity(d * d, d * d) / (dd * dd);
  return choi_to_kraus(ChoiMatrix(sigma, d), "depolarizing");
}

/// Pinching rho -> sum_j P_j rho P_j for orthogonal projectors summing to I.
inline KrausSet pinching_channel(const std::vector<ComplexMatrix>& projectors) {
  if (projectors.empty()) throw InvalidParameter("pinching_channel: no projectors");
  const Eigen::Index d = projectors.front().rows();
  for (const auto& p : projectors) {
    if (p.rows() != d || p.cols() != d) throw DimensionError("pinching_channel: projectors must be d x d");
    if ((p * p - p).cwiseAbs().maxCoeff() > 1e-10 || (p - p.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
      throw InvalidParameter("pinching_channel: operator is not an orthogonal projector");
  }
  for (std::size_t i = 0; i < projectors.size(); ++i)
    for (std::size_t j = i + 1; j < projectors.size(); ++j)
      if ((projectors[i] * projectors[j]).cwiseAbs().maxCoeff() > 1e-10)
        throw InvalidParameter("pinching_channel: projectors are not mutually orthogonal");
  return KrausSet(projectors, "pinching");
}

/// Pinching onto the rank-1 projectors of an orthonormal basis (columns of `basis`).
inline KrausSet basis_pinching(const ComplexMatrix& basis) {
  if (!is_unitary(basis)) throw InvalidParameter("basis_pinching: basis must be unitary");
  std::vector<ComplexMatrix> ps;
  for (Eigen::Index k = 0; k < basis.cols(); ++k) ps.push_back(basis.col(k) * basis.col(k).adjoint());
  return pinching_channel(ps);
}

inline KrausSet computational_pinching(Eigen::Index d) {
  return basis_pinching(ComplexMatrix::Identity(d, d));
}

/// Decay of every level |k>, k >= 1, to |0> with probability gamma.
inline KrausSet amplitude_damping_channel(Eigen::Index d, double gamma) {
  if (d < 2) throw InvalidParameter("amplitude_damping_channel: d must be >= 2");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw InvalidParameter("amplitude_damping_channel: gamma must lie in [0,1]");
  std::vector<ComplexMatrix> ops;
  ComplexMatrix a0 = ComplexMatrix::Zero(d, d);
  a0(0, 0) = 1.0;
  for (Eigen::Index k = 1; k < d; ++k) a0(k, k) = std::sqrt(1.0 - gamma);
  ops.push_back(a0);
  for (Eigen::Index k = 1; k < d; ++k) {
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    a(0, k) = std::sqrt(gamma);
    ops.push_back(a);
  }
  return KrausSet(std::move(ops), "amplitude_damping");
}

/// Phi(rho) = (1-lambda) rho + lambda diag(rho).
inline KrausSet phase_damping_channel(Eigen::Index d, double lambda) {
  if (d < 2) throw InvalidParameter("phase_damping_channel: d must be >= 2");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidParameter("phase_damping_channel: lambda must lie in [0,1]");
  std::vector<ComplexMatrix> ops;
  ops.push_back(std::sqrt(1.0 - lambda) * ComplexMatrix::Identity(d, d));
  for (Eigen::Index k = 0; k < d; ++k) {
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    a(k, k) = std::sqrt(lambda);
    ops.push_back(a);
  }
  return KrausSet(std::move(ops), "phase_damping");
}

namespace channels {
struct Identity {};
struct Unitary {
  UnitaryMatrix u;
};
struct Depolarizing {
  double p = 1.0;
};
struct Pinching {
  std::vector<ComplexMatrix> projectors;  // empty: computational basis
};
struct AmplitudeDamping {
  double gamma = 0.0;
};
struct PhaseDamping {
  double lambda = 0.0;
};
}  // namespace channels

using ChannelKind = std::variant<channels::Identity, channels::Unitary, channels::Depolarizing, channels::Pinching,
                                 channels::AmplitudeDamping, channels::PhaseDamping>;

inline KrausSet standard_channel(const ChannelKind& kind, Eigen::Index d) {
  struct Visitor {
    Eigen::Index d;
    KrausSet operator()(const channels::Identity&) const { return identity_channel(d); }
    KrausSet operator()(const channels::Unitary& c) const {
      if (c.u.dim() != d) throw DimensionError("standard_channel: unitary has wrong dimension");
      return unitary_channel(c.u);
    }
    KrausSet operator()(const channels::Depolarizing& c) const { return depolarizing_channel(d, c.p); }
    KrausSet operator()(const channels::Pinching& c) const {
      return c.projectors.empty() ? computational_pinching(d) : pinching_channel(c.projectors);
    }
    KrausSet operator()(const channels::AmplitudeDamping& c) const { return amplitude_damping_channel(d, c.gamma); }
    KrausSet operator()(const channels::PhaseDamping& c) const { return phase_damping_channel(d, c.lambda); }
  };
  return std::visit(Visitor{d}, kind);
}

/// Random channel with Choi rank `rank`: a (d*rank) x d Ginibre matrix G is
/// turned into the isometry W = G (G^dagger G)^{-1/2} and cut into rank blocks.
inline KrausSet random_channel(Eigen::Index d, Eigen::Index rank, std::uint64_t seed) {
  if (d < 1) throw InvalidParameter("random_channel: d must be >= 1");
  if (rank < 1 || rank > d * d) throw InvalidParameter("random_channel: rank must lie in [1, d^2]");
  Rng rng(seed);
  ComplexMatrix g = ginibre(d * rank, d, rng);
  auto eig = hermitian_eig(g.adjoint() * g);
  RealVector inv_sqrt(d);
  for (Eigen::Index k = 0; k < d; ++k) inv_sqrt(k) = 1.0 / std::sqrt(eig.eigenvalues[static_cast<std::size_t>(k)]);
  ComplexMatrix w = g * (eig.eigenvectors * inv_sqrt.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint());
  std::vector<ComplexMatrix> ops;
  for (Eigen::Index j = 0; j < rank; ++j) ops.push_back(w.block(j * d, 0, d, d));
  return KrausSet(std::move(ops), "random");
}

}  // namespace qse
