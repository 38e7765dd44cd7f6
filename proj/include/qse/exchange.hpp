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

// (q,s)-entropy exchange: the entropy a channel deposits in an initially pure
// environment. Two routes compute it:
//
//  * environment route: W_ij = tr(A_i rho A_j^dagger), a k x k density matrix
//    (the environment marginal of the Stinespring dilation);
//  * joint route: (Phi (x) id)(|psi><psi|) for a purification psi of rho,
//    a d^2 x d^2 density matrix.
//
// The joint output and the environment are complementary marginals of a pure
// state, so both have the same nonzero spectrum. The library uses W for the
// value and keeps the joint route as a cross-check.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qse/channel.hpp"
#include "qse/entropy.hpp"
#include "qse/map_entropy.hpp"
#include "qse/report.hpp"

namespace qse {

struct Purification {
  ComplexVector vector;  // on H_Q (x) H_R, index q*d + r
  DensityOperator source;
};

/// Canonical purification sum_j sqrt(lambda_j) |e_j> (x) |j>, with the
/// eigenpairs of rho from hermitian_eig (descending, fixed phases).
inline Purification purify(const DensityOperator& rho) {
  const Eigen::Index d = rho.dim();
  const auto& spec = rho.spectrum();
  ComplexVector psi = ComplexVector::Zero(d * d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const double lam = spec.eigenvalues[static_cast<std::size_t>(j)];
    if (lam <= 0.0) continue;
    const double amp = std::sqrt(lam);
    for (Eigen::Index a = 0; a < d; ++a) psi(a * d + j) = amp * spec.eigenvectors(a, j);
  }
  psi /= psi.norm();
  return Purification{psi, rho};
}

/// Environment matrix W_ij = tr(A_i rho A_j^dagger).
inline ComplexMatrix environment_matrix(const KrausSet& kraus, const DensityOperator& rho) {
  if (rho.dim() != kraus.dim()) throw DimensionError("environment_matrix: state and channel dimensions differ");
  const auto k = static_cast<Eigen::Index>(kraus.size());
  ComplexMatrix w(k, k);
  std::vector<ComplexMatrix> a_rho;
  for (const auto& a : kraus.operators()) a_rho.push_back(a * rho.matrix());
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      w(i, j) = (a_rho[static_cast<std::size_t>(i)] * kraus[static_cast<std::size_t>(j)].adjoint()).trace();
  return 0.5 * (w + w.adjoint());
}

/// (Phi (x) id)(|psi><psi|) on H_Q (x) H_R.
inline ComplexMatrix joint_output(const KrausSet& kraus, const Purification& psi) {
  const Eigen::Index d = kraus.dim();
  if (psi.vector.size() != d * d) throw DimensionError("joint_output: purification has the wrong length");
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  for (const auto& a : kraus.operators()) {
    ComplexVector v = kron(a, id) * psi.vector;
    out += v * v.adjoint();
  }
  return out;
}

/// Stinespring isometry V = sum_j |e_j> (x) A_j, shape (k d) x d, environment
/// factor first. tr_E(V rho V^dagger) = Phi(rho) and tr_Q(V rho V^dagger) = W.
inline ComplexMatrix stinespring_isometry(const KrausSet& kraus) {
  const Eigen::Index d = kraus.dim();
  const auto k = static_cast<Eigen::Index>(kraus.size());
  ComplexMatrix v(k * d, d);
  for (Eigen::Index j = 0; j < k; ++j) v.block(j * d, 0, d, d) = kraus[static_cast<std::size_t>(j)];
  return v;
}

/// Entropy exchange from the environment matrix W.
inline double entropy_exchange(const DensityOperator& rho, const KrausSet& kraus, const EntropyParams& params) {
  return unified_entropy(DensityOperator(environment_matrix(kraus, rho)), params);
}

/// Entropy exchange from the joint output of a purification.
inline double entropy_exchange_joint(const Purification& psi, const KrausSet& kraus, const EntropyParams& params) {
  return unified_entropy(DensityOperator(joint_output(kraus, psi)), params);
}

struct ExchangeComparison {
  double environment_value = 0.0;
  double joint_value = 0.0;
  std::vector<double> environment_spectrum;  // nonzero eigenvalues, descending
  std::vector<double> joint_spectrum;
  double spectrum_residual = 0.0;  // max elementwise difference; inf if counts differ
};

inline std::vector<double> nonzero_spectrum(const DensityOperator& rho, double cutoff = kChoiRankCutoff) {
  std::vector<double> out;
  for (double v : rho.eigenvalues())
    if (v > cutoff) out.push_back(v);
  return out;
}

/// Both routes side by side, for cross-checking.
inline ExchangeComparison compare_exchange_routes(const DensityOperator& rho, const KrausSet& kraus,
                                                  const EntropyParams& params) {
  DensityOperator w(environment_matrix(kraus, rho));
  DensityOperator joint(joint_output(kraus, purify(rho)));
  ExchangeComparison c;
  c.environment_value = unified_entropy(w, params);
  c.joint_value = unified_entropy(joint, params);
  c.environment_spectrum = nonzero_spectrum(w);
  c.joint_spectrum = nonzero_spectrum(joint);
  if (c.environment_spectrum.size() != c.joint_spectrum.size()) {
    c.spectrum_residual = kInfinity;
  } else {
    for (std::size_t i = 0; i < c.joint_spectrum.size(); ++i)
      c.spectrum_residual = std::max(c.spectrum_residual, std::abs(c.joint_spectrum[i] - c.environment_spectrum[i]));
  }
  return c;
}

namespace detail {

/// The three triangle relations among a, b, c, labelled by which quantity is
/// in the middle: |x - y| <= z <= x + y.
inline std::vector<Margin> triangle_margins(const std::string& na, double a, const std::string& nb, double b,
                                            const std::string& nc, double c) {
  return {Margin{nb + "_between", std::abs(a - c), b, a + c}, Margin{na + "_between", std::abs(b - c), a, b + c},
          Margin{nc + "_between", std::abs(a - b), c, a + b}};
}

inline bool in_subadditive_region(const EntropyParams& p) { return p.q > 1.0 && p.s >= 1.0 / p.q - 1e-15; }

inline void finish_triangle_report(Report& r, double tol) {
  double worst = 0.0;
  for (const auto& m : r.margins) worst = std::max(worst, -m.slack());
  r.max_violation = worst;
  r.pass = r.mode == CheckMode::exploratory || worst <= tol;
}

}  // namespace detail

/// Triangle and subadditivity relations among H(rho), H(Phi(rho)) and the
/// entropy exchange, in all three arrangements. Asserted for q > 1, s >= 1/q.
inline Report check_lindblad_extension(const DensityOperator& rho, const KrausSet& kraus, const EntropyParams& params,
                                       double tol = kAssertionTolerance) {
  Report r;
  r.theorem = "theorem4";
  r.params = params;
  r.mode = detail::in_subadditive_region(params) ? CheckMode::assertion : CheckMode::exploratory;
  const double h_in = unified_entropy(rho, params);
  const double h_out = unified_entropy(apply_channel(kraus, rho), params);
  const double h_ex = entropy_exchange(rho, kraus, params);
  r.margins = detail::triangle_margins("input", h_in, "output", h_out, "exchange", h_ex);
  detail::finish_triangle_report(r, tol);
  return r;
}

/// Output of Phi1 (x) Phi2 on |psi+><psi+| computed directly from the Kraus sets.
inline ComplexMatrix entangled_output(const KrausSet& k1, const KrausSet& k2) {
  if (k1.dim() != k2.dim()) throw DimensionError("entangled_output: channels act on different dimensions");
  return apply_channel(tensor_kraus(k1, k2), maximally_entangled_matrix(k1.dim()));
}

/// Bounds on the entropy of (Phi1 (x) Phi2)(|psi+><psi+|) by the two map
/// entropies. Also checks that the output equals (Phi1 (x) id) applied to
/// sigma(Phi2) with its factors swapped; a mismatch above 1e-9 fails the report.
inline Report check_entangled_output_bounds(const KrausSet& k1, const KrausSet& k2, const EntropyParams& params,
                                            double tol = kAssertionTolerance) {
  if (k1.dim() != k2.dim()) throw DimensionError("check_entangled_output_bounds: channels act on different dimensions");
  const Eigen::Index d = k1.dim();
  Report r;
  r.theorem = "theorem5";
  r.params = params;
  r.mode = detail::in_subadditive_region(params) ? CheckMode::assertion : CheckMode::exploratory;

  ComplexMatrix direct = entangled_output(k1, k2);
  ChoiMatrix c1 = kraus_to_choi(k1);
  ChoiMatrix c2 = kraus_to_choi(k2);
  ComplexMatrix swap = swap_operator(d, d);
  ComplexMatrix factored = apply_channel(tensor_kraus(k1, identity_channel(d)), swap * c2.matrix() * swap.adjoint());
  const double consistency = (direct - factored).cwiseAbs().maxCoeff();

  const double m1 = map_entropy(c1, params);
  const double m2 = map_entropy(c2, params);
  const double h_out = unified_entropy(DensityOperator(direct), params);
  r.margins = detail::triangle_margins("map1", m1, "output", h_out, "map2", m2);
  detail::finish_triangle_report(r, tol);
  if (consistency > 1e-9) {
    r.pass = false;
    r.note = "factorization mismatch " + std::to_string(consistency);
  }
  return r;
}

}  // namespace qse
