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

// Dense complex linear algebra used by every other header: Hilbert-Schmidt
// inner product, singular values and Schatten norms, deterministic Hermitian
// eigendecomposition, Kronecker products and partial traces.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "qse/errors.hpp"

namespace qse {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Relative Hermiticity tolerance, measured in the max-entry norm.
inline constexpr double kHermitianTolerance = 1e-10;

/// Singular values below this fraction of the largest one are outside the support.
inline constexpr double kSupportCutoff = 1e-12;

/// Eigen-decomposition of a Hermitian matrix.
///
/// Eigenvalues are sorted descending. Each eigenvector column is rescaled by a
/// phase so that its first significant component is real and positive, which
/// makes the decomposition reproducible for non-degenerate spectra.
struct HermitianSpectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const {
    RealVector lam = Eigen::Map<const RealVector>(eigenvalues.data(),
                                                  static_cast<Eigen::Index>(eigenvalues.size()));
    return eigenvectors * lam.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  }
};

enum class Subsystem { A, B };

namespace detail {

inline double max_abs_entry(const ComplexMatrix& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

inline void require_finite(const ComplexMatrix& x, const char* what) {
  if (!x.allFinite()) throw DomainError(std::string(what) + ": matrix has non-finite entries");
}

inline std::string shape_str(const ComplexMatrix& x) {
  return std::to_string(x.rows()) + "x" + std::to_string(x.cols());
}

}  // namespace detail

/// Hilbert-Schmidt inner product tr(x^dagger y).
inline Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw DimensionError("hs_inner: shape mismatch " + detail::shape_str(x) + " vs " +
                         detail::shape_str(y));
  return (x.conjugate().cwiseProduct(y)).sum();
}

/// Singular values in descending order; min(rows, cols) of them.
inline std::vector<double> singular_values(const ComplexMatrix& x) {
  detail::require_finite(x, "singular_values");
  if (x.size() == 0) return {};
  Eigen::JacobiSVD<ComplexMatrix> svd(x);
  const RealVector& sv = svd.singularValues();
  std::vector<double> out(sv.data(), sv.data() + sv.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Schatten norm of a list of singular values. Scaled by the largest value so
/// large p does not overflow.
inline double schatten_norm_from_singular_values(std::span<const double> sv, double p) {
  if (!(p >= 1.0)) throw InvalidParameter("schatten_norm: p must be >= 1 or infinity");
  double top = 0.0;
  for (double v : sv) top = std::max(top, v);
  if (top == 0.0) return 0.0;
  if (std::isinf(p)) return top;
  double acc = 0.0;
  for (double v : sv) acc += std::pow(v / top, p);
  return top * std::pow(acc, 1.0 / p);
}

/// Schatten p-norm, p >= 1 or p = kInfinity. Always evaluated from singular values.
inline double schatten_norm(const ComplexMatrix& x, double p) {
  if (!(p >= 1.0)) throw InvalidParameter("schatten_norm: p must be >= 1 or infinity");
  auto sv = singular_values(x);
  return schatten_norm_from_singular_values(sv, p);
}

/// The power mean ((1/n) sum x_j^q)^(1/q).
inline double q_mean(std::span<const double> values, double q) {
  if (values.empty()) throw InvalidParameter("q_mean: empty list");
  if (!(q >= 1.0)) throw InvalidParameter("q_mean: q must be >= 1");
  double acc = 0.0;
  for (double v : values) {
    if (v < 0.0) throw DomainError("q_mean: values must be nonnegative");
    acc += std::pow(v, q);
  }
  return std::pow(acc / static_cast<double>(values.size()), 1.0 / q);
}

/// Number of singular values above kSupportCutoff times the largest one.
inline std::size_t support_dimension(const ComplexMatrix& x) {
  auto sv = singular_values(x);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cut = kSupportCutoff * sv.front();
  return static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [&](double v) { return v > cut; }));
}

inline bool is_hermitian(const ComplexMatrix& h, double rel_tol = kHermitianTolerance) {
  if (h.rows() != h.cols()) return false;
  const double scale = detail::max_abs_entry(h);
  return detail::max_abs_entry(h - h.adjoint()) <= rel_tol * scale;
}

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (h + h^dagger)/2 before decomposition.
inline HermitianSpectrum hermitian_eig(const ComplexMatrix& h) {
  if (h.rows() != h.cols())
    throw DimensionError("hermitian_eig: matrix is not square (" + detail::shape_str(h) + ")");
  detail::require_finite(h, "hermitian_eig");
  if (!is_hermitian(h))
    throw SymmetryError("hermitian_eig: matrix is not Hermitian within relative tolerance 1e-10");

  const Eigen::Index n = h.rows();
  HermitianSpectrum out;
  if (n == 0) return out;

  ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw Error("hermitian_eig: eigensolver did not converge");

  // Eigen sorts ascending; flip to descending.
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues[static_cast<std::size_t>(k)] = solver.eigenvalues()(n - 1 - k);
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }

  for (Eigen::Index k = 0; k < n; ++k) {
    auto col = out.eigenvectors.col(k);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double mag = std::abs(col(i));
      if (mag > 1e-8) {
        col *= std::conj(col(i)) / mag;
        col(i) = Complex(mag, 0.0);
        break;
      }
    }
  }
  return out;
}

/// Kronecker product x (x) y.
inline ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  return Eigen::kroneckerProduct(x, y).eval();
}

/// Partial trace of an operator on H_A (x) H_B. `keep` names the factor that
/// survives; the other one is traced out.
inline ComplexMatrix partial_trace(const ComplexMatrix& x, Subsystem keep, Eigen::Index dim_a,
                                   Eigen::Index dim_b) {
  if (dim_a <= 0 || dim_b <= 0) throw DimensionError("partial_trace: dimensions must be positive");
  if (x.rows() != x.cols() || x.rows() != dim_a * dim_b)
    throw DimensionError("partial_trace: matrix " + detail::shape_str(x) + " does not factor as " +
                         std::to_string(dim_a) + "*" + std::to_string(dim_b));
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (Eigen::Index b = 0; b < dim_b; ++b)
      out += x(Eigen::seqN(b, dim_a, dim_b), Eigen::seqN(b, dim_a, dim_b));
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (Eigen::Index a = 0; a < dim_a; ++a) out += x.block(a * dim_b, a * dim_b, dim_b, dim_b);
  return out;
}

/// Factor F(d, p, q) = d^((q-1)/(p q)) with ||x||_p <= F ||x||_{pq} for any x
/// whose support has dimension d. For q = infinity the factor is d^(1/p).
inline double schatten_bound_factor(std::size_t d, double p, double q) {
  if (d < 1) throw InvalidParameter("schatten_bound_factor: d must be >= 1");
  if (!(p >= 1.0) || std::isinf(p)) throw InvalidParameter("schatten_bound_factor: p must be finite and >= 1");
  if (!(q >= 1.0)) throw InvalidParameter("schatten_bound_factor: q must be >= 1 or infinity");
  const double dd = static_cast<double>(d);
  if (std::isinf(q)) return std::pow(dd, 1.0 / p);
  return std::pow(dd, (q - 1.0) / (p * q));
}

/// Slack F * ||x||_{pq} - ||x||_p of the Schatten comparison, with d taken as
/// the support dimension of x. Nonnegative up to rounding; zero exactly when x
/// is a multiple of a unitary on its support.
inline double schatten_bound_slack(const ComplexMatrix& x, double p, double q) {
  auto sv = singular_values(x);
  if (sv.empty() || sv.front() == 0.0) return 0.0;
  const double cut = kSupportCutoff * sv.front();
  std::size_t d = static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [&](double v) { return v > cut; }));
  const double pq = std::isinf(q) ? kInfinity : p * q;
  return schatten_bound_factor(d, p, q) * schatten_norm_from_singular_values(sv, pq) -
         schatten_norm_from_singular_values(sv, p);
}

inline bool is_unitary(const ComplexMatrix& u, double tol = 1e-10) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

/// Swap operator on C^da (x) C^db, mapping |a>|b> to |b>|a>.
inline ComplexMatrix swap_operator(Eigen::Index da, Eigen::Index db) {
  ComplexMatrix s = ComplexMatrix::Zero(da * db, da * db);
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index b = 0; b < db; ++b) s(b * da + a, a * db + b) = 1.0;
  return s;
}

}  // namespace qse
