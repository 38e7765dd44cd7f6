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

// Unified (q,s)-entropies
//
//   H_q^(s)(p) = [ (sum_i p_i^q)^s - 1 ] / ((1-q) s)
//
// with the von Neumann/Shannon entropy at q = 1, the Renyi entropy at s = 0
// and the Tsallis entropy at s = 1. All quantum entropies are evaluated from
// the spectrum of the density operator.
//
// Numerics: ln(sum p^q) is formed as log1p(sum p * expm1((q-1) ln p)), and the
// generic branch as expm1(s ln(sum p^q)) / ((1-q) s). Both stay accurate for q
// close to 1 and s close to 0, so the limits are approached continuously.

#pragma once

#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "qse/errors.hpp"
#include "qse/linalg.hpp"

namespace qse {

/// Probabilities or eigenvalues at or below this value count as exact zeros.
/// It sits just above the rounding floor of eigensolvers on unit-trace
/// matrices up to 81x81, so noise in a zero eigenvalue is not raised to a
/// small power q.
inline constexpr double kSpectralZero = 1e-13;

/// Tolerances of the ProbabilityVector/DensityOperator invariants.
inline constexpr double kNormalizationTolerance = 1e-10;
inline constexpr double kProbabilityClip = 1e-12;
inline constexpr double kEigenvalueClip = 1e-10;

struct EntropyParams {
  enum class Mode { generic, von_neumann, renyi, tsallis };

  double q = 1.0;
  double s = 1.0;
  Mode mode = Mode::von_neumann;

  EntropyParams() = default;
  EntropyParams(double q_, double s_) : q(q_), s(s_) {
    if (!std::isfinite(q) || !(q > 0.0)) throw InvalidParameter("EntropyParams: q must be a finite positive number");
    if (!std::isfinite(s)) throw InvalidParameter("EntropyParams: s must be finite");
    if (q == 1.0)
      mode = Mode::von_neumann;
    else if (s == 0.0)
      mode = Mode::renyi;
    else if (s == 1.0)
      mode = Mode::tsallis;
    else
      mode = Mode::generic;
  }

  static EntropyParams von_neumann() { return {1.0, 1.0}; }
  static EntropyParams renyi(double q) { return {q, 0.0}; }
  static EntropyParams tsallis(double q) { return {q, 1.0}; }
};

inline std::string to_string(EntropyParams::Mode m) {
  switch (m) {
    case EntropyParams::Mode::generic: return "generic";
    case EntropyParams::Mode::von_neumann: return "von_neumann";
    case EntropyParams::Mode::renyi: return "renyi";
    case EntropyParams::Mode::tsallis: return "tsallis";
  }
  return "unknown";
}

/// A discrete probability distribution. Entries in [-1e-12, 0) are clipped to
/// zero and the vector is renormalized to remove the residual rounding.
class ProbabilityVector {
 public:
  ProbabilityVector() = default;
  explicit ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) throw ValidationError("ProbabilityVector: empty distribution");
    double sum = 0.0;
    for (double& v : p_) {
      if (!std::isfinite(v)) throw ValidationError("ProbabilityVector: non-finite entry");
      if (v < -kProbabilityClip) throw ValidationError("ProbabilityVector: negative entry " + std::to_string(v));
      if (v < 0.0) v = 0.0;
      sum += v;
    }
    if (std::abs(sum - 1.0) > kNormalizationTolerance)
      throw ValidationError("ProbabilityVector: entries sum to " + std::to_string(sum));
    for (double& v : p_) v /= sum;
  }

  std::span<const double> values() const { return p_; }
  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::vector<double> p_;
};

/// Positive semidefinite unit-trace matrix. The constructor validates and
/// caches the spectrum; eigenvalues in [-1e-10, 0) are clipped to zero.
class DensityOperator {
 public:
  DensityOperator() = default;
  explicit DensityOperator(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) throw ValidationError("DensityOperator: matrix must be square and nonempty");
    if (!m.allFinite()) throw ValidationError("DensityOperator: non-finite entries");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance)
      throw ValidationError("DensityOperator: matrix is not Hermitian");
    matrix_ = 0.5 * (m + m.adjoint());
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > kNormalizationTolerance)
      throw ValidationError("DensityOperator: trace is " + std::to_string(tr));
    auto eig = hermitian_eig(matrix_);
    for (double& v : eig.eigenvalues) {
      if (v < -kEigenvalueClip) throw ValidationError("DensityOperator: negative eigenvalue " + std::to_string(v));
      if (v < 0.0) v = 0.0;
    }
    spectrum_ = std::move(eig);
  }

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const HermitianSpectrum& spectrum() const { return spectrum_; }
  std::span<const double> eigenvalues() const { return spectrum_.eigenvalues; }
  ProbabilityVector eigenvalue_distribution() const { return ProbabilityVector(spectrum_.eigenvalues); }

  static DensityOperator maximally_mixed(Eigen::Index d) {
    return DensityOperator(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
  }
  static DensityOperator pure(const ComplexVector& psi) {
    const double n = psi.norm();
    if (n == 0.0) throw ValidationError("DensityOperator::pure: zero vector");
    ComplexVector v = psi / n;
    return DensityOperator(v * v.adjoint());
  }

 private:
  ComplexMatrix matrix_;
  HermitianSpectrum spectrum_;
};

/// q-logarithm (x^(1-q) - 1)/(1-q); ln x at q = 1.
inline double q_log(double x, double q) {
  if (!(x > 0.0)) throw DomainError("q_log: argument must be positive");
  const double lx = std::log(x);
  if (q == 1.0) return lx;
  return std::expm1((1.0 - q) * lx) / (1.0 - q);
}

/// eta_q(x) = (x^q - x)/(1-q) on [0,1]; -x ln x at q = 1; eta_q(0) = 0.
inline double eta_q(double x, double q) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("eta_q: argument must lie in [0,1]");
  if (x == 0.0) return 0.0;
  const double lx = std::log(x);
  if (q == 1.0) return -x * lx;
  return x * std::expm1((q - 1.0) * lx) / (1.0 - q);
}

/// Binary Tsallis entropy eta_q(t) + eta_q(1-t).
inline double binary_tsallis(double t, double q) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("binary_tsallis: argument must lie in [0,1]");
  return eta_q(t, q) + eta_q(1.0 - t, q);
}

/// Maps a Tsallis value T_q to the Renyi value (1-q)^-1 ln(1 + (1-q) T_q).
inline double renyi_tsallis_bridge(double tsallis_value, double q) {
  if (q == 1.0) throw InvalidParameter("renyi_tsallis_bridge: q must differ from 1");
  if (!(q > 0.0)) throw InvalidParameter("renyi_tsallis_bridge: q must be positive");
  const double arg = (1.0 - q) * tsallis_value;
  if (!(1.0 + arg > 0.0)) throw DomainError("renyi_tsallis_bridge: nonpositive log argument");
  return std::log1p(arg) / (1.0 - q);
}

namespace detail {

/// ln(sum_i p_i^q) for a normalized distribution, dropping entries <= kSpectralZero.
/// Near q = 1 the sum is close to 1 and is accumulated as 1 + sum p (p^{q-1} - 1)
/// to keep the small difference; elsewhere the plain sum is more accurate.
inline double log_power_sum(std::span<const double> p, double q) {
  double direct = 0.0;
  double shifted = 0.0;
  for (double v : p) {
    if (v <= kSpectralZero) continue;
    const double lv = std::log(v);
    direct += std::exp(q * lv);
    shifted += v * std::expm1((q - 1.0) * lv);
  }
  if (direct > 0.5 && direct < 2.0) return std::log1p(shifted);
  return std::log(direct);
}

inline double shannon(std::span<const double> p) {
  double h = 0.0;
  for (double v : p)
    if (v > kSpectralZero) h -= v * std::log(v);
  return h;
}

inline double unified_from_values(std::span<const double> p, const EntropyParams& params) {
  const double q = params.q;
  const double s = params.s;
  double h = 0.0;
  switch (params.mode) {
    case EntropyParams::Mode::von_neumann:
      h = shannon(p);
      break;
    case EntropyParams::Mode::renyi:
      h = log_power_sum(p, q) / (1.0 - q);
      break;
    case EntropyParams::Mode::tsallis:
    case EntropyParams::Mode::generic:
      h = std::expm1(s * log_power_sum(p, q)) / ((1.0 - q) * s);
      break;
  }
  return h < 0.0 ? 0.0 : h;
}

}  // namespace detail

/// Classical unified (q,s)-entropy of a probability vector.
inline double unified_entropy_spectrum(const ProbabilityVector& p, const EntropyParams& params) {
  return detail::unified_from_values(p.values(), params);
}

/// Quantum unified (q,s)-entropy, computed from the eigenvalues of rho.
inline double unified_entropy(const DensityOperator& rho, const EntropyParams& params) {
  return unified_entropy_spectrum(rho.eigenvalue_distribution(), params);
}

inline double tsallis_entropy(const DensityOperator& rho, double q) {
  return unified_entropy(rho, EntropyParams::tsallis(q));
}
inline double renyi_entropy(const DensityOperator& rho, double q) {
  return unified_entropy(rho, EntropyParams::renyi(q));
}
inline double von_neumann_entropy(const DensityOperator& rho) {
  return unified_entropy(rho, EntropyParams::von_neumann());
}

}  // namespace qse
