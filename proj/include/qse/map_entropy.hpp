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

// Map (q,s)-entropy M(Phi) = H_q^(s)(sigma(Phi)), its behaviour under tensor
// products, and continuity bounds on |M(Phi) - M(Psi)| in terms of the trace
// distance t = ||sigma(Phi) - sigma(Psi)||_1 / 2 or the Frobenius distance
// tau = ||sigma(Phi) - sigma(Psi)||_2 / 2.
//
// The bounds are continuity estimates for states, applied to the Choi states.
// They take the state dimension D explicitly; for channels on d-dimensional
// systems the Choi states live in dimension D = d^2 (DimensionConvention::choi_space).
//
// Parameter regions where bounds are available:
//   below_one: 0 < q < 1 and s in (-inf, -1] U [0, 1]
//   above_one: q > 1 and s in [-1, 0] U [1, inf)
// with the prefactor kappa_s = D^(2(q-1)) for s in [-1, 0] and 1 for s >= 1.

#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qse/channel.hpp"
#include "qse/entropy.hpp"
#include "qse/errors.hpp"
#include "qse/linalg.hpp"
#include "qse/report.hpp"

namespace qse {

inline double map_entropy(const ChoiMatrix& choi, const EntropyParams& params) {
  return unified_entropy(choi.sigma(), params);
}

inline double map_entropy(const KrausSet& kraus, const EntropyParams& params) {
  return map_entropy(kraus_to_choi(kraus), params);
}

/// M(Phi1 (x) Phi2) - [M1 + M2 + (1-q) s M1 M2]; zero up to rounding.
inline double additivity_residual(const ChoiMatrix& c1, const ChoiMatrix& c2, const EntropyParams& params) {
  const double m1 = map_entropy(c1, params);
  const double m2 = map_entropy(c2, params);
  const double m12 = map_entropy(tensor_channels(c1, c2), params);
  const double cross = params.mode == EntropyParams::Mode::von_neumann ? 0.0 : (1.0 - params.q) * params.s;
  return m12 - (m1 + m2 + cross * m1 * m2);
}

enum class Additivity { additive, strictly_subadditive, strictly_superadditive, identity_only };

inline std::string to_string(Additivity a) {
  switch (a) {
    case Additivity::additive: return "additive";
    case Additivity::strictly_subadditive: return "strictly_subadditive";
    case Additivity::strictly_superadditive: return "strictly_superadditive";
    case Additivity::identity_only: return "identity_only";
  }
  return "unknown";
}

struct AdditivityClassification {
  Additivity kind = Additivity::additive;
  /// M1 + M2 - M(Phi1 (x) Phi2); positive for strict subadditivity.
  double gap = 0.0;
  /// Whether the sign of `gap` agrees with `kind` (|gap| <= tol counts as zero).
  bool sign_consistent = true;
};

/// Classifies the pair by rank and parameter region, and checks the result
/// against the sign of M1 + M2 - M(Phi1 (x) Phi2).
inline AdditivityClassification classify_additivity(const ChoiMatrix& c1, const ChoiMatrix& c2,
                                                    const EntropyParams& params, double tol = kAssertionTolerance) {
  const double q = params.q;
  const double s = params.s;
  AdditivityClassification out;
  if (c1.rank() == 1 || c2.rank() == 1 || s == 0.0)
    out.kind = Additivity::additive;
  else if (q == 1.0)
    out.kind = Additivity::identity_only;
  else if ((q < 1.0 && s < 0.0) || (q > 1.0 && s > 0.0))
    out.kind = Additivity::strictly_subadditive;
  else
    out.kind = Additivity::strictly_superadditive;

  out.gap = map_entropy(c1, params) + map_entropy(c2, params) - map_entropy(tensor_channels(c1, c2), params);
  switch (out.kind) {
    case Additivity::additive:
    case Additivity::identity_only: out.sign_consistent = std::abs(out.gap) <= tol; break;
    case Additivity::strictly_subadditive: out.sign_consistent = out.gap > 0.0; break;
    case Additivity::strictly_superadditive: out.sign_consistent = out.gap < 0.0; break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Continuity bounds

enum class NormKind { trace, frobenius };
enum class BoundRegion { below_one, above_one };
enum class DimensionConvention { choi_space, input_space };

inline std::string to_string(NormKind n) { return n == NormKind::trace ? "trace" : "frobenius"; }

struct BoundResult {
  double bound_value = 0.0;
  bool valid = false;
  std::string validity_condition;
  double distance_used = 0.0;
  NormKind norm_kind = NormKind::trace;
};

/// Region of (q, s) covered by the bounds, if any.
inline std::optional<BoundRegion> bound_region(const EntropyParams& p) {
  if (p.q < 1.0 && (p.s <= -1.0 || (p.s >= 0.0 && p.s <= 1.0))) return BoundRegion::below_one;
  if (p.q > 1.0 && ((p.s >= -1.0 && p.s <= 0.0) || p.s >= 1.0)) return BoundRegion::above_one;
  return std::nullopt;
}

/// State dimension used inside the bound formulas for channels on d-dimensional systems.
inline double bound_dimension(Eigen::Index d, DimensionConvention conv) {
  const double dd = static_cast<double>(d);
  return conv == DimensionConvention::choi_space ? dd * dd : dd;
}

namespace detail {

inline BoundRegion require_region(const EntropyParams& p, const char* fn) {
  auto region = bound_region(p);
  if (!region)
    throw NotApplicable(std::string(fn) + ": (q, s) = (" + std::to_string(p.q) + ", " + std::to_string(p.s) +
                        ") lies outside both parameter regions");
  return *region;
}

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline double kappa(const EntropyParams& p, double dim) {
  // s = 0 uses the [-1, 0] branch
  return p.s <= 0.0 ? std::pow(dim, 2.0 * (p.q - 1.0)) : 1.0;
}

}  // namespace detail

/// Bound from the trace distance t in [0, 1].
///   below_one: (2t)^q ln_q D + eta_q(2t),            valid iff 2t <= q^(1/(1-q))
///   above_one: kappa_s [t^q ln_q(D-1) + T_q(t, 1-t)], valid iff t <= (D-1)/D
inline BoundResult fannes_trace_bound(const EntropyParams& params, double dim, double t) {
  const BoundRegion region = detail::require_region(params, "fannes_trace_bound");
  if (!(dim >= 2.0)) throw InvalidParameter("fannes_trace_bound: dimension must be >= 2");
  if (!(t >= 0.0)) throw InvalidParameter("fannes_trace_bound: distance must be nonnegative");
  const double q = params.q;
  BoundResult r;
  r.norm_kind = NormKind::trace;
  r.distance_used = t;
  if (region == BoundRegion::below_one) {
    const double limit = std::pow(q, 1.0 / (1.0 - q));
    r.validity_condition = "2t <= q^(1/(1-q)) = " + std::to_string(limit);
    r.valid = 2.0 * t <= limit;
    r.bound_value = 2.0 * t <= 1.0 ? std::pow(2.0 * t, q) * q_log(dim, q) + eta_q(2.0 * t, q) : detail::kNaN;
  } else {
    const double limit = (dim - 1.0) / dim;
    r.validity_condition = "t <= (D-1)/D = " + std::to_string(limit);
    r.valid = t <= limit;
    r.bound_value = t <= 1.0 ? detail::kappa(params, dim) *
                                   (std::pow(t, q) * q_log(dim - 1.0, q) + binary_tsallis(t, q))
                             : detail::kNaN;
  }
  return r;
}

/// Bound from the Frobenius distance tau, using ||X||_1 <= sqrt(D) ||X||_2.
///   below_one: D^(q/2) (2tau)^q ln_q D + eta_q(sqrt(D) 2tau),   valid iff 2tau <= q^(1/(1-q)) D^(-1/2)
///   above_one: kappa_s [D^(q/2) tau^q ln_q(D-1) + T_q(sqrt(D) tau)], valid iff tau <= (D-1) D^(-3/2)
inline BoundResult fannes_frobenius_small_bound(const EntropyParams& params, double dim, double tau) {
  const BoundRegion region = detail::require_region(params, "fannes_frobenius_small_bound");
  if (!(dim >= 2.0)) throw InvalidParameter("fannes_frobenius_small_bound: dimension must be >= 2");
  if (!(tau >= 0.0)) throw InvalidParameter("fannes_frobenius_small_bound: distance must be nonnegative");
  const double q = params.q;
  const double root = std::sqrt(dim);
  BoundResult r;
  r.norm_kind = NormKind::frobenius;
  r.distance_used = tau;
  if (region == BoundRegion::below_one) {
    const double limit = std::pow(q, 1.0 / (1.0 - q)) / root;
    r.validity_condition = "2tau <= q^(1/(1-q)) D^(-1/2) = " + std::to_string(limit);
    r.valid = 2.0 * tau <= limit;
    const double x = root * 2.0 * tau;
    r.bound_value = x <= 1.0 ? std::pow(dim, q / 2.0) * std::pow(2.0 * tau, q) * q_log(dim, q) + eta_q(x, q) : detail::kNaN;
  } else {
    const double limit = (dim - 1.0) * std::pow(dim, -1.5);
    r.validity_condition = "tau <= (D-1) D^(-3/2) = " + std::to_string(limit);
    r.valid = tau <= limit;
    const double x = root * tau;
    r.bound_value =
        x <= 1.0 ? detail::kappa(params, dim) * (std::pow(dim, q / 2.0) * std::pow(tau, q) *
                                                     q_log(dim - 1.0, q) +
                                                 binary_tsallis(x, q))
                 : detail::kNaN;
  }
  return r;
}

/// Bound valid for every Frobenius distance between states, tau in [0, sqrt(2)/2].
///   below_one: [D^(1-q/2) (D-1)^(1-q) tau^q - q sqrt(D) tau] / (1-q)
///   above_one: kappa_s [q sqrt(D) tau - (D-1)^(1-q) D^(q/2) tau^q] / (q-1)
inline BoundResult fannes_frobenius_global_bound(const EntropyParams& params, double dim, double tau) {
  const BoundRegion region = detail::require_region(params, "fannes_frobenius_global_bound");
  if (!(dim >= 2.0)) throw InvalidParameter("fannes_frobenius_global_bound: dimension must be >= 2");
  if (!(tau >= 0.0)) throw InvalidParameter("fannes_frobenius_global_bound: distance must be nonnegative");
  const double q = params.q;
  const double root = std::sqrt(dim);
  BoundResult r;
  r.norm_kind = NormKind::frobenius;
  r.distance_used = tau;
  r.validity_condition = "tau <= sqrt(2)/2";
  r.valid = tau <= std::sqrt(2.0) / 2.0 + 1e-12;
  if (region == BoundRegion::below_one) {
    r.bound_value = (std::pow(dim, 1.0 - q / 2.0) * std::pow(dim - 1.0, 1.0 - q) * std::pow(tau, q) - q * root * tau) /
                    (1.0 - q);
  } else {
    r.bound_value = detail::kappa(params, dim) *
                    (q * root * tau - std::pow(dim - 1.0, 1.0 - q) * std::pow(dim, q / 2.0) * std::pow(tau, q)) /
                    (q - 1.0);
  }
  return r;
}

/// Trace distance t = ||sigma(Phi) - sigma(Psi)||_1 / 2 between Choi states.
inline double choi_trace_distance(const ChoiMatrix& a, const ChoiMatrix& b) {
  return 0.5 * schatten_norm(a.matrix() - b.matrix(), 1.0);
}

/// Frobenius distance tau = ||sigma(Phi) - sigma(Psi)||_2 / 2 between Choi states.
inline double choi_frobenius_distance(const ChoiMatrix& a, const ChoiMatrix& b) {
  return 0.5 * schatten_norm(a.matrix() - b.matrix(), 2.0);
}

/// ||sigma(Phi) - sigma(Psi)||_2 as the 2-mean over matrix units |mu><nu| of
/// ||(Phi - Psi)(|mu><nu|)||_2. Works only through the channel actions.
inline double frobenius_distance_as_2mean(const KrausSet& k1, const KrausSet& k2) {
  if (k1.dim() != k2.dim()) throw DimensionError("frobenius_distance_as_2mean: channels act on different dimensions");
  const Eigen::Index d = k1.dim();
  std::vector<double> norms;
  norms.reserve(static_cast<std::size_t>(d * d));
  for (Eigen::Index mu = 0; mu < d; ++mu)
    for (Eigen::Index nu = 0; nu < d; ++nu) {
      ComplexMatrix unit = ComplexMatrix::Zero(d, d);
      unit(mu, nu) = 1.0;
      norms.push_back(schatten_norm(apply_channel(k1, unit) - apply_channel(k2, unit), 2.0));
    }
  return q_mean(norms, 2.0);
}

}  // namespace qse
