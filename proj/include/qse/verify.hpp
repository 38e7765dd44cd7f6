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

// Randomized verification suites. Every instance draws from its own RNG
// seeded with trial_seed(seed, instance index), so results do not depend on
// evaluation order.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qse/channel.hpp"
#include "qse/entropy.hpp"
#include "qse/exchange.hpp"
#include "qse/map_entropy.hpp"
#include "qse/random.hpp"
#include "qse/report.hpp"
#include "qse/unraveling.hpp"

namespace qse::verify {

inline const std::vector<double> kDefaultQGrid{0.3, 0.5, 0.7, 1.0, 1.5, 2.0, 3.0};
inline const std::vector<double> kDefaultSGrid{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};

/// (q, s) pairs with q > 1 and s >= 1/q used by the triangle-inequality suites.
inline const std::vector<std::pair<double, double>> kSubadditiveParams{
    {1.5, 1.0}, {2.0, 0.5}, {2.0, 1.0}, {3.0, 1.0}, {1.25, 0.8}};

struct SuiteConfig {
  std::vector<Eigen::Index> dims{2, 3};
  int trials = 50;
  std::uint64_t seed = 0;
  std::vector<double> q_grid = kDefaultQGrid;
  std::vector<double> s_grid = kDefaultSGrid;
  std::vector<std::pair<double, double>> subadditive_params = kSubadditiveParams;
  double tolerance = kAssertionTolerance;
  int remixings = 100;       // theorem1: random unitary remixings per instance
  bool renyi_scan = false;   // theorem1: also search s = 0, q > 1
  bool keep_details = true;  // store per-check records in the result
};

struct SuiteResult {
  std::string suite;
  long checks = 0;
  long violations = 0;              // assertion-mode checks beyond tolerance
  long exploratory_violations = 0;  // recorded only
  double max_violation = 0.0;       // over assertion-mode checks
  double max_exploratory_violation = 0.0;
  nlohmann::json details = nlohmann::json::array();
  nlohmann::json summary = nlohmann::json::object();

  bool pass() const { return violations == 0; }

  void record(double violation, bool asserted, double tol) {
    ++checks;
    if (asserted) {
      max_violation = std::max(max_violation, violation);
      if (violation > tol) ++violations;
    } else {
      max_exploratory_violation = std::max(max_exploratory_violation, violation);
      if (violation > tol) ++exploratory_violations;
    }
  }
};

inline void to_json(nlohmann::json& j, const SuiteResult& r) {
  j = nlohmann::json{{"suite", r.suite},
                     {"checks", r.checks},
                     {"violations", r.violations},
                     {"max_violation", r.max_violation},
                     {"exploratory_violations", r.exploratory_violations},
                     {"max_exploratory_violation", r.max_exploratory_violation},
                     {"pass", r.pass()},
                     {"summary", r.summary},
                     {"details", r.details}};
}

inline std::vector<EntropyParams> grid_params(const SuiteConfig& c) {
  std::vector<EntropyParams> out;
  for (double q : c.q_grid)
    for (double s : c.s_grid) {
      if (q == 1.0 && s != c.s_grid.front()) continue;  // s is irrelevant at q = 1
      out.emplace_back(q, s);
    }
  return out;
}

namespace detail {

inline Eigen::Index random_rank(Eigen::Index lo, Eigen::Index hi, Rng& rng) {
  std::uniform_int_distribution<Eigen::Index> dist(lo, hi);
  return dist(rng);
}

inline KrausSet random_instance_channel(Eigen::Index d, Rng& rng, Eigen::Index min_rank = 1) {
  const Eigen::Index rank = random_rank(min_rank, d * d, rng);
  return random_channel(d, rank, rng());
}

/// Convex mixture (1-w) Phi + w Psi with Psi random and w uniform in [0, max_weight].
inline KrausSet nearby_channel(const KrausSet& base, double max_weight, Rng& rng) {
  std::uniform_real_distribution<double> weight(0.0, max_weight);
  const double w = weight(rng);
  const Eigen::Index d = base.dim();
  ComplexMatrix sigma = (1.0 - w) * kraus_to_choi_matrix(base) + w * kraus_to_choi_matrix(random_instance_channel(d, rng));
  return choi_to_kraus(ChoiMatrix(sigma, d), "nearby");
}

inline std::uint64_t instance_seed(const SuiteConfig& c, Eigen::Index d, int trial) {
  return trial_seed(c.seed, static_cast<std::uint64_t>(d) * 1000003ULL + static_cast<std::uint64_t>(trial));
}

inline bool unraveling_asserted(const EntropyParams& p) { return p.s != 0.0 || p.q == 1.0 || p.q < 1.0; }

}  // namespace detail

/// Extremal unraveling entropy <= entropy of the input set and of random remixings.
inline SuiteResult theorem1(const SuiteConfig& c) {
  SuiteResult res;
  res.suite = "theorem1";
  const auto grid = grid_params(c);
  for (Eigen::Index d : c.dims)
    for (int t = 0; t < c.trials; ++t) {
      Rng rng(detail::instance_seed(c, d, t));
      KrausSet kraus = detail::random_instance_channel(d, rng, 2);
      DensityOperator rho = random_density(d, rng);

      auto ex = extremal_unraveling(kraus, rho);
      std::vector<ProbabilityVector> competitors{effect_gram(kraus, rho).effect_probabilities()};
      const auto k = static_cast<Eigen::Index>(kraus.size());
      for (int m = 0; m < c.remixings; ++m) {
        UnitaryMatrix u(haar_unitary(k, rng));
        competitors.push_back(effect_gram(transform_unraveling(kraus, u), rho).effect_probabilities());
      }
      for (const auto& p : grid) {
        const bool asserted = detail::unraveling_asserted(p);
        if (!asserted && !c.renyi_scan) continue;
        const double h_ex = unified_entropy_spectrum(ex.lambdas, p);
        double worst = -kInfinity;
        for (const auto& comp : competitors) worst = std::max(worst, h_ex - unified_entropy_spectrum(comp, p));
        const double violation = std::max(worst, 0.0);
        res.record(violation, asserted, 1e-10);
        if (c.keep_details && (violation > 1e-10))
          res.details.push_back({{"d", d}, {"trial", t}, {"q", p.q}, {"s", p.s}, {"violation", violation},
                                 {"mode", asserted ? "assertion" : "exploratory"}});
      }
    }
  res.summary = {{"remixings", c.remixings}, {"renyi_scan", c.renyi_scan}, {"tolerance", 1e-10}};
  return res;
}

/// H(rho) <= extremal unraveling entropy whenever the trace condition holds.
/// Instances alternate between rank-1 pinchings in a random basis (always
/// applicable) and random channels (applicability varies).
inline SuiteResult theorem2(const SuiteConfig& c) {
  SuiteResult res;
  res.suite = "theorem2";
  long applicable = 0;
  long not_applicable = 0;
  const auto grid = grid_params(c);
  for (Eigen::Index d : c.dims)
    for (int t = 0; t < c.trials; ++t) {
      Rng rng(detail::instance_seed(c, d, t));
      KrausSet kraus = (t % 2 == 0) ? basis_pinching(haar_unitary(d, rng)) : detail::random_instance_channel(d, rng);
      DensityOperator rho = random_density(d, rng);
      for (const auto& p : grid) {
        const bool asserted = detail::unraveling_asserted(p);
        if (!asserted && !c.renyi_scan) continue;
        Report r = check_theorem2(kraus, rho, p, c.tolerance);
        if (!r.applicable) {
          ++not_applicable;
          continue;
        }
        ++applicable;
        res.record(r.max_violation, asserted, c.tolerance);
        if (c.keep_details && r.max_violation > c.tolerance)
          res.details.push_back({{"d", d}, {"trial", t}, {"kraus", kraus.label()}, {"report", r}});
      }
    }
  res.summary = {{"applicable_checks", applicable}, {"not_applicable_checks", not_applicable}};
  return res;
}

/// Triangle and subadditivity relations among input, output and exchange entropies.
inline SuiteResult theorem4(const SuiteConfig& c) {
  SuiteResult res;
  res.suite = "theorem4";
  std::vector<long> tight(3, 0);
  for (Eigen::Index d : c.dims)
    for (int t = 0; t < c.trials; ++t) {
      Rng rng(detail::instance_seed(c, d, t));
      KrausSet kraus = detail::random_instance_channel(d, rng);
      DensityOperator rho = random_density(d, detail::random_rank(1, d, rng), rng);
      for (auto [q, s] : c.subadditive_params) {
        Report r = check_lindblad_extension(rho, kraus, EntropyParams(q, s), c.tolerance);
        res.record(r.max_violation, r.mode == CheckMode::assertion, c.tolerance);
        for (std::size_t i = 0; i < r.margins.size(); ++i)
          if (r.margins[i].tight()) ++tight[i];
        if (c.keep_details && r.max_violation > c.tolerance)
          res.details.push_back({{"d", d}, {"trial", t}, {"report", r}});
      }
    }
  res.summary = {{"tight_output_between", tight[0]}, {"tight_input_between", tight[1]}, {"tight_exchange_between", tight[2]}};
  return res;
}

/// Output entropy of a maximally entangled input through Phi1 (x) Phi2 is
/// bracketed by the map entropies. Also checks the tight case Phi1 = id.
inline SuiteResult theorem5(const SuiteConfig& c) {
  SuiteResult res;
  res.suite = "theorem5";
  double worst_tight_case = 0.0;
  for (Eigen::Index d : c.dims)
    for (int t = 0; t < c.trials; ++t) {
      Rng rng(detail::instance_seed(c, d, t));
      KrausSet k1 = detail::random_instance_channel(d, rng);
      KrausSet k2 = detail::random_instance_channel(d, rng);
      for (auto [q, s] : c.subadditive_params) {
        EntropyParams p(q, s);
        Report r = check_entangled_output_bounds(k1, k2, p, c.tolerance);
        const double violation = r.pass || r.mode == CheckMode::exploratory ? r.max_violation : kInfinity;
        res.record(violation, r.mode == CheckMode::assertion, c.tolerance);
        if (c.keep_details && violation > c.tolerance) res.details.push_back({{"d", d}, {"trial", t}, {"report", r}});

        // Phi1 = id: the output is sigma(Phi2) up to a swap, so H_out = M2.
        const double h_out = unified_entropy(DensityOperator(entangled_output(identity_channel(d), k2)), p);
        const double gap = std::abs(h_out - map_entropy(k2, p));
        worst_tight_case = std::max(worst_tight_case, gap);
        res.record(gap, true, c.tolerance);
      }
    }
  res.summary = {{"max_identity_case_gap", worst_tight_case}};
  return res;
}

/// M(Phi1 (x) Phi2) = M1 + M2 + (1-q) s M1 M2 over the grid, plus the
/// sub/superadditivity classification against the sign of the gap.
inline SuiteResult additivity(const SuiteConfig& c) {
  SuiteResult res;
  res.suite = "additivity";
  long inconsistent = 0;
  const auto grid = grid_params(c);
  for (Eigen::Index d : c.dims)
    for (int t = 0; t < c.trials; ++t) {
      Rng rng(detail::instance_seed(c, d, t));
      ChoiMatrix c1 = kraus_to_choi(detail::random_instance_channel(d, rng));
      ChoiMatrix c2 = kraus_to_choi(detail::random_instance_channel(d, rng));
      ChoiMatrix c12 = tensor_channels(c1, c2);
      for (const auto& p : grid) {
        const double m1 = map_entropy(c1, p);
        const double m2 = map_entropy(c2, p);
        const double m12 = map_entropy(c12, p);
        const double cross = p.mode == EntropyParams::Mode::von_neumann ? 0.0 : (1.0 - p.q) * p.s;
        const double residual = std::abs(m12 - (m1 + m2 + cross * m1 * m2));
        res.record(residual, true, c.tolerance);
        if (c.keep_details && residual > c.tolerance)
          res.details.push_back({{"d", d}, {"trial", t}, {"q", p.q}, {"s", p.s}, {"residual", residual}});
        if (!classify_additivity(c1, c2, p, c.tolerance).sign_consistent) ++inconsistent;
      }
    }
  res.summary = {{"classification_inconsistencies", inconsistent}};
  res.violations += inconsistent;
  return res;
}

/// Soundness of every continuity bound that reports valid = true, with the
/// Choi-space dimension D = d^2. The input-space reading D = d is evaluated
/// alongside and recorded as exploratory.
inline SuiteResult fannes(const SuiteConfig& c) {
  SuiteResult res;
  res.suite = "fannes";
  long valid_choi = 0;
  long valid_input = 0;
  const auto grid = grid_params(c);
  for (Eigen::Index d : c.dims)
    for (int t = 0; t < c.trials; ++t) {
      Rng rng(detail::instance_seed(c, d, t));
      KrausSet k1 = detail::random_instance_channel(d, rng);
      // Alternate far-apart pairs with nearby pairs so the small-distance bounds get exercised.
      KrausSet k2 = (t % 2 == 0) ? detail::random_instance_channel(d, rng) : detail::nearby_channel(k1, 0.05, rng);
      ChoiMatrix c1 = kraus_to_choi(k1);
      ChoiMatrix c2 = kraus_to_choi(k2);
      const double tr = choi_trace_distance(c1, c2);
      const double fr = choi_frobenius_distance(c1, c2);
      for (const auto& p : grid) {
        if (!bound_region(p)) continue;
        const double delta = std::abs(map_entropy(c1, p) - map_entropy(c2, p));
        for (auto conv : {DimensionConvention::choi_space, DimensionConvention::input_space}) {
          const double dim = bound_dimension(d, conv);
          if (dim < 2.0) continue;
          const bool asserted = conv == DimensionConvention::choi_space;
          for (const BoundResult& b : {fannes_trace_bound(p, dim, tr), fannes_frobenius_small_bound(p, dim, fr),
                                       fannes_frobenius_global_bound(p, dim, fr)}) {
            if (!b.valid) continue;
            (asserted ? valid_choi : valid_input) += 1;
            const double violation = std::max(delta - b.bound_value, 0.0);
            res.record(violation, asserted, c.tolerance);
            if (c.keep_details && violation > c.tolerance)
              res.details.push_back({{"d", d}, {"trial", t}, {"q", p.q}, {"s", p.s}, {"norm", to_string(b.norm_kind)},
                                     {"dimension", dim}, {"bound", b.bound_value}, {"observed_delta", delta},
                                     {"mode", asserted ? "assertion" : "exploratory"}});
          }
        }
      }
    }
  res.summary = {{"valid_bounds_choi_space", valid_choi}, {"valid_bounds_input_space", valid_input}};
  return res;
}

/// ||x||_p <= d^((q-1)/(pq)) ||x||_{pq} with d the support dimension, for
/// p in {1, 2} and q in {2, 3, inf}; tight on multiples of unitaries on the
/// support and strict on matrices with distinct singular values.
inline SuiteResult schatten(const SuiteConfig& c) {
  SuiteResult res;
  res.suite = "schatten";
  long tight_cases = 0;
  long strict_cases = 0;
  const std::vector<double> ps{1.0, 2.0};
  const std::vector<double> qs{2.0, 3.0, kInfinity};
  for (Eigen::Index d : c.dims)
    for (int t = 0; t < c.trials; ++t) {
      Rng rng(detail::instance_seed(c, d, t));
      const Eigen::Index n = d + 1;
      const Eigen::Index rank = detail::random_rank(1, n, rng);
      ComplexMatrix generic = ginibre(n, rank, rng) * ginibre(rank, n, rng);

      // c * U restricted to a support of dimension `rank`
      ComplexMatrix proj = ComplexMatrix::Zero(n, n);
      for (Eigen::Index k = 0; k < rank; ++k) proj(k, k) = 1.0;
      std::uniform_real_distribution<double> scale(0.1, 5.0);
      ComplexMatrix unitary_like = scale(rng) * haar_unitary(n, rng) * proj * haar_unitary(n, rng);

      for (double p : ps)
        for (double q : qs) {
          res.record(std::max(-schatten_bound_slack(generic, p, q), 0.0), true, 1e-10);
          const double tight = std::abs(schatten_bound_slack(unitary_like, p, q));
          res.record(tight, true, 1e-9);
          ++tight_cases;
          if (rank > 1) {
            ++strict_cases;
            // distinct singular values: the comparison must be strict
            if (schatten_bound_slack(generic, p, q) <= 1e-9) res.record(1.0, true, 1e-9);
          }
        }
    }
  res.summary = {{"tight_cases", tight_cases}, {"strict_cases", strict_cases}};
  return res;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem1", "theorem2", "theorem4", "theorem5",
                                              "additivity", "fannes", "schatten"};
  return names;
}

inline SuiteResult run_suite(const std::string& name, const SuiteConfig& c) {
  if (name == "theorem1") return theorem1(c);
  if (name == "theorem2") return theorem2(c);
  if (name == "theorem4") return theorem4(c);
  if (name == "theorem5") return theorem5(c);
  if (name == "additivity") return additivity(c);
  if (name == "fannes") return fannes(c);
  if (name == "schatten") return schatten(c);
  throw InvalidParameter("unknown suite '" + name + "'");
}

}  // namespace qse::verify
