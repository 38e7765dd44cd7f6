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

// Effect probabilities of channel unravelings.
//
// For a Kraus set {A_i} and input rho the effect Gram matrix is
// Pi_ij = <A_i sqrt(rho), A_j sqrt(rho)>_hs = tr(A_i^dagger A_j rho). Its
// diagonal holds the effect probabilities. Any other unraveling B_i = sum_j
// A_j u_ji has Pi(B) = U^dagger Pi(A) U, so the eigenvalues of Pi are shared by
// all unravelings. Rotating with the eigenvectors of Pi gives the extremal
// unraveling, whose effect probabilities are those eigenvalues; it has the
// smallest unified entropy among all unravelings for q > 0, s != 0.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "qse/channel.hpp"
#include "qse/entropy.hpp"
#include "qse/random.hpp"
#include "qse/report.hpp"

namespace qse {

struct EffectGram {
  ComplexMatrix pi;
  DensityOperator rho_ref;
  std::string kraus_label;

  std::vector<double> diagonal() const {
    std::vector<double> p(static_cast<std::size_t>(pi.rows()));
    for (Eigen::Index i = 0; i < pi.rows(); ++i) p[static_cast<std::size_t>(i)] = pi(i, i).real();
    return p;
  }
  ProbabilityVector effect_probabilities() const { return ProbabilityVector(diagonal()); }
};

struct ExtremalUnraveling {
  KrausSet kraus;
  ProbabilityVector lambdas;  // eigenvalues of Pi, descending
  UnitaryMatrix diagonalizer;
};

/// Pi_ij = tr(A_i^dagger A_j rho). Built without forming sqrt(rho).
inline EffectGram effect_gram(const KrausSet& kraus, const DensityOperator& rho) {
  if (rho.dim() != kraus.dim()) throw DimensionError("effect_gram: state and channel dimensions differ");
  const auto k = static_cast<Eigen::Index>(kraus.size());
  ComplexMatrix pi(k, k);
  std::vector<ComplexMatrix> a_rho;
  a_rho.reserve(kraus.size());
  for (const auto& a : kraus.operators()) a_rho.push_back(a * rho.matrix());
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      pi(i, j) = hs_inner(kraus[static_cast<std::size_t>(i)], a_rho[static_cast<std::size_t>(j)]);
  pi = 0.5 * (pi + pi.adjoint());
  return EffectGram{pi, rho, kraus.label()};
}

/// Classical unified entropy of the effect probabilities.
inline double unraveling_entropy(const KrausSet& kraus, const DensityOperator& rho, const EntropyParams& params) {
  return unified_entropy_spectrum(effect_gram(kraus, rho).effect_probabilities(), params);
}

inline ExtremalUnraveling extremal_unraveling(const KrausSet& kraus, const DensityOperator& rho) {
  auto gram = effect_gram(kraus, rho);
  auto eig = hermitian_eig(gram.pi);
  UnitaryMatrix v(eig.eigenvectors);
  for (double& lam : eig.eigenvalues)
    if (lam < 0.0) lam = 0.0;  // PSD up to rounding
  return ExtremalUnraveling{transform_unraveling(kraus, v), ProbabilityVector(eig.eigenvalues), v};
}

/// Entropy of the extremal unraveling, i.e. of the eigenvalues of Pi.
inline double extremal_entropy(const KrausSet& kraus, const DensityOperator& rho, const EntropyParams& params) {
  return unified_entropy_spectrum(extremal_unraveling(kraus, rho).lambdas, params);
}

/// Minimality of the extremal unraveling against the input set and `trials`
/// Haar-random remixings of it. Assertion mode for s != 0, q = 1, and for the
/// Renyi case 0 < q < 1; the Renyi case q > 1 runs as an exploratory search.
inline Report check_theorem1(const KrausSet& kraus, const DensityOperator& rho, const EntropyParams& params, int trials,
                             std::uint64_t seed, double tol = 1e-10) {
  Report r;
  r.theorem = "theorem1";
  r.params = params;
  r.trials = trials;
  const bool asserted = params.s != 0.0 || params.q == 1.0 || params.q < 1.0;
  r.mode = asserted ? CheckMode::assertion : CheckMode::exploratory;

  const double h_ex = extremal_entropy(kraus, rho, params);
  double worst = h_ex - unraveling_entropy(kraus, rho, params);
  Rng rng(seed);
  const auto k = static_cast<Eigen::Index>(kraus.size());
  for (int t = 0; t < trials; ++t) {
    UnitaryMatrix u(haar_unitary(k, rng));
    const double h = unraveling_entropy(transform_unraveling(kraus, u), rho, params);
    worst = std::max(worst, h_ex - h);
  }
  r.max_violation = std::max(worst, 0.0);
  // rhs is the smallest entropy seen over the input set and the remixings
  r.margins.push_back(Margin{"extremal_vs_min_remixed", 0.0, h_ex, h_ex - worst});
  r.pass = !asserted || r.max_violation <= tol;
  if (!asserted) r.note = "Renyi q > 1: counterexample search, a non-finding is inconclusive";
  return r;
}

/// Largest |tr(A_i^dagger A_i) - 1| over the extremal Kraus operators.
inline double trace_condition_deviation(const ExtremalUnraveling& ex) {
  double dev = 0.0;
  for (const auto& a : ex.kraus.operators()) dev = std::max(dev, std::abs(hs_inner(a, a).real() - 1.0));
  return dev;
}

/// Input-entropy lower bound H(rho) <= H(extremal | rho), applicable when every
/// extremal Kraus operator has tr(A^dagger A) = 1 (within 1e-8). Asserted for
/// s != 0 (any q > 0) and for 0 < q < 1 at s = 0.
inline Report check_theorem2(const KrausSet& kraus, const DensityOperator& rho, const EntropyParams& params,
                             double tol = kAssertionTolerance) {
  Report r;
  r.theorem = "theorem2";
  r.params = params;
  auto ex = extremal_unraveling(kraus, rho);
  const double dev = trace_condition_deviation(ex);
  const double h_rho = unified_entropy(rho, params);
  const double h_ex = unified_entropy_spectrum(ex.lambdas, params);
  r.margins.push_back(Margin{"input_entropy_bound", 0.0, h_rho, h_ex});
  r.max_violation = std::max(h_rho - h_ex, 0.0);
  if (dev > 1e-8) {
    r.applicable = false;
    r.pass = true;
    r.note = "not applicable: trace condition fails (max deviation " + std::to_string(dev) + ")";
    return r;
  }
  const bool asserted = params.s != 0.0 || params.q == 1.0 || params.q < 1.0;
  r.mode = asserted ? CheckMode::assertion : CheckMode::exploratory;
  r.pass = !asserted || r.max_violation <= tol;
  if (!asserted) r.note = "Renyi q > 1 is outside the proven region";
  return r;
}

}  // namespace qse
