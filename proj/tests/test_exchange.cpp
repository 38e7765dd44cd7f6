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

#include <cmath>
#include <numbers>
#include <vector>

#include "test_util.hpp"

namespace qse {
namespace {

using testing::diag;
using testing::max_abs_diff;

const std::vector<EntropyParams> kSampleParams{EntropyParams(0.5, -1.0), EntropyParams::von_neumann(),
                                               EntropyParams::renyi(2.0), EntropyParams(2.0, 1.0),
                                               EntropyParams(3.0, 0.5)};

TEST(Purify, Examples) {
  DensityOperator zero(diag({1, 0}));
  Purification p = purify(zero);
  // |0> (x) |0>: the first eigenvector is e_0
  EXPECT_NEAR(std::abs(p.vector(0)), 1.0, 1e-15);
  EXPECT_NEAR(p.vector.norm(), 1.0, 1e-15);

  Purification m = purify(DensityOperator::maximally_mixed(2));
  // both marginals of a purification of I/2 are I/2
  ComplexMatrix full = m.vector * m.vector.adjoint();
  const ComplexMatrix half = ComplexMatrix::Identity(2, 2) / 2.0;
  EXPECT_LT(max_abs_diff(partial_trace(full, Subsystem::A, 2, 2), half), 1e-15);
  EXPECT_LT(max_abs_diff(partial_trace(full, Subsystem::B, 2, 2), half), 1e-15);
}

TEST(Purify, MarginalAndNorm) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const Eigen::Index d = 2 + t % 3;
    DensityOperator rho = random_density(d, rng);
    Purification p = purify(rho);
    EXPECT_NEAR(p.vector.norm(), 1.0, 1e-10);
    ComplexMatrix full = p.vector * p.vector.adjoint();
    EXPECT_LT(max_abs_diff(partial_trace(full, Subsystem::A, d, d), rho.matrix()), 1e-9);
  }
}

TEST(EntropyExchange, Examples) {
  Rng rng(5);
  DensityOperator rho = random_density(3, rng);
  KrausSet u = unitary_channel(UnitaryMatrix(haar_unitary(3, rng)));
  for (const auto& p : kSampleParams) EXPECT_NEAR(entropy_exchange(rho, u, p), 0.0, 1e-13);

  ComplexMatrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  DensityOperator plus_state(plus);
  EXPECT_LT(max_abs_diff(environment_matrix(computational_pinching(2), plus_state), diag({0.5, 0.5})), 1e-15);
  EXPECT_NEAR(entropy_exchange(plus_state, computational_pinching(2), EntropyParams::von_neumann()),
              std::numbers::ln2, 1e-15);
}

TEST(EntropyExchange, MaximallyMixedInputGivesMapEntropy) {
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    const Eigen::Index d = 2 + t % 2;
    KrausSet k = testing::random_kraus(d, rng);
    for (const auto& p : kSampleParams)
      EXPECT_NEAR(entropy_exchange(DensityOperator::maximally_mixed(d), k, p), map_entropy(k, p), 1e-9);
  }
}

TEST(EntropyExchange, RoutesAgree) {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    const Eigen::Index d = 2 + t % 2;
    KrausSet k = testing::random_kraus(d, rng);
    DensityOperator rho = random_density(d, std::uniform_int_distribution<Eigen::Index>(1, d)(rng), rng);
    for (const auto& p : kSampleParams) {
      auto c = compare_exchange_routes(rho, k, p);
      EXPECT_LT(c.spectrum_residual, 1e-9);
      EXPECT_NEAR(c.environment_value, c.joint_value, 1e-9);
    }
  }
}

TEST(EntropyExchange, IndependentOfPurificationAndUnraveling) {
  Rng rng(13);
  for (int t = 0; t < 15; ++t) {
    const Eigen::Index d = 2 + t % 2;
    KrausSet k = testing::random_kraus(d, rng);
    DensityOperator rho = random_density(d, rng);
    Purification psi = purify(rho);
    Purification rotated{kron(ComplexMatrix::Identity(d, d), haar_unitary(d, rng)) * psi.vector, rho};
    KrausSet remixed = transform_unraveling(k, UnitaryMatrix(haar_unitary(static_cast<Eigen::Index>(k.size()), rng)));
    for (const auto& p : kSampleParams) {
      const double base = entropy_exchange(rho, k, p);
      EXPECT_NEAR(entropy_exchange_joint(rotated, k, p), base, 1e-9);
      EXPECT_NEAR(entropy_exchange(rho, remixed, p), base, 1e-9);
    }
  }
}

TEST(StinespringIsometry, Examples) {
  ComplexMatrix v = stinespring_isometry(identity_channel(2));
  EXPECT_LT(max_abs_diff(v, ComplexMatrix::Identity(2, 2)), 1e-15);

  Rng rng(17);
  std::vector<KrausSet> sets{computational_pinching(2)};
  for (int t = 0; t < 10; ++t) sets.push_back(testing::random_kraus(2 + t % 2, rng));
  for (const auto& k : sets) {
    const Eigen::Index d = k.dim();
    const auto n = static_cast<Eigen::Index>(k.size());
    ComplexMatrix w = stinespring_isometry(k);
    EXPECT_LT(max_abs_diff(w.adjoint() * w, ComplexMatrix::Identity(d, d)), 1e-10);
    DensityOperator rho = random_density(d, rng);
    ComplexMatrix joint = w * rho.matrix() * w.adjoint();
    EXPECT_LT(max_abs_diff(partial_trace(joint, Subsystem::B, n, d), apply_channel(k, rho.matrix())), 1e-9);
    EXPECT_LT(max_abs_diff(partial_trace(joint, Subsystem::A, n, d), environment_matrix(k, rho)), 1e-9);
  }
}

TEST(LindbladExtension, Examples) {
  Rng rng(19);
  DensityOperator pure = DensityOperator::pure(random_pure_vector(2, rng));
  KrausSet u = unitary_channel(UnitaryMatrix(haar_unitary(2, rng)));
  Report r = check_lindblad_extension(pure, u, EntropyParams(2.0, 1.0));
  EXPECT_TRUE(r.pass);
  for (const auto& m : r.margins) {
    EXPECT_NEAR(m.mid, 0.0, 1e-12);
    EXPECT_TRUE(m.tight());
  }

  r = check_lindblad_extension(DensityOperator::maximally_mixed(2), depolarizing_channel(2, 1.0), EntropyParams(2.0, 1.0));
  EXPECT_EQ(r.mode, CheckMode::assertion);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.margins.size(), 3u);
  const Margin& out = r.margins[0];  // output entropy between |input - exchange| and input + exchange
  EXPECT_NEAR(out.lhs, 0.25, 1e-15);
  EXPECT_NEAR(out.mid, 0.5, 1e-15);
  EXPECT_NEAR(out.rhs, 1.25, 1e-15);

  r = check_lindblad_extension(DensityOperator::maximally_mixed(2), depolarizing_channel(2, 1.0), EntropyParams(0.5, 1.0));
  EXPECT_EQ(r.mode, CheckMode::exploratory);
}

TEST(LindbladExtension, RandomInstancesInRegion) {
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const Eigen::Index d = 2 + t % 2;
    KrausSet k = testing::random_kraus(d, rng);
    DensityOperator rho = random_density(d, std::uniform_int_distribution<Eigen::Index>(1, d)(rng), rng);
    for (auto [q, s] : verify::kSubadditiveParams) {
      Report r = check_lindblad_extension(rho, k, EntropyParams(q, s));
      EXPECT_TRUE(r.pass) << "q=" << q << " s=" << s << " violation " << r.max_violation;
    }
  }
}

TEST(EntangledOutputBounds, Examples) {
  Report r = check_entangled_output_bounds(identity_channel(2), identity_channel(2), EntropyParams(2.0, 1.0));
  EXPECT_TRUE(r.pass);
  for (const auto& m : r.margins) {
    EXPECT_NEAR(m.lhs, 0.0, 1e-12);
    EXPECT_NEAR(m.mid, 0.0, 1e-12);
    EXPECT_NEAR(m.rhs, 0.0, 1e-12);
  }

  const EntropyParams p(2.0, 1.0);
  KrausSet dep = depolarizing_channel(2, 1.0);
  r = check_entangled_output_bounds(identity_channel(2), dep, p);
  EXPECT_TRUE(r.pass);
  const Margin& out = r.margins[0];  // output between |M1 - M2| and M1 + M2
  EXPECT_NEAR(out.mid, 0.75, 1e-12);
  EXPECT_NEAR(out.lhs, 0.75, 1e-12);
  EXPECT_NEAR(out.rhs, 0.75, 1e-12);
  EXPECT_LT(max_abs_diff(entangled_output(identity_channel(2), dep), ComplexMatrix::Identity(4, 4) / 4.0), 1e-15);

  EXPECT_THROW(check_entangled_output_bounds(identity_channel(2), identity_channel(3), p), DimensionError);
}

TEST(EntangledOutputBounds, RandomPairs) {
  Rng rng(29);
  for (int t = 0; t < 30; ++t) {
    KrausSet k1 = testing::random_kraus(2, rng);
    KrausSet k2 = testing::random_kraus(2, rng);
    for (auto [q, s] : verify::kSubadditiveParams) {
      Report r = check_entangled_output_bounds(k1, k2, EntropyParams(q, s));
      EXPECT_TRUE(r.pass) << r.note;
    }
    // identity tensored with a channel: exchange at I/d equals the map entropy
    for (const auto& p : kSampleParams)
      EXPECT_NEAR(unified_entropy(DensityOperator(entangled_output(identity_channel(2), k2)), p), map_entropy(k2, p), 1e-9);
  }
}

}  // namespace
}  // namespace qse
