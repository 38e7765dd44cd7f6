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

#include <algorithm>
#include <cmath>
#include <vector>

#include "test_util.hpp"

namespace qse {
namespace {

using testing::diag;
using testing::max_abs_diff;

ComplexMatrix plus_state() {
  ComplexMatrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return m;
}

// sigma(Phi) built literally as (Phi (x) id)(|phi+><phi+|), entry by entry.
ComplexMatrix choi_by_definition(const KrausSet& k) {
  const Eigen::Index d = k.dim();
  ComplexMatrix phi = maximally_entangled_matrix(d);
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& a : k.operators()) {
    ComplexMatrix big = kron(a, ComplexMatrix::Identity(d, d));
    out += big * phi * big.adjoint();
  }
  return out;
}

std::vector<double> sorted_spectrum(const ComplexMatrix& h) {
  auto e = hermitian_eig(h).eigenvalues;
  std::sort(e.begin(), e.end());
  return e;
}

TEST(KrausSet, Validation) {
  EXPECT_THROW(KrausSet(std::vector<ComplexMatrix>{}), ValidationError);
  EXPECT_THROW(KrausSet({0.5 * ComplexMatrix::Identity(2, 2)}), ValidationError);
  EXPECT_THROW(KrausSet({ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(3, 3)}), ValidationError);
  EXPECT_NO_THROW(KrausSet({ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(2, 2)}));
}

TEST(ApplyChannel, Examples) {
  Rng rng(3);
  DensityOperator rho = random_density(3, rng);
  UnitaryMatrix u(haar_unitary(3, rng));
  DensityOperator out = apply_channel(unitary_channel(u), rho);
  EXPECT_LT(max_abs_diff(out.matrix(), u.matrix() * rho.matrix() * u.matrix().adjoint()), 1e-14);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(out.eigenvalues()[i], rho.eigenvalues()[i], 1e-12);

  DensityOperator rho2 = random_density(2, rng);
  EXPECT_LT(max_abs_diff(apply_channel(depolarizing_channel(2, 1.0), rho2).matrix(), ComplexMatrix::Identity(2, 2) / 2.0),
            1e-15);
  EXPECT_LT(max_abs_diff(apply_channel(computational_pinching(2), plus_state()), diag({0.5, 0.5})), 1e-15);
  EXPECT_THROW(apply_channel(identity_channel(2), rho), DimensionError);
}

TEST(KrausToChoi, Examples) {
  ChoiMatrix id = kraus_to_choi(identity_channel(2));
  EXPECT_LT(max_abs_diff(id.matrix(), maximally_entangled_matrix(2)), 1e-15);
  EXPECT_EQ(id.rank(), 1u);
  EXPECT_LT(max_abs_diff(kraus_to_choi(depolarizing_channel(2, 1.0)).matrix(), ComplexMatrix::Identity(4, 4) / 4.0),
            1e-15);
  EXPECT_LT(max_abs_diff(kraus_to_choi(computational_pinching(2)).matrix(), diag({0.5, 0, 0, 0.5})), 1e-15);
}

TEST(KrausToChoi, MatchesDefinitionAndInvariantUnderRemixing) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const Eigen::Index d = 2 + t % 2;
    KrausSet k = testing::random_kraus(d, rng);
    ComplexMatrix sigma = kraus_to_choi_matrix(k);
    EXPECT_LT(max_abs_diff(sigma, choi_by_definition(k)), 1e-14);
    const auto n = static_cast<Eigen::Index>(k.size()) + 1;
    KrausSet mixed = transform_unraveling(k, UnitaryMatrix(haar_unitary(n, rng)));
    EXPECT_EQ(mixed.size(), static_cast<std::size_t>(n));
    EXPECT_LT(max_abs_diff(kraus_to_choi_matrix(mixed), sigma), 1e-10);
  }
}

TEST(ChoiToKraus, Examples) {
  KrausSet k = choi_to_kraus(ChoiMatrix(maximally_entangled_matrix(2), 2));
  ASSERT_EQ(k.size(), 1u);
  // identity up to a global phase
  const Complex phase = k[0](0, 0);
  EXPECT_NEAR(std::abs(phase), 1.0, 1e-14);
  EXPECT_LT(max_abs_diff(k[0], phase * ComplexMatrix::Identity(2, 2)), 1e-14);

  KrausSet dep = choi_to_kraus(ChoiMatrix(ComplexMatrix::Identity(4, 4) / 4.0, 2));
  EXPECT_EQ(dep.size(), 4u);
  ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
  for (const auto& a : dep.operators()) sum += a.adjoint() * a;
  EXPECT_LT(max_abs_diff(sum, ComplexMatrix::Identity(2, 2)), 1e-14);
}

TEST(ChoiToKraus, RoundTripAndRankLaw) {
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    const Eigen::Index d = 2 + t % 2;
    std::uniform_int_distribution<Eigen::Index> rank(1, d * d);
    const Eigen::Index r = rank(rng);
    ChoiMatrix c = kraus_to_choi(random_channel(d, r, rng()));
    EXPECT_EQ(c.rank(), static_cast<std::size_t>(r));
    KrausSet k = choi_to_kraus(c);
    EXPECT_EQ(k.size(), static_cast<std::size_t>(r));
    EXPECT_LT(max_abs_diff(kraus_to_choi_matrix(k), c.matrix()), 1e-8);
  }
  Rng rng2(8);
  EXPECT_EQ(kraus_to_choi(unitary_channel(UnitaryMatrix(haar_unitary(3, rng2)))).rank(), 1u);
}

TEST(ReconstructAction, Examples) {
  Rng rng(11);
  ChoiMatrix id = kraus_to_choi(identity_channel(3));
  ComplexMatrix x = ginibre(3, 3, rng);
  EXPECT_LT(max_abs_diff(reconstruct_action(id, x), x), 1e-14);
  ChoiMatrix dep(ComplexMatrix::Identity(4, 4) / 4.0, 2);
  EXPECT_LT(max_abs_diff(reconstruct_action(dep, diag({1, 0})), ComplexMatrix::Identity(2, 2) / 2.0), 1e-15);
  EXPECT_THROW(reconstruct_action(dep, ComplexMatrix::Identity(3, 3)), DimensionError);
}

TEST(ReconstructAction, AgreesWithKrausOnMatrixUnits) {
  Rng rng(13);
  std::vector<KrausSet> channels{depolarizing_channel(3, 0.4), amplitude_damping_channel(3, 0.3),
                                 phase_damping_channel(2, 0.7), computational_pinching(3)};
  for (int t = 0; t < 10; ++t) channels.push_back(testing::random_kraus(2 + t % 2, rng));
  for (const auto& k : channels) {
    const Eigen::Index d = k.dim();
    ChoiMatrix c = kraus_to_choi(k);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        ComplexMatrix e = ComplexMatrix::Zero(d, d);
        e(i, j) = 1.0;
        EXPECT_LT(max_abs_diff(reconstruct_action(c, e), apply_channel(k, e)), 1e-9) << k.label();
      }
    DensityOperator rho = random_density(d, rng);
    EXPECT_LT(max_abs_diff(reconstruct_action(c, rho.matrix()), apply_channel(k, rho.matrix())), 1e-9);
  }
}

TEST(ValidateCptp, Examples) {
  Rng rng(17);
  EXPECT_TRUE(validate_cptp(kraus_to_choi_matrix(testing::random_kraus(3, rng)), 3).pass);

  // one eigenvalue pushed to -0.01
  ComplexMatrix bad = ComplexMatrix::Identity(4, 4) / 4.0;
  bad(0, 0) -= 0.26;
  bad(3, 3) += 0.26;
  auto r = validate_cptp(bad, 2);
  EXPECT_FALSE(r.completely_positive);
  EXPECT_NEAR(r.min_eigenvalue, -0.01, 1e-14);
  EXPECT_FALSE(r.pass);

  // transpose map: partial transpose of |phi+><phi+| is SWAP/2, eigenvalue -1/2
  ComplexMatrix transpose_choi = swap_operator(2, 2) / 2.0;
  r = validate_cptp(transpose_choi, 2);
  EXPECT_FALSE(r.completely_positive);
  EXPECT_TRUE(r.trace_preserving);
  EXPECT_NEAR(r.min_eigenvalue, -0.5, 1e-14);
  EXPECT_THROW(ChoiMatrix(transpose_choi, 2), ValidationError);

  // positive but not trace preserving
  r = validate_cptp(diag({1, 0, 0, 0}), 2);
  EXPECT_TRUE(r.completely_positive);
  EXPECT_FALSE(r.trace_preserving);
}

TEST(TensorChannels, Examples) {
  ChoiMatrix id2 = kraus_to_choi(identity_channel(2));
  ChoiMatrix id3 = kraus_to_choi(identity_channel(3));
  EXPECT_LT(max_abs_diff(tensor_channels(id2, id3).matrix(), maximally_entangled_matrix(6)), 1e-15);
  ChoiMatrix dep = kraus_to_choi(depolarizing_channel(2, 1.0));
  ChoiMatrix both = tensor_channels(dep, dep);
  for (double v : both.sigma().eigenvalues()) EXPECT_NEAR(v, 1.0 / 16.0, 1e-15);
}

TEST(TensorChannels, SpectrumLawAndKrausAgreement) {
  Rng rng(19);
  for (int t = 0; t < 15; ++t) {
    const Eigen::Index d1 = 2, d2 = 2 + t % 2;
    KrausSet k1 = testing::random_kraus(d1, rng);
    KrausSet k2 = testing::random_kraus(d2, rng);
    ChoiMatrix c1 = kraus_to_choi(k1), c2 = kraus_to_choi(k2);
    ChoiMatrix c12 = tensor_channels(c1, c2);
    EXPECT_LT(max_abs_diff(c12.matrix(), kraus_to_choi_matrix(tensor_kraus(k1, k2))), 1e-14);
    std::vector<double> outer;
    for (double a : c1.sigma().eigenvalues())
      for (double b : c2.sigma().eigenvalues()) outer.push_back(a * b);
    std::sort(outer.begin(), outer.end());
    auto spec = sorted_spectrum(c12.matrix());
    ASSERT_EQ(spec.size(), outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i) EXPECT_NEAR(spec[i], outer[i], 1e-9);
  }
}

TEST(TransformUnraveling, Examples) {
  KrausSet pin = computational_pinching(2);
  KrausSet same = transform_unraveling(pin, UnitaryMatrix(ComplexMatrix::Identity(2, 2)));
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(max_abs_diff(same[i], pin[i]), 0.0);

  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  KrausSet mixed = transform_unraveling(pin, UnitaryMatrix(h));
  EXPECT_GT(max_abs_diff(mixed[0], pin[0]), 0.1);
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(2, 2);
      e(i, j) = 1.0;
      EXPECT_LT(max_abs_diff(apply_channel(mixed, e), apply_channel(pin, e)), 1e-15);
    }
  EXPECT_THROW(UnitaryMatrix(2.0 * ComplexMatrix::Identity(2, 2)), ValidationError);
  EXPECT_THROW(transform_unraveling(depolarizing_channel(2, 0.5), UnitaryMatrix(h)), DimensionError);
}

TEST(TransformUnraveling, ChoiResidualRandom) {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    KrausSet k = testing::random_kraus(2 + t % 2, rng);
    const auto n = static_cast<Eigen::Index>(k.size());
    KrausSet b = transform_unraveling(k, UnitaryMatrix(haar_unitary(n, rng)));
    EXPECT_LT(max_abs_diff(kraus_to_choi_matrix(b), kraus_to_choi_matrix(k)), 1e-10);
  }
}

TEST(StandardChannel, Examples) {
  KrausSet id = standard_channel(channels::Identity{}, 3);
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(max_abs_diff(id[0], ComplexMatrix::Identity(3, 3)), 0.0);

  const double p = 0.3;
  KrausSet dep = standard_channel(channels::Depolarizing{p}, 2);
  ASSERT_EQ(dep.size(), 4u);
  EXPECT_LT(max_abs_diff(dep[0], std::sqrt(1.0 - 0.75 * p) * ComplexMatrix::Identity(2, 2)), 1e-15);
  EXPECT_LT(max_abs_diff(dep[1], std::sqrt(p / 4.0) * testing::pauli_x()), 1e-15);

  KrausSet pin = standard_channel(channels::Pinching{}, 2);
  ASSERT_EQ(pin.size(), 2u);
  EXPECT_EQ(max_abs_diff(pin[0], diag({1, 0})), 0.0);
  EXPECT_EQ(max_abs_diff(pin[1], diag({0, 1})), 0.0);
  EXPECT_EQ(standard_channel(channels::Pinching{}, 3).size(), 3u);
}

TEST(StandardChannel, DefiningActions) {
  Rng rng(29);
  for (Eigen::Index d : {2, 3, 4}) {
    DensityOperator rho = random_density(d, rng);
    const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
    EXPECT_LT(max_abs_diff(apply_channel(depolarizing_channel(d, 1.0), rho.matrix()), mixed), 1e-12);
    const double p = 0.35;
    EXPECT_LT(max_abs_diff(apply_channel(depolarizing_channel(d, p), rho.matrix()), (1 - p) * rho.matrix() + p * mixed),
              1e-12);
    const double lam = 0.6;
    ComplexMatrix dephased = rho.matrix().diagonal().asDiagonal();
    EXPECT_LT(max_abs_diff(apply_channel(phase_damping_channel(d, lam), rho.matrix()),
                           (1 - lam) * rho.matrix() + lam * dephased),
              1e-12);
    DensityOperator out = apply_channel(amplitude_damping_channel(d, 1.0), rho);
    EXPECT_NEAR(out.matrix()(0, 0).real(), 1.0, 1e-12);
  }
  EXPECT_THROW(depolarizing_channel(2, 1.5), InvalidParameter);
  EXPECT_THROW(amplitude_damping_channel(2, -0.1), InvalidParameter);
  EXPECT_THROW(phase_damping_channel(2, 2.0), InvalidParameter);
  ComplexMatrix not_proj = diag({0.5, 0.5});
  EXPECT_THROW(pinching_channel({not_proj}), InvalidParameter);
}

TEST(RandomChannel, Properties) {
  KrausSet u = random_channel(3, 1, 42);
  ASSERT_EQ(u.size(), 1u);
  EXPECT_TRUE(is_unitary(u[0]));

  KrausSet full = random_channel(2, 4, 43);
  ChoiMatrix full_choi = kraus_to_choi(full);
  auto spec = full_choi.sigma().eigenvalues();
  EXPECT_GT(*std::min_element(spec.begin(), spec.end()), 1e-6);

  KrausSet a = random_channel(3, 4, 44), b = random_channel(3, 4, 44);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(max_abs_diff(a[i], b[i]), 0.0);
  EXPECT_GT(max_abs_diff(random_channel(3, 4, 45)[0], a[0]), 0.0);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    KrausSet k = random_channel(3, 1 + seed % 9, seed);
    ComplexMatrix sum = ComplexMatrix::Zero(3, 3);
    for (const auto& op : k.operators()) sum += op.adjoint() * op;
    EXPECT_LT(max_abs_diff(sum, ComplexMatrix::Identity(3, 3)), 1e-10);
  }
  EXPECT_THROW(random_channel(2, 5, 0), InvalidParameter);
  EXPECT_THROW(random_channel(2, 0, 0), InvalidParameter);
}

TEST(MaximallyEntangledState, Examples) {
  DensityOperator phi = maximally_entangled_state(2);
  for (auto [i, j] : {std::pair{0, 0}, {0, 3}, {3, 0}, {3, 3}}) EXPECT_NEAR(phi.matrix()(i, j).real(), 0.5, 1e-15);
  EXPECT_NEAR((phi.matrix() * phi.matrix()).trace().real(), 1.0, 1e-15);
  for (Eigen::Index d : {2, 3}) {
    ComplexMatrix m = maximally_entangled_state(d).matrix();
    const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
    EXPECT_LT(max_abs_diff(partial_trace(m, Subsystem::A, d, d), mixed), 1e-15);
    EXPECT_LT(max_abs_diff(partial_trace(m, Subsystem::B, d, d), mixed), 1e-15);
  }
  EXPECT_THROW(maximally_entangled_state(1), InvalidParameter);
}

TEST(Vectorize, IndexConvention) {
  ComplexMatrix a(2, 2);
  a << 1, 2, 3, 4;
  ComplexVector v = vectorize(a);
  EXPECT_EQ(v(1), Complex(2.0));  // vec(A)[i*d + v] = A(i, v)
  EXPECT_EQ(v(2), Complex(3.0));
  EXPECT_EQ(max_abs_diff(unvectorize(v, 2), a), 0.0);
}

}  // namespace
}  // namespace qse
