// Copyright 2026 The Authors.
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

#include "omt/realization.hpp"

#include "doctest.h"
#include "omt/cryptomorphism.hpp"
#include "omt/oracle.hpp"

using namespace omt;

namespace {

const RationalField kQ;

SkewMatrix<RationalField> example_2x2(int a = 3) {
  SkewMatrix<RationalField> m(kQ, 2);
  m.set_upper(1, 2, Rational(a));
  return m;
}

// a12=1, a13=2, a14=3, a23=4, a24=5, a34=6.
SkewMatrix<RationalField> example_4x4() {
  SkewMatrix<RationalField> m(kQ, 4);
  int v = 1;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) m.set_upper(i, j, Rational(v++));
  return m;
}

SignedSubset subset(int n, std::initializer_list<const char*> elems) {
  SignedSubset s(n, Mask{0});
  for (const char* e : elems) s = s.with(Element::parse(e));
  return s;
}

Rational det_of_principal(const SkewMatrix<RationalField>& a, Mask subset) {
  auto idx = detail::mask_indices(subset, a.n());
  std::vector<Rational> m;
  for (int r : idx)
    for (int c : idx) m.push_back(a.at(r, c));
  return oracle::det_laplace(kQ, m, static_cast<int>(idx.size()));
}

}  // namespace

TEST_CASE("pfaffian base cases") {
  auto a = example_2x2();
  CHECK(pfaffian(a, Mask{0}) == Rational(1));
  CHECK(pfaffian(a, Mask{0b11}) == Rational(3));
  CHECK(pfaffian(a, Mask{0b01}) == Rational(0));  // odd size
}

TEST_CASE("pfaffian of the 4x4 example") {
  auto b = example_4x4();
  // 1*6 - 2*5 + 3*4 = 8, det = 64.
  CHECK(pfaffian(b, Mask{0b1111}) == Rational(8));
  CHECK(det_of_principal(b, Mask{0b1111}) == Rational(64));
}

TEST_CASE("recursive pfaffian equals the matching-sum oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = 2 + static_cast<int>(seed % 5);
    auto a = oracle::random_skew_matrix(n, 1000 + seed,
                                        {9, 3, seed % 2 ? 30 : 0});
    PfaffianTable<RationalField> table(a);
    for (Mask i = 0; i < (Mask{1} << n); ++i)
      CHECK(table.pf(i) == oracle::pfaffian_matching_sum(a, i));
  }
}

TEST_CASE("bareiss determinant equals laplace expansion") {
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    int size = 1 + static_cast<int>(rng.below(5));
    std::vector<Rational> m;
    for (int k = 0; k < size * size; ++k) {
      Rational x(rng.range(-6, 6), rng.range(1, 3));
      x.canonicalize();
      m.push_back(std::move(x));
    }
    CHECK(determinant_bareiss(kQ, m, size) == oracle::det_laplace(kQ, m, size));
  }
}

TEST_CASE("wick coordinates of the worked example") {
  auto psi = wick_coordinates(example_2x2());
  CHECK(psi.value(subset(2, {"1", "2"})) == Rational(1));
  CHECK(psi.value(subset(2, {"1*", "2*"})) == Rational(3));
  CHECK(psi.value(subset(2, {"1", "2*"})) == Rational(0));
  CHECK(psi.value(subset(2, {"1*", "2"})) == Rational(0));
}

TEST_CASE("wick coordinates of the zero matrix") {
  SkewMatrix<RationalField> z(kQ, 3);
  auto psi = wick_coordinates(z);
  for (const auto& t : enumerate_transversals(3)) {
    if (t == subset(3, {"1", "2", "3"}))
      CHECK(psi.value(t) == Rational(1));
    else
      CHECK(psi.value(t) == Rational(0));
  }
}

TEST_CASE("random wick coordinates satisfy the wick axioms") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 2 + static_cast<int>(seed % 4);
    auto a = oracle::random_skew_matrix(n, 2000 + seed,
                                        {9, 3, seed % 3 ? 25 : 0});
    auto psi = wick_coordinates(a);
    CHECK(check_wick(psi, Strength::strong).ok);
    CHECK(check_wick(psi, Strength::weak).ok);
  }
}

TEST_CASE("plucker coordinates of the worked example") {
  auto aug = AugmentedMatrix<RationalField>::from_skew(example_2x2());
  CHECK(plucker(aug, subset(2, {"1", "1*"})) == Rational(-3));
  CHECK(plucker(aug, subset(2, {"2", "2*"})) == Rational(-3));
  CHECK(plucker(aug, subset(2, {"1", "2"})) == Rational(1));
  CHECK(aug.is_isotropic());
}

TEST_CASE("restricted plucker equals the wick-to-rgp composite") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    int n = 2 + static_cast<int>(seed % 4);
    auto a = oracle::random_skew_matrix(n, 3000 + seed,
                                        {9, 3, seed % 2 ? 20 : 0});
    auto direct = restricted_plucker(AugmentedMatrix<RationalField>::from_skew(a));
    auto composed = wick_to_rgp(wick_coordinates(a), Strength::strong, false);
    for (const auto& s : direct.domain())
      CHECK(direct.value(s) == composed.rgp.value(s));
    CHECK(check_rgp(direct, Strength::strong).ok);
    CHECK(direct.sigma().value_or(-1) == 0);
  }
}

TEST_CASE("cayley identities") {
  CHECK(check_cayley(example_4x4()).ok);
  SkewMatrix<RationalField> z(kQ, 4);
  CHECK(check_cayley(z).ok);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    int n = 2 + static_cast<int>(seed % 5);
    auto a = oracle::random_skew_matrix(n, 4000 + seed,
                                        {7, 2, seed % 2 ? 35 : 0});
    CHECK(check_cayley(a).ok);
  }
}

TEST_CASE("linear relations on both components") {
  auto aug = AugmentedMatrix<RationalField>::from_skew(example_2x2());
  CHECK(check_linear_relations(aug, Component::plus).ok);

  auto minus = aug.with_pair_swapped(1);
  CHECK(minus.is_isotropic());
  auto rpm = restricted_plucker(minus);
  CHECK(rpm.value(subset(2, {"1", "1*"})) == Rational(3));
  CHECK(rpm.value(subset(2, {"2", "2*"})) == Rational(-3));
  CHECK(check_linear_relations(minus, Component::minus).ok);

  // Wrong component: the plus relations fail on a minus-component matrix.
  CHECK_FALSE(check_linear_relations(minus, Component::plus).ok);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 2 + static_cast<int>(seed % 4);
    auto a = oracle::random_skew_matrix(n, 5000 + seed, {9, 3, 0});
    auto plus = AugmentedMatrix<RationalField>::from_skew(a);
    CHECK(check_linear_relations(plus, Component::plus).ok);
    CHECK(check_linear_relations(plus.with_pair_swapped(1), Component::minus)
              .ok);
  }
}

TEST_CASE("non-isotropic input is rejected") {
  AugmentedMatrix<RationalField> aug(kQ, 2);
  for (int r = 1; r <= 2; ++r)
    for (int i = 1; i <= 2; ++i) {
      aug.set(r, Element{i, false}, r == i ? kQ.one() : kQ.zero());
      aug.set(r, Element{i, true}, Rational(r + i));  // not skew-symmetric
    }
  CHECK_FALSE(aug.is_isotropic());
  CHECK_THROWS_AS(check_linear_relations(aug, Component::plus), NotIsotropic);
}

TEST_CASE("pfaffian positivity equivalence on tiny cases") {
  SkewMatrix<RationalField> pos(kQ, 2);
  pos.set_upper(1, 2, Rational(1));
  auto r = pfaffian_positivity_equivalence(pos, PositivityMode::positive);
  CHECK(r.pf_side);
  CHECK(r.minor_side);

  SkewMatrix<RationalField> neg(kQ, 2);
  neg.set_upper(1, 2, Rational(-1));
  auto r2 = pfaffian_positivity_equivalence(neg, PositivityMode::positive);
  CHECK_FALSE(r2.pf_side);
  CHECK_FALSE(r2.minor_side);
}

TEST_CASE("positivity booleans agree on random matrices") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 2 + static_cast<int>(seed % 5);
    oracle::EntryDistribution dist{9, 2, seed % 2 ? 40 : 0};
    auto a = oracle::random_skew_matrix(n, 6000 + seed, dist);
    for (auto mode : {PositivityMode::positive, PositivityMode::nonnegative}) {
      auto r = pfaffian_positivity_equivalence(a, mode);
      CHECK(r.pf_side == r.minor_side);
    }
  }
  // Zero matrix: nonnegative on both sides, not positive.
  SkewMatrix<RationalField> z(kQ, 3);
  auto nn = pfaffian_positivity_equivalence(z, PositivityMode::nonnegative);
  CHECK(nn.pf_side);
  CHECK(nn.minor_side);
  auto pp = pfaffian_positivity_equivalence(z, PositivityMode::positive);
  CHECK_FALSE(pp.pf_side);
  CHECK_FALSE(pp.minor_side);
}

TEST_CASE("matroid from matrix") {
  auto m = matroid_from_matrix(example_2x2(), Mask{0});
  CHECK(m.bases() == std::vector<SignedSubset>{subset(2, {"1", "2"}),
                                               subset(2, {"1*", "2*"})});

  SkewMatrix<RationalField> z(kQ, 2);
  auto mz = matroid_from_matrix(z, Mask{0});
  CHECK(mz.bases() == std::vector<SignedSubset>{subset(2, {"1", "2"})});

  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    int n = 2 + static_cast<int>(seed % 4);
    auto a = oracle::random_skew_matrix(n, 7000 + seed, {9, 3, 30});
    auto from_minors = matroid_from_matrix(a, Mask{0});
    auto support = wick_coordinates(a).support();
    CHECK(from_minors.bases() == support);
  }
}

TEST_CASE("matroid from matrix honours the twist") {
  auto m = matroid_from_matrix(example_2x2(), Mask{0b01});
  CHECK(m.bases() == std::vector<SignedSubset>{subset(2, {"1*", "2"}),
                                               subset(2, {"1", "2*"})});
}

TEST_CASE("matrix upper-triangle round trip") {
  auto a = example_4x4();
  auto upper = a.upper_triangle();
  auto b = SkewMatrix<RationalField>::from_upper(kQ, 4, upper);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(a.at(i, j) == b.at(i, j));
  CHECK(a.at(2, 1) == Rational(-1));
  CHECK(a.at(3, 3) == Rational(0));
}
