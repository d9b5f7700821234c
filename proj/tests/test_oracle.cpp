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

#include "omt/oracle.hpp"

#include "doctest.h"
#include "omt/errors.hpp"

using namespace omt;

namespace {

// Regression constants computed by exhaustive oracle runs and frozen; the
// n=1 family is {{1}}, {{1*}}.
constexpr std::size_t kOrthogonalMatroidCount[] = {0, 2, 6, 30, 294};

}  // namespace

TEST_CASE("orthogonal matroid counts at small n") {
  for (int n = 1; n <= 3; ++n) {
    auto ms = oracle::enumerate_orthogonal_matroids(n);
    CHECK(ms.size() == kOrthogonalMatroidCount[n]);
    for (const auto& m : ms) CHECK(check_strong_exchange(n, m.bases()).ok);
  }
  CHECK(oracle::enumerate_orthogonal_matroids(4).size() ==
        kOrthogonalMatroidCount[4]);
  CHECK_THROWS_AS(oracle::enumerate_orthogonal_matroids(5), GroundSetTooLarge);
}

TEST_CASE("n = 1 enumeration is explicit") {
  auto ms = oracle::enumerate_orthogonal_matroids(1);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].bases() ==
        std::vector<SignedSubset>{SignedSubset(1, Mask{0b01})});
  CHECK(ms[1].bases() ==
        std::vector<SignedSubset>{SignedSubset(1, Mask{0b10})});
}

TEST_CASE("random skew matrices are reproducible") {
  auto a = oracle::random_skew_matrix(3, 42);
  auto b = oracle::random_skew_matrix(3, 42);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(a.at(i, j) == b.at(i, j));
  auto c = oracle::random_skew_matrix(3, 43);
  bool all_equal = true;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) all_equal &= (a.at(i, j) == c.at(i, j));
  CHECK_FALSE(all_equal);
}

TEST_CASE("zero density one gives the zero matrix") {
  auto a = oracle::random_skew_matrix(4, 7, {9, 3, 100});
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(a.at(i, j) == Rational(0));
}

TEST_CASE("zero density induces singular principal minors") {
  int singular_pairs = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto a = oracle::random_skew_matrix(3, 9000 + seed, {9, 3, 50});
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        if (a.at(i, j) == 0) ++singular_pairs;
  }
  CHECK(singular_pairs > 0);  // smoke check, not a distribution assertion
}

TEST_CASE("matching-sum pfaffian base cases") {
  RationalField q;
  SkewMatrix<RationalField> a(q, 2);
  a.set_upper(1, 2, Rational(5, 2));
  CHECK(oracle::pfaffian_matching_sum(a, Mask{0b11}) == Rational(5, 2));
  CHECK(oracle::pfaffian_matching_sum(a, Mask{0}) == Rational(1));
  CHECK(oracle::pfaffian_matching_sum(a, Mask{0b01}) == Rational(0));
}

TEST_CASE("brute-force circuits agree with the production scan") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& m : oracle::enumerate_orthogonal_matroids(n)) {
      CHECK(oracle::circuits_bruteforce(n, m.bases(), false) == m.circuits());
      auto even = m.to_even_antisymmetric();
      CHECK(oracle::circuits_bruteforce(n, even.bases(), true) ==
            even.circuits());
    }
  }
}
