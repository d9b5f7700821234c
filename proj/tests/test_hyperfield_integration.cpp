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

// Full-stack coverage over the non-field tracts and prime fields. Sign
// vectors of rational Wick coordinates are valid over the sign hyperfield
// (a vanishing real sum has terms of both signs), and 2-adic valuations are
// valid over the tropical hyperfield (a vanishing sum attains its minimum
// valuation at least twice), so both push a realizable instance through
// every checker and map.

#include "doctest.h"
#include "omt/cryptomorphism.hpp"
#include "omt/enveloping.hpp"
#include "omt/oracle.hpp"
#include "omt/realization.hpp"

using namespace omt;

namespace {

const SignHyperfield kS;
const TropicalHyperfield kT;

WickFunction<SignHyperfield> sign_of(const WickFunction<RationalField>& psi) {
  WickFunction<SignHyperfield> out(kS, psi.n());
  for (const auto& t : enumerate_transversals(psi.n())) {
    const Rational& v = psi.value(t);
    out.set_value(t, static_cast<std::int8_t>(v == 0 ? 0 : (v > 0 ? 1 : -1)));
  }
  return out;
}

Rational two_adic_valuation(const Rational& v) {
  mpz_class num = v.get_num(), den = v.get_den();
  long val = 0;
  while (num % 2 == 0) {
    num /= 2;
    ++val;
  }
  while (den % 2 == 0) {
    den /= 2;
    --val;
  }
  return Rational(val);
}

WickFunction<TropicalHyperfield> tropicalize(
    const WickFunction<RationalField>& psi) {
  WickFunction<TropicalHyperfield> out(kT, psi.n());
  for (const auto& t : enumerate_transversals(psi.n())) {
    const Rational& v = psi.value(t);
    if (v != 0) out.set_value(t, TropicalNumber{false, two_adic_valuation(v)});
  }
  return out;
}

WickFunction<RationalField> rational_instance(int n, std::uint64_t seed) {
  return wick_coordinates(oracle::random_skew_matrix(n, seed, {9, 3, 25}));
}

}  // namespace

TEST_CASE("sign vectors of realizable instances are sign-wick functions") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    int n = 2 + static_cast<int>(seed % 3);
    auto psi = sign_of(rational_instance(n, 51000 + seed));
    CHECK(check_wick(psi, Strength::strong).ok);
    CHECK(check_wick(psi, Strength::weak).ok);
  }
}

TEST_CASE("two-adic valuations of realizable instances are tropical-wick") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    int n = 2 + static_cast<int>(seed % 3);
    auto psi = tropicalize(rational_instance(n, 52000 + seed));
    CHECK(check_wick(psi, Strength::strong).ok);
    CHECK(check_wick(psi, Strength::weak).ok);
  }
}

TEST_CASE("sign instances run the whole cryptomorphism cycle") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    int n = 2 + static_cast<int>(seed % 3);
    auto psi = sign_of(rational_instance(n, 53000 + seed));
    CHECK(verify_roundtrips(psi, Strength::strong).ok());
    CHECK(verify_roundtrips(psi, Strength::weak).ok());
  }
}

TEST_CASE("tropical instances run the whole cryptomorphism cycle") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    int n = 2 + static_cast<int>(seed % 3);
    auto psi = tropicalize(rational_instance(n, 54000 + seed));
    CHECK(verify_roundtrips(psi, Strength::strong).ok());
    CHECK(verify_roundtrips(psi, Strength::weak).ok());
  }
}

TEST_CASE("sign and tropical signatures pass the weak hierarchy") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    int n = 2 + static_cast<int>(seed % 3);
    auto rational = rational_instance(n, 55000 + seed);

    auto sign_sig = wick_to_signature(sign_of(rational), Strength::strong);
    auto m = matroid_of_signature(sign_sig);
    CHECK(check_orthogonal_signature(sign_sig, m).ok);
    CHECK(check_weak_orthogonal_signature(sign_sig, m).ok);
    CHECK(check_weak_circuit_set(sign_sig, m).ok);

    auto trop_sig =
        wick_to_signature(tropicalize(rational), Strength::strong);
    CHECK(check_orthogonal_signature(trop_sig, m).ok);
    CHECK(check_weak_orthogonal_signature(trop_sig, m).ok);
    CHECK(check_weak_circuit_set(trop_sig, m).ok);
  }
}

TEST_CASE("enveloping relations hold over sign and tropical instances") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    int n = 2 + static_cast<int>(seed % 3);
    auto rational = rational_instance(n, 56000 + seed);
    auto sphi = wick_to_rgp(sign_of(rational), Strength::strong, false).rgp;
    CHECK(check_enveloping_relations(sphi).ok);
    auto tphi = wick_to_rgp(tropicalize(rational), Strength::strong, false).rgp;
    CHECK(check_enveloping_relations(tphi).ok);
  }
}

TEST_CASE("prime-field realizations behave like the rational ones") {
  for (std::uint32_t p : {5u, 7u, 13u}) {
    PrimeField fp(p);
    Rng rng(57000 + p);
    for (int trial = 0; trial < 6; ++trial) {
      int n = 2 + trial % 3;
      SkewMatrix<PrimeField> a(fp, n);
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
          a.set_upper(i, j, static_cast<PrimeField::Elem>(rng.below(p)));
      auto psi = wick_coordinates(a);
      CHECK(check_wick(psi, Strength::strong).ok);

      auto aug = AugmentedMatrix<PrimeField>::from_skew(a);
      auto direct = restricted_plucker(aug);
      auto composed = wick_to_rgp(psi, Strength::strong, false).rgp;
      for (const auto& s : direct.domain())
        CHECK(fp.eq(direct.value(s), composed.value(s)));
      CHECK(check_cayley(a).ok);
      CHECK(check_linear_relations(aug, Component::plus).ok);
      CHECK(verify_roundtrips(psi, Strength::strong).ok());
    }
  }
}

TEST_CASE("characteristic two is supported") {
  PrimeField f2(2);
  SkewMatrix<PrimeField> a(f2, 3);
  a.set_upper(1, 2, 1);
  a.set_upper(2, 3, 1);
  auto psi = wick_coordinates(a);
  CHECK(check_wick(psi, Strength::strong).ok);
  CHECK(verify_roundtrips(psi, Strength::strong).ok());
  CHECK(check_cayley(a).ok);
}
