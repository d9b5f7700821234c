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

#include "omt/enveloping.hpp"

#include "doctest.h"
#include "omt/cryptomorphism.hpp"
#include "omt/oracle.hpp"
#include "omt/realization.hpp"

using namespace omt;

namespace {

const RationalField kQ;
const KrasnerHyperfield kK;

SignedSubset subset(int n, std::initializer_list<const char*> elems) {
  SignedSubset s(n, Mask{0});
  for (const char* e : elems) s = s.with(Element::parse(e));
  return s;
}

RgpFunction<RationalField> realizable_phi(int n, std::uint64_t seed) {
  auto a = oracle::random_skew_matrix(n, seed, {9, 3, 25});
  return restricted_plucker(AugmentedMatrix<RationalField>::from_skew(a));
}

}  // namespace

TEST_CASE("case classification on the named patterns") {
  // Hyper S, hypo S' with S' not inside S.
  CHECK(classify_gp_relation(subset(2, {"1", "1*", "2"}), subset(2, {"2*"})) ==
        GpCase::hyper_hypo);

  // {i,i*} ⊆ S' ⊆ S. The pattern needs |S'| = n-1 >= 2, so n >= 3.
  CHECK(classify_gp_relation(subset(3, {"1", "1*", "2", "3"}),
                             subset(3, {"1", "1*"})) == GpCase::pair_inside);

  // Two skew pairs in S, S' the remaining full pair.
  CHECK(classify_gp_relation(subset(3, {"1", "1*", "2", "2*"}),
                             subset(3, {"3", "3*"})) ==
        GpCase::two_pairs_pair_new);
}

TEST_CASE("every applicable pair matches exactly one case up to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    long applicable = 0;
    for (Mask s_bits = 0; s_bits < (Mask{1} << (2 * n)); ++s_bits) {
      if (std::popcount(s_bits) != n + 1) continue;
      SignedSubset s(n, s_bits);
      for (Mask sp_bits = 0; sp_bits < (Mask{1} << (2 * n)); ++sp_bits) {
        if (std::popcount(sp_bits) != n - 1) continue;
        SignedSubset sp(n, sp_bits);
        if (!gp_relation_applicable(s, sp)) continue;
        ++applicable;
        CHECK(std::popcount(gp_case_pattern_matches(s, sp)) == 1);
      }
    }
    CHECK(applicable == static_cast<long>(
                            GpRelationTable::for_n(n).applicable().size()));
  }
}

TEST_CASE("the classical six cases are exhaustive exactly up to n = 3") {
  for (int n = 1; n <= 3; ++n)
    CHECK(GpRelationTable::for_n(n).case_count(
              GpCase::two_pairs_pair_at_single) == 0);
  // The extra shape appears at n = 4: S = {1,1*,2,2*,3}, S' = {3,3*,4} is
  // applicable but matches none of the classical six patterns.
  SignedSubset s = subset(4, {"1", "1*", "2", "2*", "3"});
  SignedSubset sp = subset(4, {"3", "3*", "4"});
  CHECK(gp_relation_applicable(s, sp));
  CHECK(classify_gp_relation(s, sp) == GpCase::two_pairs_pair_at_single);
  CHECK(GpRelationTable::for_n(4).case_count(
            GpCase::two_pairs_pair_at_single) == 48);
}

TEST_CASE("relation table bookkeeping") {
  const auto& table = GpRelationTable::for_n(2);
  long total = 0;
  for (int c = 1; c <= 7; ++c)
    total += table.case_count(static_cast<GpCase>(c));
  CHECK(total == static_cast<long>(table.applicable().size()));
  CHECK(table.case_count(GpCase::hyper_hypo) > 0);
  // Case 6 needs a third index; impossible at n = 2.
  CHECK(table.case_count(GpCase::two_pairs_pair_new) == 0);
  CHECK(GpRelationTable::for_n(3).case_count(GpCase::two_pairs_pair_new) > 0);
}

TEST_CASE("case-7 relations cancel pairwise on generated instances") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto phi = realizable_phi(4, 32000 + seed);
    for (const auto& entry : GpRelationTable::for_n(4).applicable()) {
      if (entry.kind != GpCase::two_pairs_pair_at_single) continue;
      std::vector<Rational> t;
      Mask moving = entry.s.bits() & ~entry.s_prime.bits();
      Mask diff = entry.s.bits() ^ entry.s_prime.bits();
      for (int r = 0; r < 8; ++r) {
        Mask bit = Mask{1} << r;
        if (!(moving & bit)) continue;
        Element e = Element::from_rank(r);
        t.push_back(signed_by(kQ, std::popcount(diff & (bit - 1)),
                              kQ.mul(phi.value(entry.s.without(e)),
                                     phi.value(entry.s_prime.with(e)))));
      }
      REQUIRE(t.size() == 4);
      bool paired = (t[0] == -t[1] && t[2] == -t[3]) ||
                    (t[0] == -t[2] && t[1] == -t[3]) ||
                    (t[0] == -t[3] && t[1] == -t[2]);
      CHECK(paired);
    }
  }
}

TEST_CASE("cases 3 and 5 rewrite to case-1 relations") {
  for (int n = 2; n <= 3; ++n) {
    const auto& table = GpRelationTable::for_n(n);
    long rewritten = 0;
    for (const auto& entry : table.applicable()) {
      if (entry.kind != GpCase::hyper_with_swap &&
          entry.kind != GpCase::two_pairs_one_new)
        continue;
      CHECK(rewrites_to_case1(entry.s, entry.s_prime));
      ++rewritten;
    }
    if (n == 3) CHECK(rewritten > 0);
  }
}

TEST_CASE("cases 2 and 4 cancel for arbitrary value tables") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    RgpFunction<RationalField> phi(kQ, 3);
    for (const auto& s : phi.domain())
      phi.set_value(s, Rational(rng.range(-9, 9)));
    for (const auto& entry : GpRelationTable::for_n(3).applicable()) {
      if (entry.kind != GpCase::pair_inside &&
          entry.kind != GpCase::two_pairs_drop)
        continue;
      Mask moving = entry.s.bits() & ~entry.s_prime.bits();
      Mask diff = entry.s.bits() ^ entry.s_prime.bits();
      FormalSum<Rational> sum;
      for (int r = 0; r < 6; ++r) {
        Mask bit = Mask{1} << r;
        if (!(moving & bit)) continue;
        Element e = Element::from_rank(r);
        sum.push_back(signed_by(kQ, std::popcount(diff & (bit - 1)),
                                kQ.mul(phi.value(entry.s.without(e)),
                                       phi.value(entry.s_prime.with(e)))));
      }
      CHECK(kQ.is_null(sum));
    }
  }
}

TEST_CASE("enveloping relations hold on realizable instances") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    int n = 2 + static_cast<int>(seed % 3);
    auto report = check_enveloping_relations(realizable_phi(n, 30000 + seed));
    CHECK(report.ok);
    CHECK(report.case_counts[1] > 0);
  }
}

TEST_CASE("enveloping relations hold on krasner instances") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& m : oracle::enumerate_orthogonal_matroids(n)) {
      auto even = m.to_even_antisymmetric();
      RgpFunction<KrasnerHyperfield> phi(kK, n);
      for (const auto& b : even.bases()) phi.set_value(b, kK.one());
      CHECK(check_enveloping_relations(phi).ok);
    }
  }
}

namespace {

// A field-like tract whose null set only admits sums of length <= 2; it
// violates 1+1-1-1 ∈ N_F on purpose.
struct ShortSumRationals : RationalField {
  bool is_null(const FormalSum<Rational>& s) const {
    if (s.size() > 2) return false;
    Rational acc(0);
    for (const auto& x : s) acc += x;
    return acc == 0;
  }
};

}  // namespace

TEST_CASE("the tract precondition is enforced") {
  ShortSumRationals tract;
  RgpFunction<ShortSumRationals> phi(tract, 2);
  phi.set_value(subset(2, {"1", "2"}), Rational(1));
  CHECK_THROWS_AS(
      check_enveloping_relations(phi, EnvelopingPrecondition::assume_valid),
      TractConditionFailed);
}

TEST_CASE("invalid rgp input is rejected") {
  RgpFunction<RationalField> bad(kQ, 2);
  bad.set_value(subset(2, {"1", "2"}), Rational(1));
  bad.set_value(subset(2, {"1*", "2"}), Rational(1));
  CHECK_THROWS_AS(check_enveloping_relations(bad), InvalidRgp);
}

TEST_CASE("weakened hypothesis over krasner at n = 2") {
  // rGP1 + rGP2 + rGP3 suffice for the enveloping relations when
  // x - x + y - y is always null, as it is over Krasner. Exhaust all
  // indicator tables on 𝒯_2 ∪ 𝒜_2.
  auto domain = RgpFunction<KrasnerHyperfield>(kK, 2).domain();
  int checked = 0;
  for (unsigned pick = 1; pick < 64; ++pick) {
    RgpFunction<KrasnerHyperfield> phi(kK, 2);
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (pick & (1u << i)) phi.set_value(domain[i], kK.one());
    if (!check_rgp(phi, Strength::strong, false).ok) continue;  // needs 1-3
    ++checked;
    auto report = check_enveloping_relations(
        phi, EnvelopingPrecondition::rgp23_only);
    CHECK(report.ok);
  }
  CHECK(checked >= 6);
}

TEST_CASE("case-6 structure check fires on a corrupted instance") {
  // Break rGP4 between partner almost-transversals at n = 3 and evaluate
  // only the structural part of case 6 (the relation itself may stay null
  // over Q if both sides cancel, so we target the term equalities).
  auto phi = realizable_phi(3, 31000);
  REQUIRE(check_rgp(phi, Strength::strong).ok);
  auto report = check_enveloping_relations(phi);
  REQUIRE(report.ok);

  // Corrupt one almost-transversal value by doubling it.
  SignedSubset target = subset(3, {"1", "1*", "2"});
  if (kQ.is_zero(phi.value(target))) {
    bool found = false;
    for (const auto& a : enumerate_almost_transversals(3)) {
      if (!kQ.is_zero(phi.value(a))) {
        target = a;
        found = true;
        break;
      }
    }
    REQUIRE(found);
  }
  phi.set_value(target, kQ.mul(Rational(2), phi.value(target)));
  auto corrupted = check_enveloping_relations(
      phi, EnvelopingPrecondition::assume_valid);
  CHECK_FALSE(corrupted.ok);
}
