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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omt/groundset.hpp"
#include "omt/tract.hpp"
#include "omt/tract_function.hpp"

namespace omt {

/// The shapes a Grassmann-Plücker relation supported on 𝒯_n ∪ 𝒜_n can take
/// (plus inapplicability). Cases 1-6 are the classical six shapes and
/// exhaust everything for n <= 3. Case 7 first appears at n = 4: S carries
/// two skew pairs and a retained single of S gets completed to a pair in S'
/// alongside an element of the index missing from S. Its four terms cancel
/// in the x - x + y - y shape, so it is null in every tract where such sums
/// are (all shipped tracts, in particular under 1+1-1-1 ∈ N_F combined with
/// scaling for the equal-magnitude subcase).
enum class GpCase {
  not_applicable = 0,
  hyper_hypo = 1,               // S hyper, S' hypo
  pair_inside = 2,              // {i,i*} ⊆ S' ⊆ S, S hyper
  hyper_with_swap = 3,          // S hyper, S' = S \ {i,i*} \ {k} ∪ {j*}
  two_pairs_drop = 4,           // S two pairs, S' = S \ D, D inside the pairs
  two_pairs_one_new = 5,        // S' = S \ {i,i*,j*} ∪ {k}
  two_pairs_pair_new = 6,       // S' = S \ {i,i*,j,j*} ∪ {k,k*}
  two_pairs_pair_at_single = 7, // S' = S \ {i,i*,j,j*} ∪ {c*, k-element}
};

inline constexpr std::size_t kGpCaseCount = 8;  // 0..7

/// A pair is applicable when |S| = n+1, |S'| = n-1 and every S \ {e},
/// S' ∪ {e} for e ∈ S \ S' lies in 𝒯_n ∪ 𝒜_n.
bool gp_relation_applicable(const SignedSubset& s,
                            const SignedSubset& s_prime);

/// Bitmask of the case patterns (bits 1..7) matching the pair; exactly one
/// bit is set on applicable pairs.
unsigned gp_case_pattern_matches(const SignedSubset& s,
                                 const SignedSubset& s_prime);

/// The unique case, or not_applicable. Throws Error if an applicable pair
/// matches zero or several patterns (would contradict the lemma).
GpCase classify_gp_relation(const SignedSubset& s,
                            const SignedSubset& s_prime);

/// One signed symbolic term of a GP relation: the exponent parity and the
/// unordered argument pair.
struct GpTerm {
  int sign = 0;  // 0 or 1, exponent mod 2
  Mask lo = 0, hi = 0;
  friend auto operator<=>(const GpTerm&, const GpTerm&) = default;
};

/// The relation for (S, S') as a sorted list of symbolic terms.
std::vector<GpTerm> gp_relation_symbolic(const SignedSubset& s,
                                         const SignedSubset& s_prime);

/// For case-3 and case-5 pairs: the proof's substitution produces a case-1
/// pair whose relation is literally the same up to a global sign. Returns
/// false if no candidate substitution matches (which would contradict the
/// proof).
bool rewrites_to_case1(const SignedSubset& s, const SignedSubset& s_prime);

/// All applicable (S, S') pairs for a ground size, classified; cached per n
/// since classification is instance-independent.
class GpRelationTable {
 public:
  struct Entry {
    SignedSubset s, s_prime;
    GpCase kind = GpCase::not_applicable;
  };

  static const GpRelationTable& for_n(int n);

  const std::vector<Entry>& applicable() const { return applicable_; }
  long not_applicable_count() const { return not_applicable_; }
  long case_count(GpCase c) const {
    return counts_[static_cast<std::size_t>(c)];
  }

 private:
  std::vector<Entry> applicable_;
  std::array<long, kGpCaseCount> counts_{};
  long not_applicable_ = 0;
};

/// How much validation check_enveloping_relations runs before evaluating.
enum class EnvelopingPrecondition { strong_rgp, rgp23_only, assume_valid };

struct EnvelopingReport {
  bool ok = true;
  std::array<long, kGpCaseCount> case_counts{};
  long not_applicable = 0;
  std::optional<std::pair<SignedSubset, SignedSubset>> witness;
  GpCase witness_case = GpCase::not_applicable;
  std::string detail;
};

/// Evaluates every applicable GP relation on 𝒯_n ∪ 𝒜_n against φ and
/// requires nullity; case-6 relations are additionally checked to cancel in
/// the X - X + X - X shape term by term. Requires 1+1-1-1 ∈ N_F (throws
/// TractConditionFailed otherwise).
template <Tract T>
EnvelopingReport check_enveloping_relations(
    const RgpFunction<T>& phi,
    EnvelopingPrecondition pre = EnvelopingPrecondition::strong_rgp) {
  const T& tract = phi.tract();
  {
    auto one = tract.one();
    FormalSum<typename T::Elem> probe{one, one, tract.neg(one),
                                      tract.neg(one)};
    if (!tract.is_null(probe))
      throw TractConditionFailed("tract does not satisfy 1+1-1-1 ∈ N_F");
  }
  if (pre != EnvelopingPrecondition::assume_valid) {
    auto rep = check_rgp(phi, Strength::strong,
                         pre == EnvelopingPrecondition::strong_rgp);
    if (!rep.ok) throw InvalidRgp(rep.to_string());
  }

  EnvelopingReport report;
  const auto& table = GpRelationTable::for_n(phi.n());
  report.not_applicable = table.not_applicable_count();

  for (const auto& entry : table.applicable()) {
    ++report.case_counts[static_cast<std::size_t>(entry.kind)];
    FormalSum<typename T::Elem> sum;
    std::vector<typename T::Elem> terms;
    Mask moving = entry.s.bits() & ~entry.s_prime.bits();
    Mask diff = entry.s.bits() ^ entry.s_prime.bits();
    for (int r = 0; r < 2 * phi.n(); ++r) {
      Mask bit = Mask{1} << r;
      if (!(moving & bit)) continue;
      Element e = Element::from_rank(r);
      int exponent = std::popcount(diff & (bit - 1));
      auto term = signed_by(
          tract, exponent,
          tract.mul(phi.value(entry.s.without(e)),
                    phi.value(entry.s_prime.with(e))));
      terms.push_back(term);
      if (!tract.is_zero(term)) sum.push_back(term);
    }
    if (!tract.is_null(sum)) {
      report.ok = false;
      report.witness = {entry.s, entry.s_prime};
      report.witness_case = entry.kind;
      report.detail = "relation is not null";
      return report;
    }
    if (entry.kind == GpCase::two_pairs_pair_new) {
      // Terms arrive ordered i < j < i* position-wise within the two pairs
      // of S: ranks give (i, i*, j, j*) ascending, so terms[0..3] pair up as
      // the proof's (i, i*, j, j*).
      // X - X + X - X structure: t_i = -t_j, t_{i*} = -t_{j*}, t_i = t_{i*}.
      const auto& ti = terms[0];
      const auto& tis = terms[1];
      const auto& tj = terms[2];
      const auto& tjs = terms[3];
      bool structure = tract.eq(ti, tract.neg(tj)) &&
                       tract.eq(tis, tract.neg(tjs)) &&
                       tract.eq(ti, tis);
      if (!structure) {
        report.ok = false;
        report.witness = {entry.s, entry.s_prime};
        report.witness_case = entry.kind;
        report.detail = "case-6 cancellation structure broken";
        return report;
      }
    }
  }
  return report;
}

}  // namespace omt
