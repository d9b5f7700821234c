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

#include <algorithm>
#include <map>
#include <mutex>

#include "omt/errors.hpp"

namespace omt {

namespace {

bool in_domain(const SignedSubset& s) {
  return s.is_transversal() || s.is_almost_transversal();
}

/// Indices of the skew pairs fully contained in S.
std::vector<int> contained_pairs(const SignedSubset& s) {
  std::vector<int> out;
  for (int i = 1; i <= s.n(); ++i)
    if ((s.bits() & pair_mask(i)) == pair_mask(i)) out.push_back(i);
  return out;
}

}  // namespace

bool gp_relation_applicable(const SignedSubset& s,
                            const SignedSubset& s_prime) {
  const int n = s.n();
  if (s.size() != n + 1 || s_prime.size() != n - 1) return false;
  Mask moving = s.bits() & ~s_prime.bits();
  for (int r = 0; r < 2 * n; ++r) {
    if (!(moving & (Mask{1} << r))) continue;
    Element e = Element::from_rank(r);
    if (!in_domain(s.without(e)) || !in_domain(s_prime.with(e))) return false;
  }
  return true;
}

unsigned gp_case_pattern_matches(const SignedSubset& s,
                                 const SignedSubset& s_prime) {
  const int n = s.n();
  unsigned matches = 0;
  auto pairs = contained_pairs(s);

  if (s.is_hyper_transversal()) {
    const int i = pairs.front();
    // Case 1: S' hypo-transversal.
    if (s_prime.is_hypo_transversal()) matches |= 1u << 1;
    // Case 2: {i,i*} ⊆ S' ⊆ S.
    if ((s_prime.bits() & pair_mask(i)) == pair_mask(i) &&
        (s_prime.bits() & ~s.bits()) == 0)
      matches |= 1u << 2;
    // Case 3: S' = S \ {i,i*} \ {k} ∪ {j*} with distinct j,k ∈ S \ {i,i*}.
    {
      Mask core = s.bits() & ~pair_mask(i);
      for (int rj = 0; rj < 2 * n; ++rj) {
        Element j = Element::from_rank(rj);
        if (!(core & j.bit())) continue;
        for (int rk = 0; rk < 2 * n; ++rk) {
          Element k = Element::from_rank(rk);
          if (!(core & k.bit()) || rk == rj) continue;
          if (s_prime.bits() == ((core & ~k.bit()) | j.star().bit()))
            matches |= 1u << 3;
        }
      }
    }
  }

  if (pairs.size() == 2) {
    Mask pair_bits = pair_mask(pairs[0]) | pair_mask(pairs[1]);
    // Case 4: S' = S \ D with D a 2-subset of the two pairs.
    if ((s_prime.bits() & ~s.bits()) == 0) {
      Mask dropped = s.bits() & ~s_prime.bits();
      if (std::popcount(dropped) == 2 && (dropped & ~pair_bits) == 0)
        matches |= 1u << 4;
    }
    // Cases 5, 6 and 7 all add elements at the index missing from S.
    for (int k = 1; k <= n; ++k) {
      if (s.bits() & pair_mask(k)) continue;
      // Case 6: S' = S \ (both pairs) ∪ {k,k*}.
      if (s_prime.bits() == ((s.bits() & ~pair_bits) | pair_mask(k)))
        matches |= 1u << 6;
      // Case 5: S' = S \ (one full pair) \ (one element of the other pair)
      // ∪ (one element of {k,k*}).
      for (int a = 0; a < 2; ++a) {
        Mask removed_pair = pair_mask(pairs[a]);
        Mask other_pair = pair_mask(pairs[1 - a]);
        for (int rb = 0; rb < 2 * n; ++rb) {
          Element y = Element::from_rank(rb);
          if (!(other_pair & y.bit())) continue;
          for (Element ke : {Element{k, false}, Element{k, true}}) {
            if (s_prime.bits() ==
                ((s.bits() & ~removed_pair & ~y.bit()) | ke.bit()))
              matches |= 1u << 5;
          }
        }
      }
      // Case 7: both pairs leave, a retained single c gets its partner and
      // a k-element joins. Needs n >= 4 (a single must exist).
      Mask core = s.bits() & ~pair_bits;
      for (int rc = 0; rc < 2 * n; ++rc) {
        Element c = Element::from_rank(rc);
        if (!(core & c.bit())) continue;
        for (Element ke : {Element{k, false}, Element{k, true}}) {
          if (s_prime.bits() == (core | c.star().bit() | ke.bit()))
            matches |= 1u << 7;
        }
      }
    }
  }
  return matches;
}

GpCase classify_gp_relation(const SignedSubset& s,
                            const SignedSubset& s_prime) {
  if (!gp_relation_applicable(s, s_prime)) return GpCase::not_applicable;
  unsigned matches = gp_case_pattern_matches(s, s_prime);
  if (std::popcount(matches) != 1)
    throw Error("applicable pair matches " +
                std::to_string(std::popcount(matches)) +
                " case patterns: (" + s.to_string() + ", " +
                s_prime.to_string() + ")");
  return static_cast<GpCase>(std::countr_zero(matches));
}

std::vector<GpTerm> gp_relation_symbolic(const SignedSubset& s,
                                         const SignedSubset& s_prime) {
  std::vector<GpTerm> terms;
  Mask moving = s.bits() & ~s_prime.bits();
  Mask diff = s.bits() ^ s_prime.bits();
  for (int r = 0; r < 2 * s.n(); ++r) {
    Mask bit = Mask{1} << r;
    if (!(moving & bit)) continue;
    Element e = Element::from_rank(r);
    GpTerm term;
    term.sign = std::popcount(diff & (bit - 1)) & 1;
    term.lo = std::min(s.without(e).bits(), s_prime.with(e).bits());
    term.hi = std::max(s.without(e).bits(), s_prime.with(e).bits());
    terms.push_back(term);
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

bool rewrites_to_case1(const SignedSubset& s, const SignedSubset& s_prime) {
  GpCase kind = classify_gp_relation(s, s_prime);
  if (kind != GpCase::hyper_with_swap && kind != GpCase::two_pairs_one_new)
    return false;

  // The moved pair P ⊆ S with P ∩ S' = ∅, and the single element y ∈ S' \ S.
  std::optional<int> moved_pair;
  for (int i : contained_pairs(s))
    if ((s_prime.bits() & pair_mask(i)) == 0) moved_pair = i;
  Mask added = s_prime.bits() & ~s.bits();
  if (!moved_pair || std::popcount(added) != 1) return false;
  Element y = Element::from_rank(std::countr_zero(added));

  auto original = gp_relation_symbolic(s, s_prime);
  auto flipped = original;
  for (auto& t : flipped) t.sign ^= 1;
  std::sort(flipped.begin(), flipped.end());

  for (Element x : {Element{*moved_pair, false}, Element{*moved_pair, true}}) {
    SignedSubset s2 = s.without(x).with(y);
    SignedSubset s2p = s_prime.without(y).with(x);
    if (classify_gp_relation(s2, s2p) != GpCase::hyper_hypo) continue;
    auto rewritten = gp_relation_symbolic(s2, s2p);
    if (rewritten == original || rewritten == flipped) return true;
  }
  return false;
}

const GpRelationTable& GpRelationTable::for_n(int n) {
  static std::mutex mutex;
  static std::map<int, GpRelationTable> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GpRelationTable table;
  std::vector<SignedSubset> big, small;
  for (Mask m = 0; m < (Mask{1} << (2 * n)); ++m) {
    int size = std::popcount(m);
    if (size == n + 1) big.emplace_back(n, m);
    if (size == n - 1) small.emplace_back(n, m);
  }
  for (const auto& s : big) {
    for (const auto& sp : small) {
      GpCase kind = classify_gp_relation(s, sp);
      if (kind == GpCase::not_applicable) {
        ++table.not_applicable_;
        continue;
      }
      ++table.counts_[static_cast<std::size_t>(kind)];
      table.applicable_.push_back({s, sp, kind});
    }
  }
  return cache.emplace(n, std::move(table)).first->second;
}

}  // namespace omt
