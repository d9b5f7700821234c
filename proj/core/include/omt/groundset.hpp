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

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace omt {

/// Subsets of [n] ∪ [n]* are 2n-bit masks, one bit per element in rank order.
using Mask = std::uint32_t;

/// Largest supported ground-set size (2n bits must fit a Mask with headroom).
inline constexpr int kMaxGroundSize = 12;

/// One element of [n] ∪ [n]*. Elements are totally ordered by
///   1 < 1* < 2 < 2* < ... < n < n*,
/// and rank() is the 0-based position in that order. Every sign exponent in
/// the library is a prefix popcount in this interleaved order; the block
/// order 1 < ... < n < 1* < ... < n* would change the exponents everywhere
/// and is deliberately not supported.
struct Element {
  int index = 1;         // 1-based
  bool starred = false;  // i vs i*

  constexpr int rank() const { return 2 * (index - 1) + (starred ? 1 : 0); }
  constexpr Mask bit() const { return Mask{1} << rank(); }

  /// The partner under the involution i <-> i*.
  constexpr Element star() const { return {index, !starred}; }
  /// The unstarred representative of the skew pair, written ī in formulas.
  constexpr Element bar() const { return {index, false}; }

  static constexpr Element from_rank(int r) { return {r / 2 + 1, (r & 1) != 0}; }

  std::string to_string() const;                 // "3" or "3*"
  static Element parse(std::string_view text);   // accepts "3" / "3*"

  friend constexpr auto operator<=>(Element a, Element b) {
    return a.rank() <=> b.rank();
  }
  friend constexpr bool operator==(Element a, Element b) {
    return a.rank() == b.rank();
  }
};

/// The skew pair {i, i*} as a mask.
constexpr Mask pair_mask(int index) { return Mask{0b11} << (2 * (index - 1)); }

/// Classification flags of a subset, per the transversal taxonomy.
struct SubsetClass {
  bool transversal = false;
  bool almost_transversal = false;
  bool hyper_transversal = false;
  bool hypo_transversal = false;
  bool subtransversal = false;
  /// |S ∩ [n]*| mod 2; meaningful when transversal.
  int sigma = 0;
};

/// A subset of [n] ∪ [n]* for a fixed ground size n, with value semantics.
class SignedSubset {
 public:
  SignedSubset() = default;
  SignedSubset(int n, Mask bits);
  SignedSubset(int n, const std::vector<Element>& elems);

  int n() const { return n_; }
  Mask bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(Element e) const { return (bits_ & e.bit()) != 0; }
  SignedSubset with(Element e) const { return {n_, bits_ | e.bit()}; }
  SignedSubset without(Element e) const { return {n_, bits_ & ~e.bit()}; }
  SignedSubset sym_diff(Mask m) const { return {n_, bits_ ^ m}; }
  SignedSubset sym_diff(const SignedSubset& s) const {
    return {n_, bits_ ^ s.bits_};
  }
  /// Swap i <-> i* at the given index.
  SignedSubset swap_pair(int index) const;
  /// Apply i <-> i* at every index simultaneously.
  SignedSubset star_all() const;

  /// |{x ∈ S : x < e}| in the interleaved order (a masked popcount).
  int count_less(Element e) const {
    return std::popcount(bits_ & (e.bit() - 1));
  }
  /// |{x ∈ S : x <= e}|.
  int count_less_eq(Element e) const {
    return std::popcount(bits_ & ((e.bit() << 1) - 1));
  }
  /// |{x ∈ S : x >= e}|.
  int count_greater_eq(Element e) const { return size() - count_less(e); }

  /// Restriction of the subset to the unstarred elements, as an n-bit set of
  /// indices; used by the |B ∩ [n] < i| exponents.
  Mask unstarred_indices() const;
  /// Indices i with i* ∈ S.
  Mask starred_indices() const;

  /// How many indices i have both of {i, i*} in S.
  int skew_pair_count() const;
  /// How many indices i have neither of {i, i*} in S.
  int missing_index_count() const;
  /// The unique index with {i,i*} ⊆ S, when exactly one exists.
  std::optional<int> contained_pair_index() const;
  /// The unique index with {i,i*} ∩ S = ∅, when exactly one exists.
  std::optional<int> missing_index() const;

  bool is_transversal() const;
  bool is_almost_transversal() const;
  bool is_hyper_transversal() const;
  bool is_hypo_transversal() const;
  bool is_subtransversal() const;
  /// At most one skew pair; the circuit domain of antisymmetric matroids.
  bool has_at_most_one_pair() const { return skew_pair_count() <= 1; }

  /// |S ∩ [n]*| mod 2 (the σ-class when S is a transversal).
  int sigma() const;

  SubsetClass classify() const;

  std::vector<Element> elements() const;
  std::string to_string() const;  // "{1,2*}"

  friend auto operator<=>(const SignedSubset&, const SignedSubset&) = default;

 private:
  int n_ = 0;
  Mask bits_ = 0;
};

/// All 2^n transversals (or the 2^(n-1) of the given σ-class), ascending by
/// bitmask value. Enumeration order is part of the CLI output contract.
std::vector<SignedSubset> enumerate_transversals(
    int n, std::optional<int> sigma = std::nullopt);

/// All n(n-1)·2^(n-2) almost-transversals (empty for n = 1), ascending.
std::vector<SignedSubset> enumerate_almost_transversals(int n);

std::vector<SignedSubset> enumerate_hyper_transversals(int n);
std::vector<SignedSubset> enumerate_hypo_transversals(int n);

/// All 3^n subtransversals, ascending by bitmask value.
std::vector<SignedSubset> enumerate_subtransversals(int n);

/// All subsets containing at most one skew pair, ascending.
std::vector<SignedSubset> enumerate_at_most_one_pair(int n);

}  // namespace omt
