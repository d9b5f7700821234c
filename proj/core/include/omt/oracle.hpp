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

// Independent brute-force generators and verifiers. Nothing here shares code
// with the main evaluation paths: Pfaffians go through perfect matchings
// instead of the recursion, determinants through Laplace expansion instead
// of Bareiss, and circuits through a definition-level scan.

#include <vector>

#include "omt/groundset.hpp"
#include "omt/matroid.hpp"
#include "omt/realization.hpp"
#include "omt/rng.hpp"
#include "omt/tract.hpp"

namespace omt {
namespace oracle {

/// Every orthogonal matroid on [n] ∪ [n]*, by filtering all nonempty subsets
/// of 𝒯_n through the exchange axiom. Deterministic ascending order.
/// Throws GroundSetTooLarge beyond n = 4.
std::vector<OrthogonalMatroid> enumerate_orthogonal_matroids(int n);

/// How entries of random matrices are drawn: small rationals with a knob for
/// forcing zeros (degenerate minors).
struct EntryDistribution {
  std::int64_t max_numerator = 9;   // numerators in [-max, max]
  std::int64_t max_denominator = 3; // denominators in [1, max]
  /// Probability of a zero entry, in percent.
  int zero_density_percent = 0;
};

/// Reproducible random skew matrix; identical (n, seed, distribution) give
/// identical matrices on every platform.
SkewMatrix<RationalField> random_skew_matrix(int n, std::uint64_t seed,
                                             const EntryDistribution& dist = {});

/// Independent Pfaffian: the signed sum over perfect matchings of I.
template <FieldTract F>
typename F::Elem pfaffian_matching_sum(const SkewMatrix<F>& a, Mask subset) {
  const F& f = a.field();
  auto idx = detail::mask_indices(subset, a.n());
  if (idx.size() % 2 != 0 && !idx.empty()) return f.zero();
  if (static_cast<int>(idx.size()) > kMaxGroundSize)
    throw InvalidInput("matching-sum oracle limited to small subsets");

  // Recursively match the smallest unmatched index; crossing-number parity
  // of the partner choice gives the sign.
  auto rec = [&](auto&& self, std::vector<int> remaining) -> typename F::Elem {
    if (remaining.empty()) return f.one();
    typename F::Elem acc = f.zero();
    int first = remaining.front();
    for (std::size_t k = 1; k < remaining.size(); ++k) {
      const auto& entry = a.at(first, remaining[k]);
      if (f.is_zero(entry)) continue;
      std::vector<int> rest;
      for (std::size_t t = 1; t < remaining.size(); ++t)
        if (t != k) rest.push_back(remaining[t]);
      typename F::Elem term = f.mul(entry, self(self, std::move(rest)));
      acc = (k % 2 == 1) ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
  };
  return rec(rec, std::move(idx));
}

/// Independent determinant: Laplace expansion along the first row.
template <FieldTract F>
typename F::Elem det_laplace(const F& f,
                             const std::vector<typename F::Elem>& m,
                             int size) {
  if (size == 0) return f.one();
  if (size == 1) return m[0];
  typename F::Elem acc = f.zero();
  for (int c = 0; c < size; ++c) {
    if (f.is_zero(m[c])) continue;
    std::vector<typename F::Elem> minor;
    minor.reserve(std::size_t(size - 1) * (size - 1));
    for (int r = 1; r < size; ++r)
      for (int cc = 0; cc < size; ++cc)
        if (cc != c) minor.push_back(m[r * size + cc]);
    typename F::Elem term = f.mul(m[c], det_laplace(f, minor, size - 1));
    acc = (c % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

/// Definition-level circuit enumeration: a set is a circuit iff it lies in
/// the scan domain, is covered by no basis, and all proper subsets are
/// covered. Quadratic and slow, which is the point.
std::vector<SignedSubset> circuits_bruteforce(
    int n, const std::vector<SignedSubset>& bases, bool antisymmetric);

}  // namespace oracle
}  // namespace omt
