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

#include "omt/errors.hpp"

namespace omt {
namespace oracle {

std::vector<OrthogonalMatroid> enumerate_orthogonal_matroids(int n) {
  if (n > 4)
    throw GroundSetTooLarge("exhaustive enumeration supports n <= 4, got " +
                            std::to_string(n));
  auto transversals = enumerate_transversals(n);
  const std::size_t count = transversals.size();
  std::vector<OrthogonalMatroid> out;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << count); ++pick) {
    std::vector<SignedSubset> bases;
    for (std::size_t i = 0; i < count; ++i)
      if (pick & (std::uint64_t{1} << i)) bases.push_back(transversals[i]);
    if (check_strong_exchange(n, bases).ok)
      out.push_back(OrthogonalMatroid::from_bases(n, std::move(bases), false));
  }
  return out;
}

SkewMatrix<RationalField> random_skew_matrix(int n, std::uint64_t seed,
                                             const EntryDistribution& dist) {
  Rng rng(seed);
  SkewMatrix<RationalField> a(RationalField{}, n);
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (dist.zero_density_percent > 0 &&
          rng.chance(static_cast<std::uint64_t>(dist.zero_density_percent),
                     100)) {
        a.set_upper(i, j, Rational(0));
        continue;
      }
      std::int64_t num = rng.range(-dist.max_numerator, dist.max_numerator);
      std::int64_t den = rng.range(1, dist.max_denominator);
      Rational v(num, den);
      v.canonicalize();
      a.set_upper(i, j, v);
    }
  }
  return a;
}

std::vector<SignedSubset> circuits_bruteforce(
    int n, const std::vector<SignedSubset>& bases, bool antisymmetric) {
  auto domain =
      antisymmetric ? enumerate_at_most_one_pair(n) : enumerate_subtransversals(n);
  auto covered = [&](Mask bits) {
    for (const auto& b : bases)
      if ((bits & ~b.bits()) == 0) return true;
    return false;
  };
  std::vector<SignedSubset> out;
  for (const auto& c : domain) {
    if (c.empty() || covered(c.bits())) continue;
    bool minimal = true;
    for (int r = 0; r < 2 * n && minimal; ++r) {
      Mask bit = Mask{1} << r;
      if (c.bits() & bit) minimal &= covered(c.bits() & ~bit);
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

}  // namespace oracle
}  // namespace omt
