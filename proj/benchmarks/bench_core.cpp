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

#include <benchmark/benchmark.h>

#include "omt/cryptomorphism.hpp"
#include "omt/enveloping.hpp"
#include "omt/oracle.hpp"
#include "omt/realization.hpp"

using namespace omt;

namespace {

SkewMatrix<RationalField> matrix_for(int n) {
  return oracle::random_skew_matrix(n, 42, {9, 3, 20});
}

void BM_PfaffianTable(benchmark::State& state) {
  auto a = matrix_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    PfaffianTable<RationalField> table(a);
    benchmark::DoNotOptimize(table.pf((Mask{1} << a.n()) - 1));
  }
}
BENCHMARK(BM_PfaffianTable)->Arg(4)->Arg(6)->Arg(8);

void BM_PfaffianMatchingSum(benchmark::State& state) {
  auto a = matrix_for(static_cast<int>(state.range(0)));
  Mask full = (Mask{1} << a.n()) - 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::pfaffian_matching_sum(a, full));
}
BENCHMARK(BM_PfaffianMatchingSum)->Arg(4)->Arg(6)->Arg(8);

void BM_BareissDeterminant(benchmark::State& state) {
  const RationalField q;
  int size = static_cast<int>(state.range(0));
  Rng rng(7);
  std::vector<Rational> m;
  for (int k = 0; k < size * size; ++k) {
    Rational x(rng.range(-9, 9), rng.range(1, 3));
    x.canonicalize();
    m.push_back(x);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(determinant_bareiss(q, m, size));
}
BENCHMARK(BM_BareissDeterminant)->Arg(4)->Arg(6)->Arg(8);

void BM_CheckWickStrong(benchmark::State& state) {
  auto psi = wick_coordinates(matrix_for(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_wick(psi, Strength::strong).ok);
}
BENCHMARK(BM_CheckWickStrong)->Arg(4)->Arg(5)->Arg(6);

void BM_CheckRgpStrong(benchmark::State& state) {
  auto phi = wick_to_rgp(wick_coordinates(
                             matrix_for(static_cast<int>(state.range(0)))),
                         Strength::strong, false)
                 .rgp;
  for (auto _ : state)
    benchmark::DoNotOptimize(check_rgp(phi, Strength::strong).ok);
}
BENCHMARK(BM_CheckRgpStrong)->Arg(3)->Arg(4)->Arg(5);

void BM_RoundtripStrong(benchmark::State& state) {
  auto psi = wick_coordinates(matrix_for(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_roundtrips(psi, Strength::strong).ok());
}
BENCHMARK(BM_RoundtripStrong)->Arg(3)->Arg(4)->Arg(5);

void BM_EnumerateMatroids(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        oracle::enumerate_orthogonal_matroids(static_cast<int>(state.range(0)))
            .size());
}
BENCHMARK(BM_EnumerateMatroids)->Arg(2)->Arg(3)->Arg(4);

void BM_EnvelopingCheck(benchmark::State& state) {
  auto phi = wick_to_rgp(wick_coordinates(
                             matrix_for(static_cast<int>(state.range(0)))),
                         Strength::strong, false)
                 .rgp;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        check_enveloping_relations(phi, EnvelopingPrecondition::assume_valid)
            .ok);
}
BENCHMARK(BM_EnvelopingCheck)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
