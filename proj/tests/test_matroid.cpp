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

#include "omt/matroid.hpp"

#include <algorithm>

#include "doctest.h"
#include "omt/errors.hpp"

using namespace omt;

namespace {

SignedSubset subset(int n, std::initializer_list<const char*> elems) {
  SignedSubset s(n, Mask{0});
  for (const char* e : elems) s = s.with(Element::parse(e));
  return s;
}

std::vector<SignedSubset> family(
    int n, std::initializer_list<std::initializer_list<const char*>> fam) {
  std::vector<SignedSubset> out;
  for (auto f : fam) out.push_back(subset(n, f));
  return out;
}

const SignedSubset kB12 = subset(2, {"1", "2"});
const SignedSubset kB12s = subset(2, {"1*", "2*"});

OrthogonalMatroid two_basis_matroid() {
  return OrthogonalMatroid::from_bases(2, {kB12, kB12s});
}

}  // namespace

TEST_CASE("strong exchange") {
  CHECK(check_strong_exchange(2, {kB12, kB12s}).ok);

  auto bad = check_strong_exchange(2, family(2, {{"1", "2"}, {"1*", "2"}}));
  REQUIRE_FALSE(bad.ok);
  CHECK(bad.witness->pair_index == 1);
  CHECK(bad.witness->b1 == subset(2, {"1", "2"}));
  CHECK(bad.witness->b2 == subset(2, {"1*", "2"}));

  CHECK(check_strong_exchange(3, {subset(3, {"1", "2*", "3"})}).ok);
  CHECK_THROWS_AS(check_strong_exchange(2, {}), EmptyFamily);
  CHECK_THROWS_AS(check_strong_exchange(2, {subset(2, {"1", "1*"})}),
                  InvalidInput);
}

TEST_CASE("antisymmetric axioms") {
  CHECK(check_antisymmetric_axioms(
            2, family(2, {{"1", "2"}, {"1*", "2*"}, {"1", "1*"}, {"2", "2*"}}))
            .ok);

  auto bad = check_antisymmetric_axioms(
      2, family(2, {{"1", "2"}, {"1*", "2*"}, {"1", "1*"}}));
  REQUIRE_FALSE(bad.ok);
  CHECK(bad.witness->condition == 2);

  CHECK(check_antisymmetric_axioms(2, {kB12}).ok);
  CHECK_THROWS_AS(check_antisymmetric_axioms(2, {}), EmptyFamily);
}

TEST_CASE("circuits") {
  auto c = two_basis_matroid().circuits();
  CHECK(c == family(2, {{"1*", "2"}, {"1", "2*"}}));

  auto single = OrthogonalMatroid::from_bases(2, {kB12});
  CHECK(single.circuits() == family(2, {{"1*"}, {"2*"}}));

  auto n1 = OrthogonalMatroid::from_bases(1, {subset(1, {"1"})});
  CHECK(n1.circuits() == family(1, {{"1*"}}));
}

TEST_CASE("fundamental circuits") {
  auto m = two_basis_matroid();
  CHECK(m.fundamental_circuit(kB12, Element::parse("1*")) ==
        subset(2, {"1*", "2"}));
  CHECK(m.fundamental_circuit(kB12s, Element::parse("1")) ==
        subset(2, {"1", "2*"}));

  auto n1 = OrthogonalMatroid::from_bases(1, {subset(1, {"1"})});
  CHECK(n1.fundamental_circuit(subset(1, {"1"}), Element::parse("1*")) ==
        subset(1, {"1*"}));

  CHECK_THROWS_AS(m.fundamental_circuit(subset(2, {"1", "2*"}),
                                        Element::parse("1*")),
                  NotABasis);
  CHECK_THROWS_AS(m.fundamental_circuit(kB12, Element::parse("1")),
                  ElementInBasis);
}

TEST_CASE("every circuit is fundamental on the two-basis example") {
  auto m = two_basis_matroid();
  auto circuits = m.circuits();
  std::vector<SignedSubset> fundamental;
  for (const auto& b : m.bases())
    for (int r = 0; r < 2 * m.n(); ++r) {
      Element e = Element::from_rank(r);
      if (!b.contains(e)) fundamental.push_back(m.fundamental_circuit(b, e));
    }
  std::sort(fundamental.begin(), fundamental.end());
  fundamental.erase(std::unique(fundamental.begin(), fundamental.end()),
                    fundamental.end());
  CHECK(fundamental == circuits);
}

TEST_CASE("lift of classical matroids") {
  auto u12 = lift_matroid(2, {Mask{0b01}, Mask{0b10}});
  CHECK(u12.bases() == family(2, {{"1*", "2"}, {"1", "2*"}}));

  auto free3 = lift_matroid(3, {Mask{0b111}});
  CHECK(free3.bases() == std::vector<SignedSubset>{subset(3, {"1", "2", "3"})});

  auto rank0 = lift_matroid(2, {Mask{0}});
  CHECK(rank0.bases() == family(2, {{"1*", "2*"}}));

  CHECK_THROWS_AS(lift_matroid(2, {Mask{0b01}, Mask{0b11}}), NotAMatroid);
  CHECK_THROWS_AS(lift_matroid(2, {}), EmptyFamily);
}

TEST_CASE("twist") {
  auto m = two_basis_matroid();
  CHECK(m.twist(0) == m);
  auto tw = m.twist(Mask{0b01});
  CHECK(tw.bases() == family(2, {{"1*", "2"}, {"1", "2*"}}));
  CHECK(tw.twist(Mask{0b01}) == m);
}

TEST_CASE("even antisymmetric completion") {
  auto m2 = two_basis_matroid().to_even_antisymmetric();
  CHECK(m2.bases() ==
        family(2, {{"1", "1*"}, {"1", "2"}, {"1*", "2*"}, {"2", "2*"}}));
  CHECK(m2.sigma() == 0);

  auto single = OrthogonalMatroid::from_bases(2, {kB12}).to_even_antisymmetric();
  CHECK(single.bases() == std::vector<SignedSubset>{kB12});

  auto n1 = OrthogonalMatroid::from_bases(1, {subset(1, {"1*"})})
                .to_even_antisymmetric();
  CHECK(n1.bases() == std::vector<SignedSubset>{subset(1, {"1*"})});
}

TEST_CASE("restriction inverts the completion") {
  auto m = two_basis_matroid();
  CHECK(m.to_even_antisymmetric().to_orthogonal() == m);

  auto bad = family(2, {{"1", "1*"}});
  CHECK_THROWS_AS(EvenAntisymmetricMatroid::from_bases(2, bad), NotAMatroid);
}

TEST_CASE("completion and restriction share circuits") {
  auto m = two_basis_matroid();
  CHECK(m.circuits() == m.to_even_antisymmetric().circuits());
}

TEST_CASE("antisymmetric fundamental circuits agree with orthogonal ones") {
  auto m = two_basis_matroid();
  auto m2 = m.to_even_antisymmetric();
  for (const auto& b : m.bases())
    for (int r = 0; r < 4; ++r) {
      Element e = Element::from_rank(r);
      if (b.contains(e)) continue;
      CHECK(m.fundamental_circuit(b, e) == m2.fundamental_circuit(b, e));
    }
}

TEST_CASE("basis graph") {
  auto g = two_basis_matroid().to_even_antisymmetric().basis_graph();
  CHECK(g.vertices.size() == 4);
  CHECK(g.edges.size() == 4);
  CHECK(g.connected);

  auto single =
      OrthogonalMatroid::from_bases(2, {kB12}).to_even_antisymmetric();
  CHECK(single.basis_graph().connected);

  // The lift of U_{1,2}: its two transversal bases differ in two indices, so
  // connectivity requires the almost-transversal bases added by the
  // completion. Recorded oracle result: 4 vertices, 4 edges, connected.
  auto u12 = lift_matroid(2, {Mask{0b01}, Mask{0b10}}).to_even_antisymmetric();
  auto gu = u12.basis_graph();
  CHECK(gu.vertices.size() == 4);
  CHECK(gu.edges.size() == 4);
  CHECK(gu.connected);
}

TEST_CASE("carries") {
  auto m = two_basis_matroid();
  CHECK(carries(m, subset(2, {"1*", "2"}), subset(2, {"1*", "2"})));
  CHECK(carries(m, subset(2, {"1", "2*"}), subset(2, {"1", "2*"})));
  CHECK_FALSE(carries(m, subset(2, {"1", "2"}), subset(2, {"1*", "2"})));
}

TEST_CASE("k-modularity") {
  auto m = two_basis_matroid();
  auto c1 = subset(2, {"1", "2*"});
  auto c2 = subset(2, {"1*", "2"});

  CHECK(k_modular(m, c1, c1, 0).ok);
  CHECK_FALSE(k_modular(m, c1, c2, 0).ok);
  auto r = k_modular(m, c1, c2, 2);
  REQUIRE(r.ok);
  CHECK(r.carriers->first == subset(2, {"1", "2*"}));
  CHECK(r.carriers->second == subset(2, {"1*", "2"}));

  CHECK_THROWS_AS(k_modular(m, subset(2, {"1"}), c2, 2), NotACircuit);
}

TEST_CASE("modular pairs") {
  auto m = two_basis_matroid();
  auto c1 = subset(2, {"1", "2*"});
  auto c2 = subset(2, {"1*", "2"});

  auto info = modular_info(m, {c1, c2});
  REQUIRE(info.is_modular);
  CHECK(info.kind == ModularKind::second);
  CHECK(info.basis == kB12);

  auto same = modular_info(m, {c1, c1});
  CHECK_FALSE(same.is_modular);

  // Modular pair of the second kind has |C1 ∩ C2*| = 2.
  CHECK(std::popcount(c1.bits() & c2.star_all().bits()) == 2);
}

TEST_CASE("modular pairs of the first kind") {
  auto single = OrthogonalMatroid::from_bases(2, {kB12});
  auto info = modular_info(single, {subset(2, {"1*"}), subset(2, {"2*"})});
  REQUIRE(info.is_modular);
  CHECK(info.kind == ModularKind::first);
}

TEST_CASE("two-modular iff modular for distinct circuits (small case)") {
  auto m = two_basis_matroid();
  auto c1 = subset(2, {"1", "2*"});
  auto c2 = subset(2, {"1*", "2"});
  CHECK(k_modular(m, c1, c2, 2).ok == modular_info(m, {c1, c2}).is_modular);
}
