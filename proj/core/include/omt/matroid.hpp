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

#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "omt/groundset.hpp"

namespace omt {

class EvenAntisymmetricMatroid;

/// Witness of a failed strong exchange: the pair (B1, B2) and the pair index
/// i for which no exchange partner {j, j*} exists.
struct ExchangeWitness {
  SignedSubset b1, b2;
  int pair_index = 0;
  std::string to_string() const;
};

struct ExchangeCheck {
  bool ok = true;
  std::optional<ExchangeWitness> witness;
};

/// Witness of a failed antisymmetric-matroid axiom. condition 1 carries the
/// offending (hyper, hypo) pair; condition 2 the transversal and index pair.
struct AntisymmetricWitness {
  int condition = 0;  // 1 or 2
  SignedSubset s, s_prime;
  int i = 0, j = 0;
  std::string to_string() const;
};

struct AntisymmetricCheck {
  bool ok = true;
  std::optional<AntisymmetricWitness> witness;
};

/// Strong exchange axiom over a family of transversals. Lexicographically
/// first violation is reported. Throws EmptyFamily / InvalidInput on
/// malformed input.
ExchangeCheck check_strong_exchange(int n,
                                    const std::vector<SignedSubset>& bases);

/// Both axioms of antisymmetric matroids over a family of transversals and
/// almost-transversals.
AntisymmetricCheck check_antisymmetric_axioms(
    int n, const std::vector<SignedSubset>& bases);

/// An orthogonal matroid: a nonempty family of transversals satisfying the
/// strong exchange axiom. Instances are immutable and always valid.
class OrthogonalMatroid {
 public:
  /// Validates (unless told not to) and normalizes the basis family.
  static OrthogonalMatroid from_bases(int n, std::vector<SignedSubset> bases,
                                      bool validate = true);

  int n() const { return n_; }
  const std::vector<SignedSubset>& bases() const { return bases_; }
  bool contains_basis(Mask m) const { return basis_set_.count(m) != 0; }
  bool contains_basis(const SignedSubset& s) const {
    return contains_basis(s.bits());
  }
  /// Common parity |B ∩ [n]*| mod 2 of all bases.
  int sigma() const { return sigma_; }

  /// All circuits: minimal subtransversals contained in no basis, by a
  /// size-ascending scan with an explicit minimality filter.
  std::vector<SignedSubset> circuits() const;

  /// The unique circuit inside B △ {e, e*}; throws NotABasis /
  /// ElementInBasis on bad arguments.
  SignedSubset fundamental_circuit(const SignedSubset& basis, Element e) const;

  /// Twist by R ⊆ [n] (an index bitmask): every basis B becomes
  /// B △ (R ∪ R*). An involution.
  OrthogonalMatroid twist(Mask index_set) const;

  /// The even antisymmetric matroid with the same circuit set.
  EvenAntisymmetricMatroid to_even_antisymmetric() const;

  friend bool operator==(const OrthogonalMatroid&,
                         const OrthogonalMatroid&) = default;

 private:
  OrthogonalMatroid() = default;
  int n_ = 0;
  int sigma_ = 0;
  std::vector<SignedSubset> bases_;  // ascending by mask
  std::unordered_set<Mask> basis_set_;
};

/// Lift of a classical matroid on [n] given by its bases (index bitmasks):
/// B maps to B ∪ ([n] \ B)*. Throws NotAMatroid if the input family fails
/// the classical exchange axiom.
OrthogonalMatroid lift_matroid(int n, const std::vector<Mask>& bases_on_n);

/// The basis graph: vertices are bases, edges join B, B' with |B \ B'| = 1
/// and at least one endpoint transversal.
struct BasisGraph {
  std::vector<SignedSubset> vertices;
  std::vector<std::pair<int, int>> edges;
  bool connected = false;
};

/// An even antisymmetric matroid: transversal and almost-transversal bases
/// satisfying both axioms, transversal part nonempty and of one parity.
class EvenAntisymmetricMatroid {
 public:
  static EvenAntisymmetricMatroid from_bases(int n,
                                             std::vector<SignedSubset> bases,
                                             bool validate = true);

  int n() const { return n_; }
  int sigma() const { return sigma_; }
  const std::vector<SignedSubset>& bases() const { return bases_; }
  std::vector<SignedSubset> transversal_bases() const;
  std::vector<SignedSubset> almost_transversal_bases() const;
  bool contains_basis(Mask m) const { return basis_set_.count(m) != 0; }
  bool contains_basis(const SignedSubset& s) const {
    return contains_basis(s.bits());
  }

  /// Circuits: minimal sets with at most one skew pair contained in no basis.
  std::vector<SignedSubset> circuits() const;

  /// C' = {j ∈ S : S \ {j} is a basis} with S = (B △ {e,e*}) ∪ {e*};
  /// equals the orthogonal fundamental circuit by the two-circuits lemma.
  SignedSubset fundamental_circuit(const SignedSubset& basis, Element e) const;

  /// Restriction to the transversal part; throws InvalidInput when the
  /// restriction is empty or fails strong exchange.
  OrthogonalMatroid to_orthogonal() const;

  BasisGraph basis_graph() const;

  friend bool operator==(const EvenAntisymmetricMatroid&,
                         const EvenAntisymmetricMatroid&) = default;

 private:
  EvenAntisymmetricMatroid() = default;
  int n_ = 0;
  int sigma_ = 0;
  std::vector<SignedSubset> bases_;
  std::unordered_set<Mask> basis_set_;
};

/// T carries C: C ⊆ T, T transversal, and T △ {x, x*} is a basis for every
/// x ∈ C.
bool carries(const OrthogonalMatroid& m, const SignedSubset& t,
             const SignedSubset& c);

/// All transversals carrying C, ascending.
std::vector<SignedSubset> carriers(const OrthogonalMatroid& m,
                                   const SignedSubset& c);

struct KModularResult {
  bool ok = false;
  std::optional<std::pair<SignedSubset, SignedSubset>> carriers;
};

/// Whether C1, C2 admit carrier transversals T1, T2 with |T1 ∩ T2*| <= k.
/// Throws NotACircuit if either argument is not a circuit of m.
KModularResult k_modular(const OrthogonalMatroid& m, const SignedSubset& c1,
                         const SignedSubset& c2, int k);

enum class ModularKind { first, second, neither };

struct ModularInfo {
  bool is_modular = false;
  ModularKind kind = ModularKind::neither;
  std::optional<SignedSubset> basis;   // witness basis when modular
  std::vector<Element> exchanged;      // the e_i with C_i = FC(basis, e_i)
};

/// Searches for a common basis B and distinct e_i ∉ B with
/// C_i = FC(B, e_i); classifies the kind by pairwise unions. The circuits
/// must be distinct for the tuple to be modular. Throws NotACircuit.
ModularInfo modular_info(const OrthogonalMatroid& m,
                         const std::vector<SignedSubset>& circuits);

/// Definition-level circuit test (used for precondition checks).
bool is_circuit_of(const OrthogonalMatroid& m, const SignedSubset& c);

}  // namespace omt
