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

#include "omt/errors.hpp"

namespace omt {

namespace {

std::vector<SignedSubset> normalized(std::vector<SignedSubset> bases) {
  std::sort(bases.begin(), bases.end(),
            [](const SignedSubset& a, const SignedSubset& b) {
              return a.bits() < b.bits();
            });
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return bases;
}

std::unordered_set<Mask> to_set(const std::vector<SignedSubset>& bases) {
  std::unordered_set<Mask> s;
  s.reserve(bases.size() * 2);
  for (const auto& b : bases) s.insert(b.bits());
  return s;
}

/// Minimal members of `candidates` under inclusion; candidates must be
/// sorted by ascending size.
std::vector<SignedSubset> minimal_filter(
    const std::vector<SignedSubset>& candidates) {
  std::vector<SignedSubset> minimal;
  for (const auto& c : candidates) {
    bool contains_smaller = false;
    for (const auto& m : minimal) {
      if ((m.bits() & ~c.bits()) == 0) {
        contains_smaller = true;
        break;
      }
    }
    if (!contains_smaller) minimal.push_back(c);
  }
  return minimal;
}

std::vector<SignedSubset> circuits_by_scan(
    int n, const std::vector<SignedSubset>& domain,
    const std::vector<SignedSubset>& bases) {
  std::vector<SignedSubset> candidates;
  for (const auto& c : domain) {
    bool covered = false;
    for (const auto& b : bases) {
      if ((c.bits() & ~b.bits()) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) candidates.push_back(c);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const SignedSubset& a, const SignedSubset& b) {
                     return a.size() < b.size();
                   });
  auto minimal = minimal_filter(candidates);
  std::sort(minimal.begin(), minimal.end(),
            [](const SignedSubset& a, const SignedSubset& b) {
              return a.bits() < b.bits();
            });
  (void)n;
  return minimal;
}

}  // namespace

std::string ExchangeWitness::to_string() const {
  return "(" + b1.to_string() + ", " + b2.to_string() + ", {" +
         std::to_string(pair_index) + "," + std::to_string(pair_index) + "*})";
}

std::string AntisymmetricWitness::to_string() const {
  if (condition == 1)
    return "condition 1 at (" + s.to_string() + ", " + s_prime.to_string() +
           ")";
  return "condition 2 at (" + s.to_string() + ", i=" + std::to_string(i) +
         ", j=" + std::to_string(j) + ")";
}

ExchangeCheck check_strong_exchange(int n,
                                    const std::vector<SignedSubset>& bases) {
  if (bases.empty()) throw EmptyFamily();
  for (const auto& b : bases) {
    if (b.n() != n) throw InvalidInput("mixed ground sizes in basis family");
    if (!b.is_transversal())
      throw InvalidInput("non-transversal member " + b.to_string());
  }
  auto sorted = normalized(bases);
  auto in = to_set(sorted);

  for (const auto& b1 : sorted) {
    for (const auto& b2 : sorted) {
      Mask diff = b1.bits() ^ b2.bits();
      for (int i = 1; i <= n; ++i) {
        if ((diff & pair_mask(i)) != pair_mask(i)) continue;
        bool found = false;
        for (int j = 1; j <= n && !found; ++j) {
          if (j == i || (diff & pair_mask(j)) != pair_mask(j)) continue;
          Mask swap = pair_mask(i) | pair_mask(j);
          found = in.count(b1.bits() ^ swap) && in.count(b2.bits() ^ swap);
        }
        if (!found)
          return {false, ExchangeWitness{b1, b2, i}};
      }
    }
  }
  return {};
}

AntisymmetricCheck check_antisymmetric_axioms(
    int n, const std::vector<SignedSubset>& bases) {
  if (bases.empty()) throw EmptyFamily();
  for (const auto& b : bases) {
    if (b.n() != n) throw InvalidInput("mixed ground sizes in basis family");
    if (!b.is_transversal() && !b.is_almost_transversal())
      throw InvalidInput("member is neither transversal nor almost: " +
                         b.to_string());
  }
  auto in = to_set(bases);

  // Condition (2) first, it is the cheap scan: membership of
  // T \ {i,i*} ∪ {j,j*} and T ∪ {i,i*} \ {j,j*} must agree for every
  // transversal T and i != j.
  for (const auto& t : enumerate_transversals(n)) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        Mask a1 = (t.bits() & ~pair_mask(i)) | pair_mask(j);
        Mask a2 = (t.bits() & ~pair_mask(j)) | pair_mask(i);
        if (static_cast<bool>(in.count(a1)) !=
            static_cast<bool>(in.count(a2)))
          return {false, AntisymmetricWitness{2, t, t, i, j}};
      }
    }
  }

  // Condition (1): for every hyper/hypo pair there are no or at least two
  // i ∈ S \ S' with S \ {i} and S' ∪ {i} both bases.
  for (const auto& s : enumerate_hyper_transversals(n)) {
    for (const auto& sp : enumerate_hypo_transversals(n)) {
      int count = 0;
      Mask moving = s.bits() & ~sp.bits();
      for (int r = 0; r < 2 * n; ++r) {
        if (!(moving & (Mask{1} << r))) continue;
        Element e = Element::from_rank(r);
        if (in.count(s.without(e).bits()) && in.count(sp.with(e).bits()))
          ++count;
      }
      if (count == 1)
        return {false, AntisymmetricWitness{1, s, sp, 0, 0}};
    }
  }
  return {};
}

OrthogonalMatroid OrthogonalMatroid::from_bases(int n,
                                                std::vector<SignedSubset> bases,
                                                bool validate) {
  if (validate) {
    auto check = check_strong_exchange(n, bases);
    if (!check.ok)
      throw NotAMatroid("strong exchange fails at " +
                        check.witness->to_string());
  } else if (bases.empty()) {
    throw EmptyFamily();
  }
  OrthogonalMatroid m;
  m.n_ = n;
  m.bases_ = normalized(std::move(bases));
  m.basis_set_ = to_set(m.bases_);
  m.sigma_ = m.bases_.front().sigma();
  return m;
}

std::vector<SignedSubset> OrthogonalMatroid::circuits() const {
  return circuits_by_scan(n_, enumerate_subtransversals(n_), bases_);
}

SignedSubset OrthogonalMatroid::fundamental_circuit(const SignedSubset& basis,
                                                    Element e) const {
  if (!contains_basis(basis)) throw NotABasis(basis.to_string());
  if (basis.contains(e))
    throw ElementInBasis(e.to_string() + " lies in " + basis.to_string());
  SignedSubset t = basis.swap_pair(e.index);
  SignedSubset c(n_, Mask{0});
  for (Element x : t.elements())
    if (contains_basis(t.swap_pair(x.index))) c = c.with(x);
  return c;
}

OrthogonalMatroid OrthogonalMatroid::twist(Mask index_set) const {
  Mask m = 0;
  for (int i = 1; i <= n_; ++i)
    if (index_set & (Mask{1} << (i - 1))) m |= pair_mask(i);
  std::vector<SignedSubset> twisted;
  twisted.reserve(bases_.size());
  for (const auto& b : bases_) twisted.push_back(b.sym_diff(m));
  // Twisting preserves the exchange axiom, so skip revalidation.
  return from_bases(n_, std::move(twisted), false);
}

EvenAntisymmetricMatroid OrthogonalMatroid::to_even_antisymmetric() const {
  std::vector<SignedSubset> all = bases_;
  for (const auto& a : enumerate_almost_transversals(n_)) {
    int i = *a.contained_pair_index();
    int j = *a.missing_index();
    Element iu{i, false}, is{i, true}, ju{j, false}, js{j, true};
    bool clause1 = contains_basis(a.without(iu).with(ju)) &&
                   contains_basis(a.without(is).with(js));
    bool clause2 = contains_basis(a.without(is).with(ju)) &&
                   contains_basis(a.without(iu).with(js));
    if (clause1 || clause2) all.push_back(a);
  }
  return EvenAntisymmetricMatroid::from_bases(n_, std::move(all), false);
}

OrthogonalMatroid lift_matroid(int n, const std::vector<Mask>& bases_on_n) {
  if (bases_on_n.empty()) throw EmptyFamily();
  for (Mask b : bases_on_n)
    if (b >> n) throw InvalidInput("basis exceeds ground set [n]");
  // Classical basis exchange on [n].
  for (Mask b1 : bases_on_n) {
    for (Mask b2 : bases_on_n) {
      if (std::popcount(b1) != std::popcount(b2))
        throw NotAMatroid("bases of unequal rank");
      Mask out = b1 & ~b2;
      for (int x = 0; x < n; ++x) {
        if (!(out & (Mask{1} << x))) continue;
        bool found = false;
        Mask in = b2 & ~b1;
        for (int y = 0; y < n && !found; ++y)
          if (in & (Mask{1} << y))
            found = std::find(bases_on_n.begin(), bases_on_n.end(),
                              (b1 & ~(Mask{1} << x)) | (Mask{1} << y)) !=
                    bases_on_n.end();
        if (!found) throw NotAMatroid("classical exchange fails");
      }
    }
  }
  std::vector<SignedSubset> lifted;
  lifted.reserve(bases_on_n.size());
  for (Mask b : bases_on_n) {
    Mask bits = 0;
    for (int i = 1; i <= n; ++i)
      bits |= (b & (Mask{1} << (i - 1))) ? Element{i, false}.bit()
                                         : Element{i, true}.bit();
    lifted.emplace_back(n, bits);
  }
  return OrthogonalMatroid::from_bases(n, std::move(lifted), false);
}

EvenAntisymmetricMatroid EvenAntisymmetricMatroid::from_bases(
    int n, std::vector<SignedSubset> bases, bool validate) {
  if (validate) {
    auto check = check_antisymmetric_axioms(n, bases);
    if (!check.ok)
      throw NotAMatroid("antisymmetric axioms fail: " +
                        check.witness->to_string());
  } else if (bases.empty()) {
    throw EmptyFamily();
  }
  EvenAntisymmetricMatroid m;
  m.n_ = n;
  m.bases_ = normalized(std::move(bases));
  m.basis_set_ = to_set(m.bases_);
  std::optional<int> sigma;
  for (const auto& b : m.bases_) {
    if (!b.is_transversal()) continue;
    if (!sigma) {
      sigma = b.sigma();
    } else if (*sigma != b.sigma()) {
      throw NotAMatroid("transversal bases of mixed parity");
    }
  }
  if (!sigma) throw NotAMatroid("no transversal basis");
  m.sigma_ = *sigma;
  return m;
}

std::vector<SignedSubset> EvenAntisymmetricMatroid::transversal_bases() const {
  std::vector<SignedSubset> out;
  for (const auto& b : bases_)
    if (b.is_transversal()) out.push_back(b);
  return out;
}

std::vector<SignedSubset> EvenAntisymmetricMatroid::almost_transversal_bases()
    const {
  std::vector<SignedSubset> out;
  for (const auto& b : bases_)
    if (b.is_almost_transversal()) out.push_back(b);
  return out;
}

std::vector<SignedSubset> EvenAntisymmetricMatroid::circuits() const {
  return circuits_by_scan(n_, enumerate_at_most_one_pair(n_), bases_);
}

SignedSubset EvenAntisymmetricMatroid::fundamental_circuit(
    const SignedSubset& basis, Element e) const {
  if (!contains_basis(basis) || !basis.is_transversal())
    throw NotABasis(basis.to_string());
  if (basis.contains(e))
    throw ElementInBasis(e.to_string() + " lies in " + basis.to_string());
  SignedSubset s = basis.with(e);
  SignedSubset c(n_, Mask{0});
  for (Element x : s.elements())
    if (contains_basis(s.without(x))) c = c.with(x);
  return c;
}

OrthogonalMatroid EvenAntisymmetricMatroid::to_orthogonal() const {
  auto trans = transversal_bases();
  if (trans.empty()) throw InvalidInput("no transversal basis to restrict to");
  auto check = check_strong_exchange(n_, trans);
  if (!check.ok)
    throw InvalidInput("restriction fails strong exchange at " +
                       check.witness->to_string());
  return OrthogonalMatroid::from_bases(n_, std::move(trans), false);
}

BasisGraph EvenAntisymmetricMatroid::basis_graph() const {
  BasisGraph g;
  g.vertices = bases_;
  int v = static_cast<int>(bases_.size());
  std::vector<int> root(v);
  for (int i = 0; i < v; ++i) root[i] = i;
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      Mask ba = bases_[a].bits(), bb = bases_[b].bits();
      if (std::popcount(ba & ~bb) != 1) continue;
      if (!bases_[a].is_transversal() && !bases_[b].is_transversal()) continue;
      g.edges.emplace_back(a, b);
      root[find(a)] = find(b);
    }
  }
  int components = 0;
  for (int i = 0; i < v; ++i) components += (find(i) == i);
  g.connected = components <= 1;
  return g;
}

bool carries(const OrthogonalMatroid& m, const SignedSubset& t,
             const SignedSubset& c) {
  if (!t.is_transversal()) return false;
  if (c.bits() & ~t.bits()) return false;
  for (Element x : c.elements())
    if (!m.contains_basis(t.swap_pair(x.index))) return false;
  return true;
}

std::vector<SignedSubset> carriers(const OrthogonalMatroid& m,
                                   const SignedSubset& c) {
  std::vector<SignedSubset> out;
  for (const auto& t : enumerate_transversals(m.n()))
    if (carries(m, t, c)) out.push_back(t);
  return out;
}

bool is_circuit_of(const OrthogonalMatroid& m, const SignedSubset& c) {
  if (!c.is_subtransversal() || c.empty()) return false;
  auto covered = [&](const SignedSubset& x) {
    for (const auto& b : m.bases())
      if ((x.bits() & ~b.bits()) == 0) return true;
    return false;
  };
  if (covered(c)) return false;
  for (Element e : c.elements())
    if (!covered(c.without(e))) return false;
  return true;
}

KModularResult k_modular(const OrthogonalMatroid& m, const SignedSubset& c1,
                         const SignedSubset& c2, int k) {
  if (!is_circuit_of(m, c1)) throw NotACircuit(c1.to_string());
  if (!is_circuit_of(m, c2)) throw NotACircuit(c2.to_string());
  for (const auto& t1 : carriers(m, c1)) {
    Mask t1_bits = t1.bits();
    for (const auto& t2 : carriers(m, c2)) {
      if (std::popcount(t1_bits & t2.star_all().bits()) <= k)
        return {true, std::make_pair(t1, t2)};
    }
  }
  return {};
}

ModularInfo modular_info(const OrthogonalMatroid& m,
                         const std::vector<SignedSubset>& circuits) {
  for (const auto& c : circuits)
    if (!is_circuit_of(m, c)) throw NotACircuit(c.to_string());

  ModularInfo info;
  for (std::size_t a = 0; a < circuits.size(); ++a)
    for (std::size_t b = a + 1; b < circuits.size(); ++b)
      if (circuits[a] == circuits[b]) return info;  // must be distinct

  // Kind depends only on the pairwise unions.
  bool all_sub = true, none_sub = true;
  for (std::size_t a = 0; a < circuits.size(); ++a) {
    for (std::size_t b = a + 1; b < circuits.size(); ++b) {
      SignedSubset u(m.n(), circuits[a].bits() | circuits[b].bits());
      bool sub = u.is_subtransversal();
      all_sub &= sub;
      none_sub &= !sub;
    }
  }

  const int k = static_cast<int>(circuits.size());
  for (const auto& basis : m.bases()) {
    // e_i range over the complement of the basis, which equals basis*.
    std::vector<Element> complement;
    for (int r = 0; r < 2 * m.n(); ++r) {
      Element e = Element::from_rank(r);
      if (!basis.contains(e)) complement.push_back(e);
    }
    std::vector<Element> chosen(k);
    std::vector<bool> used(complement.size(), false);
    auto match = [&](auto&& self, int which) -> bool {
      if (which == k) return true;
      for (std::size_t idx = 0; idx < complement.size(); ++idx) {
        if (used[idx]) continue;
        if (m.fundamental_circuit(basis, complement[idx]) != circuits[which])
          continue;
        used[idx] = true;
        chosen[which] = complement[idx];
        if (self(self, which + 1)) return true;
        used[idx] = false;
      }
      return false;
    };
    if (match(match, 0)) {
      info.is_modular = true;
      info.basis = basis;
      info.exchanged = chosen;
      info.kind = all_sub ? ModularKind::first
                          : (none_sub ? ModularKind::second
                                      : ModularKind::neither);
      return info;
    }
  }
  return info;
}

}  // namespace omt
