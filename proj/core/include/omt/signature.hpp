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

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omt/groundset.hpp"
#include "omt/matroid.hpp"
#include "omt/tract.hpp"

namespace omt {

/// An F-vector on [n] ∪ [n]*, indexed by element rank.
template <Tract T>
struct CircuitVector {
  using Elem = typename T::Elem;
  std::vector<Elem> coords;

  static CircuitVector zero(const T& tract, int n) {
    return {std::vector<Elem>(2 * n, tract.zero())};
  }

  int n() const { return static_cast<int>(coords.size()) / 2; }
  const Elem& at(Element e) const { return coords[e.rank()]; }
  Elem& at(Element e) { return coords[e.rank()]; }

  Mask support(const T& tract) const {
    Mask m = 0;
    for (std::size_t r = 0; r < coords.size(); ++r)
      if (!tract.is_zero(coords[r])) m |= Mask{1} << r;
    return m;
  }
  bool is_zero(const T& tract) const { return support(tract) == 0; }

  CircuitVector scaled(const T& tract, const Elem& c) const {
    CircuitVector out = *this;
    for (auto& x : out.coords) x = tract.mul(c, x);
    return out;
  }
};

/// The unit c with y = c·x, when supports match and the ratios are constant.
template <Tract T>
std::optional<typename T::Elem> proportionality(const T& tract,
                                                const CircuitVector<T>& x,
                                                const CircuitVector<T>& y) {
  if (x.coords.size() != y.coords.size()) return std::nullopt;
  std::optional<typename T::Elem> scale;
  for (std::size_t r = 0; r < x.coords.size(); ++r) {
    bool zx = tract.is_zero(x.coords[r]), zy = tract.is_zero(y.coords[r]);
    if (zx != zy) return std::nullopt;
    if (zx) continue;
    if (!scale) scale = ratio(tract, y.coords[r], x.coords[r]);
    if (!tract.eq(y.coords[r], tract.mul(*scale, x.coords[r])))
      return std::nullopt;
  }
  if (!scale) return std::nullopt;  // zero vectors carry no ray
  return scale;
}

/// Any two vectors with equal support differ by a unit. This is what makes
/// one-representative-per-ray storage faithful.
template <Tract T>
bool check_scalar_uniqueness(const T& tract,
                             const std::vector<CircuitVector<T>>& vectors) {
  for (std::size_t a = 0; a < vectors.size(); ++a)
    for (std::size_t b = a + 1; b < vectors.size(); ++b)
      if (vectors[a].support(tract) == vectors[b].support(tract) &&
          !proportionality(tract, vectors[a], vectors[b]))
        return false;
  return true;
}

/// An F-signature stored as one representative per ray (scaling class).
template <Tract T>
class Signature {
 public:
  using Elem = typename T::Elem;

  /// Validates: vectors nonzero, subtransversal supports are not required
  /// here (checks against a matroid do that), equal-support vectors must be
  /// proportional. Keeps the first representative of each ray.
  static Signature from_vectors(T tract, int n,
                                const std::vector<CircuitVector<T>>& vectors) {
    Signature sig;
    sig.tract_ = std::move(tract);
    sig.n_ = n;
    std::map<Mask, CircuitVector<T>> by_support;
    for (const auto& v : vectors) {
      if (static_cast<int>(v.coords.size()) != 2 * n)
        throw InvalidSignature("vector length does not match ground set");
      Mask supp = v.support(sig.tract_);
      if (supp == 0) throw InvalidSignature("zero vector in signature");
      auto [it, inserted] = by_support.emplace(supp, v);
      if (!inserted && !proportionality(sig.tract_, it->second, v))
        throw InvalidSignature(
            "two vectors share a support but are not proportional");
    }
    for (auto& [supp, v] : by_support) sig.rays_.push_back(std::move(v));
    return sig;
  }

  int n() const { return n_; }
  const T& tract() const { return tract_; }
  const std::vector<CircuitVector<T>>& rays() const { return rays_; }

  const CircuitVector<T>* ray_with_support(Mask supp) const {
    for (const auto& r : rays_)
      if (r.support(tract_) == supp) return &r;
    return nullptr;
  }

  std::vector<SignedSubset> supports() const {
    std::vector<SignedSubset> out;
    for (const auto& r : rays_) out.emplace_back(n_, r.support(tract_));
    return out;
  }

 private:
  T tract_;
  int n_ = 0;
  std::vector<CircuitVector<T>> rays_;  // ascending by support mask
};

/// Ray-by-ray equality up to units.
template <Tract T>
bool signatures_equal(const Signature<T>& a, const Signature<T>& b) {
  if (a.n() != b.n() || a.tract().name() != b.tract().name()) return false;
  if (a.rays().size() != b.rays().size()) return false;
  for (const auto& r : a.rays()) {
    const auto* other = b.ray_with_support(r.support(a.tract()));
    if (!other || !proportionality(a.tract(), r, *other)) return false;
  }
  return true;
}

/// <X, Y> = Σ X(i) Y(i*), as a formal sum with one term per coordinate where
/// both factors are nonzero.
template <Tract T>
FormalSum<typename T::Elem> pairing(const T& tract, const CircuitVector<T>& x,
                                    const CircuitVector<T>& y) {
  if (x.coords.size() != y.coords.size())
    throw IncompatibleDomains("pairing vectors of different lengths");
  FormalSum<typename T::Elem> sum;
  for (int r = 0; r < static_cast<int>(x.coords.size()); ++r) {
    Element e = Element::from_rank(r);
    const auto& xa = x.at(e);
    const auto& yb = y.at(e.star());
    if (tract.is_zero(xa) || tract.is_zero(yb)) continue;
    sum.push_back(tract.mul(xa, yb));
  }
  return sum;
}

struct SignatureCheckReport {
  bool ok = true;
  std::string axiom;  // "O" / "O2'" / "O4'" / "L-i'" / "L-ii'"
  std::optional<std::pair<Mask, Mask>> pair_supports;
  std::optional<Element> coordinate;
  std::string detail;
  std::string to_string() const {
    if (ok) return "ok";
    return "fails " + axiom + (detail.empty() ? "" : ": " + detail);
  }
};

namespace detail {

template <Tract T>
void require_supports_are_circuits(const Signature<T>& sig,
                                   const OrthogonalMatroid& m) {
  auto circuits = m.circuits();
  auto supports = sig.supports();
  if (circuits != supports)
    throw SupportMismatch("signature supports are not the circuit set (" +
                          std::to_string(supports.size()) + " vs " +
                          std::to_string(circuits.size()) + " members)");
}

/// Scalars c for which partial + c·z(g) could vanish coordinatewise, read
/// off a forcing coordinate. Empty when no coordinate forces anything.
template <Tract T>
std::vector<typename T::Elem> forced_scalars(
    const T& tract, const std::vector<const CircuitVector<T>*>& summands,
    const CircuitVector<T>& z) {
  for (int r = 0; r < static_cast<int>(z.coords.size()); ++r) {
    if (tract.is_zero(z.coords[r])) continue;
    FormalSum<typename T::Elem> partial;
    for (const auto* s : summands)
      if (!tract.is_zero(s->coords[r])) partial.push_back(s->coords[r]);
    if (tract.is_null(partial)) continue;
    std::vector<typename T::Elem> out;
    for (const auto& x : tract.completions(partial))
      out.push_back(ratio(tract, x, z.coords[r]));
    return out;
  }
  return {};
}

/// Coordinatewise nullity of Σ summands + c·z (z may be null to skip it).
template <Tract T>
bool coordinatewise_null(const T& tract,
                         const std::vector<const CircuitVector<T>*>& summands,
                         const CircuitVector<T>* z,
                         const typename T::Elem* scale) {
  int len = static_cast<int>(summands.front()->coords.size());
  for (int r = 0; r < len; ++r) {
    FormalSum<typename T::Elem> sum;
    for (const auto* s : summands)
      if (!tract.is_zero(s->coords[r])) sum.push_back(s->coords[r]);
    if (z) {
      auto scaled = tract.mul(*scale, z->coords[r]);
      if (!tract.is_zero(scaled)) sum.push_back(scaled);
    }
    if (!tract.is_null(sum)) return false;
  }
  return true;
}

}  // namespace detail

/// Strong orthogonality: supports equal the circuit set and every pairing is
/// null. Throws SupportMismatch; reports the first violating pair.
template <Tract T>
SignatureCheckReport check_orthogonal_signature(const Signature<T>& sig,
                                                const OrthogonalMatroid& m) {
  detail::require_supports_are_circuits(sig, m);
  const T& tract = sig.tract();
  const auto& rays = sig.rays();
  for (std::size_t a = 0; a < rays.size(); ++a) {
    for (std::size_t b = a; b < rays.size(); ++b) {
      if (!tract.is_null(pairing(tract, rays[a], rays[b]))) {
        SignatureCheckReport rep;
        rep.ok = false;
        rep.axiom = "O";
        rep.pair_supports = {rays[a].support(tract), rays[b].support(tract)};
        rep.detail = "pairing of supports " +
                     SignedSubset(sig.n(), rays[a].support(tract)).to_string() +
                     ", " +
                     SignedSubset(sig.n(), rays[b].support(tract)).to_string() +
                     " is not null";
        return rep;
      }
    }
  }
  return {};
}

/// Weak orthogonality (O4'): pairings of 4-modular pairs are null.
template <Tract T>
SignatureCheckReport check_weak_orthogonal_signature(
    const Signature<T>& sig, const OrthogonalMatroid& m) {
  detail::require_supports_are_circuits(sig, m);
  const T& tract = sig.tract();
  const auto& rays = sig.rays();

  std::vector<std::vector<SignedSubset>> carrier_lists;
  carrier_lists.reserve(rays.size());
  for (const auto& r : rays)
    carrier_lists.push_back(
        carriers(m, SignedSubset(sig.n(), r.support(tract))));

  auto four_modular = [&](std::size_t a, std::size_t b) {
    for (const auto& t1 : carrier_lists[a]) {
      Mask star1 = t1.star_all().bits();
      for (const auto& t2 : carrier_lists[b])
        if (std::popcount(star1 & t2.bits()) <= 4) return true;
    }
    return false;
  };

  for (std::size_t a = 0; a < rays.size(); ++a) {
    for (std::size_t b = a; b < rays.size(); ++b) {
      if (!four_modular(a, b)) continue;
      if (!tract.is_null(pairing(tract, rays[a], rays[b]))) {
        SignatureCheckReport rep;
        rep.ok = false;
        rep.axiom = "O4'";
        rep.pair_supports = {rays[a].support(tract), rays[b].support(tract)};
        rep.detail = "4-modular pairing is not null";
        return rep;
      }
    }
  }
  return {};
}

namespace detail {

inline SignatureCheckReport fail_report(std::string axiom,
                                        std::string detail) {
  SignatureCheckReport rep;
  rep.ok = false;
  rep.axiom = std::move(axiom);
  rep.detail = std::move(detail);
  return rep;
}

struct FcEntry {
  Element e;
  Mask circuit;
};

inline std::vector<std::vector<FcEntry>> fundamental_circuits_by_basis(
    const OrthogonalMatroid& m) {
  std::vector<std::vector<FcEntry>> out;
  for (const auto& basis : m.bases()) {
    std::vector<FcEntry> list;
    for (int r = 0; r < 2 * m.n(); ++r) {
      Element e = Element::from_rank(r);
      if (basis.contains(e)) continue;
      list.push_back({e, m.fundamental_circuit(basis, e).bits()});
    }
    out.push_back(std::move(list));
  }
  return out;
}

/// Searches 𝒞 for c·Z with Z(f_i) = 0 at the forbidden coordinates making
/// Σ summands + c·Z coordinatewise null.
template <Tract T>
bool completion_exists(const Signature<T>& sig,
                       const std::vector<const CircuitVector<T>*>& summands,
                       const std::vector<Element>& forbidden) {
  const T& tract = sig.tract();
  for (const auto& z : sig.rays()) {
    bool admissible = true;
    for (Element f : forbidden) admissible &= tract.is_zero(z.at(f));
    if (!admissible) continue;
    auto scalars = forced_scalars(tract, summands, z);
    if (scalars.empty()) scalars.push_back(tract.one());
    for (const auto& c : scalars)
      if (coordinatewise_null(tract, summands, &z, &c)) return true;
  }
  return false;
}

}  // namespace detail

/// (O2') alone: modular pairs have null pairing.
template <Tract T>
SignatureCheckReport check_o2_prime(const Signature<T>& sig,
                                    const OrthogonalMatroid& m) {
  detail::require_supports_are_circuits(sig, m);
  const T& tract = sig.tract();
  std::vector<std::pair<Mask, Mask>> seen;
  for (const auto& list : detail::fundamental_circuits_by_basis(m)) {
    for (std::size_t p = 0; p < list.size(); ++p) {
      for (std::size_t q = p + 1; q < list.size(); ++q) {
        if (list[p].circuit == list[q].circuit) continue;
        auto key = std::minmax(list[p].circuit, list[q].circuit);
        std::pair<Mask, Mask> kp{key.first, key.second};
        if (std::find(seen.begin(), seen.end(), kp) != seen.end()) continue;
        seen.push_back(kp);
        const auto* x = sig.ray_with_support(list[p].circuit);
        const auto* y = sig.ray_with_support(list[q].circuit);
        if (!tract.is_null(pairing(tract, *x, *y))) {
          auto rep = detail::fail_report(
              "O2'", "modular pair has non-null pairing");
          rep.pair_supports = kp;
          return rep;
        }
      }
    }
  }
  return {};
}

/// (L-i') alone: for first-kind modular pairs and triggered coordinates f,
/// some X3 ∈ 𝒞 with X3(f) = 0 completes X1 + X2 to a coordinatewise-null
/// sum. The scalar of the candidate ray is forced by any coordinate where
/// the partial sum is non-null.
template <Tract T>
SignatureCheckReport check_l1_prime(const Signature<T>& sig,
                                    const OrthogonalMatroid& m) {
  detail::require_supports_are_circuits(sig, m);
  const T& tract = sig.tract();
  const int n = sig.n();
  std::vector<std::tuple<Mask, Mask, int>> seen;
  for (const auto& list : detail::fundamental_circuits_by_basis(m)) {
    for (std::size_t p = 0; p < list.size(); ++p) {
      for (std::size_t q = p + 1; q < list.size(); ++q) {
        Mask c1 = list[p].circuit, c2 = list[q].circuit;
        if (c1 == c2 || !SignedSubset(n, c1 | c2).is_subtransversal())
          continue;
        const auto* x1 = sig.ray_with_support(c1);
        const auto* x2 = sig.ray_with_support(c2);
        Mask common = c1 & c2;
        for (int r = 0; r < 2 * n; ++r) {
          if (!(common & (Mask{1} << r))) continue;
          Element f = Element::from_rank(r);
          auto key = std::make_tuple(std::min(c1, c2), std::max(c1, c2), r);
          if (std::find(seen.begin(), seen.end(), key) != seen.end())
            continue;
          seen.push_back(key);
          if (!tract.is_null(
                  FormalSum<typename T::Elem>{x1->at(f), x2->at(f)}))
            continue;  // premise not triggered
          if (!detail::completion_exists(sig, {x1, x2}, {f})) {
            auto rep = detail::fail_report(
                "L-i'",
                "no X3 completes the first-kind pair at " + f.to_string());
            rep.pair_supports = {c1, c2};
            rep.coordinate = f;
            return rep;
          }
        }
      }
    }
  }
  return {};
}

/// (L-ii') alone: second-kind modular triples with triggered premises admit
/// a completing X4 vanishing at the three distinguished coordinates.
template <Tract T>
SignatureCheckReport check_l2_prime(const Signature<T>& sig,
                                    const OrthogonalMatroid& m) {
  detail::require_supports_are_circuits(sig, m);
  const T& tract = sig.tract();
  const int n = sig.n();
  auto union_sub = [&](Mask a, Mask b) {
    return SignedSubset(n, a | b).is_subtransversal();
  };
  for (const auto& list : detail::fundamental_circuits_by_basis(m)) {
    for (std::size_t p = 0; p < list.size(); ++p) {
      for (std::size_t q = p + 1; q < list.size(); ++q) {
        for (std::size_t s = q + 1; s < list.size(); ++s) {
          Mask c1 = list[p].circuit, c2 = list[q].circuit,
               c3 = list[s].circuit;
          if (c1 == c2 || c1 == c3 || c2 == c3) continue;
          if (union_sub(c1, c2) || union_sub(c1, c3) || union_sub(c2, c3))
            continue;  // not of the second kind
          const CircuitVector<T>* x[3] = {sig.ray_with_support(c1),
                                          sig.ray_with_support(c2),
                                          sig.ray_with_support(c3)};
          Element e[3] = {list[p].e, list[q].e, list[s].e};
          bool premise = true;
          for (int i = 0; i < 3 && premise; ++i) {
            Element coord = e[i].star();
            premise = tract.is_null(FormalSum<typename T::Elem>{
                x[(i + 1) % 3]->at(coord), x[(i + 2) % 3]->at(coord)});
          }
          if (!premise) continue;
          if (!detail::completion_exists(
                  sig, {x[0], x[1], x[2]},
                  {e[0].star(), e[1].star(), e[2].star()})) {
            auto rep = detail::fail_report(
                "L-ii'", "no X4 completes the second-kind triple");
            rep.pair_supports = {c1, c2};
            return rep;
          }
        }
      }
    }
  }
  return {};
}

/// Weak circuit set: (O2') on modular pairs, (L-i') on first-kind pairs,
/// (L-ii') on second-kind triples.
template <Tract T>
SignatureCheckReport check_weak_circuit_set(const Signature<T>& sig,
                                            const OrthogonalMatroid& m) {
  auto rep = check_o2_prime(sig, m);
  if (!rep.ok) return rep;
  rep = check_l1_prime(sig, m);
  if (!rep.ok) return rep;
  return check_l2_prime(sig, m);
}

}  // namespace omt
