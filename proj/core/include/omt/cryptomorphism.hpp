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

#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omt/groundset.hpp"
#include "omt/matroid.hpp"
#include "omt/signature.hpp"
#include "omt/tract.hpp"
#include "omt/tract_function.hpp"

namespace omt {

/// One entry of the sign-audit trail: the subset whose value was produced
/// and the full exponent that signed it (before reduction mod 2).
struct SignAudit {
  Mask subset = 0;
  int exponent = 0;
};

template <Tract T>
struct WickToRgpResult {
  RgpFunction<T> rgp;
  int sigma = 0;
  std::vector<SignAudit> audit;
};

namespace detail {

inline int indices_below(Mask index_mask, int i) {
  return std::popcount(index_mask & ((Mask{1} << (i - 1)) - 1));
}

inline int indices_at_most(Mask index_mask, int i) {
  return std::popcount(index_mask & ((Mask{1} << i) - 1));
}

}  // namespace detail

/// Φ_{W→GP}: φ(B) = ψ(B)² on transversals; on an almost-transversal A with
/// missing pair index i and contained pair index j,
///   φ(A) = (-1)^(|B∩[n]<i| + |B∩[n]<j| + [i∈B] + 1) ψ(B) ψ(B △ {i,i*,j,j*})
/// for either of the two admissible B in the σ-class. Both are evaluated and
/// must agree; every exponent lands in the audit trail.
template <Tract T>
WickToRgpResult<T> wick_to_rgp(const WickFunction<T>& psi, Strength strength,
                               bool validate = true) {
  if (validate) {
    auto rep = check_wick(psi, strength);
    if (!rep.ok) throw InvalidWick(rep.to_string());
  }
  const T& tract = psi.tract();
  const int n = psi.n();

  std::optional<int> sigma;
  for (const auto& t : enumerate_transversals(n))
    if (!tract.is_zero(psi.value(t))) {
      sigma = t.sigma();
      break;
    }
  if (!sigma) throw InvalidWick("identically zero Wick function");

  WickToRgpResult<T> out{RgpFunction<T>(tract, n), *sigma, {}};
  for (const auto& b : enumerate_transversals(n))
    out.rgp.set_value(b, tract.mul(psi.value(b), psi.value(b)));

  for (const auto& a : enumerate_almost_transversals(n)) {
    int i = *a.missing_index();
    int j = *a.contained_pair_index();
    std::optional<typename T::Elem> value;
    int first_exponent = 0;
    for (Element je : {Element{j, false}, Element{j, true}}) {
      for (Element ie : {Element{i, false}, Element{i, true}}) {
        SignedSubset b = a.without(je).with(ie);
        if (b.sigma() != *sigma) continue;
        Mask unstarred = b.unstarred_indices();
        int exponent = detail::indices_below(unstarred, i) +
                       detail::indices_below(unstarred, j) +
                       b.contains({i, false}) + 1;
        SignedSubset b2 = b.swap_pair(i).swap_pair(j);
        auto v = signed_by(tract, exponent,
                           tract.mul(psi.value(b), psi.value(b2)));
        if (!value) {
          value = v;
          first_exponent = exponent;
        } else if (!tract.eq(*value, v)) {
          throw InvalidWick("the two admissible transversals disagree at " +
                            a.to_string());
        }
      }
    }
    out.rgp.set_value(a, *value);
    out.audit.push_back({a.bits(), first_exponent});
  }
  return out;
}

/// Φ_{GP→O}: X_S(i) = (-1)^(|S<i|) φ(S \ {i}) for i ∈ S, one vector per
/// hyper-transversal S, nonzero vectors kept up to scaling.
template <Tract T>
CircuitVector<T> hyper_vector(const RgpFunction<T>& phi,
                              const SignedSubset& s) {
  if (!s.is_hyper_transversal())
    throw InvalidInput("X_S needs a hyper-transversal");
  const T& tract = phi.tract();
  auto x = CircuitVector<T>::zero(tract, phi.n());
  for (Element e : s.elements())
    x.at(e) = signed_by(tract, s.count_less(e), phi.value(s.without(e)));
  return x;
}

template <Tract T>
Signature<T> rgp_to_signature(const RgpFunction<T>& phi, Strength strength,
                              bool validate = true) {
  if (validate) {
    auto rep = check_rgp(phi, strength);
    if (!rep.ok) throw InvalidRgp(rep.to_string());
  }
  const T& tract = phi.tract();
  std::vector<CircuitVector<T>> vectors;
  for (const auto& s : enumerate_hyper_transversals(phi.n())) {
    auto x = hyper_vector(phi, s);
    if (!x.is_zero(tract)) vectors.push_back(std::move(x));
  }
  return Signature<T>::from_vectors(tract, phi.n(), vectors);
}

/// Y_{S'}(i) = (-1)^(|S'<i*|) φ(S' ∪ {i*}) for i outside (S')*; supported on
/// the complement of (S')*. May be the zero vector, which callers flag.
template <Tract T>
CircuitVector<T> hypo_vector(const RgpFunction<T>& phi,
                             const SignedSubset& s_prime) {
  if (!s_prime.is_hypo_transversal())
    throw InvalidInput("Y_{S'} needs a hypo-transversal");
  const T& tract = phi.tract();
  auto y = CircuitVector<T>::zero(tract, phi.n());
  for (int r = 0; r < 2 * phi.n(); ++r) {
    Element i = Element::from_rank(r);
    if (s_prime.contains(i.star())) continue;  // i ∈ (S')*
    y.at(i) = signed_by(tract, s_prime.count_less(i.star()),
                        phi.value(s_prime.with(i.star())));
  }
  return y;
}

/// Hypo/hyper consistency: Y_{S \ {i,i*}} = ±X_S for every
/// hyper-transversal S.
template <Tract T>
bool check_hypo_vectors_match(const RgpFunction<T>& phi) {
  const T& tract = phi.tract();
  for (const auto& s : enumerate_hyper_transversals(phi.n())) {
    int i = *s.contained_pair_index();
    SignedSubset s_prime(phi.n(), s.bits() & ~pair_mask(i));
    auto x = hyper_vector(phi, s);
    auto y = hypo_vector(phi, s_prime);
    bool plus = true, minus = true;
    for (std::size_t r = 0; r < x.coords.size(); ++r) {
      plus &= tract.eq(x.coords[r], y.coords[r]);
      minus &= tract.eq(x.coords[r], tract.neg(y.coords[r]));
    }
    if (!plus && !minus) return false;
  }
  return true;
}

/// Φ_{W→O}: X_T(e) = (-1)^(|T*∩[n] <= ē|) ψ(T △ {e,e*}) for e ∈ T, for each
/// transversal T adjacent to a basis. An equivalent convention signs by
/// |T∩[n] <= ē| instead; it rescales each X_T by a unit and produces the
/// same rays, so only the displayed convention is implemented.
template <Tract T>
Signature<T> wick_to_signature(const WickFunction<T>& psi, Strength strength,
                               bool validate = true) {
  if (validate) {
    auto rep = check_wick(psi, strength);
    if (!rep.ok) throw InvalidWick(rep.to_string());
  }
  const T& tract = psi.tract();
  const int n = psi.n();
  std::vector<CircuitVector<T>> vectors;
  for (const auto& t : enumerate_transversals(n)) {
    bool adjacent = false;
    for (int x = 1; x <= n && !adjacent; ++x)
      adjacent = !tract.is_zero(psi.value(t.swap_pair(x)));
    if (!adjacent) continue;
    auto vec = CircuitVector<T>::zero(tract, n);
    Mask starred = t.starred_indices();
    for (Element e : t.elements()) {
      int exponent = detail::indices_at_most(starred, e.index);
      vec.at(e) =
          signed_by(tract, exponent, psi.value(t.swap_pair(e.index)));
    }
    if (!vec.is_zero(tract)) vectors.push_back(std::move(vec));
  }
  return Signature<T>::from_vectors(tract, n, vectors);
}

/// The orthogonal matroid whose circuits are the supports of 𝒞: bases are
/// the transversals containing no support. Throws InvalidSignature when the
/// family is not a matroid or the supports are not exactly its circuits.
template <Tract T>
OrthogonalMatroid matroid_of_signature(const Signature<T>& sig) {
  std::vector<SignedSubset> bases;
  auto supports = sig.supports();
  for (const auto& t : enumerate_transversals(sig.n())) {
    bool covers = false;
    for (const auto& c : supports)
      if ((c.bits() & ~t.bits()) == 0) {
        covers = true;
        break;
      }
    if (!covers) bases.push_back(t);
  }
  if (bases.empty())
    throw InvalidSignature("no transversal avoids all supports");
  auto exchange = check_strong_exchange(sig.n(), bases);
  if (!exchange.ok)
    throw InvalidSignature("support-derived family is not an orthogonal "
                           "matroid");
  auto m = OrthogonalMatroid::from_bases(sig.n(), std::move(bases), false);
  if (m.circuits() != supports)
    throw InvalidSignature("supports are not the circuit set of any "
                           "orthogonal matroid");
  return m;
}

/// Φ_{O→W}: reconstructs ψ from 𝒞 up to a global unit. ψ(B0) = 1 at the
/// smallest basis; ratios propagate along the exchange graph
/// B ~ B △ {i,i*,j,j*} through the ray supported on the fundamental circuit
/// carried by T = B △ {i,i*}. Verifies the result reproduces 𝒞.
template <Tract T>
WickFunction<T> signature_to_wick(const Signature<T>& sig,
                                  const OrthogonalMatroid& m,
                                  Strength strength, bool validate = true) {
  const T& tract = sig.tract();
  const int n = sig.n();
  if (validate) {
    auto rep = strength == Strength::strong
                   ? check_orthogonal_signature(sig, m)
                   : check_weak_circuit_set(sig, m);
    if (!rep.ok) throw InvalidSignature(rep.to_string());
  }

  WickFunction<T> psi(tract, n);
  std::vector<char> known(std::size_t{1} << n, false);

  auto star_mask = [](const SignedSubset& s) { return s.starred_indices(); };
  const SignedSubset& b0 = m.bases().front();
  psi.set_value(b0, tract.one());
  known[star_mask(b0)] = true;

  std::deque<SignedSubset> queue{b0};
  while (!queue.empty()) {
    SignedSubset b = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        SignedSubset b2 = b.swap_pair(i).swap_pair(j);
        if (!m.contains_basis(b2)) continue;

        // T = B △ {i,i*} is adjacent to both bases; the ray on its carried
        // fundamental circuit fixes the ratio ψ(B2)/ψ(B).
        SignedSubset t = b.swap_pair(i);
        Mask circuit = 0;
        for (Element x : t.elements())
          if (m.contains_basis(t.swap_pair(x.index))) circuit |= x.bit();
        const auto* ray = sig.ray_with_support(circuit);
        if (!ray)
          throw InvalidSignature("missing ray for fundamental circuit " +
                                 SignedSubset(n, circuit).to_string());
        Element ei = t.contains(Element{i, false}) ? Element{i, false}
                                                   : Element{i, true};
        Element ej = t.contains(Element{j, false}) ? Element{j, false}
                                                   : Element{j, true};
        Mask starred = star_mask(t);
        int exponent = detail::indices_at_most(starred, i) +
                       detail::indices_at_most(starred, j);
        auto value =
            tract.mul(psi.value(b),
                      signed_by(tract, exponent,
                                ratio(tract, ray->at(ej), ray->at(ei))));
        if (!known[star_mask(b2)]) {
          psi.set_value(b2, value);
          known[star_mask(b2)] = true;
          queue.push_back(b2);
        } else if (!tract.eq(psi.value(b2), value)) {
          throw InconsistentRatios(
              "exchange-graph propagation is inconsistent at " +
              b2.to_string());
        }
      }
    }
  }

  for (const auto& basis : m.bases())
    if (!known[star_mask(basis)])
      throw InconsistentRatios("basis unreachable in the exchange graph: " +
                               basis.to_string());

  if (validate) {
    auto back = wick_to_signature(psi, strength, false);
    if (!signatures_equal(back, sig))
      throw InconsistentRatios(
          "reconstructed Wick function does not reproduce the signature");
  }
  return psi;
}

/// The edge-ratio equality criterion: two rGP functions with equal support
/// lie in the same projective class iff φ(A)/φ(B) agrees on every basis-
/// graph edge (B transversal basis, A = B \ {i,i*} ∪ {j,j*} almost basis).
template <Tract T>
bool equal_ratio_criterion(const RgpFunction<T>& phi,
                           const RgpFunction<T>& phi2) {
  const T& tract = phi.tract();
  auto support = phi.support();
  if (support != phi2.support()) return false;
  for (const auto& b : support) {
    if (!b.is_transversal()) continue;
    for (int i = 1; i <= phi.n(); ++i) {
      for (int j = 1; j <= phi.n(); ++j) {
        if (i == j) continue;
        SignedSubset a(phi.n(), (b.bits() & ~pair_mask(i)) | pair_mask(j));
        if (tract.is_zero(phi.value(a))) continue;
        if (!tract.eq(ratio(tract, phi.value(a), phi.value(b)),
                      ratio(tract, phi2.value(a), phi2.value(b))))
          return false;
      }
    }
  }
  return true;
}

/// What verify_roundtrips reports.
struct ConversionReport {
  std::string input_kind;
  Strength strength = Strength::strong;
  int sigma = 0;
  bool composition_identity = false;  // Φ_{GP→O} ∘ Φ_{W→GP} = Φ_{W→O}
  bool cycle_identity = false;        // the three-step cycle is the identity
  std::vector<SignAudit> audit;
  bool ok() const { return composition_identity && cycle_identity; }
};

template <Tract T>
ConversionReport verify_roundtrips(const WickFunction<T>& psi,
                                   Strength strength) {
  ConversionReport report;
  report.input_kind = "wick";
  report.strength = strength;

  auto to_rgp = wick_to_rgp(psi, strength);
  report.sigma = to_rgp.sigma;
  report.audit = to_rgp.audit;

  auto via_rgp = rgp_to_signature(to_rgp.rgp, strength);
  auto direct = wick_to_signature(psi, strength, false);
  report.composition_identity = signatures_equal(via_rgp, direct);

  auto m = matroid_of_signature(direct);
  auto back = signature_to_wick(direct, m, strength, false);
  report.cycle_identity = projectively_equal(psi, back);
  return report;
}

template <Tract T>
ConversionReport verify_roundtrips(const RgpFunction<T>& phi,
                                   Strength strength) {
  ConversionReport report;
  report.input_kind = "rgp";
  report.strength = strength;
  report.sigma = phi.sigma().value_or(0);

  auto sig = rgp_to_signature(phi, strength);
  auto m = matroid_of_signature(sig);
  auto psi = signature_to_wick(sig, m, strength, false);
  auto to_rgp = wick_to_rgp(psi, strength, false);
  report.audit = to_rgp.audit;

  bool projective = projectively_equal(phi, to_rgp.rgp);
  bool by_ratios = equal_ratio_criterion(phi, to_rgp.rgp);
  report.cycle_identity = projective && by_ratios;

  auto direct = wick_to_signature(psi, strength, false);
  report.composition_identity = signatures_equal(sig, direct);
  return report;
}

template <Tract T>
ConversionReport verify_roundtrips(const Signature<T>& sig,
                                   Strength strength) {
  ConversionReport report;
  report.input_kind = "signature";
  report.strength = strength;

  auto m = matroid_of_signature(sig);
  auto psi = signature_to_wick(sig, m, strength);
  auto to_rgp = wick_to_rgp(psi, strength, false);
  report.sigma = to_rgp.sigma;
  report.audit = to_rgp.audit;

  auto back = rgp_to_signature(to_rgp.rgp, strength, false);
  report.cycle_identity = signatures_equal(sig, back);

  auto direct = wick_to_signature(psi, strength, false);
  report.composition_identity = signatures_equal(direct, back);
  return report;
}

}  // namespace omt
