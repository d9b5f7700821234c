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

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "omt/errors.hpp"
#include "omt/rational.hpp"

namespace omt {

/// A formal sum over a tract: a multiset of elements, kept as-is. Tracts have
/// no addition, so sums are never simplified beyond the rule that zero terms
/// are removable; nullity is the only question one may ask of them.
template <class E>
using FormalSum = std::vector<E>;

/// Tract concept: a multiplicative monoid F = F^× ∪ {0} together with a null
/// set of formal sums. Instances must guarantee:
///  - F^× is an abelian group, 0 absorbs under mul;
///  - is_null([a]) holds exactly for a = 0;
///  - neg(a) = (-1)·a with the unique -1 satisfying is_null([1,-1]);
///  - is_null is invariant under scaling by units and under zero terms.
template <class T>
concept Tract =
    std::semiregular<T> && requires(const T& t, const typename T::Elem& a,
                                    const FormalSum<typename T::Elem>& s) {
      typename T::Elem;
      { t.zero() } -> std::convertible_to<typename T::Elem>;
      { t.one() } -> std::convertible_to<typename T::Elem>;
      { t.is_zero(a) } -> std::convertible_to<bool>;
      { t.eq(a, a) } -> std::convertible_to<bool>;
      { t.mul(a, a) } -> std::convertible_to<typename T::Elem>;
      { t.inv(a) } -> std::convertible_to<typename T::Elem>;
      { t.neg(a) } -> std::convertible_to<typename T::Elem>;
      { t.is_null(s) } -> std::convertible_to<bool>;
      { t.completions(s) } -> std::convertible_to<std::vector<typename T::Elem>>;
      { t.parse(std::string_view{}) } -> std::convertible_to<typename T::Elem>;
      { t.format(a) } -> std::convertible_to<std::string>;
      { t.name() } -> std::convertible_to<std::string>;
    };

/// Tracts that are honest fields additionally support exact linear algebra.
template <class T>
concept FieldTract = Tract<T> && requires(const T& t, const typename T::Elem& a) {
  { t.add(a, a) } -> std::convertible_to<typename T::Elem>;
  { t.sub(a, a) } -> std::convertible_to<typename T::Elem>;
  { t.div(a, a) } -> std::convertible_to<typename T::Elem>;
};

template <Tract T>
typename T::Elem neg_one(const T& t) {
  return t.neg(t.one());
}

/// a / b in F^× (b nonzero), available in every tract via the group inverse.
template <Tract T>
typename T::Elem ratio(const T& t, const typename T::Elem& a,
                       const typename T::Elem& b) {
  return t.mul(a, t.inv(b));
}

/// c^e for e ∈ {0,1} mod 2 sign bookkeeping: returns a or -a.
template <Tract T>
typename T::Elem signed_by(const T& t, int exponent,
                           const typename T::Elem& a) {
  return (exponent & 1) ? t.neg(a) : a;
}

template <Tract T>
FormalSum<typename T::Elem> scale_sum(const T& t, const typename T::Elem& c,
                                      const FormalSum<typename T::Elem>& s) {
  FormalSum<typename T::Elem> out;
  out.reserve(s.size());
  for (const auto& x : s) out.push_back(t.mul(c, x));
  return out;
}

// ---------------------------------------------------------------------------
// The rational field Q.

class RationalField {
 public:
  using Elem = Rational;
  static constexpr bool finite = false;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw ZeroInverse();
    return Rational(1) / a;
  }
  Elem neg(const Elem& a) const { return -a; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

  bool is_null(const FormalSum<Elem>& s) const {
    Rational acc(0);
    for (const auto& x : s) acc += x;
    return acc == 0;
  }

  std::vector<Elem> completions(const FormalSum<Elem>& s) const {
    Rational acc(0);
    for (const auto& x : s) acc += x;
    if (acc == 0) return {};
    return {-acc};
  }

  Elem parse(std::string_view text) const { return parse_rational(text); }
  std::string format(const Elem& a) const { return format_rational(a); }
  std::string name() const { return "Q"; }

 private:
  static const Elem& inv_guard(const Elem& b) {
    if (b == 0) throw ZeroInverse();
    return b;
  }
};

// ---------------------------------------------------------------------------
// Prime fields F_p.

class PrimeField {
 public:
  using Elem = std::uint32_t;
  static constexpr bool finite = true;

  PrimeField() : p_(2) {}
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2) throw InvalidInput("modulus must be >= 2");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw InvalidInput("modulus is not prime");
  }

  std::uint32_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(std::uint64_t(a) * b % p_);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw ZeroInverse();
    Elem result = 1, base = a;
    std::uint32_t e = p_ - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_null(const FormalSum<Elem>& s) const {
    Elem acc = 0;
    for (Elem x : s) acc = add(acc, x);
    return acc == 0;
  }

  std::vector<Elem> completions(const FormalSum<Elem>& s) const {
    Elem acc = 0;
    for (Elem x : s) acc = add(acc, x);
    if (acc == 0) return {};
    return {neg(acc)};
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out(p_);
    for (std::uint32_t i = 0; i < p_; ++i) out[i] = i;
    return out;
  }

  Elem parse(std::string_view text) const {
    Rational r = parse_rational(text);
    if (r.get_den() != 1)
      throw ParseError("prime-field literal must be an integer");
    mpz_class residue = r.get_num() % p_;
    if (residue < 0) residue += p_;
    return static_cast<Elem>(residue.get_ui());
  }
  std::string format(Elem a) const { return std::to_string(a); }
  std::string name() const { return "Fp:" + std::to_string(p_); }

 private:
  std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// The Krasner hyperfield K = {0, 1}: a sum is null iff it has zero or at
// least two 1-terms.

class KrasnerHyperfield {
 public:
  using Elem = std::uint8_t;
  static constexpr bool finite = true;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem mul(Elem a, Elem b) const { return a & b; }
  Elem inv(Elem a) const {
    if (a == 0) throw ZeroInverse();
    return 1;
  }
  Elem neg(Elem a) const { return a; }  // -1 = 1 in K

  bool is_null(const FormalSum<Elem>& s) const { return ones(s) != 1; }

  std::vector<Elem> completions(const FormalSum<Elem>& s) const {
    if (ones(s) == 1) return {Elem{1}};
    return {};
  }

  std::vector<Elem> elements() const { return {0, 1}; }

  Elem parse(std::string_view text) const {
    if (text == "0") return 0;
    if (text == "1") return 1;
    throw ParseError("Krasner literal must be 0 or 1");
  }
  std::string format(Elem a) const { return a ? "1" : "0"; }
  std::string name() const { return "Krasner"; }

 private:
  static int ones(const FormalSum<Elem>& s) {
    int c = 0;
    for (Elem x : s) c += (x != 0);
    return c;
  }
};

// ---------------------------------------------------------------------------
// The sign hyperfield S = {0, +1, -1}: a sum is null iff it has no nonzero
// term or terms of both signs.

class SignHyperfield {
 public:
  using Elem = std::int8_t;
  static constexpr bool finite = true;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(a * b); }
  Elem inv(Elem a) const {
    if (a == 0) throw ZeroInverse();
    return a;
  }
  Elem neg(Elem a) const { return static_cast<Elem>(-a); }

  bool is_null(const FormalSum<Elem>& s) const {
    bool plus = false, minus = false;
    for (Elem x : s) {
      plus |= x > 0;
      minus |= x < 0;
    }
    return plus == minus;
  }

  std::vector<Elem> completions(const FormalSum<Elem>& s) const {
    bool plus = false, minus = false;
    for (Elem x : s) {
      plus |= x > 0;
      minus |= x < 0;
    }
    if (plus && !minus) return {Elem{-1}};
    if (minus && !plus) return {Elem{1}};
    return {};
  }

  std::vector<Elem> elements() const { return {-1, 0, 1}; }

  Elem parse(std::string_view text) const {
    if (text == "0") return 0;
    if (text == "1" || text == "+1" || text == "+") return 1;
    if (text == "-1" || text == "-") return -1;
    throw ParseError("sign literal must be one of 0, 1, -1");
  }
  std::string format(Elem a) const {
    return a == 0 ? "0" : (a > 0 ? "1" : "-1");
  }
  std::string name() const { return "Sign"; }
};

// ---------------------------------------------------------------------------
// The tropical hyperfield T: elements are rational valuations plus infinity
// (the zero), multiplication is valuation addition, and a sum is null iff it
// is all-infinite or its minimum valuation is attained at least twice.

struct TropicalNumber {
  bool infinite = true;  // the tract zero
  Rational val = 0;

  friend bool operator==(const TropicalNumber& a, const TropicalNumber& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.val == b.val;
  }
};

class TropicalHyperfield {
 public:
  using Elem = TropicalNumber;
  static constexpr bool finite = false;

  Elem zero() const { return {}; }
  Elem one() const { return {false, Rational(0)}; }
  bool is_zero(const Elem& a) const { return a.infinite; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem mul(const Elem& a, const Elem& b) const {
    if (a.infinite || b.infinite) return {};
    return {false, a.val + b.val};
  }
  Elem inv(const Elem& a) const {
    if (a.infinite) throw ZeroInverse();
    return {false, -a.val};
  }
  Elem neg(const Elem& a) const { return a; }  // -1 = 1 in T

  bool is_null(const FormalSum<Elem>& s) const {
    int hits = 0;
    const Rational* min = nullptr;
    for (const auto& x : s) {
      if (x.infinite) continue;
      if (!min || x.val < *min) {
        min = &x.val;
        hits = 1;
      } else if (x.val == *min) {
        ++hits;
      }
    }
    return min == nullptr || hits >= 2;
  }

  std::vector<Elem> completions(const FormalSum<Elem>& s) const {
    int hits = 0;
    const Rational* min = nullptr;
    for (const auto& x : s) {
      if (x.infinite) continue;
      if (!min || x.val < *min) {
        min = &x.val;
        hits = 1;
      } else if (x.val == *min) {
        ++hits;
      }
    }
    if (min && hits == 1) return {Elem{false, *min}};
    return {};
  }

  Elem parse(std::string_view text) const {
    if (text == "inf" || text == "oo") return {};
    return {false, parse_rational(text)};
  }
  std::string format(const Elem& a) const {
    return a.infinite ? "inf" : format_decimal(a.val);
  }
  std::string name() const { return "Tropical"; }
};

// ---------------------------------------------------------------------------
// Axiom validation.

struct TractValidationReport {
  bool ok = true;
  std::string axiom;   // "T1".."T4" or "mod-rule" on failure
  std::string detail;
  long sums_checked = 0;
};

/// Checks (T1)-(T4) and the zero-removal rule over the supplied elements and
/// all formal sums of length <= max_len built from them. For finite tracts
/// pass t.elements(); for infinite ones pass a representative sample.
template <Tract T>
TractValidationReport validate_tract(const T& t,
                                     const std::vector<typename T::Elem>& elems,
                                     int max_len = 4) {
  using Elem = typename T::Elem;
  TractValidationReport rep;
  auto fail = [&](std::string axiom, std::string detail) {
    rep.ok = false;
    rep.axiom = std::move(axiom);
    rep.detail = std::move(detail);
    return rep;
  };

  // Units, deduplicated so repeated sample entries cannot skew the T3 count.
  std::vector<Elem> units;
  for (const auto& a : elems) {
    if (t.is_zero(a)) continue;
    bool seen = false;
    for (const auto& u : units) seen |= t.eq(u, a);
    if (!seen) units.push_back(a);
  }

  // T1: abelian group on F^x with absorbing zero.
  for (const auto& a : units) {
    if (!t.eq(t.mul(a, t.one()), a))
      return fail("T1", "1 is not a multiplicative identity at " + t.format(a));
    if (!t.eq(t.mul(a, t.inv(a)), t.one()))
      return fail("T1", "a*inv(a) != 1 at " + t.format(a));
    if (!t.is_zero(t.mul(a, t.zero())) || !t.is_zero(t.mul(t.zero(), a)))
      return fail("T1", "zero is not absorbing at " + t.format(a));
    for (const auto& b : units) {
      if (!t.eq(t.mul(a, b), t.mul(b, a)))
        return fail("T1", "multiplication is not commutative");
      for (const auto& c : units)
        if (!t.eq(t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c))))
          return fail("T1", "multiplication is not associative");
    }
  }
  if (!t.eq(t.mul(neg_one(t), neg_one(t)), t.one()))
    return fail("T1", "(-1)^2 != 1");

  // T2: F ∩ N_F = {0}, i.e. the singleton sum [a] is null iff a = 0.
  for (const auto& a : elems) {
    ++rep.sums_checked;
    if (t.is_null(FormalSum<Elem>{a}) != t.is_zero(a))
      return fail("T2", "singleton nullity disagrees at " + t.format(a));
  }

  // T3: a unique -1 among the supplied units with 1 + (-1) null.
  {
    int count = 0;
    for (const auto& x : units) {
      if (t.is_null(FormalSum<Elem>{t.one(), x})) {
        ++count;
        if (!t.eq(x, neg_one(t)))
          return fail("T3", "1 + " + t.format(x) + " is null but x != -1");
      }
    }
    if (count != 1)
      return fail("T3", "expected exactly one additive inverse of 1, found " +
                            std::to_string(count));
  }

  // T4 + mod rule, over every sum of length <= max_len.
  std::vector<std::size_t> idx;
  auto check_sum = [&](const FormalSum<Elem>& s) -> bool {
    ++rep.sums_checked;
    bool null = t.is_null(s);
    for (const auto& c : units)
      if (t.is_null(scale_sum(t, c, s)) != null) {
        fail("T4", "nullity not invariant under scaling");
        return false;
      }
    FormalSum<Elem> padded = s;
    padded.push_back(t.zero());
    if (t.is_null(padded) != null) {
      fail("mod-rule", "appending a zero term changed nullity");
      return false;
    }
    return true;
  };
  for (int len = 1; len <= max_len && rep.ok; ++len) {
    idx.assign(len, 0);
    while (true) {
      FormalSum<Elem> s;
      s.reserve(len);
      for (std::size_t i : idx) s.push_back(elems[i]);
      if (!check_sum(s)) return rep;
      int pos = len - 1;
      while (pos >= 0 && ++idx[pos] == elems.size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return rep;
}

}  // namespace omt
