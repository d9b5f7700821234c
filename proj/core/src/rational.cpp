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

#include "omt/rational.hpp"

#include <algorithm>
#include <cctype>

#include "omt/errors.hpp"

namespace omt {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw ParseError("empty rational literal");

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (!is_integer_token(digits) || frac_len == 0)
      throw ParseError("bad decimal literal: " + s);
    mpz_class num(digits, 10);
    mpz_class den(1);
    for (std::size_t k = 0; k < frac_len; ++k) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string p = s.substr(0, slash);
    std::string q = s.substr(slash + 1);
    if (!is_integer_token(p) || !is_integer_token(q))
      throw ParseError("bad rational literal: " + s);
    mpz_class den(q, 10);
    if (den == 0) throw ParseError("zero denominator: " + s);
    Rational r(mpz_class(p, 10), den);
    r.canonicalize();
    return r;
  }

  if (!is_integer_token(s)) throw ParseError("bad rational literal: " + s);
  return Rational(mpz_class(s, 10));
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_decimal(const Rational& value) {
  mpz_class den = value.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return format_rational(value);
  int shift = std::max(twos, fives);
  if (shift == 0) return value.get_num().get_str();

  mpz_class scale(1);
  for (int k = 0; k < shift; ++k) scale *= 10;
  mpz_class scaled = value.get_num() * (scale / value.get_den());
  bool negative = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (digits.size() <= static_cast<std::size_t>(shift))
    digits.insert(0, shift + 1 - digits.size(), '0');
  digits.insert(digits.size() - shift, ".");
  return (negative ? "-" : "") + digits;
}

}  // namespace omt
