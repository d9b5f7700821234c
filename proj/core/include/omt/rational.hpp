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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace omt {

/// Exact arbitrary-precision rational. Everything in the library is exact;
/// there is no floating point on any evaluation path.
using Rational = mpq_class;

/// Parses "p/q", plain integers, and finite decimals ("-1.25" -> -5/4).
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form.
std::string format_rational(const Rational& value);

/// Decimal form when the reduced denominator is 10-smooth ("3/2" -> "1.5"),
/// otherwise falls back to format_rational. Used for tropical valuations.
std::string format_decimal(const Rational& value);

}  // namespace omt
