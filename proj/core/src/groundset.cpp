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

#include "omt/groundset.hpp"

#include <algorithm>
#include <cctype>

#include "omt/errors.hpp"

namespace omt {

std::string Element::to_string() const {
  std::string s = std::to_string(index);
  if (starred) s += '*';
  return s;
}

Element Element::parse(std::string_view text) {
  bool starred = false;
  if (!text.empty() && text.back() == '*') {
    starred = true;
    text.remove_suffix(1);
  }
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("bad element literal: " + std::string(text));
  int index = std::stoi(std::string(text));
  if (index < 1 || index > kMaxGroundSize)
    throw ParseError("element index out of range: " + std::string(text));
  return {index, starred};
}

SignedSubset::SignedSubset(int n, Mask bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxGroundSize)
    throw InvalidInput("ground size out of range: " + std::to_string(n));
  if (bits >> (2 * n)) throw InvalidInput("subset mask exceeds ground set");
}

SignedSubset::SignedSubset(int n, const std::vector<Element>& elems)
    : SignedSubset(n, Mask{0}) {
  for (Element e : elems) {
    if (e.index > n) throw InvalidInput("element outside ground set");
    bits_ |= e.bit();
  }
}

SignedSubset SignedSubset::swap_pair(int index) const {
  return {n_, bits_ ^ pair_mask(index)};
}

SignedSubset SignedSubset::star_all() const {
  Mask even = bits_ & Mask{0x55555555};
  Mask odd = bits_ & Mask{0xAAAAAAAA};
  return {n_, (even << 1) | (odd >> 1)};
}

Mask SignedSubset::unstarred_indices() const {
  Mask out = 0;
  for (int i = 1; i <= n_; ++i)
    if (contains({i, false})) out |= Mask{1} << (i - 1);
  return out;
}

Mask SignedSubset::starred_indices() const {
  Mask out = 0;
  for (int i = 1; i <= n_; ++i)
    if (contains({i, true})) out |= Mask{1} << (i - 1);
  return out;
}

int SignedSubset::skew_pair_count() const {
  int c = 0;
  for (int i = 1; i <= n_; ++i)
    if ((bits_ & pair_mask(i)) == pair_mask(i)) ++c;
  return c;
}

int SignedSubset::missing_index_count() const {
  int c = 0;
  for (int i = 1; i <= n_; ++i)
    if ((bits_ & pair_mask(i)) == 0) ++c;
  return c;
}

std::optional<int> SignedSubset::contained_pair_index() const {
  std::optional<int> found;
  for (int i = 1; i <= n_; ++i) {
    if ((bits_ & pair_mask(i)) == pair_mask(i)) {
      if (found) return std::nullopt;
      found = i;
    }
  }
  return found;
}

std::optional<int> SignedSubset::missing_index() const {
  std::optional<int> found;
  for (int i = 1; i <= n_; ++i) {
    if ((bits_ & pair_mask(i)) == 0) {
      if (found) return std::nullopt;
      found = i;
    }
  }
  return found;
}

bool SignedSubset::is_transversal() const {
  for (int i = 1; i <= n_; ++i) {
    Mask p = bits_ & pair_mask(i);
    if (p == 0 || p == pair_mask(i)) return false;
  }
  return true;
}

bool SignedSubset::is_almost_transversal() const {
  return size() == n_ && skew_pair_count() == 1;
}

bool SignedSubset::is_hyper_transversal() const {
  return size() == n_ + 1 && skew_pair_count() == 1;
}

bool SignedSubset::is_hypo_transversal() const {
  return size() == n_ - 1 && skew_pair_count() == 0;
}

bool SignedSubset::is_subtransversal() const {
  return skew_pair_count() == 0;
}

int SignedSubset::sigma() const {
  return std::popcount(bits_ & Mask{0xAAAAAAAA}) & 1;
}

SubsetClass SignedSubset::classify() const {
  SubsetClass c;
  c.transversal = is_transversal();
  c.almost_transversal = is_almost_transversal();
  c.hyper_transversal = is_hyper_transversal();
  c.hypo_transversal = is_hypo_transversal();
  c.subtransversal = is_subtransversal();
  c.sigma = sigma();
  return c;
}

std::vector<Element> SignedSubset::elements() const {
  std::vector<Element> out;
  for (int r = 0; r < 2 * n_; ++r)
    if (bits_ & (Mask{1} << r)) out.push_back(Element::from_rank(r));
  return out;
}

std::string SignedSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Element e : elements()) {
    if (!first) s += ',';
    s += e.to_string();
    first = false;
  }
  return s + "}";
}

namespace {

template <class Pred>
std::vector<SignedSubset> enumerate_filtered(int n, Pred pred) {
  if (n < 1 || n > kMaxGroundSize)
    throw InvalidInput("ground size out of range: " + std::to_string(n));
  std::vector<SignedSubset> out;
  for (Mask m = 0; m < (Mask{1} << (2 * n)); ++m) {
    SignedSubset s(n, m);
    if (pred(s)) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<SignedSubset> enumerate_transversals(int n,
                                                 std::optional<int> sigma) {
  return enumerate_filtered(n, [&](const SignedSubset& s) {
    return s.is_transversal() && (!sigma || s.sigma() == *sigma);
  });
}

std::vector<SignedSubset> enumerate_almost_transversals(int n) {
  return enumerate_filtered(
      n, [](const SignedSubset& s) { return s.is_almost_transversal(); });
}

std::vector<SignedSubset> enumerate_hyper_transversals(int n) {
  return enumerate_filtered(
      n, [](const SignedSubset& s) { return s.is_hyper_transversal(); });
}

std::vector<SignedSubset> enumerate_hypo_transversals(int n) {
  return enumerate_filtered(
      n, [](const SignedSubset& s) { return s.is_hypo_transversal(); });
}

std::vector<SignedSubset> enumerate_subtransversals(int n) {
  return enumerate_filtered(
      n, [](const SignedSubset& s) { return s.is_subtransversal(); });
}

std::vector<SignedSubset> enumerate_at_most_one_pair(int n) {
  return enumerate_filtered(
      n, [](const SignedSubset& s) { return s.has_at_most_one_pair(); });
}

}  // namespace omt
