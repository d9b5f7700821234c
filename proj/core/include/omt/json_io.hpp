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

#include <json.hpp>

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "omt/groundset.hpp"
#include "omt/matroid.hpp"
#include "omt/realization.hpp"
#include "omt/signature.hpp"
#include "omt/tract.hpp"
#include "omt/tract_function.hpp"

namespace omt {

using Json = nlohmann::json;

using TractVariant = std::variant<RationalField, PrimeField, KrasnerHyperfield,
                                  SignHyperfield, TropicalHyperfield>;

/// "Q", "Fp:5", "Krasner", "Sign", "Tropical".
TractVariant tract_from_name(const std::string& name);

/// "1,2*" (function-value keys) -> subset; tolerant of element order.
SignedSubset subset_from_key(int n, const std::string& key);
std::string subset_to_key(const SignedSubset& s);

/// ["1","2*"] -> subset.
SignedSubset subset_from_json(int n, const Json& array);
Json subset_to_json(const SignedSubset& s);

OrthogonalMatroid matroid_from_json(const Json& doc);
Json matroid_to_json(const OrthogonalMatroid& m);

/// Parsed {"n","tract","kind","values"} document, values still as strings.
struct FunctionDoc {
  int n = 0;
  std::string tract;
  std::string kind;  // "wick" or "rgp"
  std::map<std::string, std::string> values;
};

FunctionDoc function_doc_from_json(const Json& doc);

struct SignatureDoc {
  int n = 0;
  std::string tract;
  std::vector<std::map<std::string, std::string>> vectors;
};

SignatureDoc signature_doc_from_json(const Json& doc);

struct MatrixDoc {
  int n = 0;
  std::vector<std::vector<std::string>> upper;
};

MatrixDoc matrix_doc_from_json(const Json& doc);

template <Tract T>
WickFunction<T> wick_from_doc(const T& tract, const FunctionDoc& doc) {
  if (doc.kind != "wick") throw ParseError("expected kind \"wick\"");
  WickFunction<T> psi(tract, doc.n);
  for (const auto& [key, text] : doc.values) {
    SignedSubset s = subset_from_key(doc.n, key);
    if (!s.is_transversal())
      throw ParseError("Wick key is not a transversal: " + key);
    psi.set_value(s, tract.parse(text));
  }
  return psi;
}

template <Tract T>
RgpFunction<T> rgp_from_doc(const T& tract, const FunctionDoc& doc) {
  if (doc.kind != "rgp") throw ParseError("expected kind \"rgp\"");
  RgpFunction<T> phi(tract, doc.n);
  for (const auto& [key, text] : doc.values) {
    SignedSubset s = subset_from_key(doc.n, key);
    if (!s.is_transversal() && !s.is_almost_transversal())
      throw ParseError("rGP key is outside the domain: " + key);
    phi.set_value(s, tract.parse(text));
  }
  return phi;
}

template <Tract T>
Signature<T> signature_from_doc(const T& tract, const SignatureDoc& doc) {
  std::vector<CircuitVector<T>> vectors;
  for (const auto& sparse : doc.vectors) {
    auto v = CircuitVector<T>::zero(tract, doc.n);
    for (const auto& [key, text] : sparse) {
      Element e = Element::parse(key);
      if (e.index > doc.n) throw ParseError("coordinate outside ground set");
      v.at(e) = tract.parse(text);
    }
    vectors.push_back(std::move(v));
  }
  return Signature<T>::from_vectors(tract, doc.n, vectors);
}

template <FieldTract F>
SkewMatrix<F> skew_matrix_from_doc(const F& field, const MatrixDoc& doc) {
  std::vector<std::vector<typename F::Elem>> upper;
  for (const auto& row : doc.upper) {
    std::vector<typename F::Elem> parsed;
    for (const auto& text : row) parsed.push_back(field.parse(text));
    upper.push_back(std::move(parsed));
  }
  return SkewMatrix<F>::from_upper(field, doc.n, upper);
}

template <Tract T>
Json wick_to_json(const WickFunction<T>& psi) {
  Json values = Json::object();
  for (const auto& t : enumerate_transversals(psi.n()))
    if (!psi.tract().is_zero(psi.value(t)))
      values[subset_to_key(t)] = psi.tract().format(psi.value(t));
  return Json{{"n", psi.n()},
              {"tract", psi.tract().name()},
              {"kind", "wick"},
              {"values", values}};
}

template <Tract T>
Json rgp_to_json(const RgpFunction<T>& phi) {
  Json values = Json::object();
  for (const auto& s : phi.domain())
    if (!phi.tract().is_zero(phi.value(s)))
      values[subset_to_key(s)] = phi.tract().format(phi.value(s));
  return Json{{"n", phi.n()},
              {"tract", phi.tract().name()},
              {"kind", "rgp"},
              {"values", values}};
}

template <Tract T>
Json signature_to_json(const Signature<T>& sig) {
  Json vectors = Json::array();
  for (const auto& ray : sig.rays()) {
    Json coords = Json::object();
    for (int r = 0; r < 2 * sig.n(); ++r) {
      Element e = Element::from_rank(r);
      if (!sig.tract().is_zero(ray.at(e)))
        coords[e.to_string()] = sig.tract().format(ray.at(e));
    }
    vectors.push_back(coords);
  }
  return Json{
      {"n", sig.n()}, {"tract", sig.tract().name()}, {"vectors", vectors}};
}

template <FieldTract F>
Json skew_matrix_to_json(const SkewMatrix<F>& a) {
  Json upper = Json::array();
  for (const auto& row : a.upper_triangle()) {
    Json jrow = Json::array();
    for (const auto& v : row) jrow.push_back(a.field().format(v));
    upper.push_back(jrow);
  }
  return Json{{"n", a.n()}, {"upper", upper}};
}

}  // namespace omt
