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

#include "omt/json_io.hpp"

#include <charconv>

namespace omt {

TractVariant tract_from_name(const std::string& name) {
  if (name == "Q") return RationalField{};
  if (name == "Krasner") return KrasnerHyperfield{};
  if (name == "Sign") return SignHyperfield{};
  if (name == "Tropical") return TropicalHyperfield{};
  if (name.rfind("Fp:", 0) == 0) {
    unsigned p = 0;
    auto* begin = name.data() + 3;
    auto* end = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(begin, end, p);
    if (ec != std::errc{} || ptr != end)
      throw ParseError("bad prime-field modulus in tract name: " + name);
    return PrimeField{p};
  }
  throw ParseError("unknown tract: " + name);
}

SignedSubset subset_from_key(int n, const std::string& key) {
  SignedSubset s(n, Mask{0});
  std::size_t start = 0;
  if (key.empty()) return s;
  while (true) {
    std::size_t comma = key.find(',', start);
    std::string token = key.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    Element e = Element::parse(token);
    if (e.index > n)
      throw ParseError("element outside ground set in key: " + key);
    if (s.contains(e)) throw ParseError("duplicate element in key: " + key);
    s = s.with(e);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return s;
}

std::string subset_to_key(const SignedSubset& s) {
  std::string out;
  bool first = true;
  for (Element e : s.elements()) {
    if (!first) out += ',';
    out += e.to_string();
    first = false;
  }
  return out;
}

SignedSubset subset_from_json(int n, const Json& array) {
  if (!array.is_array()) throw ParseError("subset must be a JSON array");
  SignedSubset s(n, Mask{0});
  for (const auto& item : array) {
    Element e = Element::parse(item.get<std::string>());
    if (e.index > n) throw ParseError("element outside ground set");
    s = s.with(e);
  }
  return s;
}

Json subset_to_json(const SignedSubset& s) {
  Json out = Json::array();
  for (Element e : s.elements()) out.push_back(e.to_string());
  return out;
}

OrthogonalMatroid matroid_from_json(const Json& doc) {
  int n = doc.at("n").get<int>();
  std::vector<SignedSubset> bases;
  for (const auto& b : doc.at("bases")) bases.push_back(subset_from_json(n, b));
  return OrthogonalMatroid::from_bases(n, std::move(bases));
}

Json matroid_to_json(const OrthogonalMatroid& m) {
  Json bases = Json::array();
  for (const auto& b : m.bases()) bases.push_back(subset_to_json(b));
  return Json{{"n", m.n()}, {"bases", bases}};
}

FunctionDoc function_doc_from_json(const Json& doc) {
  FunctionDoc out;
  out.n = doc.at("n").get<int>();
  out.tract = doc.at("tract").get<std::string>();
  out.kind = doc.at("kind").get<std::string>();
  if (doc.contains("values"))
    for (const auto& [key, value] : doc.at("values").items())
      out.values[key] = value.get<std::string>();
  return out;
}

SignatureDoc signature_doc_from_json(const Json& doc) {
  SignatureDoc out;
  out.n = doc.at("n").get<int>();
  out.tract = doc.at("tract").get<std::string>();
  for (const auto& vec : doc.at("vectors")) {
    std::map<std::string, std::string> coords;
    for (const auto& [key, value] : vec.items())
      coords[key] = value.get<std::string>();
    out.vectors.push_back(std::move(coords));
  }
  return out;
}

MatrixDoc matrix_doc_from_json(const Json& doc) {
  MatrixDoc out;
  out.n = doc.at("n").get<int>();
  for (const auto& row : doc.at("upper")) {
    std::vector<std::string> parsed;
    for (const auto& entry : row) parsed.push_back(entry.get<std::string>());
    out.upper.push_back(std::move(parsed));
  }
  return out;
}

}  // namespace omt
