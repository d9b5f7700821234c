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

// omt: batch front end for orthogonal matroids over tracts.
//
// Exit codes: 0 = pass/success, 1 = verification failure (witness printed),
// 2 = usage or input error.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <unordered_set>
#include <iostream>
#include <sstream>
#include <thread>
#include <variant>

#include "omt/cryptomorphism.hpp"
#include "omt/enveloping.hpp"
#include "omt/json_io.hpp"
#include "omt/oracle.hpp"
#include "omt/realization.hpp"

namespace {

using namespace omt;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string output = "text";  // "text" | "json"
  std::string strength = "strong";
  std::uint64_t seed = 0;
  int jobs = 1;
};

Strength parse_strength(const std::string& s) {
  return s == "weak" ? Strength::weak : Strength::strong;
}

Json read_json_file(const std::string& path) {
  if (path == "-") {
    Json doc;
    std::cin >> doc;
    return doc;
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json doc;
  in >> doc;
  return doc;
}

void emit(const Options& opt, const Json& payload, const std::string& text) {
  if (opt.output == "json")
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

Json subset_pair_json(const SignedSubset& a, const SignedSubset& b) {
  return Json{{"first", subset_to_json(a)}, {"second", subset_to_json(b)}};
}

// ---------------------------------------------------------------------------
// verify

template <Tract T>
int verify_function(const T& tract, const FunctionDoc& doc, Strength strength,
                    const Options& opt) {
  if (doc.kind == "wick") {
    auto psi = wick_from_doc(tract, doc);
    auto rep = check_wick(psi, strength);
    Json payload{{"ok", rep.ok}, {"kind", "wick"}};
    if (!rep.ok) {
      payload["axiom"] = rep.axiom;
      if (rep.pair)
        payload["witness"] = subset_pair_json(rep.pair->first,
                                              rep.pair->second);
      if (rep.exchange) payload["witness"] = rep.exchange->to_string();
    }
    emit(opt, payload, rep.ok ? "ok" : rep.to_string());
    return rep.ok ? kExitPass : kExitFail;
  }
  if (doc.kind == "rgp") {
    auto phi = rgp_from_doc(tract, doc);
    auto rep = check_rgp(phi, strength);
    Json payload{{"ok", rep.ok}, {"kind", "rgp"}};
    if (!rep.ok) {
      payload["axiom"] = rep.axiom;
      if (rep.pair)
        payload["witness"] = subset_pair_json(rep.pair->first,
                                              rep.pair->second);
      if (rep.basis)
        payload["witness"] = Json{{"basis", subset_to_json(*rep.basis)},
                                  {"i", rep.i},
                                  {"j", rep.j}};
    }
    emit(opt, payload, rep.ok ? "ok" : rep.to_string());
    return rep.ok ? kExitPass : kExitFail;
  }
  throw ParseError("unknown function kind: " + doc.kind);
}

template <Tract T>
int verify_signature_doc(const T& tract, const SignatureDoc& doc,
                         Strength strength, const Options& opt) {
  auto sig = signature_from_doc(tract, doc);
  auto m = matroid_of_signature(sig);
  SignatureCheckReport rep = strength == Strength::strong
                                 ? check_orthogonal_signature(sig, m)
                                 : check_weak_circuit_set(sig, m);
  SignatureCheckReport extra;
  if (strength == Strength::weak && rep.ok)
    extra = check_weak_orthogonal_signature(sig, m);
  bool ok = rep.ok && extra.ok;
  Json payload{{"ok", ok}, {"kind", "signature"}};
  if (!rep.ok) payload["axiom"] = rep.axiom;
  if (rep.ok && !extra.ok) payload["axiom"] = extra.axiom;
  emit(opt, payload,
       ok ? "ok" : (!rep.ok ? rep.to_string() : extra.to_string()));
  return ok ? kExitPass : kExitFail;
}

int run_verify(const std::string& kind, const std::string& target,
               const Options& opt) {
  Strength strength = parse_strength(opt.strength);
  if (kind == "tract") {
    auto variant = tract_from_name(target);
    auto report = std::visit(
        [&](const auto& tract) {
          using T = std::decay_t<decltype(tract)>;
          if constexpr (T::finite) {
            return validate_tract(tract, tract.elements(), 4);
          } else {
            std::vector<typename T::Elem> sample = {
                tract.zero(), tract.one(), neg_one(tract)};
            if constexpr (std::is_same_v<T, RationalField>) {
              sample.push_back(tract.parse("2"));
              sample.push_back(tract.parse("-3/2"));
            } else {
              sample.push_back(tract.parse("1"));
              sample.push_back(tract.parse("-2.5"));
            }
            return validate_tract(tract, sample, 3);
          }
        },
        variant);
    Json payload{{"ok", report.ok}, {"sums_checked", report.sums_checked}};
    if (!report.ok) {
      payload["axiom"] = report.axiom;
      payload["detail"] = report.detail;
    }
    emit(opt, payload,
         report.ok ? "ok" : "fails " + report.axiom + ": " + report.detail);
    return report.ok ? kExitPass : kExitFail;
  }

  Json doc = read_json_file(target);
  if (kind == "matroid") {
    int n = doc.at("n").get<int>();
    std::vector<SignedSubset> bases;
    for (const auto& b : doc.at("bases"))
      bases.push_back(subset_from_json(n, b));
    auto rep = check_strong_exchange(n, bases);
    Json payload{{"ok", rep.ok}, {"kind", "matroid"}};
    if (!rep.ok) payload["witness"] = rep.witness->to_string();
    emit(opt, payload, rep.ok ? "ok" : "fails exchange at " +
                                           rep.witness->to_string());
    return rep.ok ? kExitPass : kExitFail;
  }
  if (kind == "antisymmetric") {
    int n = doc.at("n").get<int>();
    std::vector<SignedSubset> bases;
    for (const auto& b : doc.at("bases"))
      bases.push_back(subset_from_json(n, b));
    auto rep = check_antisymmetric_axioms(n, bases);
    Json payload{{"ok", rep.ok}, {"kind", "antisymmetric"}};
    if (!rep.ok) payload["witness"] = rep.witness->to_string();
    emit(opt, payload, rep.ok ? "ok" : "fails " + rep.witness->to_string());
    return rep.ok ? kExitPass : kExitFail;
  }
  if (kind == "signature") {
    auto parsed = signature_doc_from_json(doc);
    return std::visit(
        [&](const auto& tract) {
          return verify_signature_doc(tract, parsed, strength, opt);
        },
        tract_from_name(parsed.tract));
  }
  if (kind == "wick" || kind == "rgp") {
    auto parsed = function_doc_from_json(doc);
    if (parsed.kind != kind)
      throw ParseError("document kind " + parsed.kind + " does not match " +
                       kind);
    return std::visit(
        [&](const auto& tract) {
          return verify_function(tract, parsed, strength, opt);
        },
        tract_from_name(parsed.tract));
  }
  throw ParseError("unknown verify kind: " + kind);
}

// ---------------------------------------------------------------------------
// convert

int run_convert(const std::string& from, const std::string& to,
                const std::string& file, const Options& opt) {
  Strength strength = parse_strength(opt.strength);
  Json doc = read_json_file(file);
  (void)opt;

  if (from == "wick") {
    auto parsed = function_doc_from_json(doc);
    return std::visit(
        [&](const auto& tract) {
          auto psi = wick_from_doc(tract, parsed);
          if (to == "rgp") {
            auto res = wick_to_rgp(psi, strength);
            std::cout << rgp_to_json(res.rgp).dump(2) << "\n";
            return kExitPass;
          }
          if (to == "signature") {
            auto sig = wick_to_signature(psi, strength);
            std::cout << signature_to_json(sig).dump(2) << "\n";
            return kExitPass;
          }
          throw ParseError("cannot convert wick to " + to);
        },
        tract_from_name(parsed.tract));
  }
  if (from == "rgp") {
    auto parsed = function_doc_from_json(doc);
    return std::visit(
        [&](const auto& tract) {
          auto phi = rgp_from_doc(tract, parsed);
          if (to == "signature") {
            auto sig = rgp_to_signature(phi, strength);
            std::cout << signature_to_json(sig).dump(2) << "\n";
            return kExitPass;
          }
          throw ParseError("cannot convert rgp to " + to);
        },
        tract_from_name(parsed.tract));
  }
  if (from == "signature") {
    auto parsed = signature_doc_from_json(doc);
    return std::visit(
        [&](const auto& tract) {
          auto sig = signature_from_doc(tract, parsed);
          if (to == "wick") {
            auto m = matroid_of_signature(sig);
            auto psi = signature_to_wick(sig, m, strength);
            std::cout << wick_to_json(psi).dump(2) << "\n";
            return kExitPass;
          }
          throw ParseError("cannot convert signature to " + to);
        },
        tract_from_name(parsed.tract));
  }
  throw ParseError("unknown source kind: " + from);
}

// ---------------------------------------------------------------------------
// realize

int run_realize(const std::string& file, const std::string& emit_kind,
                const std::string& twist, const std::string& tract_name) {
  Json doc = read_json_file(file);
  auto parsed = matrix_doc_from_json(doc);
  Mask twist_set = 0;
  if (!twist.empty()) {
    auto s = subset_from_key(parsed.n, twist);
    for (Element e : s.elements()) {
      if (e.starred) throw ParseError("twist sets live in [n]");
      twist_set |= Mask{1} << (e.index - 1);
    }
  }

  auto run = [&](const auto& field) {
    auto a = skew_matrix_from_doc(field, parsed);
    if (emit_kind == "wick") {
      std::cout << wick_to_json(wick_coordinates(a)).dump(2) << "\n";
    } else if (emit_kind == "rgp") {
      auto aug = AugmentedMatrix<std::decay_t<decltype(field)>>::from_skew(a);
      std::cout << rgp_to_json(restricted_plucker(aug)).dump(2) << "\n";
    } else if (emit_kind == "signature") {
      auto sig = wick_to_signature(wick_coordinates(a), Strength::strong);
      std::cout << signature_to_json(sig).dump(2) << "\n";
    } else if (emit_kind == "matroid") {
      std::cout << matroid_to_json(matroid_from_matrix(a, twist_set)).dump(2)
                << "\n";
    } else {
      throw ParseError("unknown emission kind: " + emit_kind);
    }
    return kExitPass;
  };

  if (tract_name == "Q") return run(RationalField{});
  auto variant = tract_from_name(tract_name);
  if (auto* fp = std::get_if<PrimeField>(&variant)) return run(*fp);
  throw ParseError("realization needs a field tract (Q or Fp:p)");
}

// ---------------------------------------------------------------------------
// circuits

int run_circuits(const std::string& file, const Options& opt) {
  auto m = matroid_from_json(read_json_file(file));
  Json arr = Json::array();
  std::string text;
  for (const auto& c : m.circuits()) {
    arr.push_back(subset_to_json(c));
    if (!text.empty()) text += ' ';
    text += c.to_string();
  }
  emit(opt, Json{{"n", m.n()}, {"circuits", arr}}, text);
  return kExitPass;
}

// ---------------------------------------------------------------------------
// roundtrip

template <Tract T>
ConversionReport roundtrip_any(const T& tract, const Json& doc,
                               Strength strength) {
  if (doc.contains("vectors")) {
    auto sig = signature_from_doc(tract, signature_doc_from_json(doc));
    return verify_roundtrips(sig, strength);
  }
  auto parsed = function_doc_from_json(doc);
  if (parsed.kind == "wick")
    return verify_roundtrips(wick_from_doc(tract, parsed), strength);
  return verify_roundtrips(rgp_from_doc(tract, parsed), strength);
}

Json report_json(const ConversionReport& rep) {
  return Json{{"ok", rep.ok()},
              {"input", rep.input_kind},
              {"strength", to_string(rep.strength)},
              {"sigma", rep.sigma},
              {"composition_identity", rep.composition_identity},
              {"cycle_identity", rep.cycle_identity}};
}

int run_roundtrip(const std::string& file, int random_count, int random_n,
                  const Options& opt) {
  Strength strength = parse_strength(opt.strength);

  if (random_count > 0) {
    // Batch over seeded random realizable instances, partitioned by --jobs.
    std::atomic<int> failures{0};
    std::atomic<long> done{0};
    int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (int i = w; i < random_count; i += jobs) {
          auto a = oracle::random_skew_matrix(
              random_n, opt.seed + static_cast<std::uint64_t>(i),
              {9, 3, i % 2 ? 25 : 0});
          auto rep = verify_roundtrips(wick_coordinates(a), strength);
          if (!rep.ok()) ++failures;
          ++done;
        }
      });
    }
    for (auto& t : workers) t.join();
    Json payload{{"ok", failures.load() == 0},
                 {"instances", done.load()},
                 {"failures", failures.load()}};
    emit(opt, payload,
         "instances=" + std::to_string(done.load()) +
             " failures=" + std::to_string(failures.load()));
    return failures.load() == 0 ? kExitPass : kExitFail;
  }

  Json doc = read_json_file(file);
  std::string tract_name = doc.at("tract").get<std::string>();
  auto rep = std::visit(
      [&](const auto& tract) { return roundtrip_any(tract, doc, strength); },
      tract_from_name(tract_name));
  emit(opt, report_json(rep),
       std::string(rep.ok() ? "ok" : "FAIL") + " composition=" +
           (rep.composition_identity ? "ok" : "fail") + " cycle=" +
           (rep.cycle_identity ? "ok" : "fail"));
  return rep.ok() ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// envelope-check

// Experiment stub for the enveloping-matroid existence question: reports
// which GP relations reach outside the restricted domain and how many
// missing values they would need. It never claims an answer either way.
int run_envelope_beyond(const std::string& file, const Options& opt) {
  Json doc = read_json_file(file);
  auto parsed = function_doc_from_json(doc);
  const int n = parsed.n;
  long beyond_relations = 0;
  std::unordered_set<Mask> missing_subsets;
  for (Mask sb = 0; sb < (Mask{1} << (2 * n)); ++sb) {
    if (std::popcount(sb) != n + 1) continue;
    SignedSubset s(n, sb);
    for (Mask pb = 0; pb < (Mask{1} << (2 * n)); ++pb) {
      if (std::popcount(pb) != n - 1) continue;
      SignedSubset sp(n, pb);
      if (gp_relation_applicable(s, sp)) continue;
      ++beyond_relations;
      Mask moving = s.bits() & ~sp.bits();
      for (int r = 0; r < 2 * n; ++r) {
        if (!(moving & (Mask{1} << r))) continue;
        Element e = Element::from_rank(r);
        for (const auto& arg : {s.without(e), sp.with(e)})
          if (!arg.is_transversal() && !arg.is_almost_transversal())
            missing_subsets.insert(arg.bits());
      }
    }
  }
  Json sample = Json::array();
  std::vector<Mask> sorted(missing_subsets.begin(), missing_subsets.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size() && i < 8; ++i)
    sample.push_back(subset_to_json(SignedSubset(n, sorted[i])));
  Json payload{{"experimental", true},
               {"n", n},
               {"relations_beyond_domain", beyond_relations},
               {"missing_value_subsets", sorted.size()},
               {"sample_missing_subsets", sample}};
  emit(opt, payload,
       "experimental: " + std::to_string(beyond_relations) +
           " GP relations reach outside the restricted domain and would "
           "need values on " +
           std::to_string(sorted.size()) +
           " further n-subsets; no existence claim is made");
  return kExitPass;
}

int run_envelope_check(const std::string& file, const Options& opt) {
  Json doc = read_json_file(file);
  auto parsed = function_doc_from_json(doc);
  return std::visit(
      [&](const auto& tract) {
        auto phi = rgp_from_doc(tract, parsed);
        auto report = check_enveloping_relations(phi);
        Json cases = Json::object();
        std::string text = report.ok ? "ok" : "FAIL";
        for (int c = 1; c <= 7; ++c) {
          auto count = report.case_counts[static_cast<std::size_t>(c)];
          cases["case" + std::to_string(c)] = count;
          text += " case" + std::to_string(c) + "=" + std::to_string(count);
        }
        Json payload{{"ok", report.ok},
                     {"cases", cases},
                     {"not_applicable", report.not_applicable}};
        text += " not_applicable=" + std::to_string(report.not_applicable);
        if (!report.ok) {
          payload["witness"] = subset_pair_json(report.witness->first,
                                                report.witness->second);
          payload["witness_case"] = static_cast<int>(report.witness_case);
          payload["detail"] = report.detail;
          text += " first_failure=case" +
                  std::to_string(static_cast<int>(report.witness_case));
        }
        emit(opt, payload, text);
        return report.ok ? kExitPass : kExitFail;
      },
      tract_from_name(parsed.tract));
}

// ---------------------------------------------------------------------------
// oracle

int run_oracle_enumerate(int n, const Options& opt) {
  auto ms = oracle::enumerate_orthogonal_matroids(n);
  if (opt.output == "json") {
    Json arr = Json::array();
    for (const auto& m : ms) arr.push_back(matroid_to_json(m));
    std::cout << Json{{"n", n}, {"count", ms.size()}, {"matroids", arr}}.dump(2)
              << "\n";
  } else {
    std::cout << "count=" << ms.size() << "\n";
    for (const auto& m : ms) {
      std::string line;
      for (const auto& b : m.bases()) line += b.to_string();
      std::cout << line << "\n";
    }
  }
  return kExitPass;
}

int run_oracle_random_matrix(int n, const Options& opt, int zero_density) {
  auto a = oracle::random_skew_matrix(n, opt.seed, {9, 3, zero_density});
  std::cout << skew_matrix_to_json(a).dump(2) << "\n";
  return kExitPass;
}

// ---------------------------------------------------------------------------
// search (experimental)

int run_search(int n, int samples, const Options& opt) {
  // Hunt for a weak-but-not-strong Wick function over the sign hyperfield.
  // EXPERIMENTAL: a finding would settle the question locally; absence of
  // findings proves nothing.
  SignHyperfield sign;
  Rng rng(opt.seed);
  auto matroids = oracle::enumerate_orthogonal_matroids(std::min(n, 3));
  long found = 0;
  Json findings = Json::array();
  for (int trial = 0; trial < samples; ++trial) {
    const auto& m = matroids[rng.below(matroids.size())];
    WickFunction<SignHyperfield> psi(sign, m.n());
    for (const auto& b : m.bases())
      psi.set_value(b, rng.chance(1, 2) ? std::int8_t{1} : std::int8_t{-1});
    if (check_wick(psi, Strength::weak).ok &&
        !check_wick(psi, Strength::strong).ok) {
      ++found;
      if (findings.size() < 5) findings.push_back(wick_to_json(psi));
    }
  }
  Json payload{{"experimental", true},
               {"samples", samples},
               {"findings", found},
               {"examples", findings}};
  emit(opt, payload,
       "experimental: sampled " + std::to_string(samples) + ", found " +
           std::to_string(found) +
           " weak-not-strong instances (absence proves nothing)");
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthogonal matroids over tracts"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--output", opt.output, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--strength", opt.strength, "axiom strength")
      ->check(CLI::IsMember({"strong", "weak"}));
  app.add_option("--seed", opt.seed, "seed for all randomness");
  app.add_option("--jobs", opt.jobs, "worker threads for batch commands");

  std::string verify_kind, verify_target;
  auto* verify = app.add_subcommand("verify", "check axioms of an object");
  verify->add_option("kind", verify_kind,
                     "wick|rgp|signature|matroid|antisymmetric|tract")
      ->required();
  verify->add_option("target", verify_target, "JSON file or tract name")
      ->required();

  std::string convert_from, convert_to, convert_file = "-";
  auto* convert = app.add_subcommand("convert", "apply a cryptomorphism map");
  convert->add_option("--from", convert_from, "wick|rgp|signature")
      ->required();
  convert->add_option("--to", convert_to, "rgp|signature|wick")->required();
  convert->add_option("file", convert_file, "input JSON (default stdin)");

  std::string realize_file, realize_emit = "wick", realize_twist,
              realize_tract = "Q";
  auto* realize =
      app.add_subcommand("realize", "evaluate a skew matrix realization");
  realize->add_option("file", realize_file, "matrix JSON")->required();
  realize->add_option("--emit", realize_emit, "wick|rgp|signature|matroid");
  realize->add_option("--twist", realize_twist,
                      "comma-separated indices of [n]");
  realize->add_option("--tract", realize_tract, "field tract (Q or Fp:p)");

  std::string circuits_file;
  auto* circuits =
      app.add_subcommand("circuits", "list the circuits of a matroid");
  circuits->add_option("file", circuits_file, "matroid JSON")->required();

  std::string roundtrip_file = "-";
  int roundtrip_random = 0, roundtrip_n = 3;
  auto* roundtrip =
      app.add_subcommand("roundtrip", "verify the cryptomorphism cycle");
  roundtrip->add_option("file", roundtrip_file, "object JSON");
  roundtrip->add_option("--random", roundtrip_random,
                        "verify this many random realizable instances");
  roundtrip->add_option("--n", roundtrip_n, "ground size for --random");

  std::string envelope_file;
  bool envelope_beyond = false;
  auto* envelope = app.add_subcommand(
      "envelope-check", "check GP relations supported on the rGP domain");
  envelope->add_option("file", envelope_file, "rgp JSON")->required();
  envelope->add_flag("--beyond", envelope_beyond,
                     "experimental: report relations outside the domain "
                     "instead of checking");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force generators");
  oracle_cmd->require_subcommand(1);
  int oracle_n = 3;
  auto* oracle_enum = oracle_cmd->add_subcommand(
      "enumerate", "all orthogonal matroids at small n");
  oracle_enum->add_option("--n", oracle_n, "ground size")->required();
  int matrix_n = 4, matrix_zero_density = 0;
  auto* oracle_matrix =
      oracle_cmd->add_subcommand("random-matrix", "seeded random skew matrix");
  oracle_matrix->add_option("--n", matrix_n, "matrix size")->required();
  oracle_matrix->add_option("--zero-density", matrix_zero_density,
                            "percent chance of a zero entry");

  int search_n = 3, search_samples = 1000;
  auto* search = app.add_subcommand(
      "search", "experimental: hunt weak-not-strong sign instances");
  search->add_option("--n", search_n, "ground size (capped at 3)");
  search->add_option("--samples", search_samples, "number of samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(verify_kind, verify_target, opt);
    if (convert->parsed())
      return run_convert(convert_from, convert_to, convert_file, opt);
    if (realize->parsed())
      return run_realize(realize_file, realize_emit, realize_twist,
                         realize_tract);
    if (circuits->parsed()) return run_circuits(circuits_file, opt);
    if (roundtrip->parsed())
      return run_roundtrip(roundtrip_file, roundtrip_random, roundtrip_n, opt);
    if (envelope->parsed())
      return envelope_beyond ? run_envelope_beyond(envelope_file, opt)
                             : run_envelope_check(envelope_file, opt);
    if (oracle_cmd->parsed()) {
      if (oracle_enum->parsed()) return run_oracle_enumerate(oracle_n, opt);
      return run_oracle_random_matrix(matrix_n, opt, matrix_zero_density);
    }
    if (search->parsed()) return run_search(search_n, search_samples, opt);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kExitFail;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
