// Copyright 2026 The g2s Authors
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

// Command dispatch for the g2s tool. Reports go to `out` as JSON, a short
// human summary goes to `err`.
//
// Exit status: 0 when every check passes, 1 on a mathematical failure
// (failed condition or axiom, zero-norm encoding), 2 on usage or I/O errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "g2s/g2s.hpp"
#include "g2s/io.hpp"

namespace g2s::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Command { encode, check_operator, verify_axioms, entropy };

struct RunConfig {
  Command command = Command::encode;
  std::string graph_path;
  std::string spec_path;
  std::optional<std::vector<std::size_t>> subset;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  bool normalize = false;
  std::optional<std::string> out_path;
  std::optional<std::vector<std::string>> conditions;
  double tolerance = kDefaultTolerance;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty item in list");
    items.push_back(item.substr(first, last - first + 1));
  }
  if (items.empty()) throw UsageError("empty list");
  return items;
}

inline std::vector<std::size_t> parse_subset(const std::string& list) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(list)) {
    const auto v = detail::parse_index(item);
    if (!v) throw UsageError("subset entry '" + item + "' is not a vertex index");
    out.push_back(*v);
  }
  return out;
}

namespace detail {

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline int run_encode(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = parse_graph(read_file(cfg.graph_path));
  const EncodingSpec spec = parse_encoding_spec(read_file(cfg.spec_path));
  EncodeOptions opts;
  opts.normalize = cfg.normalize;
  opts.tol = cfg.tolerance;
  const EncodedState es = encode_graph(spec, g, opts);
  const std::string dump = format_state_dump(es.state);
  if (cfg.out_path) {
    std::ofstream file(*cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + *cfg.out_path + "'");
    file << dump;
    json j;
    j["command"] = "encode";
    j["out"] = *cfg.out_path;
    j["factors"] = es.state.factor_count();
    j["norm_squared"] = es.norm_squared;
    j["normalized"] = es.normalized;
    emit(out, j);
  } else {
    out << dump;
  }
  err << "encoded " << g.order() << " vertices into "
      << es.state.factor_count() << " factors, norm^2 = " << es.norm_squared
      << "\n";
  return kExitOk;
}

inline int run_check_operator(
    const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const EncodingSpec spec = parse_encoding_spec(read_file(cfg.spec_path));
  std::vector<Condition> conditions;
  if (cfg.conditions) {
    for (const auto& name : *cfg.conditions) {
      const auto c = condition_from_name(name);
      if (!c) throw UsageError("unknown condition '" + name + "'");
      conditions.push_back(*c);
    }
  } else {
    conditions = default_conditions(spec.family);
  }
  const OperatorMatrix op = make_operator(spec.family, cfg.tolerance);
  json reports = json::array();
  bool pass = true;
  for (Condition c : conditions) {
    const auto r = check_condition(op, c, cfg.tolerance);
    pass = pass && r.pass;
    reports.push_back(to_json(r));
    err << r.name << ": residual " << r.residual << (r.pass ? " pass" : " FAIL")
        << "\n";
  }
  json j;
  j["command"] = "check-operator";
  j["family"] = family_name(family_of(spec.family));
  j["is_unitary"] = op.is_unitary();
  j["is_projector"] = op.is_projector();
  j["is_diagonal"] = op.is_diagonal();
  j["reports"] = std::move(reports);
  j["pass"] = pass;
  emit(out, j);
  return pass ? kExitOk : kExitFailure;
}

// A graph with at least one vertex pair (ordered, when directed) that is
// not yet an edge, and one such pair drawn uniformly.
inline std::pair<Graph, Edge> graph_with_absent_edge(SplitMix64& rng, bool directed) {
  for (;;) {
    Graph g = directed ? random_directed_graph(rng) : random_graph(rng);
    std::vector<Edge> absent;
    for (std::size_t u = 0; u < g.order(); ++u) {
      for (std::size_t v = directed ? 0 : u + 1; v < g.order(); ++v) {
        if (u != v && !g.has_edge(u, v)) absent.push_back({u, v, {}});
      }
    }
    if (!absent.empty()) {
      const Edge e = absent[rng.below(absent.size())];
      return {std::move(g), e};
    }
  }
}

inline int run_verify_axioms(
    const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const EncodingSpec spec = parse_encoding_spec(read_file(cfg.spec_path));
  if (spec.mode() == Mode::composite) {
    throw UsageError(
        "verify-axioms draws monolithic instances; composite families are "
        "checked through the library");
  }
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
  const bool directed = family_of(spec.family) == Family::DIRECTED_V;
  SplitMix64 rng(cfg.seed);
  auto draw = [&] {
    return directed ? random_directed_graph(rng) : random_graph(rng);
  };

  json reports = json::array();
  std::size_t failures = 0;
  auto record = [&](VerificationReport r, std::uint64_t trial) {
    if (!r.pass) ++failures;
    json j = to_json(r);
    j["trial"] = trial;
    reports.push_back(std::move(j));
  };
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    Graph g1 = draw();
    Graph g2 = draw();
    record(verify_axiom(spec, SeparabilityInstance{g1, g2}, cfg.tolerance), t);
    Graph g = draw();
    Permutation p = random_permutation(rng, g.order());
    record(verify_axiom(spec, IsomorphismInstance{g, p}, cfg.tolerance), t);
    auto [base, edge] = graph_with_absent_edge(rng, directed);
    record(verify_axiom(spec, EdgeOperatorInstance{base, edge}, cfg.tolerance), t);
  }
  json j;
  j["command"] = "verify-axioms";
  j["family"] = family_name(family_of(spec.family));
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["tolerance"] = cfg.tolerance;
  j["reports"] = std::move(reports);
  j["pass"] = failures == 0;
  emit(out, j);
  err << 3 * cfg.trials << " axiom checks, " << failures << " failed\n";
  return failures == 0 ? kExitOk : kExitFailure;
}

inline int run_entropy(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = parse_graph(read_file(cfg.graph_path));
  const EncodingSpec spec = parse_encoding_spec(read_file(cfg.spec_path));
  if (!cfg.subset) throw UsageError("entropy needs --subset");
  for (std::size_t v : *cfg.subset) {
    if (v >= g.order()) throw UsageError("subset vertex out of range");
  }
  EncodeOptions opts;
  opts.normalize = true;
  opts.tol = cfg.tolerance;
  const EncodedState es = encode_graph(spec, g, opts);
  const AreaLawReport report = area_law_report(es, g, *cfg.subset, cfg.tolerance);
  json j = to_json(report);
  j["command"] = "entropy";
  emit(out, j);
  err << "entropy " << report.entropy_bits << " bits across "
      << report.crossing << " crossing edges\n";
  return kExitOk;
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::encode: return detail::run_encode(cfg, out, err);
      case Command::check_operator: return detail::run_check_operator(cfg, out, err);
      case Command::verify_axioms: return detail::run_verify_axioms(cfg, out, err);
      case Command::entropy: return detail::run_entropy(cfg, out, err);
    }
  } catch (const ZeroNormError& e) {
    json j;
    j["error"] = "zero_norm";
    j["message"] = e.what();
    j["witness"] = e.witness();
    detail::emit(out, j);
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const PreconditionFailed& e) {
    json j;
    j["error"] = "precondition";
    j["message"] = e.what();
    j["condition"] = e.condition();
    j["residual"] = e.residual();
    detail::emit(out, j);
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace g2s::cli
