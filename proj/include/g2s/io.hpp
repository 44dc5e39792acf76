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

// JSON surface: operator spec files in, verification and area-law reports
// out. Complex numbers are [re, im] pairs (a bare number is read as real);
// matrices are arrays of rows.

#include <nlohmann/json.hpp>

#include <set>
#include <string>

#include "g2s/analysis.hpp"
#include "g2s/edge_operators.hpp"
#include "g2s/encoder.hpp"
#include "g2s/report.hpp"

namespace g2s {

using json = nlohmann::json;

namespace detail {

inline Complex complex_from_json(const json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError(0, what + ": expected a number or an [re, im] pair");
}

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Matrix matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ParseError(0, what + ": expected an array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols) {
      throw ParseError(0, what + ": ragged matrix");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(j[r][c], what);
    }
  }
  return m;
}

inline void check_keys(
    const json& params, std::initializer_list<const char*> allowed,
    std::string_view fam) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : params.items()) {
    if (!ok.count(key)) {
      throw ParseError(0, "unknown parameter '" + key + "' for family " +
                              std::string(fam));
    }
  }
}

inline std::size_t dim_from_json(const json& params, const char* key) {
  if (!params.contains(key)) return 2;
  if (!params[key].is_number_unsigned()) {
    throw ParseError(0, std::string(key) + " must be a positive integer");
  }
  return params[key].get<std::size_t>();
}

inline double real_from_json(const json& params, const char* key) {
  if (!params.contains(key)) return 0.0;
  if (!params[key].is_number()) {
    throw ParseError(0, std::string(key) + " must be a real number");
  }
  return params[key].get<double>();
}

inline FamilyParams params_from_json(Family fam, const json& params) {
  if (!params.is_object()) throw ParseError(0, "params must be an object");
  const auto name = family_name(fam);
  switch (fam) {
    case Family::CZ:
      check_keys(params, {}, name);
      return family::CZ{};
    case Family::CZD:
      check_keys(params, {"d"}, name);
      return family::CZD{dim_from_json(params, "d")};
    case Family::PARITY: {
      check_keys(params, {"parity"}, name);
      const std::string parity = params.value("parity", std::string("even"));
      if (parity != "even" && parity != "odd") {
        throw ParseError(0, "parity must be 'even' or 'odd'");
      }
      return family::Parity{parity == "even" ? family::ParityKind::even
                                             : family::ParityKind::odd};
    }
    case Family::U1: {
      check_keys(params, {"a", "b", "c"}, name);
      family::U1 p;
      if (params.contains("a")) p.a = complex_from_json(params["a"], "a");
      if (params.contains("b")) p.b = complex_from_json(params["b"], "b");
      if (params.contains("c")) p.c = complex_from_json(params["c"], "c");
      return p;
    }
    case Family::U2: {
      check_keys(params, {"a", "b", "c", "T", "T_form", "gamma", "alpha"}, name);
      family::U2 p;
      if (params.contains("a")) p.a = complex_from_json(params["a"], "a");
      if (params.contains("b")) p.b = complex_from_json(params["b"], "b");
      if (params.contains("c")) p.c = complex_from_json(params["c"], "c");
      if (params.contains("T") && params.contains("T_form")) {
        throw ParseError(0, "give either T or T_form, not both");
      }
      if (params.contains("T")) p.t = matrix_from_json(params["T"], "T");
      if (params.contains("T_form")) {
        const Complex gamma = params.contains("gamma")
            ? complex_from_json(params["gamma"], "gamma") : Complex{};
        const Complex alpha = params.contains("alpha")
            ? complex_from_json(params["alpha"], "alpha") : Complex{};
        const std::string form = params["T_form"].get<std::string>();
        if (form == "first") p.t = t_matrix_first(gamma, alpha);
        else if (form == "second") p.t = t_matrix_second(gamma, alpha);
        else throw ParseError(0, "T_form must be 'first' or 'second'");
      }
      return p;
    }
    case Family::PEPS_V:
      check_keys(params, {"d"}, name);
      return family::PepsV{dim_from_json(params, "d")};
    case Family::QRN_V:
      check_keys(params, {"p"}, name);
      return family::QrnV{real_from_json(params, "p")};
    case Family::DIRECTED_V: {
      check_keys(params, {"M", "alpha", "beta", "phi"}, name);
      family::DirectedV p;
      if (params.contains("M")) p.m = matrix_from_json(params["M"], "M");
      p.alpha = real_from_json(params, "alpha");
      p.beta = real_from_json(params, "beta");
      p.phi = real_from_json(params, "phi");
      return p;
    }
    case Family::EXPLICIT: {
      check_keys(params, {"d", "matrix"}, name);
      if (!params.contains("matrix")) {
        throw ParseError(0, "EXPLICIT needs a matrix");
      }
      return family::Explicit{
          dim_from_json(params, "d"), matrix_from_json(params["matrix"], "matrix")};
    }
  }
  throw ParseError(0, "unknown family");
}

}  // namespace detail

/// Reads an operator spec document:
///
///     {"family": "<tag>", "params": {...},
///      "initial_state": [[re, im], ...],            optional
///      "vertex_projectors": {"<g>": "identity" | matrix},   PEPS_V
///      "per_edge_params": {"<edge position>": {...}}}       U1, U2, DIRECTED_V
inline EncodingSpec parse_encoding_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("family") || !doc["family"].is_string()) {
    throw ParseError(0, "spec needs a string 'family'");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "family" && key != "params" && key != "initial_state" &&
        key != "vertex_projectors" && key != "per_edge_params") {
      throw ParseError(0, "unknown spec key '" + key + "'");
    }
  }
  const auto fam = family_from_name(doc["family"].get<std::string>());
  if (!fam) {
    throw ParseError(0, "unknown family '" + doc["family"].get<std::string>() + "'");
  }
  EncodingSpec spec = EncodingSpec::with_defaults(
      detail::params_from_json(*fam, doc.value("params", json::object())));

  if (doc.contains("initial_state")) {
    const json& st = doc["initial_state"];
    if (!st.is_array()) throw ParseError(0, "initial_state must be an array");
    spec.initial_state = Vector(static_cast<Eigen::Index>(st.size()));
    for (std::size_t i = 0; i < st.size(); ++i) {
      spec.initial_state(static_cast<Eigen::Index>(i)) =
          detail::complex_from_json(st[i], "initial_state");
    }
  }
  if (doc.contains("vertex_projectors")) {
    for (const auto& [key, value] : doc["vertex_projectors"].items()) {
      const auto degree = detail::parse_index(key);
      if (!degree) throw ParseError(0, "vertex projector keys are degrees");
      if (value.is_string() && value.get<std::string>() == "identity") {
        std::size_t dim = 1;
        for (std::size_t k = 0; k < *degree; ++k) dim *= spec.local_dim();
        spec.vertex_projectors[*degree] = identity(dim);
      } else {
        spec.vertex_projectors[*degree] =
            detail::matrix_from_json(value, "vertex projector");
      }
    }
  }
  if (doc.contains("per_edge_params")) {
    for (const auto& [key, value] : doc["per_edge_params"].items()) {
      const auto pos = detail::parse_index(key);
      if (!pos) throw ParseError(0, "per_edge_params keys are edge positions");
      spec.per_edge_params[*pos] = detail::params_from_json(*fam, value);
    }
  }
  validate_spec(spec);
  return spec;
}

inline json to_json(const VerificationReport& r) {
  json j;
  j[r.kind] = r.name;
  j["residual"] = r.residual;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["witness"] = r.witness.empty() ? json(nullptr) : json(r.witness);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline json to_json(const AreaLawReport& r) {
  json j;
  j["subset"] = r.subset;
  j["crossing"] = r.crossing;
  j["entropy_bits"] = r.entropy_bits;
  j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
  return j;
}

}  // namespace g2s
