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

// Entanglement diagnostics on encoded states.

#include <algorithm>
#include <optional>
#include <vector>

#include "g2s/encoder.hpp"

namespace g2s {

namespace detail {

inline std::vector<std::size_t> checked_subset(
    std::vector<std::size_t> subset, std::size_t order) {
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
    throw DimensionError("subset lists a vertex twice");
  }
  if (!subset.empty() && subset.back() >= order) {
    throw DimensionError("subset vertex out of range");
  }
  if (subset.empty() || subset.size() == order) {
    throw DimensionError("bipartition needs a non-empty proper vertex subset");
  }
  return subset;
}

}  // namespace detail

/// Entropy in bits of the reduced state on the factors of `subset`'s
/// vertices (all their ports in composite mode). Normalizes internally.
inline double bipartition_entropy(
    const EncodedState& es, const std::vector<std::size_t>& subset,
    double tol = kDefaultTolerance) {
  const auto vertices =
      detail::checked_subset(subset, es.vertex_factors.size());
  if (es.state.is_zero()) {
    throw ZeroNormError("entropy of the zero vector is undefined", {});
  }
  std::vector<std::size_t> inside;
  for (std::size_t v : vertices) {
    inside.insert(inside.end(), es.vertex_factors[v].begin(),
                  es.vertex_factors[v].end());
  }
  const std::size_t factors = es.state.factor_count();
  if (inside.empty() || inside.size() == factors) return 0.0;

  // Both reductions of a pure state share their spectrum; trace down to the
  // smaller one.
  std::vector<bool> in(factors, false);
  std::size_t inside_dim = 1;
  std::size_t outside_dim = 1;
  for (std::size_t f : inside) in[f] = true;
  std::vector<std::size_t> outside;
  for (std::size_t f = 0; f < factors; ++f) {
    (in[f] ? inside_dim : outside_dim) *= es.state.dims()[f];
    if (!in[f]) outside.push_back(f);
  }
  const StateVector psi = es.state.normalized();
  return von_neumann_entropy(
      partial_trace(psi, inside_dim <= outside_dim ? inside : outside), tol);
}

struct AreaLawReport {
  std::vector<std::size_t> subset;
  std::size_t crossing = 0;
  double entropy_bits = 0.0;
  /// entropy / crossing, present when crossing > 0.
  std::optional<double> ratio;
};

inline AreaLawReport area_law_report(
    const EncodedState& es, const Graph& g, std::vector<std::size_t> subset,
    double tol = kDefaultTolerance) {
  if (g.order() != es.vertex_factors.size()) {
    throw DimensionError("graph order does not match the encoded state");
  }
  AreaLawReport report;
  report.subset = detail::checked_subset(std::move(subset), g.order());
  report.crossing = boundary_edges(g, report.subset);
  report.entropy_bits = bipartition_entropy(es, report.subset, tol);
  if (report.crossing > 0) {
    report.ratio = report.entropy_bits / static_cast<double>(report.crossing);
  }
  return report;
}

/// Optimal probability of converting a two-qubit pure state into |Phi+> by
/// stochastic LOCC: min(1, 2 l1^2) for Schmidt coefficients l0 >= l1.
inline double slocc_conversion_probability(
    const StateVector& two_qubit_state, double tol = kDefaultTolerance) {
  if (two_qubit_state.dims() != std::vector<std::size_t>{2, 2}) {
    throw DimensionError("SLOCC conversion needs a two-qubit state");
  }
  if (std::abs(two_qubit_state.norm_squared() - 1.0) > tol) {
    throw InvalidParameters("SLOCC conversion needs a normalized state");
  }
  const Vector& a = two_qubit_state.amplitudes();
  Matrix coeffs(2, 2);
  coeffs << a(0), a(1), a(2), a(3);
  const Eigen::JacobiSVD<Matrix> svd(coeffs);
  const double smaller = svd.singularValues()(1);
  return std::min(1.0, 2.0 * smaller * smaller);
}

/// |K_a|G> - |G>| for every vertex a, K_a = X_a prod_{b in N(a)} Z_b, on
/// the normalized CZ graph state.
inline std::vector<double> stabilizer_residuals(
    const EncodedState& es, const Graph& g) {
  if (es.family != Family::CZ || es.mode != Mode::monolithic) {
    throw IncompatibleGraph("stabilizer residuals need a CZ graph state");
  }
  if (g.directed() || g.order() != es.vertex_factors.size()) {
    throw IncompatibleGraph("graph does not match the encoded state");
  }
  const StateVector psi = es.state.normalized();
  std::vector<double> residuals;
  for (std::size_t a = 0; a < g.order(); ++a) {
    StateVector k = apply_local(pauli::x(), psi, {a});
    for (const Edge& e : g.edges()) {
      if (e.u == a) k = apply_local(pauli::z(), k, {e.v});
      if (e.v == a) k = apply_local(pauli::z(), k, {e.u});
    }
    residuals.push_back((k.amplitudes() - psi.amplitudes()).norm());
  }
  return residuals;
}

}  // namespace g2s
