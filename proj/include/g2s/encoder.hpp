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

// Builds |G> = prod_{(x,y) in E} U(x,y) |psi>^{(x)n} from an encoding triplet
// and checks the separability, isomorphism and edge-operator axioms.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include "g2s/edge_operators.hpp"
#include "g2s/graph.hpp"
#include "g2s/linalg.hpp"
#include "g2s/report.hpp"

namespace g2s {

enum class Mode { monolithic, composite };

/// |psi> for a family when none is given: |0> per port for QRN_V, |+>_d
/// otherwise.
inline Vector default_initial_state(const FamilyParams& family) {
  if (family_of(family) == Family::QRN_V) return basis_vector(2, 0);
  return plus_state(local_dim(family));
}

/// The encoding triplet (vertex space, initial state, edge operator) plus
/// the optional extras used by weighted graphs and PEPS.
struct EncodingSpec {
  FamilyParams family;
  /// Per vertex in monolithic mode, per port in composite mode.
  Vector initial_state;
  /// Overrides keyed by edge position in Graph::edges(). Only U1, U2 and
  /// DIRECTED_V accept them, with T and M kept global.
  std::map<std::size_t, FamilyParams> per_edge_params;
  /// PEPS only: vertex degree g -> projector on (C^d)^{(x)g}.
  std::map<std::size_t, Matrix> vertex_projectors;

  static EncodingSpec with_defaults(FamilyParams family) {
    EncodingSpec spec;
    spec.initial_state = default_initial_state(family);
    spec.family = std::move(family);
    return spec;
  }

  Mode mode() const {
    return is_composite(family) ? Mode::composite : Mode::monolithic;
  }
  std::size_t local_dim() const { return g2s::local_dim(family); }
};

/// Throws InvalidParameters for a spec that cannot encode anything.
inline void validate_spec(const EncodingSpec& spec, double tol = kDefaultTolerance) {
  validate(spec.family, tol);
  if (static_cast<std::size_t>(spec.initial_state.size()) != spec.local_dim()) {
    throw InvalidParameters("initial state dimension does not match d");
  }
  if (std::abs(spec.initial_state.squaredNorm() - 1.0) > tol) {
    throw InvalidParameters("initial state is not normalized");
  }
  for (const auto& [edge, params] : spec.per_edge_params) {
    validate_override(spec.family, params, tol);
  }
  const std::size_t d = spec.local_dim();
  for (const auto& [degree, proj] : spec.vertex_projectors) {
    if (family_of(spec.family) != Family::PEPS_V) {
      throw InvalidParameters("vertex projectors are only used by PEPS_V");
    }
    std::size_t dim = 1;
    for (std::size_t k = 0; k < degree; ++k) dim *= d;
    if (proj.rows() != static_cast<Eigen::Index>(dim) ||
        proj.cols() != proj.rows()) {
      throw InvalidParameters(
          "vertex projector for degree " + std::to_string(degree) +
          " must be d^g x d^g");
    }
    if (!is_projector(proj, tol)) {
      throw InvalidParameters(
          "vertex projector for degree " + std::to_string(degree) +
          " is not a Hermitian idempotent");
    }
  }
}

struct EncodedState {
  StateVector state;
  /// Factors of each vertex: one in monolithic mode, one per port in
  /// composite mode (ports ordered by ascending neighbour).
  std::vector<std::vector<std::size_t>> vertex_factors;
  /// Composite mode: the neighbour each port points at, parallel to
  /// vertex_factors. Empty in monolithic mode.
  std::vector<std::vector<std::size_t>> port_neighbors;
  double norm_squared = 0.0;
  bool normalized = false;
  Family family = Family::CZ;
  Mode mode = Mode::monolithic;
};

struct EncodeOptions {
  bool normalize = false;
  /// Order in which edge positions are applied; lexicographic (u, v) when
  /// unset. Projectors always follow every body operator.
  std::optional<std::vector<std::size_t>> edge_order;
  /// Return an all-zero state instead of throwing ZeroNormError.
  bool allow_zero_norm = false;
  double tol = kDefaultTolerance;
};

namespace detail {

inline std::vector<std::size_t> application_order(
    const Graph& g, const EncodeOptions& opts) {
  const std::size_t m = g.edge_count();
  if (opts.edge_order) {
    const auto& order = *opts.edge_order;
    if (order.size() != m) {
      throw DimensionError("edge order must list every edge once");
    }
    check_factor_list(order, m);
    return order;
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto& edges = g.edges();
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return std::tie(edges[a].u, edges[a].v) < std::tie(edges[b].u, edges[b].v);
  });
  return order;
}

inline std::vector<EdgeAction> edge_actions(
    const EncodingSpec& spec, const Graph& g, double tol) {
  std::vector<EdgeAction> actions;
  actions.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto it = spec.per_edge_params.find(i);
    if (it != spec.per_edge_params.end()) {
      if (!g.edges()[i].weight.empty()) {
        throw InvalidParameters(
            "edge " + std::to_string(i) +
            " has both weight labels and a parameter override");
      }
      actions.push_back(edge_action(it->second, tol));
    } else {
      actions.push_back(
          edge_action(bind_weight(spec.family, g.edges()[i].weight), tol));
    }
  }
  for (const auto& [pos, params] : spec.per_edge_params) {
    if (pos >= g.edge_count()) {
      throw InvalidParameters("parameter override for a missing edge");
    }
  }
  return actions;
}

inline void check_multiplicity(const EncodingSpec& spec, const Graph& g) {
  if (g.max_multiplicity() > 1 && family_of(spec.family) != Family::CZD) {
    throw IncompatibleGraph(
        "parallel edges are only meaningful for the CZD family");
  }
}

inline void guard_zero(
    const StateVector& s, const EncodeOptions& opts, const std::string& what,
    std::vector<std::size_t> witness) {
  if (!opts.allow_zero_norm && s.is_zero()) {
    throw ZeroNormError(what + " annihilated the state", std::move(witness));
  }
}

inline EncodedState finish(
    StateVector state, std::vector<std::vector<std::size_t>> vertex_factors,
    std::vector<std::vector<std::size_t>> port_neighbors,
    const EncodingSpec& spec, const EncodeOptions& opts) {
  EncodedState out;
  out.norm_squared = state.norm_squared();
  out.normalized = opts.normalize && !state.is_zero();
  out.state = out.normalized ? state.normalized() : std::move(state);
  out.vertex_factors = std::move(vertex_factors);
  out.port_neighbors = std::move(port_neighbors);
  out.family = family_of(spec.family);
  out.mode = spec.mode();
  return out;
}

// One factor per vertex; edge (u, v) acts on factors (u, v) in that order.
inline EncodedState encode_monolithic(
    const EncodingSpec& spec, const Graph& g, const EncodeOptions& opts) {
  if (spec.mode() != Mode::monolithic) {
    throw IncompatibleGraph(
        std::string(family_name(family_of(spec.family))) +
        " needs composite vertex spaces; use encode_composite");
  }
  check_multiplicity(spec, g);
  const auto actions = edge_actions(spec, g, opts.tol);
  const auto order = application_order(g, opts);

  StateVector state = StateVector::product(
      std::vector<Vector>(g.order(), spec.initial_state));
  for (std::size_t i : order) {
    const Edge& e = g.edges()[i];
    state = apply_local(actions[i].body.matrix(), state, {e.u, e.v});
    if (!actions[i].body.is_unitary()) {
      guard_zero(state, opts, "edge operator", {e.u, e.v});
    }
  }
  for (std::size_t i : order) {
    if (!actions[i].edge_projector) continue;
    const Edge& e = g.edges()[i];
    state = apply_local(*actions[i].edge_projector, state, {e.u, e.v});
    guard_zero(state, opts, "edge projector", {e.u, e.v});
  }

  std::vector<std::vector<std::size_t>> factors(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) factors[v] = {v};
  return finish(std::move(state), std::move(factors), {}, spec, opts);
}

}  // namespace detail

/// Encodes an undirected graph with one qudit per vertex.
inline EncodedState encode(
    const EncodingSpec& spec, const Graph& g, const EncodeOptions& opts = {}) {
  validate_spec(spec, opts.tol);
  if (g.directed()) {
    throw IncompatibleGraph("encode expects an undirected graph");
  }
  if (family_of(spec.family) == Family::DIRECTED_V) {
    throw IncompatibleGraph(
        "DIRECTED_V is not symmetric; use encode_directed or symmetrize it");
  }
  return detail::encode_monolithic(spec, g, opts);
}

/// Encodes a directed graph: edge (x, y) applies V on (x, y), x first.
/// The operator must satisfy D2 and D3a-c.
inline EncodedState encode_directed(
    const EncodingSpec& spec, const Graph& g, const EncodeOptions& opts = {}) {
  validate_spec(spec, opts.tol);
  if (!g.directed()) {
    throw IncompatibleGraph("encode_directed expects a directed graph");
  }
  const OperatorMatrix v = edge_action(spec.family, opts.tol).body;
  for (Condition c :
       {Condition::D2, Condition::D3A, Condition::D3B, Condition::D3C}) {
    const auto report = check_condition(v, c, opts.tol);
    if (!report.pass) {
      throw PreconditionFailed(
          "directed edge operator violates " + report.name, report.name,
          report.residual);
    }
  }
  return detail::encode_monolithic(spec, g, opts);
}

/// Encodes with composite vertex spaces (PEPS_V, QRN_V). Vertex x holds one
/// port per neighbour (QRN_V: one per other vertex), ordered by ascending
/// neighbour; edge (x, y) acts on port(x->y), port(y->x). Projectors follow:
/// |Phi+><Phi+| per edge for QRN_V, the degree's vertex projector per vertex
/// for PEPS_V.
inline EncodedState encode_composite(
    const EncodingSpec& spec, const Graph& g, const EncodeOptions& opts = {}) {
  validate_spec(spec, opts.tol);
  if (spec.mode() != Mode::composite) {
    throw IncompatibleGraph("encode_composite needs PEPS_V or QRN_V");
  }
  if (g.directed()) {
    throw IncompatibleGraph("composite encoding expects an undirected graph");
  }
  if (g.max_multiplicity() > 1) {
    throw IncompatibleGraph("composite encoding needs a simple graph");
  }
  const bool qrn = family_of(spec.family) == Family::QRN_V;
  const std::size_t n = g.order();

  std::vector<std::vector<std::size_t>> neighbors(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (qrn) {
      for (std::size_t y = 0; y < n; ++y) {
        if (y != x) neighbors[x].push_back(y);
      }
    } else {
      neighbors[x] = g.neighbors(x);
    }
  }
  if (!qrn) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t deg = neighbors[x].size();
      if (deg > 0 && !spec.vertex_projectors.count(deg)) {
        throw InvalidParameters(
            "no vertex projector for degree " + std::to_string(deg));
      }
    }
  }

  std::vector<std::vector<std::size_t>> factors(n);
  std::size_t total = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t j = 0; j < neighbors[x].size(); ++j) {
      factors[x].push_back(total++);
    }
  }
  checked_dimension(std::vector<std::size_t>(total, spec.local_dim()));
  auto port = [&](std::size_t x, std::size_t y) {
    const auto& nb = neighbors[x];
    return factors[x][std::lower_bound(nb.begin(), nb.end(), y) - nb.begin()];
  };

  const auto actions = detail::edge_actions(spec, g, opts.tol);
  const auto order = detail::application_order(g, opts);
  StateVector state =
      StateVector::product(std::vector<Vector>(total, spec.initial_state));
  for (std::size_t i : order) {
    const Edge& e = g.edges()[i];
    state = apply_local(
        actions[i].body.matrix(), state, {port(e.u, e.v), port(e.v, e.u)});
  }
  if (qrn) {
    for (std::size_t i : order) {
      const Edge& e = g.edges()[i];
      state = apply_local(
          *actions[i].edge_projector, state, {port(e.u, e.v), port(e.v, e.u)});
      detail::guard_zero(state, opts, "edge projector", {e.u, e.v});
    }
  } else {
    for (std::size_t x = 0; x < n; ++x) {
      if (factors[x].empty()) continue;
      state = apply_local(
          spec.vertex_projectors.at(factors[x].size()), state, factors[x]);
      detail::guard_zero(state, opts, "vertex projector", {x});
    }
  }
  return detail::finish(
      std::move(state), std::move(factors), std::move(neighbors), spec, opts);
}

/// Dispatches on the spec's mode and the graph's directedness.
inline EncodedState encode_graph(
    const EncodingSpec& spec, const Graph& g, const EncodeOptions& opts = {}) {
  if (spec.mode() == Mode::composite) return encode_composite(spec, g, opts);
  if (g.directed()) return encode_directed(spec, g, opts);
  return encode(spec, g, opts);
}

// ---------------------------------------------------------------------------
// Axiom checks

/// |G1 + G2> = |G1> (x) |G2>.
struct SeparabilityInstance {
  Graph g1;
  Graph g2;
};

/// rho(P G P^-1) = D(P) rho(G) D(P)^dag.
struct IsomorphismInstance {
  Graph g;
  Permutation p;
};

/// |G + (x,y)> = U(x,y) |G>.
struct EdgeOperatorInstance {
  Graph g;
  Edge edge;
};

using AxiomInstance =
    std::variant<SeparabilityInstance, IsomorphismInstance, EdgeOperatorInstance>;

namespace detail {

// max_ij |a_i a_j^* - b_i b_j^*| without forming either outer product.
inline std::pair<double, std::vector<std::size_t>> outer_product_residual(
    const Vector& a, const Vector& b) {
  double worst = 0.0;
  std::vector<std::size_t> at{0, 0};
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < a.size(); ++j) {
      const double r = std::abs(a(i) * std::conj(a(j)) - b(i) * std::conj(b(j)));
      if (r > worst) {
        worst = r;
        at = {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
      }
    }
  }
  return {worst, at};
}

// Factor permutation realizing D(P) on an encoded state: vertex blocks move
// by p and, in composite mode, the port of x facing y moves to the port of
// p(x) facing p(y).
inline std::vector<std::size_t> factor_permutation(
    const EncodedState& from, const EncodedState& to, const Permutation& p) {
  std::vector<std::size_t> perm(from.state.factor_count(), 0);
  for (std::size_t x = 0; x < from.vertex_factors.size(); ++x) {
    const std::size_t px = p(x);
    if (from.mode == Mode::monolithic) {
      perm[from.vertex_factors[x][0]] = to.vertex_factors[px][0];
      continue;
    }
    const auto& targets = to.port_neighbors[px];
    for (std::size_t j = 0; j < from.port_neighbors[x].size(); ++j) {
      const std::size_t py = p(from.port_neighbors[x][j]);
      const auto it = std::find(targets.begin(), targets.end(), py);
      if (it == targets.end()) {
        throw IncompatibleGraph("permutation does not map ports onto ports");
      }
      perm[from.vertex_factors[x][j]] =
          to.vertex_factors[px][it - targets.begin()];
    }
  }
  return perm;
}

// Residuals are relative to the larger norm so that non-unitary families
// with large or tiny amplitudes are judged on the state, not its scale.
inline double scale_of(const Vector& a, const Vector& b) {
  const double s = std::max(a.norm(), b.norm());
  return s > 0 ? s : 1.0;
}

inline VerificationReport phase_report(
    const std::string& name, const StateVector& a, const StateVector& b,
    double tol) {
  if (a.dims() != b.dims()) {
    return make_report("axiom", name, std::numeric_limits<double>::infinity(),
                       tol, {});
  }
  const auto aligned = align_phase(a, b);
  return make_report(
      "axiom", name,
      aligned.distance / scale_of(a.amplitudes(), b.amplitudes()), tol,
      {aligned.worst_index});
}

}  // namespace detail

/// Checks one axiom instance. Projector-annihilated states are compared as
/// zero vectors rather than raised. Residuals are relative: phase distances
/// divided by the larger norm, density-matrix entries by its square.
inline VerificationReport verify_axiom(
    const EncodingSpec& spec, const AxiomInstance& instance,
    double tol = kDefaultTolerance) {
  EncodeOptions opts;
  opts.allow_zero_norm = true;
  opts.tol = tol;
  const bool qrn = family_of(spec.family) == Family::QRN_V;

  if (const auto* a1 = std::get_if<SeparabilityInstance>(&instance)) {
    if (qrn) {
      throw IncompatibleGraph(
          "A1 is undefined for QRN_V: its vertex space grows with the order");
    }
    const auto joint = encode_graph(spec, disjoint_union(a1->g1, a1->g2), opts);
    const auto left = encode_graph(spec, a1->g1, opts);
    const auto right = encode_graph(spec, a1->g2, opts);
    return detail::phase_report(
        "A1", joint.state, tensor(left.state, right.state), tol);
  }

  if (const auto* a2 = std::get_if<IsomorphismInstance>(&instance)) {
    const auto before = encode_graph(spec, a2->g, opts);
    const auto after = encode_graph(spec, apply_permutation(a2->g, a2->p), opts);
    const auto moved = permute_factors(
        before.state, detail::factor_permutation(before, after, a2->p));
    if (moved.dims() != after.state.dims()) {
      return make_report("axiom", "A2", std::numeric_limits<double>::infinity(),
                         tol, {});
    }
    auto [residual, witness] = detail::outer_product_residual(
        after.state.amplitudes(), moved.amplitudes());
    const double scale =
        detail::scale_of(after.state.amplitudes(), moved.amplitudes());
    auto report = make_report("axiom", "A2", residual / (scale * scale), tol,
                              std::move(witness));
    if (spec.mode() == Mode::composite) report.note = "experimental";
    return report;
  }

  const auto& a3 = std::get<EdgeOperatorInstance>(instance);
  if (spec.mode() == Mode::composite) {
    throw IncompatibleGraph(
        "A3 needs a fixed vertex space; composite ports change with the edge");
  }
  std::vector<Edge> edges = a3.g.edges();
  edges.push_back(a3.edge);
  const Graph grown(a3.g.order(), std::move(edges), a3.g.directed());
  const Edge& added = grown.edges().back();

  const auto base = encode_graph(spec, a3.g, opts);
  const auto target = encode_graph(spec, grown, opts);
  const auto action = edge_action(
      spec.per_edge_params.count(grown.edge_count() - 1)
          ? spec.per_edge_params.at(grown.edge_count() - 1)
          : bind_weight(spec.family, added.weight),
      tol);
  const auto stepped =
      apply_local(action.combined(), base.state, {added.u, added.v});
  return detail::phase_report("A3", target.state, stepped, tol);
}

/// For an automorphism p of g: max-entry norm of [rho, D(P)], relative to
/// |G>'s squared norm.
inline VerificationReport verify_automorphism(
    const EncodingSpec& spec, const Graph& g, const Permutation& p,
    double tol = kDefaultTolerance) {
  if (apply_permutation(g, p) != g) {
    throw InvalidParameters("permutation is not an automorphism of the graph");
  }
  EncodeOptions opts;
  opts.allow_zero_norm = true;
  opts.tol = tol;
  const auto es = encode_graph(spec, g, opts);
  const auto perm = detail::factor_permutation(es, es, p);
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = k;
  const Vector& s = es.state.amplitudes();
  const Vector ds = permute_factors(es.state, perm).amplitudes();
  const Vector dinv_s = permute_factors(es.state, inv).amplitudes();

  // [rho, D]_ij = s_i (D^dag s)_j^* - (D s)_i s_j^*
  double worst = 0.0;
  std::vector<std::size_t> at{0, 0};
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    for (Eigen::Index j = 0; j < s.size(); ++j) {
      const double r =
          std::abs(s(i) * std::conj(dinv_s(j)) - ds(i) * std::conj(s(j)));
      if (r > worst) {
        worst = r;
        at = {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
      }
    }
  }
  const double scale = detail::scale_of(s, s);
  return make_report("axiom", "automorphism", worst / (scale * scale), tol,
                     std::move(at));
}

}  // namespace g2s
