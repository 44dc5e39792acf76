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

// Finite graphs on dense vertex labels 0..n-1, the permutation action of the
// symmetric group on them, and brute-force isomorphism search.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "g2s/error.hpp"

namespace g2s {

/// Weight labels attached to an edge, e.g. {"alpha": 0.3}.
using EdgeWeight = std::map<std::string, double>;

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  EdgeWeight weight;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend bool operator<(const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v, a.weight) < std::tie(b.u, b.v, b.weight);
  }
};

/// A bijection on {0..n-1}; vertex `i` is sent to `image[i]`.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::size_t> image)
      : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t target : image_) {
      if (target >= image_.size() || seen[target]) {
        throw InvalidParameters("permutation image is not a bijection");
      }
      seen[target] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return Permutation(std::move(image));
  }

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_.at(i); }
  const std::vector<std::size_t>& image() const { return image_; }

  Permutation inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// (p * q)(i) = p(q(i)): q acts first.
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) {
      throw DimensionError("cannot compose permutations of different length");
    }
    std::vector<std::size_t> image(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) image[i] = p(q(i));
    return Permutation(std::move(image));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// Graph with `order()` vertices and an edge multiset.
///
/// Undirected edges are stored with u < v. Parallel edges are kept; whether
/// they are meaningful is decided by the encoding family that consumes the
/// graph. Instances are immutable.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t order, std::vector<Edge> edges, bool directed = false)
      : order_(order), edges_(std::move(edges)), directed_(directed) {
    for (Edge& e : edges_) {
      if (e.u >= order_ || e.v >= order_) {
        throw DimensionError(
            "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
            ") out of range for graph of order " + std::to_string(order_));
      }
      if (e.u == e.v) {
        throw InvalidParameters(
            "loop edge at vertex " + std::to_string(e.u));
      }
      if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
    }
  }

  static Graph empty(std::size_t n) { return Graph(n, {}); }

  static Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) edges.push_back({u, v, {}});
    }
    return Graph(n, std::move(edges));
  }

  static Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, {}});
    return Graph(n, std::move(edges));
  }

  static Graph cycle(std::size_t n) {
    Graph p = path(n);
    std::vector<Edge> edges = p.edges();
    if (n > 2) edges.push_back({0, n - 1, {}});
    return Graph(n, std::move(edges));
  }

  /// Star with centre 0 and n-1 leaves.
  static Graph star(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) edges.push_back({0, v, {}});
    return Graph(n, std::move(edges));
  }

  /// rows x cols grid; vertex (r, c) has label r * cols + c.
  static Graph grid(std::size_t rows, std::size_t cols) {
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        const std::size_t v = r * cols + c;
        if (c + 1 < cols) edges.push_back({v, v + 1, {}});
        if (r + 1 < rows) edges.push_back({v, v + cols, {}});
      }
    }
    return Graph(rows * cols, std::move(edges));
  }

  std::size_t order() const { return order_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool directed() const { return directed_; }

  /// Number of incident edge ends (in + out for directed graphs).
  std::size_t degree(std::size_t v) const {
    std::size_t deg = 0;
    for (const Edge& e : edges_) deg += (e.u == v) + (e.v == v);
    return deg;
  }

  /// Distinct neighbours of `v` in ascending order, ignoring direction.
  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const Edge& e : edges_) {
      if (e.u == v) out.push_back(e.v);
      if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Edge counts between every ordered pair. Symmetric when undirected.
  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> a(
        order_, std::vector<std::size_t>(order_, 0));
    for (const Edge& e : edges_) {
      ++a[e.u][e.v];
      if (!directed_) ++a[e.v][e.u];
    }
    return a;
  }

  /// Largest number of parallel edges between any pair (0 for no edges).
  std::size_t max_multiplicity() const {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> count;
    std::size_t best = 0;
    for (const Edge& e : edges_) {
      best = std::max(best, ++count[{e.u, e.v}]);
    }
    return best;
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    if (!directed_ && u > v) std::swap(u, v);
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
      return e.u == u && e.v == v;
    });
  }

  /// Edges sorted lexicographically by (u, v, weight).
  std::vector<Edge> sorted_edges() const {
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
  }

  /// Same order, same directedness and the same edge multiset.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.directed_ == b.directed_ &&
           a.sorted_edges() == b.sorted_edges();
  }

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  bool directed_ = false;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline std::optional<std::size_t> parse_index(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

inline std::optional<double> parse_real(std::string_view s) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace detail

/// Parses the line-oriented graph format:
///
///     graph <n> [directed]
///     e <u> <v> [key=value ...]
///
/// `#` starts a comment; blank lines are ignored. Edges keep file order.
inline Graph parse_graph(std::string_view text) {
  std::optional<std::size_t> order;
  bool directed = false;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;

    if (!order) {
      if (tokens[0] != "graph" || tokens.size() < 2 || tokens.size() > 3) {
        throw ParseError(line_no, "expected header 'graph <n> [directed]'");
      }
      order = detail::parse_index(tokens[1]);
      if (!order) throw ParseError(line_no, "invalid vertex count");
      if (tokens.size() == 3) {
        if (tokens[2] != "directed") {
          throw ParseError(line_no, "unknown graph attribute '" +
                                        std::string(tokens[2]) + "'");
        }
        directed = true;
      }
      continue;
    }

    if (tokens[0] != "e" || tokens.size() < 3) {
      throw ParseError(line_no, "expected edge line 'e <u> <v> [key=value]'");
    }
    const auto u = detail::parse_index(tokens[1]);
    const auto v = detail::parse_index(tokens[2]);
    if (!u || !v) throw ParseError(line_no, "invalid vertex index");
    if (*u >= *order || *v >= *order) {
      throw ParseError(line_no, "vertex index out of range");
    }
    if (*u == *v) throw ParseError(line_no, "loop edge");
    Edge edge{*u, *v, {}};
    for (std::size_t k = 3; k < tokens.size(); ++k) {
      const auto eq = tokens[k].find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw ParseError(line_no, "expected key=value weight label");
      }
      const auto value = detail::parse_real(tokens[k].substr(eq + 1));
      if (!value) throw ParseError(line_no, "weight value is not a real");
      const std::string key(tokens[k].substr(0, eq));
      if (!edge.weight.emplace(key, *value).second) {
        throw ParseError(line_no, "duplicate weight key '" + key + "'");
      }
    }
    edges.push_back(std::move(edge));
  }
  if (!order) throw ParseError(0, "missing 'graph' header");
  return Graph(*order, std::move(edges), directed);
}

/// G1 followed by G2 with G2's vertices shifted by |G1|.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  if (g1.directed() != g2.directed()) {
    throw IncompatibleGraph("disjoint union of directed and undirected graph");
  }
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) {
    edges.push_back({e.u + g1.order(), e.v + g1.order(), e.weight});
  }
  return Graph(g1.order() + g2.order(), std::move(edges), g1.directed());
}

/// Relabels every edge (u, v) to (p(u), p(v)); edge positions are kept.
inline Graph apply_permutation(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) {
    throw DimensionError("permutation length does not match graph order");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({p(e.u), p(e.v), e.weight});
  return Graph(g.order(), std::move(edges), g.directed());
}

/// Number of edges with exactly one endpoint in `subset`, with multiplicity.
inline std::size_t boundary_edges(
    const Graph& g, const std::vector<std::size_t>& subset) {
  std::vector<bool> inside(g.order(), false);
  for (std::size_t v : subset) {
    if (v >= g.order()) throw DimensionError("subset vertex out of range");
    inside[v] = true;
  }
  std::size_t crossing = 0;
  for (const Edge& e : g.edges()) crossing += inside[e.u] != inside[e.v];
  return crossing;
}

/// Vertices of `g` not in `subset`, ascending.
inline std::vector<std::size_t> complement(
    const Graph& g, const std::vector<std::size_t>& subset) {
  std::vector<bool> inside(g.order(), false);
  for (std::size_t v : subset) {
    if (v >= g.order()) throw DimensionError("subset vertex out of range");
    inside[v] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!inside[v]) out.push_back(v);
  }
  return out;
}

inline constexpr std::size_t kMaxIsomorphismOrder = 10;

namespace detail {

// Backtracking over S_n. Candidates for p(v) must match in- and out-degree
// and agree on edge counts with every vertex already placed; the full
// multiset comparison (weights included) happens at the leaves.
inline void search_isomorphisms(
    const Graph& g1, const Graph& g2,
    const std::function<bool(const Permutation&)>& visit) {
  const std::size_t n = g1.order();
  if (n > kMaxIsomorphismOrder) {
    throw CapacityError(
        "brute-force isomorphism is capped at " +
        std::to_string(kMaxIsomorphismOrder) + " vertices");
  }
  if (g2.order() != n || g1.directed() != g2.directed() ||
      g1.edge_count() != g2.edge_count()) {
    return;
  }
  const auto a1 = g1.adjacency();
  const auto a2 = g2.adjacency();
  auto degrees = [n](const std::vector<std::vector<std::size_t>>& a) {
    std::vector<std::pair<std::size_t, std::size_t>> d(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i].first += a[i][j];
        d[j].second += a[i][j];
      }
    }
    return d;
  };
  const auto d1 = degrees(a1);
  const auto d2 = degrees(a2);
  {
    auto s1 = d1;
    auto s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return;
  }
  const auto target = g2.sorted_edges();

  std::vector<std::size_t> image(n, 0);
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(std::size_t)> place = [&](std::size_t v) {
    if (stop) return;
    if (v == n) {
      Permutation p(image);
      if (apply_permutation(g1, p).sorted_edges() == target) {
        stop = !visit(p);
      }
      return;
    }
    for (std::size_t t = 0; t < n && !stop; ++t) {
      if (used[t] || d1[v] != d2[t]) continue;
      bool ok = true;
      for (std::size_t w = 0; w < v && ok; ++w) {
        ok = a1[v][w] == a2[t][image[w]] && a1[w][v] == a2[image[w]][t];
      }
      if (!ok) continue;
      used[t] = true;
      image[v] = t;
      place(v + 1);
      used[t] = false;
    }
  };
  place(0);
}

}  // namespace detail

/// Some permutation p with apply_permutation(g1, p) == g2, if one exists.
/// Throws CapacityError above kMaxIsomorphismOrder vertices.
inline std::optional<Permutation> find_isomorphism(
    const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order()) {
    throw DimensionError("isomorphism requires graphs of equal order");
  }
  std::optional<Permutation> found;
  detail::search_isomorphisms(g1, g2, [&](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

/// Every automorphism of `g`, in lexicographic order of their images.
inline std::vector<Permutation> automorphisms(const Graph& g) {
  std::vector<Permutation> out;
  detail::search_isomorphisms(g, g, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace g2s
