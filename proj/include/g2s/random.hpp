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

// Seeded pseudorandom instances with a fixed, portable bit stream.
//
// SplitMix64: each draw does
//     state += 0x9E3779B97F4A7C15
//     z = state
//     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//     return z ^ (z >> 31)
// with all arithmetic mod 2^64. Derived draws:
//     below(k)   = next() % k
//     coin()     = next() >> 63
//     uniform()  = (next() >> 11) * 2^-53, in [0, 1)

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "g2s/graph.hpp"
#include "g2s/linalg.hpp"

namespace g2s {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t k) { return next() % k; }
  bool coin() { return (next() >> 63) != 0; }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

/// n drawn uniformly from [min_order, max_order], then every pair u < v in
/// lexicographic order is kept on coin().
inline Graph random_graph(
    SplitMix64& rng, std::size_t min_order = 2, std::size_t max_order = 6) {
  const std::size_t n = min_order + rng.below(max_order - min_order + 1);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.coin()) edges.push_back({u, v, {}});
    }
  }
  return Graph(n, std::move(edges));
}

/// As random_graph, over ordered pairs (u, v), u != v, row by row.
inline Graph random_directed_graph(
    SplitMix64& rng, std::size_t min_order = 2, std::size_t max_order = 6) {
  const std::size_t n = min_order + rng.below(max_order - min_order + 1);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && rng.coin()) edges.push_back({u, v, {}});
    }
  }
  return Graph(n, std::move(edges), true);
}

/// Fisher-Yates from the top: for i = n-1 .. 1 swap image[i] with
/// image[below(i + 1)].
inline Permutation random_permutation(SplitMix64& rng, std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  for (std::size_t i = n; i-- > 1;) std::swap(image[i], image[rng.below(i + 1)]);
  return Permutation(std::move(image));
}

/// Real and imaginary parts uniform in [-1, 1).
inline Complex random_complex(SplitMix64& rng) {
  const double re = rng.uniform(-1.0, 1.0);
  const double im = rng.uniform(-1.0, 1.0);
  return {re, im};
}

/// Unitary Q factor of a matrix with random_complex entries, with the
/// column phases fixed by the diagonal of R.
inline Matrix random_unitary(SplitMix64& rng, std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  Matrix a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) = random_complex(rng);
  }
  const Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ() * identity(d);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

}  // namespace g2s
