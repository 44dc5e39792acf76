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

// Reference computations used only by the test suites. Each one takes the
// slow, explicit route so it stays independent of the library code it checks.

#include <algorithm>
#include <numeric>
#include <vector>

#include "g2s/graph.hpp"
#include "g2s/linalg.hpp"

namespace g2s::oracle {

/// Rank over GF(2) by Gaussian elimination on 0/1 rows.
inline std::size_t gf2_rank(std::vector<std::vector<int>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c] != 0) {
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

/// GF(2) rank of the adjacency block between `subset` and its complement.
inline std::size_t cut_rank(const Graph& g, const std::vector<std::size_t>& subset) {
  std::vector<bool> inside(g.order(), false);
  for (auto v : subset) inside[v] = true;
  std::vector<std::size_t> outside;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!inside[v]) outside.push_back(v);
  }
  const auto adj = g.adjacency();
  std::vector<std::vector<int>> rows;
  for (auto a : subset) {
    std::vector<int> row;
    for (auto b : outside) row.push_back(static_cast<int>(adj[a][b] % 2));
    rows.push_back(row);
  }
  return gf2_rank(rows);
}

/// Digits of `index` in the row-major convention, factor 0 first.
inline std::vector<std::size_t> digits(
    std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = index % dims[k];
    index /= dims[k];
  }
  return out;
}

inline std::size_t index_of(
    const std::vector<std::size_t>& digit, const std::vector<std::size_t>& dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digit[k];
  return index;
}

/// The full-space matrix of `op` acting on `factors`, entry by entry.
inline Matrix embed(
    const Matrix& op, const std::vector<std::size_t>& dims,
    const std::vector<std::size_t>& factors) {
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  Matrix full = Matrix::Zero(total, total);
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      const auto di = digits(i, dims);
      const auto dj = digits(j, dims);
      bool rest_equal = true;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (std::find(factors.begin(), factors.end(), k) == factors.end() &&
            di[k] != dj[k]) {
          rest_equal = false;
        }
      }
      if (!rest_equal) continue;
      std::size_t li = 0;
      std::size_t lj = 0;
      for (auto f : factors) {
        li = li * dims[f] + di[f];
        lj = lj * dims[f] + dj[f];
      }
      full(i, j) = op(li, lj);
    }
  }
  return full;
}

/// Reduced density matrix from the full |s><s| by explicit index sums.
inline Matrix partial_trace(const StateVector& s, std::vector<std::size_t> keep) {
  std::sort(keep.begin(), keep.end());
  const auto& dims = s.dims();
  std::vector<std::size_t> kept_dims;
  for (auto k : keep) kept_dims.push_back(dims[k]);
  std::size_t kd = 1;
  for (auto d : kept_dims) kd *= d;
  const Matrix full = s.amplitudes() * s.amplitudes().adjoint();
  Matrix rho = Matrix::Zero(kd, kd);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      const auto di = digits(i, dims);
      const auto dj = digits(j, dims);
      bool traced_equal = true;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (!std::binary_search(keep.begin(), keep.end(), k) && di[k] != dj[k]) {
          traced_equal = false;
        }
      }
      if (!traced_equal) continue;
      std::vector<std::size_t> ki;
      std::vector<std::size_t> kj;
      for (auto k : keep) {
        ki.push_back(di[k]);
        kj.push_back(dj[k]);
      }
      rho(index_of(ki, kept_dims), index_of(kj, kept_dims)) += full(i, j);
    }
  }
  return rho;
}

/// Moves the digit of factor k to position p(k), basis state by basis state.
inline std::size_t permuted_index(
    std::size_t index, const Permutation& p, const std::vector<std::size_t>& dims) {
  const auto in = digits(index, dims);
  std::vector<std::size_t> out(in.size());
  for (std::size_t k = 0; k < in.size(); ++k) out[p(k)] = in[k];
  return index_of(out, dims);
}

/// Every permutation of S_n via std::next_permutation.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

/// Adjacency matrix with integer entries for A(G') = P A(G) P^-1 checks.
inline Eigen::MatrixXi adjacency_matrix(const Graph& g) {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(g.order(), g.order());
  const auto adj = g.adjacency();
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) a(i, j) = static_cast<int>(adj[i][j]);
  }
  return a;
}

/// P with P e_k = e_{p(k)}.
inline Eigen::MatrixXi permutation_matrix(const Permutation& p) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(p.size(), p.size());
  for (std::size_t k = 0; k < p.size(); ++k) m(p(k), k) = 1;
  return m;
}

}  // namespace g2s::oracle
