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

// Dense complex state vectors over tensor-product spaces.
//
// Index convention, shared by every module: factor 0 is the most significant
// digit of the row-major amplitude index. For dims (d0, ..., dk-1) the basis
// state |i0 ... ik-1> sits at index sum_j i_j * prod_{l>j} d_l.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "g2s/error.hpp"
#include "g2s/graph.hpp"

namespace g2s {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Residual tolerance used when callers do not pass one.
inline constexpr double kDefaultTolerance = 1e-10;
/// Eigenvalues at or below this are dropped from entropy sums.
inline constexpr double kEigenCutoff = 1e-12;
/// Amplitudes with modulus below this are left out of state dumps.
inline constexpr double kDumpThreshold = 1e-12;
/// Squared norms at or below this count as the zero vector.
inline constexpr double kZeroNormSquared = 1e-24;
inline constexpr std::size_t kDefaultMaxAmplitudes = std::size_t{1} << 22;

/// Largest number of amplitudes any state may hold. The G2S_MAX_AMPLITUDES
/// environment variable can lower the default, never raise it.
inline std::size_t max_amplitudes() {
  std::size_t cap = kDefaultMaxAmplitudes;
  if (const char* env = std::getenv("G2S_MAX_AMPLITUDES")) {
    if (auto value = detail::parse_index(env); value && *value > 0) {
      cap = std::min(cap, *value);
    }
  }
  return cap;
}

/// Product of `dims`, throwing CapacityError above max_amplitudes().
inline std::size_t checked_dimension(std::span<const std::size_t> dims) {
  const std::size_t cap = max_amplitudes();
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw DimensionError("tensor factor of dimension 0");
    if (total > cap / d) {
      throw CapacityError(
          "state exceeds the dense amplitude cap of " + std::to_string(cap));
    }
    total *= d;
  }
  return total;
}

class StateVector {
 public:
  StateVector() = default;

  StateVector(std::vector<std::size_t> dims, Vector amplitudes)
      : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    const std::size_t total = checked_dimension(dims_);
    if (static_cast<std::size_t>(amplitudes_.size()) != total) {
      throw DimensionError("amplitude count does not match factor dims");
    }
  }

  /// Computational basis state |index> over `dims`.
  static StateVector basis(std::vector<std::size_t> dims, std::size_t index) {
    const std::size_t total = checked_dimension(dims);
    if (index >= total) throw DimensionError("basis index out of range");
    Vector amps = Vector::Zero(static_cast<Eigen::Index>(total));
    amps(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(dims), std::move(amps));
  }

  /// |v0> (x) |v1> (x) ... for single-factor vectors.
  static StateVector product(const std::vector<Vector>& factors) {
    std::vector<std::size_t> dims;
    for (const Vector& f : factors) dims.push_back(f.size());
    checked_dimension(dims);
    Vector amps = Vector::Ones(1);
    for (const Vector& f : factors) {
      Vector next(amps.size() * f.size());
      for (Eigen::Index i = 0; i < amps.size(); ++i) {
        next.segment(i * f.size(), f.size()) = amps(i) * f;
      }
      amps = std::move(next);
    }
    return StateVector(std::move(dims), std::move(amps));
  }

  const std::vector<std::size_t>& dims() const { return dims_; }
  const Vector& amplitudes() const { return amplitudes_; }
  std::size_t factor_count() const { return dims_.size(); }
  std::size_t size() const { return amplitudes_.size(); }
  Complex operator[](std::size_t i) const {
    return amplitudes_(static_cast<Eigen::Index>(i));
  }

  double norm_squared() const { return amplitudes_.squaredNorm(); }
  bool is_zero() const { return norm_squared() <= kZeroNormSquared; }

  StateVector normalized() const {
    if (is_zero()) throw ZeroNormError("cannot normalize the zero vector", {});
    return StateVector(dims_, amplitudes_ / std::sqrt(norm_squared()));
  }

  StateVector scaled(Complex factor) const {
    return StateVector(dims_, amplitudes_ * factor);
  }

 private:
  std::vector<std::size_t> dims_;
  Vector amplitudes_;
};

/// |a> (x) |b>; b's factors follow a's.
inline StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<std::size_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  checked_dimension(dims);
  const auto bn = b.amplitudes().size();
  Vector amps(a.amplitudes().size() * bn);
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
    amps.segment(i * bn, bn) = a.amplitudes()(i) * b.amplitudes();
  }
  return StateVector(std::move(dims), std::move(amps));
}

class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
      throw DimensionError("density matrix must be square");
    }
  }

  std::size_t dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  Complex trace() const { return entries_.trace(); }

 private:
  Matrix entries_;
};

// ---------------------------------------------------------------------------
// Matrix helpers

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline Matrix commutator(const Matrix& a, const Matrix& b) {
  return a * b - b * a;
}

inline Matrix identity(std::size_t d) {
  return Matrix::Identity(static_cast<Eigen::Index>(d),
                          static_cast<Eigen::Index>(d));
}

/// Standard Kronecker product; a's indices are the most significant.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// S = sum_ij |ij><ji| on C^d (x) C^d.
inline Matrix swap_operator(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  Matrix s = Matrix::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) s(i * n + j, j * n + i) = 1.0;
  }
  return s;
}

inline bool is_hermitian(const Matrix& m, double tol = kDefaultTolerance) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

inline bool is_unitary(const Matrix& m, double tol = kDefaultTolerance) {
  return m.rows() == m.cols() &&
         max_abs(m.adjoint() * m - identity(m.rows())) <= tol;
}

inline bool is_projector(const Matrix& m, double tol = kDefaultTolerance) {
  return is_hermitian(m, tol) && max_abs(m * m - m) <= tol;
}

inline bool is_diagonal(const Matrix& m, double tol = kDefaultTolerance) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j && std::abs(m(i, j)) > tol) return false;
    }
  }
  return true;
}

namespace pauli {
inline Matrix x() { return (Matrix(2, 2) << 0, 1, 1, 0).finished(); }
inline Matrix y() {
  return (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
}
inline Matrix z() { return (Matrix(2, 2) << 1, 0, 0, -1).finished(); }
}  // namespace pauli

/// |+>_d = d^{-1/2} sum_i |i>.
inline Vector plus_state(std::size_t d) {
  return Vector::Constant(static_cast<Eigen::Index>(d),
                          1.0 / std::sqrt(static_cast<double>(d)));
}

inline Vector basis_vector(std::size_t d, std::size_t i) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return v;
}

// ---------------------------------------------------------------------------
// Tensor-factor operations

namespace detail {

inline std::vector<std::size_t> strides(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

inline void check_factor_list(
    std::span<const std::size_t> factors, std::size_t count) {
  std::vector<bool> seen(count, false);
  for (std::size_t f : factors) {
    if (f >= count) throw DimensionError("factor index out of range");
    if (seen[f]) throw DimensionError("repeated factor in factor list");
    seen[f] = true;
  }
}

}  // namespace detail

/// Applies `op` to the listed factors and the identity elsewhere. The first
/// listed factor is the most significant index of `op`.
inline StateVector apply_local(
    const Matrix& op, const StateVector& state,
    std::span<const std::size_t> factors) {
  const auto& dims = state.dims();
  detail::check_factor_list(factors, dims.size());
  std::size_t local = 1;
  for (std::size_t f : factors) local *= dims[f];
  if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != local) {
    throw DimensionError(
        "operator of size " + std::to_string(op.rows()) + "x" +
        std::to_string(op.cols()) + " does not act on " +
        std::to_string(local) + "-dimensional factors");
  }
  const auto stride = detail::strides(dims);

  // Offset of every local basis state inside the full index.
  std::vector<std::size_t> offset(local, 0);
  for (std::size_t j = 0; j < local; ++j) {
    std::size_t rem = j;
    for (std::size_t k = factors.size(); k-- > 0;) {
      const std::size_t d = dims[factors[k]];
      offset[j] += (rem % d) * stride[factors[k]];
      rem /= d;
    }
  }

  std::vector<bool> targeted(dims.size(), false);
  for (std::size_t f : factors) targeted[f] = true;
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (!targeted[k]) rest.push_back(k);
  }

  const Vector& in = state.amplitudes();
  Vector out = in;
  std::vector<std::size_t> counter(rest.size(), 0);
  std::vector<Complex> gathered(local);
  std::size_t base = 0;
  const std::size_t blocks = state.size() / local;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t j = 0; j < local; ++j) gathered[j] = in(base + offset[j]);
    for (std::size_t i = 0; i < local; ++i) {
      Complex acc = 0;
      for (std::size_t j = 0; j < local; ++j) {
        acc += op(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
               gathered[j];
      }
      out(base + offset[i]) = acc;
    }
    // Advance the mixed-radix counter over the untouched factors.
    for (std::size_t k = rest.size(); k-- > 0;) {
      const std::size_t f = rest[k];
      base += stride[f];
      if (++counter[k] < dims[f]) break;
      base -= counter[k] * stride[f];
      counter[k] = 0;
    }
  }
  return StateVector(dims, std::move(out));
}

inline StateVector apply_local(
    const Matrix& op, const StateVector& state,
    std::initializer_list<std::size_t> factors) {
  return apply_local(
      op, state, std::span<const std::size_t>(factors.begin(), factors.size()));
}

/// Moves factor k to position perm[k]; dims travel with their factors.
inline StateVector permute_factors(
    const StateVector& state, std::span<const std::size_t> perm) {
  const auto& dims = state.dims();
  if (perm.size() != dims.size()) {
    throw DimensionError("factor permutation length mismatch");
  }
  detail::check_factor_list(perm, dims.size());
  std::vector<std::size_t> new_dims(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) new_dims[perm[k]] = dims[k];
  const auto old_stride = detail::strides(dims);
  const auto new_stride = detail::strides(new_dims);
  Vector out(state.size());
  for (std::size_t idx = 0; idx < state.size(); ++idx) {
    std::size_t target = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      target += (idx / old_stride[k] % dims[k]) * new_stride[perm[k]];
    }
    out(target) = state[idx];
  }
  return StateVector(std::move(new_dims), std::move(out));
}

/// D(P) on n identical factors: D(P)|i_1..i_n> = |i_{p^-1(1)}..i_{p^-1(n)}>,
/// i.e. the content of factor k ends up at factor p(k). Satisfies
/// D(P1 * P2) = D(P1) D(P2).
inline Matrix permutation_operator(
    const Permutation& p, const std::vector<std::size_t>& dims) {
  if (p.size() != dims.size()) {
    throw DimensionError("permutation length does not match factor count");
  }
  for (std::size_t d : dims) {
    if (d != dims.front()) {
      throw DimensionError("permutation operator needs identical factors");
    }
  }
  const std::size_t total = checked_dimension(dims);
  const auto stride = detail::strides(dims);
  Matrix out = Matrix::Zero(total, total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t target = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      target += (idx / stride[k] % dims[k]) * stride[p(k)];
    }
    out(target, idx) = 1.0;
  }
  return out;
}

/// Reduced density matrix on `keep` (taken in ascending factor order).
/// Its trace equals the squared norm of `state`.
inline DensityMatrix partial_trace(
    const StateVector& state, std::vector<std::size_t> keep) {
  const auto& dims = state.dims();
  std::sort(keep.begin(), keep.end());
  detail::check_factor_list(keep, dims.size());
  if (keep.empty() || keep.size() == dims.size()) {
    throw DimensionError("partial trace needs a non-empty proper factor set");
  }
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t f : keep) kept[f] = true;

  // Digit weights of every factor inside the kept and traced sub-indices.
  std::vector<std::size_t> weight(dims.size(), 0);
  std::size_t keep_dim = 1;
  std::size_t trace_dim = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    if (kept[k]) {
      weight[k] = keep_dim;
      keep_dim *= dims[k];
    } else {
      weight[k] = trace_dim;
      trace_dim *= dims[k];
    }
  }
  const auto stride = detail::strides(dims);
  Matrix m = Matrix::Zero(keep_dim, trace_dim);
  for (std::size_t idx = 0; idx < state.size(); ++idx) {
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const std::size_t digit = idx / stride[k] % dims[k];
      (kept[k] ? row : col) += digit * weight[k];
    }
    m(row, col) = state[idx];
  }
  return DensityMatrix(m * m.adjoint());
}

/// -sum lambda log2 lambda over eigenvalues above kEigenCutoff, in bits.
inline double von_neumann_entropy(
    const DensityMatrix& rho, double tol = kDefaultTolerance) {
  const Matrix& m = rho.entries();
  if (!is_hermitian(m, tol)) {
    throw InvalidParameters("density matrix is not Hermitian within tolerance");
  }
  const Matrix sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (double lambda : solver.eigenvalues()) {
    if (lambda > kEigenCutoff) entropy -= lambda * std::log2(lambda);
  }
  return std::max(entropy, 0.0);
}

/// Result of aligning two states over a global phase.
struct PhaseAlignment {
  double distance = 0.0;  // min over theta of |s1 - e^{i theta} s2|
  double phase = 0.0;     // the optimal theta = arg <s2|s1>
  std::size_t worst_index = 0;  // largest entry of the aligned difference
};

inline PhaseAlignment align_phase(const StateVector& s1, const StateVector& s2) {
  if (s1.dims() != s2.dims()) {
    throw DimensionError("cannot compare states with different dims");
  }
  const Complex overlap = s2.amplitudes().dot(s1.amplitudes());
  PhaseAlignment out;
  out.phase = std::abs(overlap) > 0 ? std::arg(overlap) : 0.0;
  const Vector diff =
      s1.amplitudes() - std::polar(1.0, out.phase) * s2.amplitudes();
  out.distance = diff.norm();
  if (diff.size() > 0) {
    Eigen::Index at = 0;
    diff.cwiseAbs().maxCoeff(&at);
    out.worst_index = static_cast<std::size_t>(at);
  }
  return out;
}

inline bool equal_up_to_phase(
    const StateVector& s1, const StateVector& s2,
    double tol = kDefaultTolerance) {
  return align_phase(s1, s2).distance <= tol;
}

// ---------------------------------------------------------------------------
// State dump text format
//
//     state <k> dims d0 d1 ... dk-1
//     <index> <re> <im>          one line per amplitude with |a| >= 1e-12

namespace detail {

inline std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace detail

inline std::string format_state_dump(const StateVector& state) {
  std::string out = "state " + std::to_string(state.factor_count()) + " dims";
  for (std::size_t d : state.dims()) out += " " + std::to_string(d);
  out += "\n";
  for (std::size_t i = 0; i < state.size(); ++i) {
    const Complex a = state[i];
    if (std::abs(a) < kDumpThreshold) continue;
    out += std::to_string(i) + " " + detail::format_real(a.real()) + " " +
           detail::format_real(a.imag()) + "\n";
  }
  return out;
}

inline StateVector parse_state_dump(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::optional<std::vector<std::size_t>> dims;
  Vector amps;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto tokens = detail::split_ws(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (tokens.empty()) continue;
    if (!dims) {
      if (tokens.size() < 3 || tokens[0] != "state" || tokens[2] != "dims") {
        throw ParseError(line_no, "expected 'state <k> dims ...' header");
      }
      const auto k = detail::parse_index(tokens[1]);
      if (!k || tokens.size() != 3 + *k) {
        throw ParseError(line_no, "factor count does not match dims list");
      }
      dims.emplace();
      for (std::size_t i = 0; i < *k; ++i) {
        const auto d = detail::parse_index(tokens[3 + i]);
        if (!d || *d == 0) throw ParseError(line_no, "invalid factor dim");
        dims->push_back(*d);
      }
      amps = Vector::Zero(checked_dimension(*dims));
      continue;
    }
    if (tokens.size() != 3) {
      throw ParseError(line_no, "expected '<index> <re> <im>'");
    }
    const auto index = detail::parse_index(tokens[0]);
    const auto re = detail::parse_real(tokens[1]);
    const auto im = detail::parse_real(tokens[2]);
    if (!index || !re || !im) throw ParseError(line_no, "malformed amplitude");
    if (*index >= static_cast<std::size_t>(amps.size())) {
      throw ParseError(line_no, "amplitude index out of range");
    }
    amps(*index) = Complex(*re, *im);
  }
  if (!dims) throw ParseError(0, "missing 'state' header");
  return StateVector(std::move(*dims), std::move(amps));
}

}  // namespace g2s
