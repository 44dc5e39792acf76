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

// Two-vertex edge operators for every supported family, the consistency
// checks on them, and the directed -> undirected symmetrization U = V V'.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "g2s/graph.hpp"
#include "g2s/linalg.hpp"
#include "g2s/report.hpp"

namespace g2s {

namespace family {

/// Controlled-Z on qubits, diag(1, 1, 1, -1).
struct CZ {};

/// Controlled-Z_d, sum_jk w^{jk} |jk><jk| with w = e^{2 pi i / d}.
struct CZD {
  std::size_t d = 2;
};

enum class ParityKind { even, odd };

/// Projector on the even (P0) or odd (P1) two-qubit parity subspace.
struct Parity {
  ParityKind parity = ParityKind::even;
};

/// diag(a, b, b, c).
struct U1 {
  Complex a{1.0};
  Complex b{1.0};
  Complex c{-1.0};
};

/// a I(x)I + b (T(x)I + I(x)T) + c T(x)T for a fixed 2x2 matrix T.
struct U2 {
  Complex a{1.0};
  Complex b{0.0};
  Complex c{0.0};
  Matrix t = Matrix::Identity(2, 2);
};

/// Symmetric two-qudit map taking |+>_d|+>_d to the maximally entangled pair.
struct PepsV {
  std::size_t d = 2;
};

/// Symmetric two-qubit unitary with V|00> = sqrt(1-p/2)|00> + sqrt(p/2)|11>.
struct QrnV {
  double p = 0.0;
};

/// M^dag(x)M^dag diag(1,1,1,e^{i phi}) P(alpha)(x)P(beta) M(x)M with
/// P(t) = diag(1, e^{i t}). The first factor carries the alpha phase.
struct DirectedV {
  Matrix m = Matrix::Identity(2, 2);
  double alpha = 0.0;
  double beta = 0.0;
  double phi = 0.0;
};

/// Any d^2 x d^2 matrix, e.g. the output of symmetrize_directed.
struct Explicit {
  std::size_t d = 2;
  Matrix matrix = Matrix::Identity(4, 4);
};

}  // namespace family

using FamilyParams = std::variant<
    family::CZ, family::CZD, family::Parity, family::U1, family::U2,
    family::PepsV, family::QrnV, family::DirectedV, family::Explicit>;

enum class Family { CZ, CZD, PARITY, U1, U2, PEPS_V, QRN_V, DIRECTED_V, EXPLICIT };

inline Family family_of(const FamilyParams& params) {
  return static_cast<Family>(params.index());
}

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::CZ: return "CZ";
    case Family::CZD: return "CZD";
    case Family::PARITY: return "PARITY";
    case Family::U1: return "U1";
    case Family::U2: return "U2";
    case Family::PEPS_V: return "PEPS_V";
    case Family::QRN_V: return "QRN_V";
    case Family::DIRECTED_V: return "DIRECTED_V";
    case Family::EXPLICIT: return "EXPLICIT";
  }
  return "?";
}

inline std::optional<Family> family_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Family::EXPLICIT); ++i) {
    if (family_name(static_cast<Family>(i)) == name) {
      return static_cast<Family>(i);
    }
  }
  return std::nullopt;
}

/// Families whose vertices carry one port qudit per incident edge.
inline bool is_composite(const FamilyParams& params) {
  const Family f = family_of(params);
  return f == Family::PEPS_V || f == Family::QRN_V;
}

/// Dimension of the single qudit (or port) the operator acts on.
namespace detail {
struct LocalDim {
  std::size_t operator()(const family::CZD& p) const { return p.d; }
  std::size_t operator()(const family::PepsV& p) const { return p.d; }
  std::size_t operator()(const family::Explicit& p) const { return p.d; }
  std::size_t operator()(const auto&) const { return 2; }
};
}  // namespace detail

inline std::size_t local_dim(const FamilyParams& params) {
  return std::visit(detail::LocalDim{}, params);
}

/// T = [0 1; gamma -alpha].
inline Matrix t_matrix_first(Complex gamma, Complex alpha) {
  return (Matrix(2, 2) << 0.0, 1.0, gamma, -alpha).finished();
}

/// T = [0 gamma; 1 -alpha].
inline Matrix t_matrix_second(Complex gamma, Complex alpha) {
  return (Matrix(2, 2) << 0.0, gamma, 1.0, -alpha).finished();
}

namespace detail {
struct Validator {
  double tol;
  void operator()(const family::CZD& p) const {
    if (p.d < 2) throw InvalidParameters("CZD needs d >= 2");
  }
  void operator()(const family::PepsV& p) const {
    if (p.d < 2) throw InvalidParameters("PEPS_V needs d >= 2");
  }
  void operator()(const family::QrnV& p) const {
    if (!(p.p >= 0.0 && p.p <= 1.0)) {
      throw InvalidParameters("QRN_V needs 0 <= p <= 1");
    }
  }
  void operator()(const family::U2& p) const {
    if (p.t.rows() != 2 || p.t.cols() != 2) {
      throw InvalidParameters("U2 needs a 2x2 T matrix");
    }
  }
  void operator()(const family::DirectedV& p) const {
    if (p.m.rows() != 2 || p.m.cols() != 2 || !is_unitary(p.m, tol)) {
      throw InvalidParameters("DIRECTED_V needs a 2x2 unitary M");
    }
  }
  void operator()(const family::Explicit& p) const {
    if (p.d < 1 || p.matrix.rows() != static_cast<Eigen::Index>(p.d * p.d) ||
        p.matrix.cols() != p.matrix.rows()) {
      throw InvalidParameters("EXPLICIT matrix must be d^2 x d^2");
    }
  }
  void operator()(const auto&) const {}
};
}  // namespace detail

/// Throws InvalidParameters when `params` is outside its family's domain.
inline void validate(const FamilyParams& params, double tol = kDefaultTolerance) {
  std::visit(detail::Validator{tol}, params);
}

/// Two-qudit operator with structural flags recomputed from the entries.
class OperatorMatrix {
 public:
  OperatorMatrix(
      FamilyParams params, Matrix matrix, double tol = kDefaultTolerance)
      : params_(std::move(params)), matrix_(std::move(matrix)) {
    local_dim_ = g2s::local_dim(params_);
    const auto n = static_cast<Eigen::Index>(local_dim_ * local_dim_);
    if (matrix_.rows() != n || matrix_.cols() != n) {
      throw DimensionError("edge operator must be d^2 x d^2");
    }
    unitary_ = g2s::is_unitary(matrix_, tol);
    projector_ = g2s::is_projector(matrix_, tol);
    diagonal_ = g2s::is_diagonal(matrix_, tol);
  }

  std::size_t local_dim() const { return local_dim_; }
  const Matrix& matrix() const { return matrix_; }
  const FamilyParams& params() const { return params_; }
  Family family() const { return family_of(params_); }
  bool is_unitary() const { return unitary_; }
  bool is_projector() const { return projector_; }
  bool is_diagonal() const { return diagonal_; }

 private:
  FamilyParams params_;
  Matrix matrix_;
  std::size_t local_dim_ = 2;
  bool unitary_ = false;
  bool projector_ = false;
  bool diagonal_ = false;
};

namespace detail {

/// e^{2 pi i k / d} with k reduced mod d first.
inline Complex root_of_unity(long long k, std::size_t d) {
  const auto dd = static_cast<long long>(d);
  const long long r = ((k % dd) + dd) % dd;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                             static_cast<double>(d));
}

inline Matrix diag4(Complex a, Complex b, Complex c, Complex e) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = e;
  return m;
}

inline Matrix phase_gate(double t) {
  return (Matrix(2, 2) << 1.0, 0.0, 0.0, std::polar(1.0, t)).finished();
}

/// |Phi+><Phi+| on two qubits.
inline Matrix bell_projector() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return m;
}

struct MatrixBuilder {
  Matrix operator()(const family::CZ&) const { return diag4(1, 1, 1, -1); }

  Matrix operator()(const family::CZD& p) const {
    const auto d = static_cast<Eigen::Index>(p.d);
    Matrix m = Matrix::Zero(d * d, d * d);
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index k = 0; k < d; ++k) {
        m(j * d + k, j * d + k) = root_of_unity(j * k, p.d);
      }
    }
    return m;
  }

  Matrix operator()(const family::Parity& p) const {
    return p.parity == family::ParityKind::even ? diag4(1, 0, 0, 1)
                                                : diag4(0, 1, 1, 0);
  }

  Matrix operator()(const family::U1& p) const {
    return diag4(p.a, p.b, p.b, p.c);
  }

  Matrix operator()(const family::U2& p) const {
    const Matrix i2 = identity(2);
    return p.a * identity(4) + p.b * (kron(p.t, i2) + kron(i2, p.t)) +
           p.c * kron(p.t, p.t);
  }

  Matrix operator()(const family::PepsV& p) const {
    const auto d = static_cast<Eigen::Index>(p.d);
    const double scale = std::pow(static_cast<double>(p.d), -1.5);
    Matrix m(d * d, d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = 0; k < d; ++k) {
          for (Eigen::Index l = 0; l < d; ++l) {
            m(i * d + j, k * d + l) =
                scale * root_of_unity((i - j) * (k - l), p.d);
          }
        }
      }
    }
    return m;
  }

  Matrix operator()(const family::QrnV& p) const {
    const Matrix sx_minus_sy = pauli::x() - pauli::y();
    return std::sqrt(1.0 - p.p / 2.0) * identity(4) +
           Complex(0.0, 0.5) * std::sqrt(p.p / 2.0) *
               kron(sx_minus_sy, sx_minus_sy);
  }

  Matrix operator()(const family::DirectedV& p) const {
    const Matrix mm = kron(p.m, p.m);
    const Matrix inner = diag4(1, 1, 1, std::polar(1.0, p.phi)) *
                         kron(phase_gate(p.alpha), phase_gate(p.beta));
    return mm.adjoint() * inner * mm;
  }

  Matrix operator()(const family::Explicit& p) const { return p.matrix; }
};

}  // namespace detail

/// The family's two-qudit matrix with its flags.
inline OperatorMatrix make_operator(
    const FamilyParams& params, double tol = kDefaultTolerance) {
  validate(params, tol);
  return OperatorMatrix(params, std::visit(detail::MatrixBuilder{}, params), tol);
}

/// How an edge operator is applied during encoding: `body` for every edge
/// first, then `edge_projector` (if any) for every edge.
struct EdgeAction {
  OperatorMatrix body;
  std::optional<Matrix> edge_projector;

  /// The full edge operator, projector after body.
  Matrix combined() const {
    return edge_projector ? Matrix(*edge_projector * body.matrix())
                          : body.matrix();
  }
};

inline EdgeAction edge_action(
    const FamilyParams& params, double tol = kDefaultTolerance) {
  switch (family_of(params)) {
    case Family::PARITY:
      return {OperatorMatrix(family::Explicit{2, identity(4)}, identity(4), tol),
              make_operator(params, tol).matrix()};
    case Family::QRN_V:
      return {make_operator(params, tol), detail::bell_projector()};
    default:
      return {make_operator(params, tol), std::nullopt};
  }
}

// ---------------------------------------------------------------------------
// Consistency conditions

enum class Condition { C2, C3, D2, D3A, D3B, D3C };

inline std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::C2: return "C2";
    case Condition::C3: return "C3";
    case Condition::D2: return "D2";
    case Condition::D3A: return "D3A";
    case Condition::D3B: return "D3B";
    case Condition::D3C: return "D3C";
  }
  return "?";
}

inline std::optional<Condition> condition_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Condition::D3C); ++i) {
    if (condition_name(static_cast<Condition>(i)) == name) {
      return static_cast<Condition>(i);
    }
  }
  return std::nullopt;
}

/// V' = S V S, the operator with its two inputs exchanged.
inline Matrix swapped(const Matrix& v, std::size_t d) {
  const Matrix s = swap_operator(d);
  return s * v * s;
}

/// Max-entry commutator residual for `cond`. Three-vertex conditions embed
/// the operators on factors (0,1) and (1,2) of (C^d)^{(x)3}.
inline VerificationReport check_condition(
    const OperatorMatrix& op, Condition cond, double tol = kDefaultTolerance) {
  const std::size_t d = op.local_dim();
  const Matrix& v = op.matrix();
  const Matrix id = identity(d);
  Matrix comm;
  switch (cond) {
    case Condition::C2:
      comm = commutator(v, swap_operator(d));
      break;
    case Condition::D2:
      comm = commutator(v, swapped(v, d));
      break;
    case Condition::C3:
    case Condition::D3A:
      comm = commutator(kron(v, id), kron(id, v));
      break;
    case Condition::D3B:
      comm = commutator(kron(v, id), kron(id, swapped(v, d)));
      break;
    case Condition::D3C:
      comm = commutator(kron(swapped(v, d), id), kron(id, v));
      break;
  }
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  const double residual =
      comm.size() == 0 ? 0.0 : comm.cwiseAbs().maxCoeff(&row, &col);
  return make_report(
      "condition", std::string(condition_name(cond)), residual, tol,
      {static_cast<std::size_t>(row), static_cast<std::size_t>(col)});
}

/// Conditions checked by default: D2-D3 for directed operators, C2 alone
/// for composite families (C3 holds structurally there), C2-C3 otherwise.
inline std::vector<Condition> default_conditions(const FamilyParams& params) {
  switch (family_of(params)) {
    case Family::DIRECTED_V:
      return {Condition::D2, Condition::D3A, Condition::D3B, Condition::D3C};
    case Family::PEPS_V:
    case Family::QRN_V:
      return {Condition::C2};
    default:
      return {Condition::C2, Condition::C3};
  }
}

/// U = V (S V S). Throws PreconditionFailed if V violates D2 or any D3.
inline OperatorMatrix symmetrize_directed(
    const OperatorMatrix& v, double tol = kDefaultTolerance) {
  for (Condition c :
       {Condition::D2, Condition::D3A, Condition::D3B, Condition::D3C}) {
    const auto report = check_condition(v, c, tol);
    if (!report.pass) {
      throw PreconditionFailed(
          "cannot symmetrize: " + report.name + " residual " +
              std::to_string(report.residual),
          report.name, report.residual);
    }
  }
  const std::size_t d = v.local_dim();
  Matrix u = v.matrix() * swapped(v.matrix(), d);
  return OperatorMatrix(family::Explicit{d, u}, u, tol);
}

// ---------------------------------------------------------------------------
// Weighted edges

/// Applies an edge's weight labels to the global family parameters.
///
///   U1, U2      a_re a_im b_re b_im c_re c_im
///   DIRECTED_V  alpha beta phi
///
/// T (U2) and M (DIRECTED_V) are global and cannot be labelled per edge.
/// Other families accept no labels.
inline FamilyParams bind_weight(const FamilyParams& base, const EdgeWeight& w) {
  if (w.empty()) return base;
  auto unknown = [&](const std::string& key) {
    return InvalidParameters(
        "weight key '" + key + "' is not bound for family " +
        std::string(family_name(family_of(base))));
  };
  auto bind_abc = [&](auto p) {
    for (const auto& [key, value] : w) {
      if (key == "a_re") p.a.real(value);
      else if (key == "a_im") p.a.imag(value);
      else if (key == "b_re") p.b.real(value);
      else if (key == "b_im") p.b.imag(value);
      else if (key == "c_re") p.c.real(value);
      else if (key == "c_im") p.c.imag(value);
      else throw unknown(key);
    }
    return FamilyParams(p);
  };
  switch (family_of(base)) {
    case Family::U1:
      return bind_abc(std::get<family::U1>(base));
    case Family::U2:
      return bind_abc(std::get<family::U2>(base));
    case Family::DIRECTED_V: {
      auto p = std::get<family::DirectedV>(base);
      for (const auto& [key, value] : w) {
        if (key == "alpha") p.alpha = value;
        else if (key == "beta") p.beta = value;
        else if (key == "phi") p.phi = value;
        else throw unknown(key);
      }
      return p;
    }
    default:
      throw unknown(w.begin()->first);
  }
}

/// Throws InvalidParameters unless `override_params` may replace `base` on a
/// single edge: same family, one of U1/U2/DIRECTED_V, and the same global T
/// or M.
inline void validate_override(
    const FamilyParams& base, const FamilyParams& override_params,
    double tol = kDefaultTolerance) {
  if (family_of(base) != family_of(override_params)) {
    throw InvalidParameters("per-edge parameters must keep the family");
  }
  validate(override_params, tol);
  switch (family_of(base)) {
    case Family::U1:
      return;
    case Family::U2:
      if (max_abs(std::get<family::U2>(base).t -
                  std::get<family::U2>(override_params).t) > tol) {
        throw InvalidParameters("U2 matrix T is fixed for all edges");
      }
      return;
    case Family::DIRECTED_V:
      if (max_abs(std::get<family::DirectedV>(base).m -
                  std::get<family::DirectedV>(override_params).m) > tol) {
        throw InvalidParameters("DIRECTED_V matrix M is fixed for all edges");
      }
      return;
    default:
      throw InvalidParameters(
          "family " + std::string(family_name(family_of(base))) +
          " has no per-edge parameters");
  }
}

}  // namespace g2s
