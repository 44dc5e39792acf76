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

#include <cstddef>
#include <string>
#include <vector>

#include "g2s/linalg.hpp"

namespace g2s {

/// Outcome of a numerical check. Checks never throw on mathematical failure;
/// they report the residual and, when failing, where it was largest.
struct VerificationReport {
  /// "condition" for operator consistency checks, "axiom" for encoder checks.
  std::string kind;
  /// C2, C3, D2, D3A, D3B, D3C, A1, A2, A3 or automorphism.
  std::string name;
  double residual = 0.0;
  double tolerance = kDefaultTolerance;
  bool pass = false;
  /// Matrix entry (row, col) or amplitude index of the largest deviation.
  /// Empty when the check passed.
  std::vector<std::size_t> witness;
  /// Free-form qualifier, e.g. "experimental".
  std::string note;
};

inline VerificationReport make_report(
    std::string kind, std::string name, double residual, double tol,
    std::vector<std::size_t> witness) {
  VerificationReport r;
  r.kind = std::move(kind);
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = tol;
  r.pass = residual <= tol;
  if (!r.pass) r.witness = std::move(witness);
  return r;
}

inline bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace g2s
