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
#include <stdexcept>
#include <string>
#include <vector>

namespace g2s {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Malformed graph file, operator spec or state dump.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(
            line == 0 ? message
                      : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  /// 1-based line number, or 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Shapes or sizes that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The dense engine refuses states above the amplitude cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the domain of an operator family.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// Encoding spec and graph cannot be combined (family/graph mismatch).
class IncompatibleGraph : public Error {
 public:
  using Error::Error;
};

/// A numerical precondition of an operation failed, e.g. symmetrizing an
/// operator that violates a directed consistency condition.
class PreconditionFailed : public Error {
 public:
  PreconditionFailed(
      const std::string& message, std::string condition, double residual)
      : Error(message), condition_(std::move(condition)), residual_(residual) {}

  const std::string& condition() const { return condition_; }
  double residual() const { return residual_; }

 private:
  std::string condition_;
  double residual_;
};

/// Projectors annihilated the state. `witness` names the edge (two vertex
/// indices) or vertex (one index) whose projector produced the zero vector.
class ZeroNormError : public Error {
 public:
  ZeroNormError(const std::string& message, std::vector<std::size_t> witness)
      : Error(message), witness_(std::move(witness)) {}

  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

}  // namespace g2s
