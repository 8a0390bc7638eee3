// Copyright 2026 The qdc Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qdc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Register too large for the dense representation.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Qubit index out of range or repeated within one gate.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Malformed argument (dimension mismatch, bad range, empty list, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A vector that must have unit norm does not.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Vector too close to zero to define a direction.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

/// A standardisation column has zero variance.
class DegenerateFeatureError : public Error {
 public:
  using Error::Error;
};

/// Postselection on an outcome whose probability is (numerically) zero.
class ImpossibleBranchError : public Error {
 public:
  using Error::Error;
};

/// Gate kind not handled by a pass (decomposition, QASM export).
class UnsupportedGateError : public Error {
 public:
  using Error::Error;
};

/// Qubit assignment missing a used qubit or mapping two qubits to one.
class AssignmentError : public Error {
 public:
  using Error::Error;
};

/// OpenQASM text outside the supported subset.
class QasmParseError : public Error {
 public:
  QasmParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Sampling produced no accepted shots, so no class estimate exists.
class EstimationFailedError : public Error {
 public:
  EstimationFailedError(const std::string& what, std::uint64_t accepted)
      : Error(what), accepted_(accepted) {}
  std::uint64_t accepted() const noexcept { return accepted_; }

 private:
  std::uint64_t accepted_;
};

}  // namespace qdc
