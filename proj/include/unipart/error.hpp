// Copyright 2026 The unipart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace unipart {

enum class ErrorKind {
  Usage = 1,
  Parse = 2,
  Numeric = 3,
};

/// Base error. The kind maps onto the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// Qubit-count mismatches, dense-size caps, register overlaps.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error(ErrorKind::Numeric, what) {}
};

/// A numeric contract was violated (non-Hermitian input, unnormalized
/// amplitudes, no accepted shots, ...).
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what)
      : Error(ErrorKind::Numeric, what) {}
};

}  // namespace unipart
