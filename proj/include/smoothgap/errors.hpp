// Copyright 2026 The smoothgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace smoothgap {

/// Argument outside the mathematical domain of an operation (e.g. k < 2).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A documented precondition was not met by the caller.
class PreconditionError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// An allocation would exceed the configured memory budget or a hard range guard.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Trial division could not finish within its bound; `residual()` is the
/// part of n that stayed unfactored.
class BudgetExceededError : public std::runtime_error {
  public:
    BudgetExceededError(const std::string& what, std::string residual)
        : std::runtime_error(what), residual_(std::move(residual)) {}

    const std::string& residual() const noexcept { return residual_; }

  private:
    std::string residual_;
};

/// Malformed tuple text. Line and column are 1-based.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace smoothgap
