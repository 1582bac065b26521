/*
 *   Copyright 2026 The tropsolve Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * Exception hierarchy shared by every tropsolve module.
 */

#ifndef TROPSOLVE_ERRORS_HPP
#define TROPSOLVE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace tropsolve {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-conforming or empty operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An operation applied outside its algebraic domain (inverting the zero, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Kleene star/plus requested for a matrix with Tr(A) above the unit.
class TraceError : public DomainError {
 public:
  TraceError(const std::string& what, std::string trace)
      : DomainError(what + " (Tr = " + trace + ")"), trace_(std::move(trace)) {}

  const std::string& trace() const noexcept { return trace_; }

 private:
  std::string trace_;
};

/// The x-operator found no column of A+ with a unit diagonal entry.
class EmptyColumnSet : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A solver precondition from the underlying theory does not hold.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : Error("hypothesis violated: " + hypothesis + ": " + detail),
        hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Results that contradict a guarantee of the theory; always a bug or a
/// corrupted input.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// A brute-force or enumeration routine refused to exceed its size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " exceeds cap " + std::to_string(cap)), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Malformed scalar or matrix text. Line and column are 1-based; zero when the
/// input was a single token without position context.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what
                        : std::to_string(line) + ":" + std::to_string(column) +
                              ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tropsolve

#endif  // TROPSOLVE_ERRORS_HPP
