/* Copyright 2026 The berezin-lab Authors
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

#ifndef BEREZIN_ERROR_HPP
#define BEREZIN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace berezin {

/// Root of all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied arguments outside a function's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A required input (e.g. an external constant) was not supplied.
class MissingParameterError : public Error {
 public:
  using Error::Error;
};

/// The operation is not available for this kind of domain.
class UnsupportedDomainError : public Error {
 public:
  using Error::Error;
};

/// Text that does not match an input grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Base for failures of the numerics themselves (as opposed to bad input).
class NumericError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// The remainder minimum may lie beyond the scanned range.
class TailGuardError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// A spectral query reaches past the enumerated cutoff.
class CutoffError : public NumericError {
 public:
  CutoffError(const std::string& what, double minimal_cutoff)
      : NumericError(what), minimal_cutoff_(minimal_cutoff) {}

  /// Smallest cutoff that could possibly satisfy the query (0 when unknown).
  double minimal_cutoff() const noexcept { return minimal_cutoff_; }

 private:
  double minimal_cutoff_;
};

/// Enumeration would exceed the configured eigenvalue budget.
class CapacityError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace berezin

#endif  // BEREZIN_ERROR_HPP
