/*
 *   Copyright 2026 The assocgraph Authors
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

#ifndef ASSOCGRAPH_ERRORS_HPP
#define ASSOCGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace assocgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operand is not a member of the algebra's carrier.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Unknown builtin name or malformed family parameters.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid input (bad key, zero weight, bad op table).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A checker and a witness constructor disagree. Always a library bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ParseDiagnostic {
  std::string role;  // "triples", "edge-list", "algebra"
  std::size_t line = 0;
  std::string column;
  std::string message;

  std::string to_string() const {
    std::string out = role + ":" + std::to_string(line);
    if (!column.empty()) out += ": " + column;
    return out + ": " + message;
  }
};

class ParseError : public Error {
 public:
  explicit ParseError(ParseDiagnostic d)
      : Error(d.to_string()), diagnostic_(std::move(d)) {}

  const ParseDiagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

}  // namespace assocgraph

#endif  // ASSOCGRAPH_ERRORS_HPP
