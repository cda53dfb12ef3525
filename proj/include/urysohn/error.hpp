// Copyright 2026 The Urysohn Toolkit Authors
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

#ifndef URYSOHN_ERROR_HPP
#define URYSOHN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace urysohn {

// Values match ury_status in urysohn.h.
enum class ErrorCode {
  parse = 1,
  lookup = 2,
  invariant = 3,
  precondition = 4,
  argument = 5,
  internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed document or rational literal.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

/// Unknown point label.
class LookupError : public Error {
 public:
  explicit LookupError(const std::string& what)
      : Error(ErrorCode::lookup, what) {}
};

/// A structural invariant (symmetry, range, triangle inequality) is violated.
class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what)
      : Error(ErrorCode::invariant, what) {}
};

/// An operation was called outside its domain, e.g. on a dependent type.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorCode::precondition, what) {}
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what)
      : Error(ErrorCode::argument, what) {}
};

}  // namespace urysohn

#endif  // URYSOHN_ERROR_HPP
