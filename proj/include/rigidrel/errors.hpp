// Copyright 2026 The rigidrel Authors
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

#ifndef RIGIDREL_ERRORS_HPP
#define RIGIDREL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rigidrel {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed argument: out-of-range vertex, size mismatch, non-bijection.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A search bound was exceeded. Searches never truncate silently.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A construction precondition failed (duplicate points, unseparated pair).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// The base structure of a product construction is not irreflexive or not
// hereditarily rigid.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

// The operation's hypothesis does not hold for this input (e.g. fewer than
// two atoms outside the support).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rigidrel

#endif  // RIGIDREL_ERRORS_HPP
