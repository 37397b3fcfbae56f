// Copyright 2026 The disagree-kit Authors
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

#ifndef DISAGREE_ERRORS_H_
#define DISAGREE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace disagree {

// Root of every exception thrown by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. Carries the 1-based line number of the offender.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Input violates a mathematical precondition (bipartite graph, nonpositive
// weight, out-of-range parameter, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DuplicateEdgeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Requested computation exceeds a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An iterative method hit its iteration cap before reaching tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace disagree

#endif  // DISAGREE_ERRORS_H_
