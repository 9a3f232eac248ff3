// Copyright 2026 The Authors.
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

#ifndef PMI_ERRORS_HPP
#define PMI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pmi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable text, length mismatches, out-of-range indices.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A restricted matroid has no basis of full rank.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// A polyhedron is unbounded in a direction that is not allowed.
class UnboundedError : public Error {
 public:
  using Error::Error;
};

/// A polytope is empty or not full-dimensional.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// A parameter vector lies outside the parameter polytope.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was invoked with arguments outside its contract.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// An oracle returned an answer that violates its contract.
class OracleError : public Error {
 public:
  using Error::Error;
};

}  // namespace pmi

#endif  // PMI_ERRORS_HPP
