// Copyright 2026 The entclass Authors
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

#ifndef ENTCLASS_ERROR_H
#define ENTCLASS_ERROR_H

#include <stdexcept>
#include <string>

namespace entclass {

/// Base class for every error raised by the library. The CLI maps the
/// concrete subclasses onto its exit-code contract.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document (wrong fields, wrong shapes, wrong types).
class SchemaError : public Error {
   public:
    using Error::Error;
};

/// A value violates a domain invariant (normalization, hermiticity, ranges).
class InvariantError : public Error {
   public:
    using Error::Error;
};

/// A precondition of an operation does not hold for its arguments.
class PreconditionError : public InvariantError {
   public:
    using InvariantError::InvariantError;
};

/// A configured size cap (qubit count, enumeration size) would be exceeded.
class SizeCapError : public Error {
   public:
    using Error::Error;
};

/// A numerical routine failed (non-convergence, underflow).
class NumericalError : public Error {
   public:
    using Error::Error;
};

}  // namespace entclass

#endif
