// Copyright 2026 The bohrify Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace bohrify {

// Base of everything the library throws. The CLI maps Error to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes disagree (matrix dimensions, table lengths).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data (model files, ids, group tables).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured size cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Internal numerical inconsistency (e.g. a spectrum that fails to match up).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bohrify
