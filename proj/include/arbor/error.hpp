// Copyright 2026 The Arbor Authors
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

namespace arbor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad ids, loops, duplicate edges, unparsable files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The input is well-formed but violates an operation's precondition
/// (4-cycles where none are allowed, disconnected graph for genus, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of its node budget before it could decide.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// A construction that should always succeed produced an invalid result.
/// Never expected on inputs that satisfy the preconditions.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace arbor
