// Copyright 2026 The qsuper Authors
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

namespace qsuper {

/** Base class for every error raised by the engine. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/** An exact quotient does not exist (remainder nonzero or outside the support bound). */
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/** The divisor has no regular (pure-even) leading term under any admissible order. */
class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class MutationOnFrozen : public Error {
 public:
  explicit MutationOnFrozen(int vertex)
      : Error("vertex " + std::to_string(vertex + 1) + " is frozen"), vertex(vertex) {}
  int vertex;
};

class NotAllowed : public Error {
 public:
  explicit NotAllowed(int vertex)
      : Error("mutation at vertex " + std::to_string(vertex + 1) + " is not allowed"),
        vertex(vertex) {}
  int vertex;
};

class NegativePowerOfPolynomialVariable : public Error {
 public:
  using Error::Error;
};

/** Structurally invalid input (bad JSON shape, non-skew form, broken quiver invariants). */
class MalformedInput : public Error {
 public:
  using Error::Error;
};

}  // namespace qsuper
