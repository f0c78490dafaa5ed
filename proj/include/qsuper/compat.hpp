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

#include <string>
#include <vector>

#include "qsuper/quiver.hpp"
#include "qsuper/supertorus.hpp"

namespace qsuper {

enum class CompatMode { Strict, Permissive };

std::string to_string(CompatMode mode);
/** "strict" or "permissive"; throws MalformedInput otherwise. */
CompatMode compat_mode_from_string(const std::string& s);

struct CompatViolation {
  enum class Kind {
    OffDiagonal,  // condition A: entry (row, col) of B^T (L11 L12) outside the diagonal is nonzero
    NonPositive,  // condition A: d_row is not admissible in the current mode
    TwoPath,      // condition B: lambda(row, odd a) != -lambda(row, odd b)
  };
  Kind kind;
  int row = 0;  // lattice row (TwoPath), column index j of B otherwise
  int col = 0;  // lattice column (OffDiagonal) or the value of d_j (NonPositive)
  int odd_a = -1;
  int odd_b = -1;
  long value = 0;

  std::string describe() const;
  friend bool operator==(const CompatViolation&, const CompatViolation&) = default;
};

std::string to_string(CompatViolation::Kind kind);

struct CompatReport {
  bool ok = true;
  CompatMode mode = CompatMode::Strict;
  std::vector<long> d_entries;
  std::vector<CompatViolation> violations;
};

/** The l x (n+m) matrix B^T (Lambda_11 Lambda_12). */
IntMatrix d_matrix(const ExtQuiver& q, const SkewForm& lambda);

/**
 * Checks both compatibility conditions. Strict mode demands d_j > 0 for
 * every mutable column; permissive mode also accepts d_j = 0 when column j
 * of B vanishes. Throws DimensionMismatch if lambda is not (n+m)-square.
 */
CompatReport check_compatible(const ExtQuiver& q, const SkewForm& lambda, CompatMode mode);

/** n x n matrix E_eps for a mutation at k (B is n x l). */
IntMatrix e_matrix(const IntMatrix& b, int k, int eps);
/** l x l matrix F_eps for a mutation at k. */
IntMatrix f_matrix(const IntMatrix& b, int k, int eps);

struct MutMatrices {
  IntMatrix e;
  IntMatrix f;
  int eps = 1;
};

MutMatrices mut_matrices(const IntMatrix& b, int k, int eps);

/** How the block matrix diag(E, id) is applied to Lambda. */
enum class ConjugationOrder {
  TransposeLeft,   // diag(E,id)^T Lambda diag(E,id), reproduces both worked examples
  TransposeRight,  // diag(E,id) Lambda diag(E,id)^T, kept for comparison only
};

SkewForm mutate_lambda(const SkewForm& lambda, const IntMatrix& b, int k, int eps = 1,
                       ConjugationOrder order = ConjugationOrder::TransposeLeft);

}  // namespace qsuper
