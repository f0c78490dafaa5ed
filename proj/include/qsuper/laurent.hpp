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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsuper/quiver.hpp"
#include "qsuper/seed.hpp"
#include "qsuper/supertorus.hpp"

namespace qsuper {

/** Y = sum_r c_r X_j^r with every c_r free of X_j and placed on the left. */
struct DirectionExpansion {
  int direction = 0;
  std::map<int, SuperPoly> coefficients;

  /** sum_r c_r X_j^r, which reproduces the expanded element. */
  SuperPoly reassemble(const SkewForm& lambda, const GradedShape& shape) const;
};

DirectionExpansion expand_in_direction(const SkewForm& lambda, const SuperPoly& y, int j);

/** Column j of the exchange matrix extended by the odd incidences at x_j. */
struct ExtendedColumn {
  LatticeVec column;                      // even rows from b, odd rows +1 / -1
  std::vector<std::pair<int, int>> odd_pairs;  // (source, target) odd lattice indices
};

ExtendedColumn extended_b_column(const ExtQuiver& q, int j);

/** gcd of the entries of Lambda applied to b (0 when that vector vanishes). */
long d_min(const SkewForm& lambda, const LatticeVec& b);

/**
 * P^r = prod_{p=1..r} (1 + q^((1-2p)d/2) X^(-b) + sum_S (-1)^tau X^(e_k + e_k')),
 * with b the even part of the extended column.
 */
SuperPoly p_element(const ExtQuiver& q, const SkewForm& lambda, int j, int r);

/** Exchange exponent -e_j + sum_{b_ij > 0} b_ij e_i of the new variable at j. */
LatticeVec exchange_exponent(const ExtQuiver& q, int j);

/**
 * True iff for every r > 0 the coefficient c_(-r) is right-divisible by P^r
 * with a quotient whose coefficients stay in Z[q^(+-1/2)].
 */
bool divisibility_check(const SuperPoly& y, int j, const ExtQuiver& q, const SkewForm& lambda);

struct StepVerdict {
  int vertex = 0;
  bool allowed = false;
  bool divisible = false;
  bool coefficients_integral = false;
  std::string note;
};

struct LaurentCertificate {
  std::vector<int> sequence;
  std::vector<StepVerdict> verdicts;
  bool overall = false;
  QuantumSeed final_seed;
};

/** Runs the sequence (0-based vertices); failures are recorded and stop the run. */
LaurentCertificate laurent_certify(const QuantumSeed& seed, const std::vector<int>& sequence);

/**
 * Membership of Y (written in the torus of the seed's own cluster) in each
 * ring ZP[X_k-adjacent cluster^(+-1)], one flag per mutable direction k.
 */
std::vector<bool> adjacent_membership(const SuperPoly& y, const QuantumSeed& seed);

}  // namespace qsuper
