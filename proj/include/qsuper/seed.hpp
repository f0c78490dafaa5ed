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

#include <vector>

#include "qsuper/compat.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/quiver.hpp"
#include "qsuper/supertorus.hpp"

namespace qsuper {

/** Raised when a pair fails check_compatible; carries the full report. */
class Incompatible : public Error {
 public:
  explicit Incompatible(CompatReport r);
  CompatReport report;
};

struct TraceStep {
  int vertex = 0;
  bool allowed = false;
  bool divided = false;
  bool integral = false;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/** Append-only record of the mutations applied to a seed. */
class MutationTrace {
 public:
  void append(const TraceStep& s) { steps_.push_back(s); }
  const std::vector<TraceStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }

  friend bool operator==(const MutationTrace&, const MutationTrace&) = default;

 private:
  std::vector<TraceStep> steps_;
};

/**
 * A quantum super-seed with its frame stored concretely: the current cluster
 * variables expressed in the initial torus T(lambda_init), together with the
 * current quiver and form. Seeds are values; mutation returns a new seed.
 */
struct QuantumSeed {
  ExtQuiver quiver;
  SkewForm lambda_cur;
  SkewForm lambda_init;
  std::vector<SuperPoly> vars;
  CompatMode mode = CompatMode::Strict;
  MutationTrace trace;

  GradedShape shape() const { return {quiver.n, quiver.m}; }
  /** Frozen: even indices >= l and every odd index. */
  bool is_frozen(int i) const { return i >= quiver.l; }
  std::vector<bool> frozen() const;

  friend bool operator==(const QuantumSeed&, const QuantumSeed&) = default;
};

/** vars[i] = X^(e_i). Throws Incompatible when the pair fails in the given mode. */
QuantumSeed initial_seed(const ExtQuiver& q, const SkewForm& lambda, CompatMode mode);

/**
 * M(c) = q^(h/2) X_1^(c_1) ... X_(n+m)^(c_(n+m)) with h the normal-ordering
 * exponent of c under the current form. Negative powers are only taken of
 * variables that are still invertible monomials.
 */
SuperPoly frame_monomial(const QuantumSeed& seed, const LatticeVec& c);

/**
 * Quantum exchange at k. The numerator is assembled from frame monomials
 * M(v) (with -e_k stripped off the exchange exponents) and the new variable
 * is its exact right quotient by the old one. Throws MutationOnFrozen,
 * NotAllowed or NotDivisible.
 */
QuantumSeed mutate_seed(const QuantumSeed& seed, int k);

/** Outcome of mutating twice at the same vertex. */
struct DoubleMutationReport {
  /** X_k'' - X_k equals the signed 2-path sum over the once-mutated quiver. */
  bool correction_identity = false;
  /** X_k = X_k'' (1 + C) with C summed over the original quiver's 2-paths. */
  bool printed_recovery = false;
  /** X_k'' = X_k (1 + C') with C' over the once-mutated quiver, i.e. X_k = X_k'' (1 + C')^(-1). */
  bool inverse_recovery = false;
};

DoubleMutationReport double_mutation_report(const QuantumSeed& seed, int k);
bool double_mutation_check(const QuantumSeed& seed, int k);

/**
 * Supercommutative exchange relation evaluated with Lambda = 0 on the
 * current variables specialized at q^(1/2) = 1.
 */
SuperPoly classical_exchange(const QuantumSeed& seed, int k);

}  // namespace qsuper
