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

#include "qsuper/quiver.hpp"

namespace qsuper {

/** A quiver and vertex on which the two allowedness tests disagree. */
struct AllowednessCase {
  ExtQuiver quiver;
  int vertex = 0;
  bool by_definition = false;
  bool by_lemma = false;
};

struct AllowednessSurvey {
  int max_n = 0;
  int max_m = 0;
  int max_multiplicity = 0;
  long quivers = 0;
  long checks = 0;
  long allowed_by_definition = 0;
  long allowed_by_lemma = 0;
  std::vector<AllowednessCase> disagreements;
};

/**
 * Compares is_allowed_def with is_allowed_lemma at every vertex of every
 * extended quiver with 1 <= n <= max_n even vertices (all mutable),
 * 0 <= m <= max_m odd vertices, even multiplicities up to max_multiplicity
 * and every odd incidence pattern (each odd vertex is absent, incoming or
 * outgoing at each even vertex).
 */
AllowednessSurvey survey_allowedness(int max_n, int max_m, int max_multiplicity);

}  // namespace qsuper
