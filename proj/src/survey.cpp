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

#include "qsuper/survey.hpp"

namespace qsuper {

namespace {

void visit_incidences(ExtQuiver& q, int slot, AllowednessSurvey& out) {
  if (slot == q.n * q.m) {
    ++out.quivers;
    for (int k = 0; k < q.n; ++k) {
      const bool def = is_allowed_def(q, k);
      const bool lemma = is_allowed_lemma(q, k);
      ++out.checks;
      out.allowed_by_definition += def;
      out.allowed_by_lemma += lemma;
      if (def != lemma) out.disagreements.push_back({q, k, def, lemma});
    }
    return;
  }
  const int k = slot / q.m;
  const int a = slot % q.m;
  visit_incidences(q, slot + 1, out);
  q.odd_in[k].insert(a);
  visit_incidences(q, slot + 1, out);
  q.odd_in[k].erase(a);
  q.odd_out[k].insert(a);
  visit_incidences(q, slot + 1, out);
  q.odd_out[k].erase(a);
}

void visit_arrows(ExtQuiver& q, int pair, int mult, AllowednessSurvey& out) {
  const int pairs = q.n * (q.n - 1) / 2;
  if (pair == pairs) {
    visit_incidences(q, 0, out);
    return;
  }
  int i = 0;
  int j = 1;
  for (int p = 0; p < pair; ++p) {
    if (++j == q.n) j = ++i + 1;
  }
  for (int b = -mult; b <= mult; ++b) {
    q.arrow(i, j) = b > 0 ? b : 0;
    q.arrow(j, i) = b < 0 ? -b : 0;
    visit_arrows(q, pair + 1, mult, out);
  }
  q.arrow(i, j) = 0;
  q.arrow(j, i) = 0;
}

}  // namespace

AllowednessSurvey survey_allowedness(int max_n, int max_m, int max_multiplicity) {
  AllowednessSurvey out;
  out.max_n = max_n;
  out.max_m = max_m;
  out.max_multiplicity = max_multiplicity;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 0; m <= max_m; ++m) {
      ExtQuiver q(n, m, n);
      visit_arrows(q, 0, max_multiplicity, out);
    }
  }
  return out;
}

}  // namespace qsuper
