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

#include "qsuper/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "qsuper/errors.hpp"

namespace qsuper {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i].at(j);
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw DimensionMismatch("matrix product dimensions differ");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const long v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
    }
  }
  return r;
}

ExtQuiver::ExtQuiver(int n_, int m_, int l_)
    : n(n_), m(m_), l(l_), arrows(static_cast<std::size_t>(n_) * n_, 0), odd_in(n_), odd_out(n_) {}

std::string ExtQuiver::invariant_violation() const {
  if (n < 1) return "n must be at least 1";
  if (m < 0) return "m must be nonnegative";
  if (l < 0 || l > n) return "mutable count must lie in [0, n]";
  if (static_cast<int>(arrows.size()) != n * n) return "arrow matrix has the wrong size";
  if (static_cast<int>(odd_in.size()) != n || static_cast<int>(odd_out.size()) != n) {
    return "odd incidence lists have the wrong size";
  }
  for (int i = 0; i < n; ++i) {
    if (arrow(i, i) != 0) return "loop at x" + std::to_string(i + 1);
    for (int j = 0; j < n; ++j) {
      if (arrow(i, j) < 0) return "negative arrow multiplicity";
      if (i < j && arrow(i, j) > 0 && arrow(j, i) > 0) {
        return "2-cycle between x" + std::to_string(i + 1) + " and x" + std::to_string(j + 1);
      }
    }
    for (const auto* set : {&odd_in[i], &odd_out[i]}) {
      for (int a : *set) {
        if (a < 0 || a >= m) return "odd index out of range at x" + std::to_string(i + 1);
      }
    }
    for (int a : odd_in[i]) {
      if (odd_out[i].count(a)) {
        return "I and J intersect at x" + std::to_string(i + 1);
      }
    }
  }
  return {};
}

void ExtQuiver::validate() const {
  if (auto v = invariant_violation(); !v.empty()) throw MalformedInput("quiver: " + v);
}

IntMatrix b_matrix(const ExtQuiver& q) {
  IntMatrix b(q.n, q.l);
  for (int i = 0; i < q.n; ++i) {
    for (int j = 0; j < q.l; ++j) b(i, j) = q.arrow(i, j) - q.arrow(j, i);
  }
  return b;
}

std::vector<TwoPath> two_paths(const ExtQuiver& q) {
  std::vector<TwoPath> out;
  for (int k = 0; k < q.n; ++k) {
    for (int i : q.odd_in[k]) {
      for (int j : q.odd_out[k]) out.push_back({i, k, j});
    }
  }
  return out;
}

ExtQuiver mutate_quiver(const ExtQuiver& q, int k) {
  if (k < 0 || k >= q.l) throw MutationOnFrozen(k);
  ExtQuiver r = q;

  // Rule 0: classical mutation of the even arrows.
  auto b = [&](int i, int j) { return q.arrow(i, j) - q.arrow(j, i); };
  for (int i = 0; i < q.n; ++i) {
    for (int j = 0; j < q.n; ++j) {
      if (i == j) continue;
      if (i == k || j == k) {
        r.arrow(i, j) = q.arrow(j, i);
        continue;
      }
      const int bik = b(i, k), bkj = b(k, j);
      const int bij = b(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      r.arrow(i, j) = std::max(bij, 0);
    }
  }

  // Rule 1: copy every 2-path through x_k to the targets of arrows x_k -> x_l.
  for (int l = 0; l < q.n; ++l) {
    if (q.arrow(k, l) == 0 || q.odd_in[k].empty() || q.odd_out[k].empty()) continue;
    r.odd_in[l].insert(q.odd_in[k].begin(), q.odd_in[k].end());
    r.odd_out[l].insert(q.odd_out[k].begin(), q.odd_out[k].end());
  }

  // Rule 2: the odd arrows at x_k flip (even ones were reversed by rule 0).
  std::swap(r.odd_in[k], r.odd_out[k]);

  // Rule 3: opposite 2-paths annihilate, taking all their arrows with them.
  for (int l = 0; l < q.n; ++l) {
    std::vector<int> both;
    std::set_intersection(r.odd_in[l].begin(), r.odd_in[l].end(), r.odd_out[l].begin(),
                          r.odd_out[l].end(), std::back_inserter(both));
    for (int a : both) {
      r.odd_in[l].erase(a);
      r.odd_out[l].erase(a);
    }
  }
  return r;
}

bool is_allowed_def(const ExtQuiver& q, int k) {
  if (k < 0 || k >= q.l) throw MutationOnFrozen(k);
  const auto& in_k = q.odd_in[k];
  const auto& out_k = q.odd_out[k];
  const bool copies = !in_k.empty() && !out_k.empty();
  for (int l = 0; l < q.n; ++l) {
    if (l == k || q.arrow(k, l) == 0) continue;
    // Incidences at x_l after rule 1, then the rule 3 cancellation set.
    std::set<int> in1 = q.odd_in[l];
    std::set<int> out1 = q.odd_out[l];
    if (copies) {
      in1.insert(in_k.begin(), in_k.end());
      out1.insert(out_k.begin(), out_k.end());
    }
    std::set<int> cancelled;
    std::set_intersection(in1.begin(), in1.end(), out1.begin(), out1.end(),
                          std::inserter(cancelled, cancelled.end()));
    auto connected = [&](int i, int j) {
      const bool survives = in1.count(i) && out1.count(j) && !cancelled.count(i) && !cancelled.count(j);
      return survives || (cancelled.count(i) && cancelled.count(j));
    };
    std::set<int> sources(q.odd_in[l].begin(), q.odd_in[l].end());
    sources.insert(in_k.begin(), in_k.end());
    std::set<int> targets(q.odd_out[l].begin(), q.odd_out[l].end());
    targets.insert(out_k.begin(), out_k.end());
    for (int i : sources) {
      for (int j : targets) {
        if (i != j && !connected(i, j)) return false;
      }
    }
  }
  return true;
}

std::vector<AllowedConditions> allowed_conditions(const ExtQuiver& q, int k) {
  if (k < 0 || k >= q.l) throw MutationOnFrozen(k);
  std::vector<AllowedConditions> out;
  const auto& in_k = q.odd_in[k];
  const auto& out_k = q.odd_out[k];
  for (int l = 0; l < q.n; ++l) {
    if (l == k || q.arrow(k, l) == 0) continue;
    AllowedConditions c;
    c.neighbour = l;
    c.same_in = in_k == q.odd_in[l];
    c.same_out = out_k == q.odd_out[l];
    c.k_isolated = in_k.empty() && out_k.empty();
    c.crossed = in_k == q.odd_out[l] && out_k == q.odd_in[l];
    c.l_isolated = q.odd_in[l].empty() && q.odd_out[l].empty();
    out.push_back(c);
  }
  return out;
}

bool is_allowed_lemma(const ExtQuiver& q, int k) {
  const auto conds = allowed_conditions(q, k);
  return std::all_of(conds.begin(), conds.end(), [](const auto& c) { return c.any(); });
}

}  // namespace qsuper
