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

#include <set>
#include <string>
#include <vector>

namespace qsuper {

/** Dense row-major integer matrix. */
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  long& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  long operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/** An oriented 2-path xi_src -> x_mid -> xi_dst (0-based even and odd indices). */
struct TwoPath {
  int odd_src;
  int mid;
  int odd_dst;

  friend bool operator==(const TwoPath&, const TwoPath&) = default;
  friend auto operator<=>(const TwoPath&, const TwoPath&) = default;
};

/**
 * Extended quiver: n even vertices carrying an arrow-multiplicity matrix and
 * m odd vertices attached to even vertex k by simple arrows xi_i -> x_k
 * (i in odd_in[k]) and x_k -> xi_j (j in odd_out[k]). The first l even
 * vertices are mutable. All indices are 0-based.
 */
struct ExtQuiver {
  int n = 1;
  int m = 0;
  int l = 1;
  std::vector<int> arrows;              // n x n, arrows[i*n+j] = #(x_i -> x_j)
  std::vector<std::set<int>> odd_in;   // I_k
  std::vector<std::set<int>> odd_out;  // J_k

  ExtQuiver() = default;
  ExtQuiver(int n, int m, int l);

  int arrow(int i, int j) const { return arrows[static_cast<std::size_t>(i) * n + j]; }
  int& arrow(int i, int j) { return arrows[static_cast<std::size_t>(i) * n + j]; }

  /** Empty string when every invariant holds, otherwise the first violation. */
  std::string invariant_violation() const;
  /** Throws MalformedInput on the first violated invariant. */
  void validate() const;

  friend bool operator==(const ExtQuiver&, const ExtQuiver&) = default;
};

/** b_ij = #(x_i -> x_j) - #(x_j -> x_i), restricted to the mutable columns (n x l). */
IntMatrix b_matrix(const ExtQuiver& q);

/** All 2-paths, ordered by middle vertex, then source, then target. */
std::vector<TwoPath> two_paths(const ExtQuiver& q);

/** Quiver mutation at the mutable even vertex k. Throws MutationOnFrozen if k >= l. */
ExtQuiver mutate_quiver(const ExtQuiver& q, int k);

/**
 * Allowedness read directly off the mutation: for every x_l reached by an
 * arrow x_k -> x_l, each xi_i in I_l u I_k must reach each xi_j in J_l u J_k
 * (i != j) through x_l once the mutation is done. A pair counts as reached
 * when the 2-path xi_i -> x_l -> xi_j survives, or when it was annihilated
 * together with its opposite partner.
 */
bool is_allowed_def(const ExtQuiver& q, int k);

/** Which of the five combinatorial conditions hold for one neighbour x_l. */
struct AllowedConditions {
  int neighbour = 0;
  bool same_in = false;       // I_k = I_l
  bool same_out = false;      // J_k = J_l
  bool k_isolated = false;    // I_k = J_k = {}
  bool crossed = false;       // I_k = J_l and J_k = I_l
  bool l_isolated = false;    // I_l = J_l = {}
  bool any() const { return same_in || same_out || k_isolated || crossed || l_isolated; }
};

/** Condition table for every x_l with an arrow x_k -> x_l. */
std::vector<AllowedConditions> allowed_conditions(const ExtQuiver& q, int k);

/** Combinatorial allowedness: every neighbour satisfies at least one condition. */
bool is_allowed_lemma(const ExtQuiver& q, int k);

}  // namespace qsuper
