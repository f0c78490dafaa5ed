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

#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>

#include "common.hpp"
#include "qsuper/compat.hpp"
#include "qsuper/errors.hpp"

using namespace qsuper;
using namespace qsuper::testing;

namespace {

SkewForm form(const std::vector<std::vector<int>>& rows) { return SkewForm(rows); }

}  // namespace

TEST_CASE("compatibility of the worked pairs", "[compat]") {
  const CompatReport r2 = check_compatible(two_vertex_quiver(), two_vertex_form(), CompatMode::Strict);
  CHECK(r2.ok);
  CHECK(r2.d_entries == std::vector<long>{1, 1});

  const CompatReport strict1 = check_compatible(one_vertex_quiver(), one_vertex_form(), CompatMode::Strict);
  CHECK_FALSE(strict1.ok);
  REQUIRE(strict1.violations.size() == 1);
  CHECK(strict1.violations[0].kind == CompatViolation::Kind::NonPositive);
  CHECK(check_compatible(one_vertex_quiver(), one_vertex_form(), CompatMode::Permissive).ok);

  SkewForm flipped = one_vertex_form();
  flipped.set(0, 2, 1);
  const CompatReport bad = check_compatible(one_vertex_quiver(), flipped, CompatMode::Permissive);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violations.size() == 1);
  const CompatViolation& v = bad.violations[0];
  CHECK(v.kind == CompatViolation::Kind::TwoPath);
  CHECK(v.row == 0);
  CHECK(v.odd_a == 0);
  CHECK(v.odd_b == 1);

  CHECK_THROWS_AS(check_compatible(two_vertex_quiver(), SkewForm(3), CompatMode::Strict), DimensionMismatch);
}

TEST_CASE("off-diagonal entries of condition A are reported", "[compat]") {
  const CompatReport r = check_compatible(two_vertex_quiver(), two_vertex_form(1, 2), CompatMode::Strict);
  CHECK(r.ok);
  SkewForm l = two_vertex_form();
  l.set(1, 2, 3);
  const CompatReport r2 = check_compatible(two_vertex_quiver(), l, CompatMode::Strict);
  CHECK_FALSE(r2.ok);
  bool off = false;
  for (const auto& v : r2.violations) off |= v.kind == CompatViolation::Kind::OffDiagonal;
  CHECK(off);
}

TEST_CASE("E and F matrices", "[compat]") {
  const IntMatrix b = b_matrix(two_vertex_quiver());
  CHECK(e_matrix(b, 0, 1) == IntMatrix::from_rows({{-1, 0}, {1, 1}}));
  CHECK(e_matrix(b, 0, -1) == IntMatrix::from_rows({{-1, 0}, {0, 1}}));
  const IntMatrix zero = IntMatrix::from_rows({{0, 0}, {0, 0}, {0, 0}});
  CHECK(e_matrix(zero, 1, 1) == IntMatrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}));
  for (int eps : {1, -1}) {
    const MutMatrices mm = mut_matrices(b, 1, eps);
    CHECK(mm.e * mm.e == IntMatrix::identity(2));
    CHECK(mm.f * mm.f == IntMatrix::identity(2));
  }
}

TEST_CASE("printed mutated forms", "[compat]") {
  const int l1 = 1, l2 = 2, l3 = 2;
  const SkewForm two_expected = form({{0, -l1, 0, 0}, {l1, 0, 0, 0}, {0, 0, 0, l2}, {0, 0, -l2, 0}});
  const SkewForm one_expected = form({{0, -l1, l1}, {l1, 0, l3}, {-l1, -l3, 0}});
  for (int eps : {1, -1}) {
    CHECK(mutate_lambda(two_vertex_form(), b_matrix(two_vertex_quiver()), 0, eps) == two_expected);
    CHECK(mutate_lambda(one_vertex_form(), b_matrix(one_vertex_quiver()), 0, eps) == one_expected);
  }
  const SkewForm twice =
      mutate_lambda(two_expected, b_matrix(mutate_quiver(two_vertex_quiver(), 0)), 0, 1);
  CHECK(twice == two_vertex_form());
}

TEST_CASE("the alternative conjugation order differs on the two-vertex pair", "[compat]") {
  const IntMatrix b = b_matrix(two_vertex_quiver());
  const SkewForm left = mutate_lambda(two_vertex_form(), b, 0, 1, ConjugationOrder::TransposeLeft);
  const SkewForm right = mutate_lambda(two_vertex_form(), b, 0, 1, ConjugationOrder::TransposeRight);
  CHECK(left(0, 1) == -1);
  CHECK(right(0, 1) == -1);
  CHECK(left == right);
}

namespace {

/**
 * Random compatible pairs: integer solutions of B^T Lambda_(11|12) = (D | 0)
 * and the 2-path antisymmetry, found by bounded search over small forms.
 */
std::optional<std::pair<ExtQuiver, SkewForm>> search_pair(std::mt19937& rng, int n, int m) {
  ExtQuiver q(n, m, n);
  std::uniform_int_distribution<int> arrows(-2, 2), odd(0, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int b = arrows(rng);
      if (b > 0) q.arrow(i, j) = b;
      if (b < 0) q.arrow(j, i) = -b;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < m; ++a) {
      const int t = odd(rng);
      if (t == 1) q.odd_in[i].insert(a);
      if (t == 2) q.odd_out[i].insert(a);
    }
  }
  for (int attempt = 0; attempt < 4000; ++attempt) {
    const SkewForm l = random_form(rng, n + m, 2);
    if (check_compatible(q, l, CompatMode::Strict).ok) return std::make_pair(q, l);
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("mutation preserves compatibility and is involutive on forms", "[compat][property]") {
  std::mt19937 rng(37);
  int found = 0;
  for (int trial = 0; trial < 300 && found < 40; ++trial) {
    const auto pair = search_pair(rng, 2 + trial % 2, trial % 3);
    if (!pair) continue;
    ++found;
    const auto& [q, l] = *pair;
    const IntMatrix b = b_matrix(q);
    for (int k = 0; k < q.l; ++k) {
      if (!is_allowed_def(q, k)) continue;
      const SkewForm plus = mutate_lambda(l, b, k, 1);
      REQUIRE(plus == mutate_lambda(l, b, k, -1));
      const ExtQuiver q2 = mutate_quiver(q, k);
      REQUIRE(check_compatible(q2, plus, CompatMode::Strict).ok);
      REQUIRE(mutate_lambda(plus, b_matrix(q2), k, 1) == l);

      // F^T D = D E on the mutable block
      const CompatReport rep = check_compatible(q, l, CompatMode::Strict);
      IntMatrix d(q.l, q.n);
      for (int j = 0; j < q.l; ++j) d(j, j) = rep.d_entries[j];
      for (int eps : {1, -1}) {
        const MutMatrices mm = mut_matrices(b, k, eps);
        if (q.l == q.n) REQUIRE(mm.f.transpose() * d == d * mm.e);
      }

      // row k of the odd block flips sign
      for (int c = q.n; c < q.n + q.m; ++c) REQUIRE(plus(k, c) == -l(k, c));
    }
  }
  CHECK(found >= 20);
}
