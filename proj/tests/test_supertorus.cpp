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

#include <functional>
#include <random>

#include "common.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/supertorus.hpp"

using namespace qsuper;
using namespace qsuper::testing;

namespace {

const GradedShape kOne{1, 2};

LatticeVec e(int dim, int i) { return LatticeVec::unit(dim, i); }

/** All basis vectors with even L1 norm <= 2. */
std::vector<LatticeVec> small_basis(const GradedShape& s) {
  std::vector<LatticeVec> out;
  const int dim = s.dim();
  LatticeVec v(dim);
  std::function<void(int)> rec = [&](int i) {
    if (i == dim) {
      int norm = 0;
      for (int k = 0; k < s.n; ++k) norm += std::abs(v[k]);
      if (norm <= 2) out.push_back(v);
      return;
    }
    const int lo = s.is_odd(i) ? 0 : -2;
    const int hi = s.is_odd(i) ? 1 : 2;
    for (int a = lo; a <= hi; ++a) {
      v[i] = a;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("tau counts odd inversions", "[supertorus]") {
  CHECK(tau(e(3, 1), e(3, 2), kOne) == 0);
  CHECK(tau(e(3, 2), e(3, 1), kOne) == 1);
  CHECK(tau(e(3, 1) + e(3, 2), e(3, 1) + e(3, 2), kOne) == 1);
  CHECK(tau(LatticeVec{5, 1, 1}, LatticeVec{-2, 1, 0}, kOne) == 1);
}

TEST_CASE("monomial law on the one-vertex form", "[supertorus]") {
  const SkewForm l = one_vertex_form();
  CHECK(mono_mul(l, kOne, e(3, 1), e(3, 2)) == SuperPoly::monomial(kOne, LatticeVec{0, 1, 1}, QScalar::q_pow(2)));
  CHECK(mono_mul(l, kOne, e(3, 1), e(3, 1)).is_zero());
  const LatticeVec v{-1, 1, 0};
  CHECK(mono_mul(l, kOne, v, LatticeVec(3)) == SuperPoly::monomial(kOne, v));
}

TEST_CASE("product of sums and the anticommutation relation", "[supertorus]") {
  const SkewForm l = one_vertex_form();
  const SuperPoly x2 = SuperPoly::monomial(kOne, e(3, 1));
  const SuperPoly x3 = SuperPoly::monomial(kOne, e(3, 2));
  const SuperPoly s = x2 + x3;
  const SuperPoly expected = poly(kOne, {{{0, 1, 1}, {{2, 1}, {-2, -1}}}});
  CHECK(poly_mul(l, s, s) == expected);
  CHECK(poly_mul(l, s, s) == WordOracle(l, kOne).multiply(s, s));
  CHECK(poly_mul(l, s, SuperPoly::constant(kOne, 1)) == s);
  const SuperPoly x23 = poly_mul(l, x2, x3);
  const SuperPoly x32 = poly_mul(l, x3, x2);
  // the super relation X2 X3 = -q^(lambda_3) X3 X2, against the sign-free variant
  CHECK_FALSE((x23 - QScalar::q_pow(4) * x32).is_zero());
  CHECK((x23 - QScalar(-1) * QScalar::q_pow(4) * x32).is_zero());
}

TEST_CASE("ordered factorization exponent", "[supertorus]") {
  CHECK(factor_ordered(one_vertex_form(), LatticeVec{-1, 1, 1}) == -2);
  CHECK(factor_ordered(one_vertex_form(), e(3, 1)) == 0);
  CHECK(factor_ordered(two_vertex_form(), LatticeVec{-1, 1, 0, 0}) == 1);
}

TEST_CASE("ordered factorization reproduces X^e", "[supertorus][property]") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const GradedShape s{1 + trial % 3, trial % 3};
    const SkewForm l = random_form(rng, s.dim(), 3);
    const LatticeVec v = random_basis_vec(rng, s, 3);
    SuperPoly word = SuperPoly::constant(s, QScalar::q_pow(static_cast<int>(factor_ordered(l, v))));
    for (int i = 0; i < s.dim(); ++i) {
      const SuperPoly g = SuperPoly::monomial(s, e(s.dim(), i) * (v[i] < 0 ? -1 : 1));
      for (int p = 0; p < std::abs(v[i]); ++p) word = poly_mul(l, word, g);
    }
    REQUIRE(word == SuperPoly::monomial(s, v));
  }
}

TEST_CASE("generator relations", "[supertorus]") {
  std::mt19937 rng(5);
  const GradedShape s{2, 2};
  const SkewForm l = random_form(rng, 4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      const SuperPoly xi = SuperPoly::monomial(s, e(4, i)), xj = SuperPoly::monomial(s, e(4, j));
      const bool both_odd = i >= 2 && j >= 2;
      QScalar c = QScalar::q_pow(2 * l(i, j));
      if (both_odd) c = -c;
      REQUIRE(poly_mul(l, xi, xj) == c * poly_mul(l, xj, xi));
    }
  }
  for (int i = 2; i < 4; ++i) {
    const SuperPoly xi = SuperPoly::monomial(s, e(4, i));
    CHECK(poly_mul(l, xi, xi).is_zero());
  }
}

TEST_CASE("exhaustive associativity, commutation and word-model agreement", "[supertorus][property]") {
  std::mt19937 rng(13);
  long triples = 0;
  for (int n = 1; n <= 2; ++n) {
    for (int m = 0; m <= 2; ++m) {
      const GradedShape s{n, m};
      const SkewForm l = random_form(rng, s.dim(), 3);
      const WordOracle oracle(l, s);
      const auto basis = small_basis(s);
      for (const auto& a : basis) {
        for (const auto& b : basis) {
          const SuperPoly ab = mono_mul(l, s, a, b);
          const SuperPoly ba = mono_mul(l, s, b, a);
          QScalar c = QScalar::q_pow(2 * static_cast<int>(l.pair(a, b)));
          if ((tau(a, b, s) + tau(b, a, s)) % 2) c = -c;
          REQUIRE(ab == c * ba);
          REQUIRE(ab == oracle.multiply(SuperPoly::monomial(s, a), SuperPoly::monomial(s, b)));
          for (const auto& g : basis) {
            ++triples;
            REQUIRE(poly_mul(l, ab, SuperPoly::monomial(s, g)) == poly_mul(l, SuperPoly::monomial(s, a), mono_mul(l, s, b, g)));
          }
        }
      }
    }
  }
  CHECK(triples > 10000);
}

TEST_CASE("tau cocycle identity", "[supertorus][property]") {
  const GradedShape s{1, 4};
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      for (int c = 0; c < 16; ++c) {
        if ((a & b) || (b & c) || (a & c)) continue;
        auto vec = [&](int mask) {
          LatticeVec v(5);
          for (int i = 0; i < 4; ++i) v[1 + i] = (mask >> i) & 1;
          return v;
        };
        const LatticeVec e1 = vec(a), f = vec(b), g = vec(c);
        REQUIRE(tau(e1, f, s) + tau(e1 + f, g, s) == tau(f, g, s) + tau(e1, f + g, s));
      }
    }
  }
}

TEST_CASE("randomized associativity on polynomials", "[supertorus][property]") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const GradedShape s{1 + trial % 2, trial % 3};
    const SkewForm l = random_form(rng, s.dim(), 3);
    const SuperPoly a = random_poly(rng, s, 3, 2), b = random_poly(rng, s, 3, 2), c = random_poly(rng, s, 3, 2);
    REQUIRE(poly_mul(l, poly_mul(l, a, b), c) == poly_mul(l, a, poly_mul(l, b, c)));
    REQUIRE(poly_mul(l, a, b + c) == poly_mul(l, a, b) + poly_mul(l, a, c));
    REQUIRE(poly_mul(l, a, b) == WordOracle(l, s).multiply(a, b));
  }
}

TEST_CASE("exact right division", "[supertorus]") {
  const SkewForm l = one_vertex_form();
  const SuperPoly x1p = poly(kOne, {{{-1, 0, 0}, {{0, 2}}}, {{-1, 1, 1}, {{0, 1}}}});
  const SuperPoly x1pp = poly(kOne, {{{1, 0, 0}, {{0, 1}}}, {{1, 1, 1}, {{0, -1}}}});
  CHECK(exact_div_right(l, poly_mul(l, x1pp, x1p), x1p) == x1pp);

  const GradedShape g{1, 0};
  const SkewForm z(1);
  const SuperPoly one = SuperPoly::constant(g, 1);
  const SuperPoly b = one + SuperPoly::monomial(g, LatticeVec{1});
  CHECK_THROWS_AS(exact_div_right(z, one, b), NotDivisible);
  CHECK_THROWS_AS(exact_div_right(z, one, SuperPoly(g)), DivisionByZero);
  CHECK_THROWS_AS(exact_div_right(l, x1p, SuperPoly::monomial(kOne, LatticeVec{0, 1, 0})), ZeroDivisor);
}

TEST_CASE("exact right division recovers random quotients", "[supertorus][property]") {
  std::mt19937 rng(19);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const GradedShape s{1 + trial % 3, trial % 3};
    const SkewForm l = random_form(rng, s.dim(), 2);
    const SuperPoly q0 = random_poly(rng, s, 4, 2);
    SuperPoly b = random_poly(rng, s, 3, 1);
    LatticeVec lead(s.dim());
    for (int i = 0; i < s.n; ++i) lead[i] = 3;
    b.add_term(lead, QScalar(1));
    const SuperPoly a = poly_mul(l, q0, b);
    if (a.is_zero()) continue;
    const SuperPoly q = exact_div_right(l, a, b);
    REQUIRE(poly_mul(l, q, b) == a);
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("specialization and integrality", "[supertorus]") {
  const SuperPoly p = poly(kOne, {{{0, 0, 0}, {{1, 2}, {-1, 1}}}, {{1, 1, 1}, {{4, -1}}}});
  CHECK(specialize_at_one(p) == poly(kOne, {{{0, 0, 0}, {{0, 3}}}, {{1, 1, 1}, {{0, -1}}}}));
  CHECK(is_integral(p));
  SuperPoly h = p;
  h *= QScalar(Rational(1, 2));
  CHECK_FALSE(is_integral(h));
}
