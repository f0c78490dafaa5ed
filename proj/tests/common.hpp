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
#include <random>
#include <utility>
#include <vector>

#include "qsuper/compat.hpp"
#include "qsuper/quiver.hpp"
#include "qsuper/seed.hpp"
#include "qsuper/supertorus.hpp"

namespace qsuper::testing {

/** One even vertex with xi1 -> x1 -> xi2; lambda_1 = 1, lambda_3 = 2. */
inline ExtQuiver one_vertex_quiver() {
  ExtQuiver q(1, 2, 1);
  q.odd_in[0] = {0};
  q.odd_out[0] = {1};
  return q;
}

inline SkewForm one_vertex_form(int l1 = 1, int l3 = 2) {
  SkewForm f(3);
  f.set(0, 1, l1);
  f.set(0, 2, -l1);
  f.set(1, 2, l3);
  return f;
}

/** x1 -> x2 with xi1 -> x1 -> xi2; lambda_1 = 1, lambda_2 = 2. */
inline ExtQuiver two_vertex_quiver() {
  ExtQuiver q(2, 2, 2);
  q.arrow(0, 1) = 1;
  q.odd_in[0] = {0};
  q.odd_out[0] = {1};
  return q;
}

inline SkewForm two_vertex_form(int l1 = 1, int l2 = 2) {
  SkewForm f(4);
  f.set(0, 1, l1);
  f.set(2, 3, l2);
  return f;
}

inline QuantumSeed one_vertex_seed() {
  return initial_seed(one_vertex_quiver(), one_vertex_form(), CompatMode::Permissive);
}

inline QuantumSeed two_vertex_seed() {
  return initial_seed(two_vertex_quiver(), two_vertex_form(), CompatMode::Strict);
}

/** sum of c * q^(h/2) X^e written term by term: {exponent, {half, numerator}}. */
struct Term {
  std::vector<int> exp;
  std::vector<std::pair<int, long>> coeff;
};

inline SuperPoly poly(const GradedShape& shape, const std::vector<Term>& terms) {
  SuperPoly p(shape);
  for (const auto& t : terms) {
    QScalar c;
    for (const auto& [h, v] : t.coeff) c.add_term(h, v);
    p.add_term(LatticeVec(t.exp), c);
  }
  return p;
}

inline SkewForm random_form(std::mt19937& rng, int dim, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  SkewForm f(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) f.set(i, j, d(rng));
  }
  return f;
}

inline LatticeVec random_basis_vec(std::mt19937& rng, const GradedShape& s, int bound) {
  std::uniform_int_distribution<int> even(-bound, bound);
  std::uniform_int_distribution<int> odd(0, 1);
  LatticeVec v(s.dim());
  for (int i = 0; i < s.dim(); ++i) v[i] = s.is_odd(i) ? odd(rng) : even(rng);
  return v;
}

inline QScalar random_scalar(std::mt19937& rng, int max_terms = 2) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> half(-3, 3);
  std::uniform_int_distribution<int> val(-3, 3);
  QScalar c;
  for (int t = count(rng); t > 0; --t) c.add_term(half(rng), val(rng));
  return c.is_zero() ? QScalar(1) : c;
}

inline SuperPoly random_poly(std::mt19937& rng, const GradedShape& s, int max_terms, int bound) {
  std::uniform_int_distribution<int> count(1, max_terms);
  SuperPoly p(s);
  for (int t = count(rng); t > 0; --t) p.add_term(random_basis_vec(rng, s, bound), random_scalar(rng));
  return p;
}

/** A random quiver on n even (l mutable) and m odd vertices, arrows of multiplicity <= 2. */
inline ExtQuiver random_quiver(std::mt19937& rng, int n, int m, int l) {
  ExtQuiver q(n, m, l);
  std::uniform_int_distribution<int> arrows(-2, 2), odd(0, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i >= l && j >= l) continue;
      const int b = arrows(rng);
      if (b > 0) q.arrow(i, j) = b;
      if (b < 0) q.arrow(j, i) = -b;
    }
  }
  for (int i = 0; i < l; ++i) {
    for (int a = 0; a < m; ++a) {
      const int t = odd(rng);
      if (t == 1) q.odd_in[i].insert(a);
      if (t == 2) q.odd_out[i].insert(a);
    }
  }
  return q;
}

/**
 * Rejection sampler for strictly compatible seeds with 2 <= n <= max_n and
 * m <= max_m: a random quiver, then random forms with entries in [-2, 2]
 * until one passes.
 */
inline QuantumSeed random_compatible_seed(std::mt19937& rng, int max_n, int max_m) {
  std::uniform_int_distribution<int> dn(2, max_n), dm(0, max_m);
  for (;;) {
    const int n = dn(rng), m = dm(rng);
    const int l = std::uniform_int_distribution<int>(1, n)(rng);
    const ExtQuiver q = random_quiver(rng, n, m, l);
    if (!q.invariant_violation().empty()) continue;
    for (int attempt = 0; attempt < 2000; ++attempt) {
      const SkewForm lam = random_form(rng, n + m, 2);
      if (check_compatible(q, lam, CompatMode::Strict).ok) return initial_seed(q, lam, CompatMode::Strict);
    }
  }
}

/**
 * Independent model of the supertorus built only from the generator
 * relations: X_i^a X_j^b = s q^(a b lambda_ij) X_j^b X_i^a (s = -1 iff both
 * odd), xi^2 = 0, together with X^e = q^(h/2) X_1^(a_1) ... X_N^(a_N).
 * Words are sorted by adjacent swaps and merged.
 */
class WordOracle {
 public:
  using Letter = std::pair<int, int>;  // generator, power
  using Word = std::vector<Letter>;

  WordOracle(const SkewForm& lambda, GradedShape shape) : lambda_(lambda), shape_(shape) {}

  long ordered_half(const LatticeVec& e) const {
    long h = 0;
    for (int k = 0; k < e.size(); ++k) {
      for (int l = 0; l < k; ++l) h += static_cast<long>(e[k]) * e[l] * lambda_(k, l);
    }
    return h;
  }

  /** Normal form of c * w as a SuperPoly. */
  SuperPoly reduce(Word w, QScalar c) const {
    for (bool swapped = true; swapped;) {
      swapped = false;
      for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        auto [i, a] = w[p];
        auto [j, b] = w[p + 1];
        if (i == j) {
          if (shape_.is_odd(i)) return SuperPoly(shape_);
          w[p].second = a + b;
          w.erase(w.begin() + static_cast<long>(p) + 1);
          swapped = true;
          break;
        }
        if (i > j) {
          const bool neg = shape_.is_odd(i) && shape_.is_odd(j);
          c.shift(2 * a * b * lambda_(i, j), neg);
          std::swap(w[p], w[p + 1]);
          swapped = true;
        }
      }
    }
    LatticeVec e(shape_.dim());
    for (auto [i, a] : w) e[i] += a;
    // the ordered word equals q^(-h/2) X^e
    c.shift(static_cast<int>(-ordered_half(e)));
    SuperPoly out(shape_);
    out.add_term(e, c);
    return out;
  }

  /** X^e as q^(h/2) times its ordered word. */
  std::pair<Word, long> word_of(const LatticeVec& e) const {
    Word w;
    for (int i = 0; i < e.size(); ++i) {
      if (e[i] != 0) w.emplace_back(i, e[i]);
    }
    return {w, ordered_half(e)};
  }

  SuperPoly multiply(const SuperPoly& a, const SuperPoly& b) const {
    SuperPoly out(shape_);
    for (const auto& [e, ca] : a.terms()) {
      for (const auto& [f, cb] : b.terms()) {
        auto [we, he] = word_of(e);
        auto [wf, hf] = word_of(f);
        we.insert(we.end(), wf.begin(), wf.end());
        QScalar c = ca * cb;
        c.shift(static_cast<int>(he + hf));
        out += reduce(we, c);
      }
    }
    return out;
  }

 private:
  SkewForm lambda_;
  GradedShape shape_;
};

/** One c q^(half/2) w summand of a closed form written in generator words. */
struct WordTerm {
  int half;
  long c;
  WordOracle::Word word;
};

/** Sum of ordered generator words reduced to the X^e basis by the oracle. */
inline SuperPoly word_sum(const SkewForm& lambda, GradedShape shape, const std::vector<WordTerm>& terms) {
  const WordOracle oracle(lambda, shape);
  SuperPoly out(shape);
  for (const auto& t : terms) out += oracle.reduce(t.word, QScalar::q_pow(t.half) * QScalar(t.c));
  return out;
}

}  // namespace qsuper::testing
