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

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "qsuper/coeff.hpp"

namespace qsuper {

/** Rank data of the graded lattice Z^(n|m): coordinates [0, n) are even, [n, n+m) odd. */
struct GradedShape {
  int n = 1;
  int m = 0;

  int dim() const { return n + m; }
  bool is_odd(int i) const { return i >= n; }

  friend bool operator==(const GradedShape&, const GradedShape&) = default;
};

/** Integer exponent vector over the graded lattice. */
class LatticeVec {
 public:
  using Storage = boost::container::small_vector<int, 8>;

  LatticeVec() = default;
  explicit LatticeVec(int dim) : c_(dim, 0) {}
  LatticeVec(std::initializer_list<int> init) : c_(init) {}
  explicit LatticeVec(const std::vector<int>& v) : c_(v.begin(), v.end()) {}

  /** The standard basis vector e_i (0-based). */
  static LatticeVec unit(int dim, int i) {
    LatticeVec v(dim);
    v[i] = 1;
    return v;
  }

  int size() const { return static_cast<int>(c_.size()); }
  int& operator[](int i) { return c_[i]; }
  int operator[](int i) const { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_zero() const;
  /** True when every odd component lies in {0, 1}. */
  bool is_basis(const GradedShape& s) const;
  bool has_odd_part(const GradedShape& s) const;
  int odd_degree(const GradedShape& s) const;
  std::vector<int> to_vector() const { return {c_.begin(), c_.end()}; }

  LatticeVec& operator+=(const LatticeVec& o);
  LatticeVec& operator-=(const LatticeVec& o);
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  LatticeVec operator-() const;
  LatticeVec operator*(int k) const;

  friend bool operator==(const LatticeVec& a, const LatticeVec& b) { return a.c_ == b.c_; }
  friend bool operator<(const LatticeVec& a, const LatticeVec& b) { return a.c_ < b.c_; }

 private:
  Storage c_;
};

/** Skew-symmetric integer form on the lattice, stored as a dense matrix. */
class SkewForm {
 public:
  SkewForm() = default;
  /** Zero form of the given dimension. */
  explicit SkewForm(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0) {}
  /** Throws MalformedInput if the rows are not square and skew-symmetric. */
  explicit SkewForm(const std::vector<std::vector<int>>& rows);

  int dim() const { return dim_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  /** Sets entry (i, j) and its mirror (j, i) = -value. */
  void set(int i, int j, int value);

  /** Lambda(e, f) = sum_ij e_i lambda_ij f_j. */
  long pair(const LatticeVec& e, const LatticeVec& f) const;
  /** The row vector e^T Lambda, so that pair(e, f) = dot(row_image(e), f). */
  std::vector<long> row_image(const LatticeVec& e) const;

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const SkewForm&, const SkewForm&) = default;

 private:
  int dim_ = 0;
  std::vector<int> a_;
};

/**
 * Sparse element of the based quantum supertorus: a finite combination of
 * basis monomials X^e (odd components of e in {0,1}) with QScalar
 * coefficients. Keys are kept in lexicographic order and zero coefficients
 * are never stored.
 */
class SuperPoly {
 public:
  using Terms = std::map<LatticeVec, QScalar>;

  SuperPoly() = default;
  explicit SuperPoly(GradedShape shape) : shape_(shape) {}

  static SuperPoly constant(GradedShape shape, const QScalar& c);
  /** c * X^e; e must be a basis-monomial vector. */
  static SuperPoly monomial(GradedShape shape, const LatticeVec& e, const QScalar& c = QScalar(1));

  const GradedShape& shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /** Coefficient of X^e (zero if absent). */
  QScalar coeff(const LatticeVec& e) const;

  void add_term(const LatticeVec& e, const QScalar& c);
  void add_term(LatticeVec&& e, const QScalar& c);

  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  SuperPoly operator-() const;
  /** Scalars are central, so left and right scaling agree. */
  SuperPoly& operator*=(const QScalar& c);

  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(const QScalar& c, SuperPoly a) { return a *= c; }

  friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SuperPoly& a, const SuperPoly& b) { return !(a == b); }

 private:
  GradedShape shape_;
  Terms terms_;
};

SuperPoly poly_add(const SuperPoly& a, const SuperPoly& b);
SuperPoly poly_scale(const QScalar& c, const SuperPoly& a);

/**
 * Number of pairs (j1, j2) with j1 > j2, j1 in the odd support of e and j2
 * in the odd support of f.
 */
int tau(const LatticeVec& e, const LatticeVec& f, const GradedShape& shape);

/** Sign and q-power of a basis-monomial product X^e X^f = sign q^(half/2) X^(e+f). */
struct MonoProduct {
  bool zero = false;
  bool negative = false;
  long half = 0;
  LatticeVec key;
};

MonoProduct mono_product(const SkewForm& lambda, const GradedShape& shape, const LatticeVec& e,
                         const LatticeVec& f);

/** X^e X^f as a SuperPoly (zero when an odd component of e+f reaches 2). */
SuperPoly mono_mul(const SkewForm& lambda, const GradedShape& shape, const LatticeVec& e,
                   const LatticeVec& f);

/** Bilinear extension of the monomial law. */
SuperPoly poly_mul(const SkewForm& lambda, const SuperPoly& a, const SuperPoly& b);

/** a^k for k >= 0. */
SuperPoly poly_pow(const SkewForm& lambda, const SuperPoly& a, int k);

/**
 * Half-exponent h of the normal-ordering prefactor:
 * X^e = q^(h/2) X_1^(a_1) ... X_(n+m)^(a_(n+m)) with h = sum_{l<k} a_k a_l lambda_kl.
 */
long factor_ordered(const SkewForm& lambda, const LatticeVec& e);

/**
 * Inverse of a single-term SuperPoly with pure-even key and monomial
 * coefficient. Throws NotDivisible for anything else.
 */
SuperPoly monomial_inverse(const SkewForm& lambda, const SuperPoly& a);

/**
 * Exact right division: returns Q with poly_mul(lambda, Q, b) == a.
 *
 * Greedy division under a group-compatible term order whose leading term
 * of b is pure-even; quotient supports are confined to a box derived from
 * the supports of a and b, which makes the loop terminate on non-divisible
 * input. Throws ZeroDivisor when no admissible order makes the leading term
 * of b pure-even, NotDivisible when no exact quotient exists and
 * DivisionByZero for b == 0.
 */
SuperPoly exact_div_right(const SkewForm& lambda, const SuperPoly& a, const SuperPoly& b);

/** Evaluates every coefficient at q^(1/2) = 1 (returns a SuperPoly with constant coefficients). */
SuperPoly specialize_at_one(const SuperPoly& a);

/** True iff every coefficient lies in Z[q^(+-1/2)]. */
bool is_integral(const SuperPoly& a);

}  // namespace qsuper
