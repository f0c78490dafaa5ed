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

#include <gmpxx.h>

#include <map>
#include <string>

namespace qsuper {

using Rational = mpq_class;

/**
 * An element of Q[q^(1/2), q^(-1/2)].
 *
 * Terms are keyed by the half-exponent h, so the key h stands for q^(h/2).
 * No stored coefficient is ever zero, which makes structural equality the
 * ring equality.
 */
class QScalar {
 public:
  using Terms = std::map<int, Rational>;

  QScalar() = default;
  QScalar(long c);  // NOLINT(google-explicit-constructor)
  QScalar(const Rational& c);  // NOLINT(google-explicit-constructor)

  /** c * q^(half/2) */
  static QScalar monomial(const Rational& c, int half);
  /** q^(half/2) */
  static QScalar q_pow(int half) { return monomial(1, half); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /** True iff this is c * q^(h/2) for a single term. */
  bool is_monomial() const { return terms_.size() == 1; }

  /** Adds c * q^(half/2) in place. */
  void add_term(int half, const Rational& c);

  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);

  /** Multiplies by (-1)^sign_bit * q^(half/2) in place. */
  void shift(int half, bool negate = false);

  QScalar operator-() const;

  /** Value at q^(1/2) = 1. */
  Rational at_one() const;

  friend bool operator==(const QScalar& a, const QScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

 private:
  Terms terms_;
};

QScalar operator+(QScalar a, const QScalar& b);
QScalar operator-(QScalar a, const QScalar& b);
QScalar operator*(const QScalar& a, const QScalar& b);

QScalar qs_add(const QScalar& a, const QScalar& b);
QScalar qs_mul(const QScalar& a, const QScalar& b);

/**
 * Exact quotient c with c * b == a.
 *
 * Throws DivisionByZero when b == 0 and NotDivisible when the univariate
 * long division leaves a nonzero remainder.
 */
QScalar qs_div_exact(const QScalar& a, const QScalar& b);

/** True iff every coefficient is an integer, i.e. the value lies in Z[q^(+-1/2)]. */
bool qs_is_integral(const QScalar& a);

/** Human-readable form, e.g. "2 - q^{-1/2} + 3/2 q". */
std::string to_string(const QScalar& a);

/** "p" or "p/r" in lowest terms. */
std::string rational_to_string(const Rational& r);
/** Inverse of rational_to_string; throws MalformedInput. */
Rational rational_from_string(const std::string& s);

}  // namespace qsuper
