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

#include "qsuper/coeff.hpp"

#include <sstream>
#include <vector>

#include "qsuper/errors.hpp"

namespace qsuper {

QScalar::QScalar(long c) {
  if (c != 0) terms_.emplace(0, Rational(c));
}

QScalar::QScalar(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

QScalar QScalar::monomial(const Rational& c, int half) {
  QScalar r;
  if (c != 0) r.terms_.emplace(half, c);
  return r;
}

void QScalar::add_term(int half, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(half, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QScalar& QScalar::operator+=(const QScalar& o) {
  for (const auto& [h, c] : o.terms_) add_term(h, c);
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) {
  for (const auto& [h, c] : o.terms_) add_term(h, -c);
  return *this;
}

QScalar& QScalar::operator*=(const QScalar& o) {
  *this = *this * o;
  return *this;
}

void QScalar::shift(int half, bool negate) {
  if (half == 0 && !negate) return;
  Terms out;
  for (auto& [h, c] : terms_) {
    out.emplace_hint(out.end(), h + half, negate ? Rational(-c) : c);
  }
  terms_ = std::move(out);
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  for (auto& [h, c] : r.terms_) c = -c;
  return r;
}

Rational QScalar::at_one() const {
  Rational s = 0;
  for (const auto& [h, c] : terms_) s += c;
  return s;
}

QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }

QScalar operator*(const QScalar& a, const QScalar& b) {
  QScalar r;
  for (const auto& [ha, ca] : a.terms()) {
    for (const auto& [hb, cb] : b.terms()) r.add_term(ha + hb, ca * cb);
  }
  return r;
}

QScalar qs_add(const QScalar& a, const QScalar& b) { return a + b; }
QScalar qs_mul(const QScalar& a, const QScalar& b) { return a * b; }

QScalar qs_div_exact(const QScalar& a, const QScalar& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    const auto& [hb, cb] = *b.terms().begin();
    QScalar r;
    for (const auto& [h, c] : a.terms()) r.add_term(h - hb, c / cb);
    return r;
  }
  // Shift both operands into Q[t], t = q^(1/2); the divisor then has a
  // nonzero constant term, so Laurent divisibility equals polynomial divisibility.
  const int a_lo = a.terms().begin()->first;
  const int b_lo = b.terms().begin()->first;
  const int a_deg = a.terms().rbegin()->first - a_lo;
  const int b_deg = b.terms().rbegin()->first - b_lo;
  if (a_deg < b_deg) throw NotDivisible("scalar division leaves a remainder");
  std::vector<Rational> rem(a_deg + 1, Rational(0));
  std::vector<Rational> div(b_deg + 1, Rational(0));
  for (const auto& [h, c] : a.terms()) rem[h - a_lo] = c;
  for (const auto& [h, c] : b.terms()) div[h - b_lo] = c;
  std::vector<Rational> quo(a_deg - b_deg + 1, Rational(0));
  for (int i = a_deg - b_deg; i >= 0; --i) {
    const Rational f = rem[i + b_deg] / div[b_deg];
    if (f == 0) continue;
    quo[i] = f;
    for (int j = 0; j <= b_deg; ++j) rem[i + j] -= f * div[j];
  }
  for (const auto& c : rem) {
    if (c != 0) throw NotDivisible("scalar division leaves a remainder");
  }
  QScalar r;
  for (int i = 0; i < static_cast<int>(quo.size()); ++i) r.add_term(i + a_lo - b_lo, quo[i]);
  return r;
}

bool qs_is_integral(const QScalar& a) {
  for (const auto& [h, c] : a.terms()) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw MalformedInput("not a rational: \"" + s + "\"");
  }
  Rational r(mpz_class(num[0] == '+' ? num.substr(1) : num), mpz_class(den));
  if (r.get_den() == 0) throw MalformedInput("zero denominator: \"" + s + "\"");
  r.canonicalize();
  return r;
}

namespace {

std::string q_power(int half) {
  if (half == 0) return "";
  if (half == 2) return "q";
  if (half % 2 == 0) return "q^{" + std::to_string(half / 2) + "}";
  return "q^{" + std::to_string(half) + "/2}";
}

}  // namespace

std::string to_string(const QScalar& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [h, c] : a.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::string qp = q_power(h);
    if (qp.empty()) {
      os << rational_to_string(mag);
    } else {
      if (mag != 1) os << rational_to_string(mag) << " ";
      os << qp;
    }
  }
  return os.str();
}

}  // namespace qsuper
