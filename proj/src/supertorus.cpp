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

#include "qsuper/supertorus.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <string>

#include "qsuper/errors.hpp"

namespace qsuper {

// ---------------------------------------------------------------------------
// LatticeVec

bool LatticeVec::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool LatticeVec::is_basis(const GradedShape& s) const {
  if (size() != s.dim()) return false;
  for (int i = s.n; i < s.dim(); ++i) {
    if (c_[i] != 0 && c_[i] != 1) return false;
  }
  return true;
}

bool LatticeVec::has_odd_part(const GradedShape& s) const {
  for (int i = s.n; i < s.dim(); ++i) {
    if (c_[i] != 0) return true;
  }
  return false;
}

int LatticeVec::odd_degree(const GradedShape& s) const {
  int d = 0;
  for (int i = s.n; i < s.dim(); ++i) d += c_[i];
  return d;
}

LatticeVec& LatticeVec::operator+=(const LatticeVec& o) {
  for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
  return *this;
}

LatticeVec& LatticeVec::operator-=(const LatticeVec& o) {
  for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

LatticeVec LatticeVec::operator-() const {
  LatticeVec r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LatticeVec LatticeVec::operator*(int k) const {
  LatticeVec r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

// ---------------------------------------------------------------------------
// SkewForm

SkewForm::SkewForm(const std::vector<std::vector<int>>& rows) : SkewForm(static_cast<int>(rows.size())) {
  for (int i = 0; i < dim_; ++i) {
    if (static_cast<int>(rows[i].size()) != dim_) {
      throw MalformedInput("lambda is not square (row " + std::to_string(i + 1) + ")");
    }
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (rows[i][j] != -rows[j][i]) {
        throw MalformedInput("lambda is not skew-symmetric at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
      }
      a_[static_cast<std::size_t>(i) * dim_ + j] = rows[i][j];
    }
  }
}

void SkewForm::set(int i, int j, int value) {
  a_[static_cast<std::size_t>(i) * dim_ + j] = value;
  a_[static_cast<std::size_t>(j) * dim_ + i] = -value;
}

long SkewForm::pair(const LatticeVec& e, const LatticeVec& f) const {
  long s = 0;
  for (int i = 0; i < dim_; ++i) {
    if (e[i] == 0) continue;
    long row = 0;
    for (int j = 0; j < dim_; ++j) row += static_cast<long>((*this)(i, j)) * f[j];
    s += e[i] * row;
  }
  return s;
}

std::vector<long> SkewForm::row_image(const LatticeVec& e) const {
  std::vector<long> r(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (e[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) r[j] += static_cast<long>(e[i]) * (*this)(i, j);
  }
  return r;
}

std::vector<std::vector<int>> SkewForm::rows() const {
  std::vector<std::vector<int>> r(dim_, std::vector<int>(dim_));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) r[i][j] = (*this)(i, j);
  }
  return r;
}

// ---------------------------------------------------------------------------
// SuperPoly

SuperPoly SuperPoly::constant(GradedShape shape, const QScalar& c) {
  return monomial(shape, LatticeVec(shape.dim()), c);
}

SuperPoly SuperPoly::monomial(GradedShape shape, const LatticeVec& e, const QScalar& c) {
  if (!e.is_basis(shape)) throw MalformedInput("exponent is not a basis-monomial vector");
  SuperPoly p(shape);
  p.add_term(e, c);
  return p;
}

QScalar SuperPoly::coeff(const LatticeVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QScalar() : it->second;
}

void SuperPoly::add_term(const LatticeVec& e, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SuperPoly::add_term(LatticeVec&& e, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  if (!(shape_ == o.shape_)) throw DimensionMismatch("superpolynomial shapes differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  if (!(shape_ == o.shape_)) throw DimensionMismatch("superpolynomial shapes differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SuperPoly& SuperPoly::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SuperPoly poly_add(const SuperPoly& a, const SuperPoly& b) { return a + b; }
SuperPoly poly_scale(const QScalar& c, const SuperPoly& a) { return c * a; }

// ---------------------------------------------------------------------------
// Multiplication

namespace {

/** Bitmask of the odd support; bit t stands for lattice coordinate n + t. */
std::uint64_t odd_mask(const LatticeVec& e, const GradedShape& s) {
  std::uint64_t mask = 0;
  for (int i = s.n; i < s.dim(); ++i) {
    if (e[i] != 0) mask |= std::uint64_t{1} << (i - s.n);
  }
  return mask;
}

int tau_masks(std::uint64_t oe, std::uint64_t of) {
  int count = 0;
  while (oe != 0) {
    const int j1 = std::countr_zero(oe);
    oe &= oe - 1;
    count += std::popcount(of & ((std::uint64_t{1} << j1) - 1));
  }
  return count;
}

void check_shape(const SkewForm& lambda, const GradedShape& s) {
  if (lambda.dim() != s.dim()) throw DimensionMismatch("form dimension does not match the lattice");
  if (s.m > 63) throw DimensionMismatch("at most 63 odd coordinates are supported");
}

}  // namespace

int tau(const LatticeVec& e, const LatticeVec& f, const GradedShape& shape) {
  return tau_masks(odd_mask(e, shape), odd_mask(f, shape));
}

MonoProduct mono_product(const SkewForm& lambda, const GradedShape& shape, const LatticeVec& e,
                         const LatticeVec& f) {
  MonoProduct r;
  const auto oe = odd_mask(e, shape);
  const auto of = odd_mask(f, shape);
  if ((oe & of) != 0) {
    r.zero = true;
    return r;
  }
  r.negative = (tau_masks(oe, of) & 1) != 0;
  r.half = lambda.pair(e, f);
  r.key = e + f;
  return r;
}

SuperPoly mono_mul(const SkewForm& lambda, const GradedShape& shape, const LatticeVec& e,
                   const LatticeVec& f) {
  check_shape(lambda, shape);
  SuperPoly out(shape);
  auto p = mono_product(lambda, shape, e, f);
  if (!p.zero) out.add_term(std::move(p.key), QScalar::monomial(p.negative ? -1 : 1, static_cast<int>(p.half)));
  return out;
}

SuperPoly poly_mul(const SkewForm& lambda, const SuperPoly& a, const SuperPoly& b) {
  if (!(a.shape() == b.shape())) throw DimensionMismatch("superpolynomial shapes differ");
  const GradedShape s = a.shape();
  check_shape(lambda, s);
  SuperPoly out(s);
  if (a.is_zero() || b.is_zero()) return out;

  struct Left {
    const LatticeVec* key;
    const QScalar* coeff;
    std::vector<long> image;  // e^T Lambda
    std::uint64_t odd;
  };
  std::vector<Left> left;
  left.reserve(a.size());
  for (const auto& [e, c] : a.terms()) left.push_back({&e, &c, lambda.row_image(e), odd_mask(e, s)});

  const int dim = s.dim();
  for (const auto& [f, cf] : b.terms()) {
    const auto of = odd_mask(f, s);
    for (const auto& l : left) {
      if ((l.odd & of) != 0) continue;
      long half = 0;
      for (int j = 0; j < dim; ++j) half += l.image[j] * f[j];
      const bool neg = (tau_masks(l.odd, of) & 1) != 0;
      QScalar c = (*l.coeff) * cf;
      c.shift(static_cast<int>(half), neg);
      out.add_term(*l.key + f, c);
    }
  }
  return out;
}

SuperPoly poly_pow(const SkewForm& lambda, const SuperPoly& a, int k) {
  SuperPoly r = SuperPoly::constant(a.shape(), 1);
  for (int i = 0; i < k; ++i) r = poly_mul(lambda, r, a);
  return r;
}

long factor_ordered(const SkewForm& lambda, const LatticeVec& e) {
  long h = 0;
  for (int k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    for (int l = 0; l < k; ++l) h += static_cast<long>(e[k]) * e[l] * lambda(k, l);
  }
  return h;
}

SuperPoly monomial_inverse(const SkewForm& lambda, const SuperPoly& a) {
  if (a.size() != 1) throw NotDivisible("only single-term elements are inverted");
  const auto& [e, c] = *a.terms().begin();
  if (e.has_odd_part(a.shape())) throw NotDivisible("odd monomials are nilpotent");
  if (!c.is_monomial()) throw NotDivisible("coefficient is not a unit");
  // X^e X^(-e) = q^(Lambda(e,-e)/2) = 1, so only the coefficient needs inverting.
  (void)lambda;
  const auto& [h, r] = *c.terms().begin();
  return SuperPoly::monomial(a.shape(), -e, QScalar::monomial(1 / r, -h));
}

// ---------------------------------------------------------------------------
// Division

namespace {

/**
 * Group-compatible total order on exponent vectors: weighted total degree
 * of the even part, then weighted lex on the even part, then fewer odd
 * generators first-largest, then reverse lex on the odd part.
 */
struct DivisionOrder {
  const GradedShape* shape;
  std::vector<int> sign;  // +-1 per even coordinate

  // Returns <0, 0, >0.
  int compare(const LatticeVec& a, const LatticeVec& b) const {
    long da = 0, db = 0;
    for (int i = 0; i < shape->n; ++i) {
      da += static_cast<long>(sign[i]) * a[i];
      db += static_cast<long>(sign[i]) * b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < shape->n; ++i) {
      if (a[i] != b[i]) return sign[i] * (a[i] - b[i]) < 0 ? -1 : 1;
    }
    const int oa = a.odd_degree(*shape), ob = b.odd_degree(*shape);
    if (oa != ob) return oa > ob ? -1 : 1;
    for (int i = shape->n; i < shape->dim(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
  bool operator()(const LatticeVec& a, const LatticeVec& b) const { return compare(a, b) < 0; }
};

struct Box {
  std::vector<long> lo, hi;
  bool contains(const LatticeVec& e, int n) const {
    for (int i = 0; i < n; ++i) {
      if (e[i] < lo[i] || e[i] > hi[i]) return false;
    }
    return true;
  }
};

}  // namespace

SuperPoly exact_div_right(const SkewForm& lambda, const SuperPoly& a, const SuperPoly& b) {
  if (!(a.shape() == b.shape())) throw DimensionMismatch("superpolynomial shapes differ");
  const GradedShape s = a.shape();
  check_shape(lambda, s);
  if (b.is_zero()) throw DivisionByZero();
  SuperPoly quotient(s);
  if (a.is_zero()) return quotient;

  if (b.size() == 1) {
    const auto& [e, c] = *b.terms().begin();
    if (!e.has_odd_part(s) && c.is_monomial()) return poly_mul(lambda, a, monomial_inverse(lambda, b));
  }

  // Pick the first sign pattern whose leading term of b is pure-even.
  const int n = s.n;
  std::optional<DivisionOrder> order;
  for (unsigned mask = 0; mask < (1u << std::min(n, 16)); ++mask) {
    DivisionOrder cand{&s, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) cand.sign[i] = (mask >> i) & 1u ? -1 : 1;
    const LatticeVec* lead = nullptr;
    for (const auto& [e, c] : b.terms()) {
      if (lead == nullptr || cand(*lead, e)) lead = &e;
    }
    if (!lead->has_odd_part(s)) {
      order = std::move(cand);
      break;
    }
  }
  if (!order) throw ZeroDivisor("divisor has no pure-even leading term under any admissible order");

  // Support bounds for quotient terms, per odd degree of the quotient term.
  const long inf = std::numeric_limits<long>::max() / 4;
  std::vector<long> a_lo(n, inf), a_hi(n, -inf), b_lo(n, inf), b_hi(n, -inf), p_lo(n, inf), p_hi(n, -inf);
  for (const auto& [e, c] : a.terms()) {
    for (int i = 0; i < n; ++i) {
      a_lo[i] = std::min<long>(a_lo[i], e[i]);
      a_hi[i] = std::max<long>(a_hi[i], e[i]);
    }
  }
  for (const auto& [e, c] : b.terms()) {
    const bool pure = !e.has_odd_part(s);
    for (int i = 0; i < n; ++i) {
      b_lo[i] = std::min<long>(b_lo[i], e[i]);
      b_hi[i] = std::max<long>(b_hi[i], e[i]);
      if (pure) {
        p_lo[i] = std::min<long>(p_lo[i], e[i]);
        p_hi[i] = std::max<long>(p_hi[i], e[i]);
      }
    }
  }
  std::vector<Box> boxes(s.m + 1, Box{std::vector<long>(n), std::vector<long>(n)});
  for (int i = 0; i < n; ++i) {
    boxes[0].lo[i] = a_lo[i] - p_lo[i];
    boxes[0].hi[i] = a_hi[i] - p_hi[i];
  }
  for (int d = 1; d <= s.m; ++d) {
    for (int i = 0; i < n; ++i) {
      boxes[d].lo[i] = std::min(boxes[d - 1].lo[i],
                                std::min(a_lo[i], boxes[d - 1].lo[i] + b_lo[i]) - p_lo[i]);
      boxes[d].hi[i] = std::max(boxes[d - 1].hi[i],
                                std::max(a_hi[i], boxes[d - 1].hi[i] + b_hi[i]) - p_hi[i]);
    }
  }

  std::map<LatticeVec, QScalar, DivisionOrder> rem(*order);
  for (const auto& [e, c] : a.terms()) rem.emplace(e, c);

  // Divisor terms in the same order; the leading one is pure-even.
  std::vector<std::pair<LatticeVec, QScalar>> divisor(b.terms().begin(), b.terms().end());
  std::sort(divisor.begin(), divisor.end(),
            [&](const auto& x, const auto& y) { return (*order)(y.first, x.first); });
  const LatticeVec& lead_key = divisor.front().first;
  const QScalar& lead_coeff = divisor.front().second;

  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    LatticeVec qkey = top->first - lead_key;
    const int deg = qkey.odd_degree(s);
    if (!boxes[deg].contains(qkey, n)) {
      throw NotDivisible("remainder requires a quotient term outside the support bound");
    }
    // X^qkey X^lead = q^(Lambda(qkey, lead)/2) X^top, no sign since lead is even.
    QScalar scale = lead_coeff;
    scale.shift(static_cast<int>(lambda.pair(qkey, lead_key)));
    QScalar qc = qs_div_exact(top->second, scale);

    for (const auto& [f, cf] : divisor) {
      auto p = mono_product(lambda, s, qkey, f);
      if (p.zero) continue;
      QScalar c = qc * cf;
      c.shift(static_cast<int>(p.half), !p.negative);  // subtract
      auto [it, inserted] = rem.try_emplace(std::move(p.key), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quotient.add_term(std::move(qkey), qc);
  }
  return quotient;
}

SuperPoly specialize_at_one(const SuperPoly& a) {
  SuperPoly r(a.shape());
  for (const auto& [e, c] : a.terms()) r.add_term(e, QScalar(c.at_one()));
  return r;
}

bool is_integral(const SuperPoly& a) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [](const auto& t) { return qs_is_integral(t.second); });
}

}  // namespace qsuper
