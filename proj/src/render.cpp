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

#include "qsuper/render.hpp"

#include <algorithm>
#include <vector>

#include "qsuper/errors.hpp"

namespace qsuper {

RenderFormat render_format_from_string(const std::string& s) {
  if (s == "pretty") return RenderFormat::Pretty;
  if (s == "latex") return RenderFormat::Latex;
  throw MalformedInput("unknown render format \"" + s + "\"");
}

namespace {

std::string exponent(const std::string& e) { return "^{" + e + "}"; }

std::string half_string(int half) {
  if (half % 2 == 0) return std::to_string(half / 2);
  return std::to_string(half) + "/2";
}

std::string rational(const Rational& r, RenderFormat fmt) {
  if (fmt == RenderFormat::Latex && r.get_den() != 1) {
    return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
  }
  return rational_to_string(r);
}

std::string generator(const GradedShape& shape, int i, RenderFormat fmt) {
  if (shape.is_odd(i)) {
    const std::string idx = std::to_string(i - shape.n + 1);
    return fmt == RenderFormat::Latex ? "\\xi_{" + idx + "}" : "ξ" + idx;
  }
  return fmt == RenderFormat::Latex ? "x_{" + std::to_string(i + 1) + "}" : "x" + std::to_string(i + 1);
}

std::string word(const GradedShape& shape, const LatticeVec& e, RenderFormat fmt) {
  std::vector<std::string> parts;
  for (int i = 0; i < shape.dim(); ++i) {
    if (e[i] == 0) continue;
    std::string g = generator(shape, i, fmt);
    if (e[i] != 1) g += exponent(std::to_string(e[i]));
    parts.push_back(g);
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

/** Scalar times word, with the sign split off so terms can be joined by " + " / " - ". */
struct Piece {
  bool negative = false;
  std::string body;
};

Piece scalar_times(const QScalar& c, const std::string& w, RenderFormat fmt) {
  Piece p;
  if (c.is_monomial()) {
    const auto& [h, r] = *c.terms().begin();
    p.negative = r < 0;
    const Rational mag = abs(r);
    std::string s;
    if (mag != 1 || (h == 0 && w.empty())) s = rational(mag, fmt);
    const std::string qp = render_q_power(h, fmt);
    for (const std::string* part : {&qp, &w}) {
      if (part->empty()) continue;
      s += (s.empty() ? "" : " ") + *part;
    }
    p.body = s;
    return p;
  }
  std::string s;
  bool first = true;
  for (const auto& [h, r] : c.terms()) {
    const Piece t = scalar_times(QScalar::monomial(r, h), "", fmt);
    if (first) {
      s += (t.negative ? "-" : "") + t.body;
    } else {
      s += (t.negative ? " - " : " + ") + t.body;
    }
    first = false;
  }
  const std::string open = fmt == RenderFormat::Latex ? "\\left(" : "(";
  const std::string close = fmt == RenderFormat::Latex ? "\\right)" : ")";
  p.body = open + s + close + (w.empty() ? "" : " " + w);
  return p;
}

std::string join(const std::vector<Piece>& pieces) {
  std::string s;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      s += (pieces[i].negative ? "-" : "") + pieces[i].body;
    } else {
      s += (pieces[i].negative ? " - " : " + ") + pieces[i].body;
    }
  }
  return s;
}

std::vector<Piece> ordered_terms(const SkewForm& lambda, const SuperPoly& p, RenderFormat fmt) {
  std::vector<Piece> pieces;
  for (const auto& [e, c] : p.terms()) {
    // X^e = q^(h/2) X_1^(a_1) ... so the word carries the scalar c q^(h/2).
    QScalar s = c;
    s.shift(static_cast<int>(factor_ordered(lambda, e)));
    pieces.push_back(scalar_times(s, word(p.shape(), e, fmt), fmt));
  }
  return pieces;
}

}  // namespace

std::string render_q_power(int half, RenderFormat fmt) {
  if (half == 0) return "";
  if (half == 2) return "q";
  if (fmt == RenderFormat::Latex && half % 2 != 0) {
    return std::string("q^{") + (half < 0 ? "-" : "") + "\\frac{" + std::to_string(std::abs(half)) + "}{2}}";
  }
  return "q" + exponent(half_string(half));
}

std::string render(const SkewForm& lambda, const SuperPoly& p, RenderFormat fmt) {
  if (p.is_zero()) return "0";
  const GradedShape& shape = p.shape();
  LatticeVec common(shape.dim());
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < shape.n; ++i) common[i] = first ? e[i] : std::min(common[i], e[i]);
    first = false;
  }
  if (p.size() == 1 || common.is_zero()) return join(ordered_terms(lambda, p, fmt));

  // Y = X_1^(g_1) ... X_n^(g_n) * rest; that word equals q^(-h/2) X^g.
  const QScalar prefix_scalar = QScalar::q_pow(-static_cast<int>(factor_ordered(lambda, common)));
  SuperPoly prefix = SuperPoly::monomial(shape, common, prefix_scalar);
  const SuperPoly rest = poly_mul(lambda, monomial_inverse(lambda, prefix), p);
  const std::string open = fmt == RenderFormat::Latex ? "\\left(" : "(";
  const std::string close = fmt == RenderFormat::Latex ? "\\right)" : ")";
  return word(shape, common, fmt) + " " + open + join(ordered_terms(lambda, rest, fmt)) + close;
}

}  // namespace qsuper
