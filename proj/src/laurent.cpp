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

#include "qsuper/laurent.hpp"

#include <numeric>

#include "qsuper/errors.hpp"

namespace qsuper {

SuperPoly DirectionExpansion::reassemble(const SkewForm& lambda, const GradedShape& shape) const {
  SuperPoly out(shape);
  for (const auto& [r, c] : coefficients) {
    out += poly_mul(lambda, c, SuperPoly::monomial(shape, LatticeVec::unit(shape.dim(), direction) * r));
  }
  return out;
}

DirectionExpansion expand_in_direction(const SkewForm& lambda, const SuperPoly& y, int j) {
  const GradedShape& shape = y.shape();
  if (j < 0 || j >= shape.n) throw DimensionMismatch("expansion direction must be an even index");
  DirectionExpansion ex;
  ex.direction = j;
  const LatticeVec ej = LatticeVec::unit(shape.dim(), j);
  for (const auto& [alpha, a] : y.terms()) {
    // X^alpha = q^(-r Lambda(alpha, e_j)/2) X^(alpha - r e_j) X^(r e_j)
    const int r = alpha[j];
    LatticeVec beta = alpha;
    beta[j] = 0;
    const long half = -static_cast<long>(r) * lambda.pair(alpha, ej);
    auto [it, fresh] = ex.coefficients.try_emplace(r, shape);
    it->second.add_term(beta, a * QScalar::q_pow(static_cast<int>(half)));
    if (it->second.is_zero()) ex.coefficients.erase(it);
  }
  return ex;
}

ExtendedColumn extended_b_column(const ExtQuiver& q, int j) {
  if (j < 0 || j >= q.l) throw MutationOnFrozen(j);
  ExtendedColumn col{LatticeVec(q.n + q.m), {}};
  for (int i = 0; i < q.n; ++i) col.column[i] = q.arrow(i, j) - q.arrow(j, i);
  for (int a : q.odd_in[j]) col.column[q.n + a] = 1;
  for (int b : q.odd_out[j]) col.column[q.n + b] = -1;
  for (int a : q.odd_in[j]) {
    for (int b : q.odd_out[j]) col.odd_pairs.emplace_back(q.n + a, q.n + b);
  }
  return col;
}

long d_min(const SkewForm& lambda, const LatticeVec& b) {
  long g = 0;
  for (long v : lambda.row_image(b)) g = std::gcd(g, v);
  return g;
}

namespace {

LatticeVec even_part(const LatticeVec& v, int n) {
  LatticeVec out(v.size());
  for (int i = 0; i < n; ++i) out[i] = v[i];
  return out;
}

}  // namespace

SuperPoly p_element(const ExtQuiver& q, const SkewForm& lambda, int j, int r) {
  if (r < 1) throw MalformedInput("p_element needs r >= 1");
  const GradedShape shape{q.n, q.m};
  const ExtendedColumn col = extended_b_column(q, j);
  const LatticeVec b = even_part(col.column, q.n);
  const long d = d_min(lambda, b);

  SuperPoly odd(shape);
  for (const auto& [k, kp] : col.odd_pairs) {
    const LatticeVec ek = LatticeVec::unit(shape.dim(), k);
    const LatticeVec ekp = LatticeVec::unit(shape.dim(), kp);
    odd.add_term(ek + ekp, QScalar(tau(ek, ekp, shape) % 2 ? -1 : 1));
  }
  SuperPoly out = SuperPoly::constant(shape, 1);
  for (int p = 1; p <= r; ++p) {
    SuperPoly factor = SuperPoly::constant(shape, 1) + odd;
    factor.add_term(-b, QScalar::q_pow(static_cast<int>((1 - 2 * p) * d)));
    out = poly_mul(lambda, out, factor);
  }
  return out;
}

LatticeVec exchange_exponent(const ExtQuiver& q, int j) {
  LatticeVec e = -LatticeVec::unit(q.n + q.m, j);
  for (int i = 0; i < q.n; ++i) {
    const int b = q.arrow(i, j) - q.arrow(j, i);
    if (b > 0) e[i] += b;
  }
  return e;
}

bool divisibility_check(const SuperPoly& y, int j, const ExtQuiver& q, const SkewForm& lambda) {
  const DirectionExpansion ex = expand_in_direction(lambda, y, j);
  for (const auto& [r, c] : ex.coefficients) {
    if (r >= 0) break;
    try {
      if (!is_integral(exact_div_right(lambda, c, p_element(q, lambda, j, -r)))) return false;
    } catch (const NotDivisible&) {
      return false;
    } catch (const ZeroDivisor&) {
      return false;
    }
  }
  return true;
}

LaurentCertificate laurent_certify(const QuantumSeed& seed, const std::vector<int>& sequence) {
  LaurentCertificate cert;
  cert.sequence = sequence;
  cert.final_seed = seed;
  bool ok = true;
  for (int k : sequence) {
    StepVerdict v;
    v.vertex = k;
    const QuantumSeed& cur = cert.final_seed;
    if (k < 0 || k >= cur.quiver.l) {
      v.note = "frozen";
    } else if (!is_allowed_def(cur.quiver, k)) {
      v.note = "not allowed";
    } else {
      v.allowed = true;
      try {
        QuantumSeed next = mutate_seed(cur, k);
        v.divisible = true;
        v.coefficients_integral = is_integral(next.vars[k]);
        cert.final_seed = std::move(next);
      } catch (const NotDivisible& e) {
        v.note = e.what();
      } catch (const ZeroDivisor& e) {
        v.note = e.what();
      } catch (const NegativePowerOfPolynomialVariable& e) {
        v.note = e.what();
      } catch (const Incompatible& e) {
        v.divisible = true;
        v.note = e.what();
      }
    }
    const bool step_ok = v.allowed && v.divisible && v.note.empty();
    cert.verdicts.push_back(std::move(v));
    if (!step_ok) {
      ok = false;
      break;
    }
  }
  cert.overall = ok;
  return cert;
}

std::vector<bool> adjacent_membership(const SuperPoly& y, const QuantumSeed& seed) {
  std::vector<bool> out;
  const bool integral = is_integral(y);
  for (int k = 0; k < seed.quiver.l; ++k) {
    out.push_back(integral && divisibility_check(y, k, seed.quiver, seed.lambda_cur));
  }
  return out;
}

}  // namespace qsuper
