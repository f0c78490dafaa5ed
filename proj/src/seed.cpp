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

#include "qsuper/seed.hpp"

#include <cstdlib>
#include <string>

namespace qsuper {

namespace {

std::string summarize(const CompatReport& r) {
  std::string s = "incompatible pair (" + to_string(r.mode) + ")";
  for (const auto& v : r.violations) s += "; " + v.describe();
  return s;
}

bool invertible_monomial(const SuperPoly& p) {
  if (p.size() != 1) return false;
  const auto& [e, c] = *p.terms().begin();
  return !e.has_odd_part(p.shape()) && c.is_monomial();
}

}  // namespace

Incompatible::Incompatible(CompatReport r) : Error(summarize(r)), report(std::move(r)) {}

std::vector<bool> QuantumSeed::frozen() const {
  std::vector<bool> f(quiver.n + quiver.m);
  for (int i = 0; i < static_cast<int>(f.size()); ++i) f[i] = is_frozen(i);
  return f;
}

QuantumSeed initial_seed(const ExtQuiver& q, const SkewForm& lambda, CompatMode mode) {
  q.validate();
  auto report = check_compatible(q, lambda, mode);
  if (!report.ok) throw Incompatible(std::move(report));
  QuantumSeed s;
  s.quiver = q;
  s.lambda_cur = lambda;
  s.lambda_init = lambda;
  s.mode = mode;
  const GradedShape shape{q.n, q.m};
  for (int i = 0; i < shape.dim(); ++i) {
    s.vars.push_back(SuperPoly::monomial(shape, LatticeVec::unit(shape.dim(), i)));
  }
  return s;
}

SuperPoly frame_monomial(const QuantumSeed& seed, const LatticeVec& c) {
  const GradedShape shape = seed.shape();
  if (c.size() != shape.dim()) throw DimensionMismatch("frame argument has the wrong length");
  if (!c.is_basis(shape)) throw MalformedInput("odd frame components must be 0 or 1");
  SuperPoly out = SuperPoly::constant(shape, QScalar::q_pow(static_cast<int>(factor_ordered(seed.lambda_cur, c))));
  for (int i = 0; i < shape.dim(); ++i) {
    if (c[i] == 0) continue;
    const SuperPoly* base = &seed.vars[i];
    SuperPoly inverse;
    if (c[i] < 0) {
      if (!invertible_monomial(seed.vars[i])) {
        throw NegativePowerOfPolynomialVariable("variable " + std::to_string(i + 1) +
                                                " is not a monomial and cannot be inverted");
      }
      inverse = monomial_inverse(seed.lambda_init, seed.vars[i]);
      base = &inverse;
    }
    for (int p = 0; p < std::abs(c[i]); ++p) out = poly_mul(seed.lambda_init, out, *base);
  }
  return out;
}

namespace {

/** M(-e_k + v) M(e_k) = q^(Lambda(v, e_k)/2) M(v); returns the right-hand side. */
SuperPoly exchange_term(const QuantumSeed& seed, const LatticeVec& v, int k) {
  const int dim = seed.shape().dim();
  SuperPoly m = frame_monomial(seed, v);
  m *= QScalar::q_pow(static_cast<int>(seed.lambda_cur.pair(v, LatticeVec::unit(dim, k))));
  return m;
}

struct ExchangeExponents {
  LatticeVec incoming;  // sum_{b_ik > 0} b_ik e_i
  LatticeVec outgoing;  // sum_{b_ik < 0} -b_ik e_i
};

ExchangeExponents exchange_exponents(const ExtQuiver& q, int k) {
  const int dim = q.n + q.m;
  ExchangeExponents x{LatticeVec(dim), LatticeVec(dim)};
  for (int i = 0; i < q.n; ++i) {
    const int b = q.arrow(i, k) - q.arrow(k, i);
    if (b > 0) x.incoming[i] = b;
    if (b < 0) x.outgoing[i] = -b;
  }
  return x;
}

}  // namespace

QuantumSeed mutate_seed(const QuantumSeed& seed, int k) {
  const GradedShape shape = seed.shape();
  if (k < 0 || k >= seed.quiver.l) throw MutationOnFrozen(k);
  if (!is_allowed_def(seed.quiver, k)) throw NotAllowed(k);

  const auto ex = exchange_exponents(seed.quiver, k);
  SuperPoly numerator = exchange_term(seed, ex.incoming, k);
  numerator += exchange_term(seed, ex.outgoing, k);
  for (const auto& p : two_paths(seed.quiver)) {
    if (p.mid != k) continue;
    const int a = shape.n + p.odd_src;
    const int b = shape.n + p.odd_dst;
    LatticeVec v = ex.incoming;
    v[a] += 1;
    v[b] += 1;
    SuperPoly t = exchange_term(seed, v, k);
    if (tau(LatticeVec::unit(shape.dim(), a), LatticeVec::unit(shape.dim(), b), shape) % 2 != 0) {
      t = -t;
    }
    numerator += t;
  }

  QuantumSeed out = seed;
  out.vars[k] = exact_div_right(seed.lambda_init, numerator, seed.vars[k]);
  out.quiver = mutate_quiver(seed.quiver, k);
  out.lambda_cur = mutate_lambda(seed.lambda_cur, b_matrix(seed.quiver), k, 1);
  auto report = check_compatible(out.quiver, out.lambda_cur, seed.mode);
  if (!report.ok) throw Incompatible(std::move(report));
  out.trace.append({k, true, true, is_integral(out.vars[k])});
  return out;
}

DoubleMutationReport double_mutation_report(const QuantumSeed& seed, int k) {
  const GradedShape shape = seed.shape();
  const int dim = shape.dim();
  const QuantumSeed once = mutate_seed(seed, k);
  const QuantumSeed twice = mutate_seed(once, k);

  auto signed_sum = [&](const ExtQuiver& q, bool with_k) {
    SuperPoly sum(shape);
    for (const auto& p : two_paths(q)) {
      if (p.mid != k) continue;
      const int a = shape.n + p.odd_src;
      const int b = shape.n + p.odd_dst;
      LatticeVec v(dim);
      if (with_k) v[k] = 1;
      v[a] += 1;
      v[b] += 1;
      SuperPoly t = frame_monomial(seed, v);
      if (tau(LatticeVec::unit(dim, a), LatticeVec::unit(dim, b), shape) % 2 != 0) t = -t;
      sum += t;
    }
    return sum;
  };

  DoubleMutationReport r;
  const SuperPoly& xk = seed.vars[k];
  const SuperPoly& xk2 = twice.vars[k];
  r.correction_identity = xk2 - xk == signed_sum(once.quiver, true);
  const SuperPoly one = SuperPoly::constant(shape, 1);
  r.printed_recovery = poly_mul(seed.lambda_init, xk2, one + signed_sum(seed.quiver, false)) == xk;
  r.inverse_recovery = poly_mul(seed.lambda_init, xk, one + signed_sum(once.quiver, false)) == xk2;
  return r;
}

bool double_mutation_check(const QuantumSeed& seed, int k) {
  return double_mutation_report(seed, k).correction_identity;
}

SuperPoly classical_exchange(const QuantumSeed& seed, int k) {
  const GradedShape shape = seed.shape();
  if (k < 0 || k >= seed.quiver.l) throw MutationOnFrozen(k);
  if (!is_allowed_def(seed.quiver, k)) throw NotAllowed(k);
  const SkewForm flat(shape.dim());
  std::vector<SuperPoly> x;
  for (const auto& v : seed.vars) x.push_back(specialize_at_one(v));

  const auto ex = exchange_exponents(seed.quiver, k);
  auto product = [&](const LatticeVec& powers) {
    SuperPoly p = SuperPoly::constant(shape, 1);
    for (int i = 0; i < shape.n; ++i) {
      for (int t = 0; t < powers[i]; ++t) p = poly_mul(flat, p, x[i]);
    }
    return p;
  };
  const SuperPoly in = product(ex.incoming);
  SuperPoly odd_in(shape), odd_out(shape);
  for (int a : seed.quiver.odd_in[k]) odd_in += x[shape.n + a];
  for (int b : seed.quiver.odd_out[k]) odd_out += x[shape.n + b];

  SuperPoly numerator = in + product(ex.outgoing);
  numerator += poly_mul(flat, poly_mul(flat, odd_in, odd_out), in);
  return exact_div_right(flat, numerator, x[k]);
}

}  // namespace qsuper
