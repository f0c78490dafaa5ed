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

#include "qsuper/compat.hpp"

#include <algorithm>
#include <sstream>

#include "qsuper/errors.hpp"

namespace qsuper {

std::string to_string(CompatMode mode) { return mode == CompatMode::Strict ? "strict" : "permissive"; }

CompatMode compat_mode_from_string(const std::string& s) {
  if (s == "strict") return CompatMode::Strict;
  if (s == "permissive") return CompatMode::Permissive;
  throw MalformedInput("unknown compatibility mode \"" + s + "\"");
}

std::string to_string(CompatViolation::Kind kind) {
  switch (kind) {
    case CompatViolation::Kind::OffDiagonal:
      return "off_diagonal";
    case CompatViolation::Kind::NonPositive:
      return "nonpositive_d";
    case CompatViolation::Kind::TwoPath:
      return "two_path";
  }
  return "unknown";
}

std::string CompatViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::OffDiagonal:
      os << "B^T(L11 L12) has entry " << value << " at (" << row + 1 << "," << col + 1 << ")";
      break;
    case Kind::NonPositive:
      os << "d_" << row + 1 << " = " << value << " is not admissible";
      break;
    case Kind::TwoPath:
      os << "lambda(" << row + 1 << ", xi" << odd_a + 1 << ") != -lambda(" << row + 1 << ", xi"
         << odd_b + 1 << ")";
      break;
  }
  return os.str();
}

IntMatrix d_matrix(const ExtQuiver& q, const SkewForm& lambda) {
  if (lambda.dim() != q.n + q.m) throw DimensionMismatch("lambda must be (n+m) x (n+m)");
  const IntMatrix b = b_matrix(q);
  IntMatrix d(q.l, q.n + q.m);
  for (int j = 0; j < q.l; ++j) {
    for (int c = 0; c < q.n + q.m; ++c) {
      long s = 0;
      for (int i = 0; i < q.n; ++i) s += b(i, j) * lambda(i, c);
      d(j, c) = s;
    }
  }
  return d;
}

CompatReport check_compatible(const ExtQuiver& q, const SkewForm& lambda, CompatMode mode) {
  CompatReport rep;
  rep.mode = mode;
  const IntMatrix d = d_matrix(q, lambda);
  const IntMatrix b = b_matrix(q);
  for (int j = 0; j < q.l; ++j) {
    for (int c = 0; c < q.n + q.m; ++c) {
      if (c != j && d(j, c) != 0) {
        rep.violations.push_back({CompatViolation::Kind::OffDiagonal, j, c, -1, -1, d(j, c)});
      }
    }
    const long dj = d(j, j);
    bool zero_column = true;
    for (int i = 0; i < q.n; ++i) zero_column = zero_column && b(i, j) == 0;
    const bool admissible =
        dj > 0 || (mode == CompatMode::Permissive && dj == 0 && zero_column);
    if (!admissible) rep.violations.push_back({CompatViolation::Kind::NonPositive, j, 0, -1, -1, dj});
    rep.d_entries.push_back(dj);
  }
  for (const auto& p : two_paths(q)) {
    const int ca = q.n + p.odd_src;
    const int cb = q.n + p.odd_dst;
    for (int i = 0; i < q.n + q.m; ++i) {
      if (i == ca || i == cb) continue;
      if (lambda(i, ca) != -lambda(i, cb)) {
        CompatViolation v{CompatViolation::Kind::TwoPath, i, 0, p.odd_src, p.odd_dst,
                          static_cast<long>(lambda(i, ca)) + lambda(i, cb)};
        if (std::find(rep.violations.begin(), rep.violations.end(), v) == rep.violations.end()) {
          rep.violations.push_back(v);
        }
      }
    }
  }
  rep.ok = rep.violations.empty();
  return rep;
}

IntMatrix e_matrix(const IntMatrix& b, int k, int eps) {
  const int n = b.rows;
  IntMatrix e = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i) e(i, k) = i == k ? -1 : std::max(0L, -eps * b(i, k));
  return e;
}

IntMatrix f_matrix(const IntMatrix& b, int k, int eps) {
  const int l = b.cols;
  IntMatrix f = IntMatrix::identity(l);
  for (int j = 0; j < l; ++j) f(k, j) = j == k ? -1 : std::max(0L, eps * b(k, j));
  return f;
}

MutMatrices mut_matrices(const IntMatrix& b, int k, int eps) {
  return {e_matrix(b, k, eps), f_matrix(b, k, eps), eps};
}

SkewForm mutate_lambda(const SkewForm& lambda, const IntMatrix& b, int k, int eps,
                       ConjugationOrder order) {
  const int n = b.rows;
  const int dim = lambda.dim();
  if (n > dim) throw DimensionMismatch("exchange matrix larger than lambda");
  IntMatrix big = IntMatrix::identity(dim);
  const IntMatrix e = e_matrix(b, k, eps);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) big(i, j) = e(i, j);
  }
  IntMatrix lam(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) lam(i, j) = lambda(i, j);
  }
  const IntMatrix out = order == ConjugationOrder::TransposeLeft ? big.transpose() * lam * big
                                                                 : big * lam * big.transpose();
  SkewForm r(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) r.set(i, j, static_cast<int>(out(i, j)));
  }
  return r;
}

}  // namespace qsuper
