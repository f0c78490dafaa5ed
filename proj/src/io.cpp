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

#include "qsuper/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qsuper/errors.hpp"

namespace qsuper::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw MalformedInput(path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

bool as_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

int parse_key(const std::string& key, const std::string& path) {
  int v = 0;
  const char* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, v);
  if (ec != std::errc() || ptr != end || key.empty()) fail(path, "key \"" + key + "\" is not an integer");
  return v;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& path, const std::string& k) { return path + "." + k; }

}  // namespace

Json to_json(const QScalar& a) {
  Json j = Json::object();
  for (const auto& [h, c] : a.terms()) j[std::to_string(h)] = rational_to_string(c);
  return j;
}

QScalar qscalar_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a q-scalar object");
  QScalar out;
  for (const auto& [k, v] : j.items()) {
    const int h = parse_key(k, path);
    if (!v.is_string()) fail(dot(path, k), "expected a rational string");
    Rational r;
    try {
      r = rational_from_string(v.get<std::string>());
    } catch (const MalformedInput& e) {
      fail(dot(path, k), e.what());
    }
    if (r == 0) fail(dot(path, k), "zero coefficients are not stored");
    out.add_term(h, r);
  }
  return out;
}

Json to_json(const SuperPoly& p) {
  Json j = Json::array();
  for (const auto& [e, c] : p.terms()) j.push_back({{"exp", e.to_vector()}, {"coeff", to_json(c)}});
  return j;
}

SuperPoly superpoly_from_json(const Json& j, const GradedShape& shape, const std::string& path) {
  as_array(j, path);
  SuperPoly out(shape);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string p = at(path, t);
    const Json& exp = as_array(field(j[t], "exp", p), dot(p, "exp"));
    if (static_cast<int>(exp.size()) != shape.dim()) fail(dot(p, "exp"), "wrong exponent length");
    LatticeVec e(shape.dim());
    for (int i = 0; i < shape.dim(); ++i) e[i] = static_cast<int>(as_int(exp[i], at(dot(p, "exp"), i)));
    if (!e.is_basis(shape)) fail(dot(p, "exp"), "odd exponents must be 0 or 1");
    const QScalar c = qscalar_from_json(field(j[t], "coeff", p), dot(p, "coeff"));
    if (c.is_zero()) fail(dot(p, "coeff"), "zero term");
    if (!out.coeff(e).is_zero()) fail(p, "duplicate exponent");
    out.add_term(e, c);
  }
  return out;
}

Json to_json(const SkewForm& lambda) { return lambda.rows(); }

SkewForm skewform_from_json(const Json& j, const std::string& path) {
  as_array(j, path);
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    as_array(j[i], at(path, i));
    std::vector<int> row;
    for (std::size_t c = 0; c < j[i].size(); ++c) row.push_back(static_cast<int>(as_int(j[i][c], at(at(path, i), c))));
    rows.push_back(std::move(row));
  }
  try {
    return SkewForm(rows);
  } catch (const MalformedInput& e) {
    fail(path, e.what());
  }
}

Json to_json(const ExtQuiver& q) {
  Json arrows = Json::array();
  for (int i = 0; i < q.n; ++i) {
    for (int k = 0; k < q.n; ++k) {
      if (q.arrow(i, k) > 0) arrows.push_back({i + 1, k + 1, q.arrow(i, k)});
    }
  }
  auto incidences = [&](const std::vector<std::set<int>>& sets) {
    Json o = Json::object();
    for (int k = 0; k < q.n; ++k) {
      if (sets[k].empty()) continue;
      Json list = Json::array();
      for (int a : sets[k]) list.push_back(a + 1);
      o[std::to_string(k + 1)] = list;
    }
    return o;
  };
  return {{"n", q.n},
          {"m", q.m},
          {"mutable", q.l},
          {"even_arrows", arrows},
          {"odd_in", incidences(q.odd_in)},
          {"odd_out", incidences(q.odd_out)}};
}

ExtQuiver quiver_from_json(const Json& j, const std::string& path) {
  const long n = as_int(field(j, "n", path), dot(path, "n"));
  const long m = as_int(field(j, "m", path), dot(path, "m"));
  const long l = j.contains("mutable") ? as_int(j["mutable"], dot(path, "mutable")) : n;
  if (n < 1 || n > 64) fail(dot(path, "n"), "must lie in [1, 64]");
  if (m < 0 || m > 32) fail(dot(path, "m"), "must lie in [0, 32]");
  if (l < 0 || l > n) fail(dot(path, "mutable"), "must lie in [0, n]");
  ExtQuiver q(static_cast<int>(n), static_cast<int>(m), static_cast<int>(l));

  if (j.contains("even_arrows")) {
    const std::string p = dot(path, "even_arrows");
    const Json& arrows = as_array(j["even_arrows"], p);
    for (std::size_t t = 0; t < arrows.size(); ++t) {
      const std::string pt = at(p, t);
      if (!arrows[t].is_array() || arrows[t].size() < 2 || arrows[t].size() > 3) {
        fail(pt, "expected [from, to] or [from, to, multiplicity]");
      }
      const long from = as_int(arrows[t][0], at(pt, 0));
      const long to = as_int(arrows[t][1], at(pt, 1));
      const long mult = arrows[t].size() == 3 ? as_int(arrows[t][2], at(pt, 2)) : 1;
      if (from < 1 || from > n || to < 1 || to > n) fail(pt, "vertex out of range");
      if (mult < 1) fail(at(pt, 2), "multiplicity must be positive");
      if (q.arrow(static_cast<int>(from - 1), static_cast<int>(to - 1)) != 0) fail(pt, "duplicate arrow");
      q.arrow(static_cast<int>(from - 1), static_cast<int>(to - 1)) = static_cast<int>(mult);
    }
  }
  auto incidences = [&](const char* key, std::vector<std::set<int>>& sets) {
    if (!j.contains(key)) return;
    const std::string p = dot(path, key);
    if (!j[key].is_object()) fail(p, "expected an object keyed by even vertex");
    for (const auto& [k, list] : j[key].items()) {
      const int v = parse_key(k, p);
      if (v < 1 || v > n) fail(dot(p, k), "even vertex out of range");
      as_array(list, dot(p, k));
      for (std::size_t t = 0; t < list.size(); ++t) {
        const long a = as_int(list[t], at(dot(p, k), t));
        if (a < 1 || a > m) fail(at(dot(p, k), t), "odd vertex out of range");
        if (!sets[v - 1].insert(static_cast<int>(a - 1)).second) fail(at(dot(p, k), t), "duplicate odd vertex");
      }
    }
  };
  incidences("odd_in", q.odd_in);
  incidences("odd_out", q.odd_out);
  const std::string bad = q.invariant_violation();
  if (!bad.empty()) fail(path, bad);
  return q;
}

Json to_json(const CompatReport& r, int n) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json o = {{"kind", to_string(x.kind)}, {"value", x.value}, {"message", x.describe()}};
    switch (x.kind) {
      case CompatViolation::Kind::OffDiagonal:
        o["column"] = x.row + 1;
        o["entry"] = x.col + 1;
        break;
      case CompatViolation::Kind::NonPositive:
        o["column"] = x.row + 1;
        break;
      case CompatViolation::Kind::TwoPath:
        o["row"] = x.row + 1;
        o["pair"] = {n + x.odd_a + 1, n + x.odd_b + 1};
        break;
    }
    v.push_back(o);
  }
  return {{"ok", r.ok}, {"mode", to_string(r.mode)}, {"d", r.d_entries}, {"violations", v}};
}

Json to_json(const std::vector<AllowedConditions>& table) {
  Json out = Json::array();
  for (const auto& c : table) {
    out.push_back({{"neighbour", c.neighbour + 1},
                   {"same_in", c.same_in},
                   {"same_out", c.same_out},
                   {"k_isolated", c.k_isolated},
                   {"crossed", c.crossed},
                   {"l_isolated", c.l_isolated},
                   {"satisfied", c.any()}});
  }
  return out;
}

Json to_json(const MutationTrace& t) {
  Json out = Json::array();
  for (const auto& s : t.steps()) {
    out.push_back({{"vertex", s.vertex + 1}, {"allowed", s.allowed}, {"divided", s.divided}, {"integral", s.integral}});
  }
  return out;
}

MutationTrace trace_from_json(const Json& j, const std::string& path) {
  as_array(j, path);
  MutationTrace t;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at(path, i);
    TraceStep s;
    s.vertex = static_cast<int>(as_int(field(j[i], "vertex", p), dot(p, "vertex"))) - 1;
    s.allowed = as_bool(field(j[i], "allowed", p), dot(p, "allowed"));
    s.divided = as_bool(field(j[i], "divided", p), dot(p, "divided"));
    s.integral = as_bool(field(j[i], "integral", p), dot(p, "integral"));
    t.append(s);
  }
  return t;
}

Json to_json(const QuantumSeed& s) {
  Json vars = Json::array();
  for (const auto& v : s.vars) vars.push_back(to_json(v));
  return {{"quiver", to_json(s.quiver)},
          {"lambda", to_json(s.lambda_cur)},
          {"lambda_init", to_json(s.lambda_init)},
          {"mode", to_string(s.mode)},
          {"vars", vars},
          {"trace", to_json(s.trace)}};
}

QuantumSeed seed_from_json(const Json& j, const std::string& path) {
  QuantumSeed s;
  s.quiver = quiver_from_json(field(j, "quiver", path), dot(path, "quiver"));
  s.lambda_cur = skewform_from_json(field(j, "lambda", path), dot(path, "lambda"));
  s.lambda_init = j.contains("lambda_init") ? skewform_from_json(j["lambda_init"], dot(path, "lambda_init"))
                                            : s.lambda_cur;
  const int dim = s.quiver.n + s.quiver.m;
  if (s.lambda_cur.dim() != dim) fail(dot(path, "lambda"), "dimension differs from n+m");
  if (s.lambda_init.dim() != dim) fail(dot(path, "lambda_init"), "dimension differs from n+m");
  if (j.contains("mode")) {
    const Json& mode = j["mode"];
    if (!mode.is_string()) fail(dot(path, "mode"), "expected a string");
    try {
      s.mode = compat_mode_from_string(mode.get<std::string>());
    } catch (const MalformedInput& e) {
      fail(dot(path, "mode"), e.what());
    }
  }
  const std::string pv = dot(path, "vars");
  const Json& vars = as_array(field(j, "vars", path), pv);
  if (static_cast<int>(vars.size()) != dim) fail(pv, "expected n+m variables");
  for (std::size_t i = 0; i < vars.size(); ++i) s.vars.push_back(superpoly_from_json(vars[i], s.shape(), at(pv, i)));
  if (j.contains("trace")) s.trace = trace_from_json(j["trace"], dot(path, "trace"));
  return s;
}

Json to_json(const LaurentCertificate& c) {
  Json seq = Json::array();
  for (int k : c.sequence) seq.push_back(k + 1);
  Json verdicts = Json::array();
  for (const auto& v : c.verdicts) {
    Json o = {{"vertex", v.vertex + 1},
              {"allowed", v.allowed},
              {"divisible", v.divisible},
              {"coefficients_integral", v.coefficients_integral}};
    if (!v.note.empty()) o["note"] = v.note;
    verdicts.push_back(o);
  }
  return {{"sequence", seq}, {"verdicts", verdicts}, {"overall", c.overall}};
}

SeedInput input_from_json(const Json& j) {
  SeedInput in;
  in.quiver = quiver_from_json(field(j, "quiver", "$"), "$.quiver");
  in.lambda = skewform_from_json(field(j, "lambda", "$"), "$.lambda");
  if (in.lambda.dim() != in.quiver.n + in.quiver.m) fail("$.lambda", "dimension differs from n+m");
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) fail("$.mode", "expected a string");
    try {
      in.mode = compat_mode_from_string(j["mode"].get<std::string>());
    } catch (const MalformedInput& e) {
      fail("$.mode", e.what());
    }
  }
  return in;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput("$: invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace qsuper::io
