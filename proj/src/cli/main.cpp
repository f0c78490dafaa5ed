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

#include <CLI11.hpp>
#include <httplib.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qsuper/errors.hpp"
#include "qsuper/io.hpp"
#include "qsuper/laurent.hpp"
#include "qsuper/render.hpp"
#include "qsuper/seed.hpp"
#include "qsuper/service.hpp"
#include "qsuper/survey.hpp"

namespace {

using namespace qsuper;

enum Exit : int { kOk = 0, kIncompatible = 2, kMalformed = 3, kNotDivisible = 4, kNotAllowed = 5 };

struct ModeFlags {
  bool strict = false;
  bool permissive = false;

  void attach(CLI::App* cmd) {
    auto* s = cmd->add_flag("--strict", strict, "require d_j > 0 for every mutable column");
    auto* p = cmd->add_flag("--permissive", permissive, "also accept d_j = 0 on zero columns");
    s->excludes(p);
  }
  CompatMode resolve(const std::optional<CompatMode>& from_file) const {
    if (strict) return CompatMode::Strict;
    if (permissive) return CompatMode::Permissive;
    return from_file.value_or(CompatMode::Strict);
  }
};

std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> seq;
  if (text.empty()) return seq;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1) throw MalformedInput("--seq: bad vertex \"" + item + "\"");
    seq.push_back(v - 1);
  }
  return seq;
}

int cmd_validate(const std::string& file, const ModeFlags& flags) {
  const io::SeedInput in = io::input_from_json(io::read_file(file));
  const CompatReport r = check_compatible(in.quiver, in.lambda, flags.resolve(in.mode));
  std::cout << io::to_json(r, in.quiver.n).dump(2) << "\n";
  return r.ok ? kOk : kIncompatible;
}

// Accepts either an input pair or a saved seed state (the output of
// `mutate --format json`), so a run can be resumed where it stopped.
QuantumSeed load_seed(const std::string& file, const ModeFlags& flags) {
  const io::Json doc = io::read_file(file);
  if (doc.is_object() && doc.contains("vars")) {
    QuantumSeed s = io::seed_from_json(doc);
    s.mode = flags.resolve(s.mode);
    const CompatReport r = check_compatible(s.quiver, s.lambda_cur, s.mode);
    if (!r.ok) throw Incompatible(r);
    return s;
  }
  const io::SeedInput in = io::input_from_json(doc);
  return initial_seed(in.quiver, in.lambda, flags.resolve(in.mode));
}

void print_seed(const QuantumSeed& s, const std::string& format) {
  if (format == "json") {
    std::cout << io::to_json(s).dump(2) << "\n";
    return;
  }
  const RenderFormat fmt = render_format_from_string(format);
  const GradedShape shape = s.shape();
  for (int i = 0; i < shape.dim(); ++i) {
    const std::string idx = std::to_string(i + 1);
    const std::string name = fmt == RenderFormat::Latex ? "X_{" + idx + "}" : "X" + idx;
    std::cout << name << " = " << render(s.lambda_init, s.vars[i], fmt) << "\n";
  }
}

int cmd_mutate(const std::string& file, const std::string& seq_text, const std::string& format,
               const ModeFlags& flags) {
  if (format != "json") render_format_from_string(format);
  QuantumSeed s = load_seed(file, flags);
  const std::vector<int> seq = parse_sequence(seq_text);
  for (std::size_t t = 0; t < seq.size(); ++t) {
    try {
      s = mutate_seed(s, seq[t]);
    } catch (const MutationOnFrozen& e) {
      std::cerr << "error: step " << t + 1 << ": " << e.what() << "\n";
      return kNotAllowed;
    } catch (const NotAllowed& e) {
      std::cerr << "error: step " << t + 1 << ": " << e.what() << "\n";
      return kNotAllowed;
    } catch (const NotDivisible& e) {
      std::cerr << "error: step " << t + 1 << ": " << e.what() << "\n";
      return kNotDivisible;
    } catch (const ZeroDivisor& e) {
      std::cerr << "error: step " << t + 1 << ": " << e.what() << "\n";
      return kNotDivisible;
    } catch (const NegativePowerOfPolynomialVariable& e) {
      std::cerr << "error: step " << t + 1 << ": " << e.what() << "\n";
      return kNotDivisible;
    }
  }
  print_seed(s, format);
  return kOk;
}

int cmd_laurent(const std::string& file, const std::string& seq_text, const ModeFlags& flags) {
  const QuantumSeed s = load_seed(file, flags);
  const LaurentCertificate cert = laurent_certify(s, parse_sequence(seq_text));
  std::cout << io::to_json(cert).dump(2) << "\n";
  if (cert.overall) return kOk;
  const StepVerdict& last = cert.verdicts.back();
  if (!last.allowed) return kNotAllowed;
  if (!last.divisible) return kNotDivisible;
  return kIncompatible;
}

int cmd_serve(const std::string& host, int port, const std::string& state_dir) {
  SessionStore store(state_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(state_dir));
  httplib::Server server;
  install_routes(server, store);
  std::cerr << "listening on " << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "error: cannot bind " << host << ":" << port << "\n";
    return 1;
  }
  return kOk;
}

int cmd_report(int max_n, int max_m, int max_mult, const std::string& out_file) {
  const AllowednessSurvey s = survey_allowedness(max_n, max_m, max_mult);
  io::Json cases = io::Json::array();
  for (const auto& c : s.disagreements) {
    cases.push_back({{"quiver", io::to_json(c.quiver)},
                     {"vertex", c.vertex + 1},
                     {"definition", c.by_definition},
                     {"lemma", c.by_lemma},
                     {"conditions", io::to_json(allowed_conditions(c.quiver, c.vertex))}});
  }
  const io::Json doc = {{"family", {{"max_n", s.max_n}, {"max_m", s.max_m}, {"max_multiplicity", s.max_multiplicity}}},
                        {"quivers", s.quivers},
                        {"checks", s.checks},
                        {"allowed_by_definition", s.allowed_by_definition},
                        {"allowed_by_lemma", s.allowed_by_lemma},
                        {"disagreement_count", s.disagreements.size()},
                        {"disagreements", cases}};
  if (out_file.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream(out_file) << doc.dump(2) << "\n";
    std::cout << s.checks << " checks, " << s.disagreements.size() << " disagreements\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mutation and Laurent certification for quantum cluster superalgebras"};
  app.require_subcommand(1);

  std::string file;
  std::string seq;
  std::string format = "pretty";
  ModeFlags vflags, mflags, lflags;

  auto* validate = app.add_subcommand("validate", "check compatibility of an input pair");
  validate->add_option("file", file, "input JSON")->required();
  vflags.attach(validate);

  auto* mutate = app.add_subcommand("mutate", "apply a mutation sequence and print the variables");
  mutate->add_option("file", file, "input JSON")->required();
  mutate->add_option("--seq", seq, "comma-separated 1-based vertices");
  mutate->add_option("--format", format, "json, pretty or latex")->check(CLI::IsMember({"json", "pretty", "latex"}));
  mflags.attach(mutate);

  auto* laurent = app.add_subcommand("laurent-check", "certify that every exchange divides exactly");
  laurent->add_option("file", file, "input JSON")->required();
  laurent->add_option("--seq", seq, "comma-separated 1-based vertices");
  lflags.attach(laurent);

  std::string host = "127.0.0.1";
  int port = default_port();
  std::string state_dir;
  auto* serve = app.add_subcommand("serve", "run the HTTP session API");
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "TCP port (default from QSUPER_PORT or 8080)");
  serve->add_option("--state-dir", state_dir, "directory for JSON session snapshots");

  int max_n = 3, max_m = 2, max_mult = 2;
  std::string out_file;
  auto* report = app.add_subcommand("allowedness-report", "compare both allowedness tests on a quiver family");
  report->add_option("--max-n", max_n)->check(CLI::Range(1, 4));
  report->add_option("--max-m", max_m)->check(CLI::Range(0, 3));
  report->add_option("--max-mult", max_mult)->check(CLI::Range(0, 3));
  report->add_option("--out", out_file, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kMalformed;
  }

  try {
    if (*validate) return cmd_validate(file, vflags);
    if (*mutate) return cmd_mutate(file, seq, format, mflags);
    if (*laurent) return cmd_laurent(file, seq, lflags);
    if (*serve) return cmd_serve(host, port, state_dir);
    if (*report) return cmd_report(max_n, max_m, max_mult, out_file);
  } catch (const Incompatible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIncompatible;
  } catch (const NotDivisible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotDivisible;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kOk;
}
