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

#include "qsuper/service.hpp"

#include <httplib.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "qsuper/errors.hpp"
#include "qsuper/quiver.hpp"
#include "qsuper/render.hpp"

namespace qsuper {

namespace {

ApiResponse error(int status, const std::string& reason, const std::string& message, io::Json extra = {}) {
  io::Json body = extra.is_object() ? extra : io::Json::object();
  body["error"] = reason;
  body["reason"] = reason;
  body["message"] = message;
  return {status, body};
}

std::string generator_name(const GradedShape& shape, int i) {
  return shape.is_odd(i) ? "ξ" + std::to_string(i - shape.n + 1) : "x" + std::to_string(i + 1);
}

}  // namespace

io::Json session_state(const Session& s) {
  const QuantumSeed& seed = s.seed;
  io::Json allowed = io::Json::array();
  for (int k = 0; k < seed.quiver.l; ++k) {
    allowed.push_back({{"vertex", k + 1},
                       {"allowed", is_allowed_def(seed.quiver, k)},
                       {"lemma", is_allowed_lemma(seed.quiver, k)},
                       {"conditions", io::to_json(allowed_conditions(seed.quiver, k))}});
  }
  io::Json rendered = io::Json::array();
  for (std::size_t i = 0; i < seed.vars.size(); ++i) {
    rendered.push_back(render(seed.lambda_init, seed.vars[i], RenderFormat::Pretty));
  }
  io::Json frozen = io::Json::array();
  for (bool f : seed.frozen()) frozen.push_back(f);
  return {{"id", s.id},
          {"depth", s.history.size()},
          {"seed", io::to_json(seed)},
          {"frozen", frozen},
          {"allowedness", allowed},
          {"variables", rendered}};
}

SessionStore::SessionStore(std::optional<std::filesystem::path> state_dir) : state_dir_(std::move(state_dir)) {
  if (state_dir_) {
    std::filesystem::create_directories(*state_dir_);
    restore();
  }
}

std::size_t SessionStore::size() const {
  std::shared_lock g(map_lock_);
  return sessions_.size();
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
  std::shared_lock g(map_lock_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::string SessionStore::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream os;
  os << std::hex << rng();
  return os.str();
}

void SessionStore::snapshot(const Session& s) const {
  if (!state_dir_) return;
  io::Json history = io::Json::array();
  for (const auto& h : s.history) history.push_back(io::to_json(h));
  const io::Json doc = {{"id", s.id}, {"seed", io::to_json(s.seed)}, {"history", history}};
  const auto target = *state_dir_ / (s.id + ".json");
  const auto tmp = *state_dir_ / (s.id + ".json.tmp");
  {
    std::ofstream out(tmp);
    out << io::dump(doc);
  }
  std::filesystem::rename(tmp, target);
}

void SessionStore::restore() {
  for (const auto& entry : std::filesystem::directory_iterator(*state_dir_)) {
    if (entry.path().extension() != ".json") continue;
    try {
      const io::Json doc = io::read_file(entry.path().string());
      auto s = std::make_shared<Session>();
      s->id = doc.at("id").get<std::string>();
      s->seed = io::seed_from_json(doc.at("seed"), "$.seed");
      for (const auto& h : doc.at("history")) s->history.push_back(io::seed_from_json(h, "$.history"));
      sessions_[s->id] = s;
    } catch (const std::exception&) {
      // unreadable snapshots are skipped
    }
  }
}

ApiResponse SessionStore::create(const std::string& body) {
  auto s = std::make_shared<Session>();
  try {
    const io::SeedInput in = io::input_from_json(io::parse_text(body));
    s->seed = initial_seed(in.quiver, in.lambda, in.mode.value_or(CompatMode::Strict));
  } catch (const Incompatible& e) {
    return error(422, "incompatible", e.what(), {{"report", io::to_json(e.report, 0)}});
  } catch (const Error& e) {
    return error(422, "malformed", e.what());
  }
  {
    std::unique_lock g(map_lock_);
    do {
      s->id = fresh_id();
    } while (sessions_.count(s->id));
    sessions_[s->id] = s;
  }
  std::lock_guard g(s->lock);
  snapshot(*s);
  return {201, session_state(*s)};
}

ApiResponse SessionStore::get(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown-session", "no session " + id);
  std::lock_guard g(s->lock);
  return {200, session_state(*s)};
}

ApiResponse SessionStore::mutate(const std::string& id, const std::string& body) {
  auto s = find(id);
  if (!s) return error(404, "unknown-session", "no session " + id);
  long vertex = 0;
  try {
    const io::Json j = io::parse_text(body);
    if (!j.is_object() || !j.contains("vertex") || !j["vertex"].is_number_integer()) {
      return error(422, "malformed", "$.vertex: expected an integer");
    }
    vertex = j["vertex"].get<long>();
  } catch (const Error& e) {
    return error(422, "malformed", e.what());
  }
  std::lock_guard g(s->lock);
  const QuantumSeed& cur = s->seed;
  if (vertex < 1 || vertex > cur.quiver.n + cur.quiver.m) {
    return error(422, "malformed", "$.vertex: out of range");
  }
  const int k = static_cast<int>(vertex - 1);
  if (cur.is_frozen(k)) {
    const std::string why = cur.shape().is_odd(k) ? "odd coordinates are frozen" : "vertex is frozen";
    return error(409, "frozen", why, {{"vertex", vertex}});
  }
  try {
    QuantumSeed next = mutate_seed(cur, k);
    s->history.push_back(cur);
    s->seed = std::move(next);
  } catch (const NotAllowed& e) {
    return error(409, "not-allowed", e.what(),
                 {{"vertex", vertex}, {"conditions", io::to_json(allowed_conditions(cur.quiver, k))}});
  } catch (const Incompatible& e) {
    return error(409, "incompatible", e.what(), {{"vertex", vertex}, {"report", io::to_json(e.report, cur.quiver.n)}});
  } catch (const Error& e) {
    return error(409, "not-divisible", e.what(), {{"vertex", vertex}});
  }
  snapshot(*s);
  return {200, session_state(*s)};
}

ApiResponse SessionStore::undo(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown-session", "no session " + id);
  std::lock_guard g(s->lock);
  if (s->history.empty()) return error(409, "empty-history", "nothing to undo");
  s->seed = std::move(s->history.back());
  s->history.pop_back();
  snapshot(*s);
  return {200, session_state(*s)};
}

ApiResponse SessionStore::variables(const std::string& id, const std::string& format) {
  auto s = find(id);
  if (!s) return error(404, "unknown-session", "no session " + id);
  RenderFormat fmt;
  try {
    fmt = render_format_from_string(format.empty() ? "latex" : format);
  } catch (const Error& e) {
    return error(422, "malformed", e.what());
  }
  std::lock_guard g(s->lock);
  io::Json list = io::Json::array();
  const GradedShape shape = s->seed.shape();
  for (int i = 0; i < shape.dim(); ++i) {
    list.push_back({{"index", i + 1},
                    {"name", generator_name(shape, i)},
                    {"frozen", s->seed.is_frozen(i)},
                    {"render", render(s->seed.lambda_init, s->seed.vars[i], fmt)}});
  }
  return {200, {{"format", format.empty() ? "latex" : format}, {"variables", list}}};
}

void install_routes(httplib::Server& server, SessionStore& store) {
  auto reply = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(io::dump(r.body), "application/json");
  };
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.Get("/health", [reply](const httplib::Request&, httplib::Response& res) {
    reply(res, {200, {{"status", "ok"}}});
  });
  server.Post("/sessions", [&store, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, store.create(req.body));
  });
  server.Get(R"(/sessions/([^/]+))", [&store, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, store.get(req.matches[1]));
  });
  server.Post(R"(/sessions/([^/]+)/mutate)",
              [&store, reply](const httplib::Request& req, httplib::Response& res) {
                reply(res, store.mutate(req.matches[1], req.body));
              });
  server.Post(R"(/sessions/([^/]+)/undo)", [&store, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, store.undo(req.matches[1]));
  });
  server.Get(R"(/sessions/([^/]+)/variables)",
             [&store, reply](const httplib::Request& req, httplib::Response& res) {
               reply(res, store.variables(req.matches[1], req.get_param_value("format")));
             });
}

int default_port() {
  if (const char* env = std::getenv("QSUPER_PORT")) {
    try {
      const int p = std::stoi(env);
      if (p > 0 && p < 65536) return p;
    } catch (const std::exception&) {
    }
  }
  return 8080;
}

}  // namespace qsuper
