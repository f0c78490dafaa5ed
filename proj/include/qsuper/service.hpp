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

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "qsuper/io.hpp"
#include "qsuper/seed.hpp"

namespace httplib {
class Server;
}

namespace qsuper {

/** One interactive exploration: the current seed plus a stack of earlier snapshots. */
struct Session {
  std::string id;
  QuantumSeed seed;
  std::vector<QuantumSeed> history;
  std::mutex lock;
};

/** Status code and JSON body of an API call. */
struct ApiResponse {
  int status = 200;
  io::Json body;
};

/**
 * Transport-independent implementation of the session API. Requests on one
 * session are serialized by its mutex; distinct sessions run concurrently.
 */
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> state_dir = std::nullopt);

  ApiResponse create(const std::string& body);
  ApiResponse get(const std::string& id);
  ApiResponse mutate(const std::string& id, const std::string& body);
  ApiResponse undo(const std::string& id);
  ApiResponse variables(const std::string& id, const std::string& format);

  std::size_t size() const;

 private:
  std::shared_ptr<Session> find(const std::string& id) const;
  std::string fresh_id();
  void snapshot(const Session& s) const;
  void restore();

  std::optional<std::filesystem::path> state_dir_;
  mutable std::shared_mutex map_lock_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

/** JSON view of a session: seed, depth, allowedness overlay and rendered variables. */
io::Json session_state(const Session& s);

/** Registers every route of the API on the server. */
void install_routes(httplib::Server& server, SessionStore& store);

/** Port from QSUPER_PORT, falling back to 8080. */
int default_port();

}  // namespace qsuper
