// Copyright 2026 The Authors.
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

// Session registry with on-disk persistence.
//
// Layout under the data directory, one folder per session:
//
//   <id>/session.json    id, creation time, election
//   <id>/events.jsonl    one SessionEvent per line, append-only
//   <id>/snapshot.json   fold state every `snapshot_every` events
//   <id>/report.json     written once on finalize
//
// Mutations of one session are serialized; readers get the last published
// immutable state without waiting for a writer.

#ifndef AGORA_SESSION_STORE_HPP_
#define AGORA_SESSION_STORE_HPP_

#include <cstdint>
#include <functional>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "agora/session.hpp"

namespace agora {

struct StoreOptions {
  /// Unset keeps everything in memory.
  std::optional<std::string> data_dir;
  std::size_t scenario_cache_size = 256;
  std::size_t snapshot_every = 50;
  /// Milliseconds since the epoch; defaults to the system clock.
  std::function<std::int64_t()> clock;
  /// Defaults to 16 random hex digits.
  std::function<std::string()> id_generator;
};

/// LRU over (election digest, budget).
class ScenarioCache {
 public:
  explicit ScenarioCache(std::size_t capacity) : capacity_(capacity) {}

  std::shared_ptr<const Scenario> find(const std::string& digest, Money budget);
  void insert(const std::string& digest, Money budget, std::shared_ptr<const Scenario> s);

  std::size_t hits() const;
  std::size_t misses() const;
  std::size_t size() const;

 private:
  using Key = std::pair<std::string, Money>;
  using Entry = std::pair<Key, std::shared_ptr<const Scenario>>;

  mutable std::mutex mu_;
  std::size_t capacity_;
  std::list<Entry> order_;  // most recent first
  std::map<Key, std::list<Entry>::iterator> index_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

class SessionStore {
 public:
  /// Loads every session found under `data_dir`.
  explicit SessionStore(StoreOptions options = {});
  ~SessionStore();

  SessionStore(const SessionStore&) = delete;
  SessionStore& operator=(const SessionStore&) = delete;

  std::string create_session(Election election);
  std::shared_ptr<const Session> get(const std::string& id) const;
  std::vector<std::string> session_ids() const;

  /// Logs ScenarioViewed unless the session is finalized.
  std::shared_ptr<const Scenario> get_scenario(const std::string& id, Money budget);
  std::shared_ptr<const Session> commit_ratio(const std::string& id, Money mes_budget);
  std::shared_ptr<const Session> veto_project(const std::string& id, const ProjectId& project_id,
                                              const std::string& decided_by);
  std::shared_ptr<const Session> adjust_project_budget(const std::string& id,
                                                       const ProjectId& project_id,
                                                       Money new_cost);
  std::shared_ptr<const Session> rtr_vote(const std::string& id, const LikertRecord& vote);
  ShiftReport rtr_report(const std::string& id) const;
  /// Returns the final report.
  json finalize(const std::string& id, const std::vector<RankingSheet>& rankings = {});

  /// Events with offset <= index < offset + limit.
  std::vector<SessionEvent> events(const std::string& id, std::size_t offset,
                                   std::size_t limit) const;
  std::size_t event_count(const std::string& id) const;

  const ScenarioCache& cache() const noexcept { return cache_; }

 private:
  struct Slot;

  std::shared_ptr<Slot> slot(const std::string& id) const;
  std::shared_ptr<const Session> append(Slot& slot, EventKind kind, json payload);
  std::shared_ptr<const Scenario> scenario_for(const Slot& slot, const Election& e, Money budget);
  void persist_header(const Session& s) const;
  void load_dir(const std::string& dir);
  std::int64_t now() const;

  StoreOptions options_;
  ScenarioCache cache_;
  mutable std::shared_mutex map_mu_;
  std::map<std::string, std::shared_ptr<Slot>> slots_;
};

}  // namespace agora

#endif  // AGORA_SESSION_STORE_HPP_
