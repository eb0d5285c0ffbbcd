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

#include "agora/session_store.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "agora/ingest.hpp"

namespace agora {

namespace fs = std::filesystem;

std::shared_ptr<const Scenario> ScenarioCache::find(const std::string& digest, Money budget) {
  std::lock_guard lock(mu_);
  auto it = index_.find(Key{digest, budget});
  if (it == index_.end()) {
    ++misses_;
    return nullptr;
  }
  ++hits_;
  order_.splice(order_.begin(), order_, it->second);
  return it->second->second;
}

void ScenarioCache::insert(const std::string& digest, Money budget,
                           std::shared_ptr<const Scenario> s) {
  if (capacity_ == 0) return;
  std::lock_guard lock(mu_);
  Key key{digest, budget};
  if (auto it = index_.find(key); it != index_.end()) {
    it->second->second = std::move(s);
    order_.splice(order_.begin(), order_, it->second);
    return;
  }
  order_.emplace_front(key, std::move(s));
  index_.emplace(std::move(key), order_.begin());
  while (order_.size() > capacity_) {
    index_.erase(order_.back().first);
    order_.pop_back();
  }
}

std::size_t ScenarioCache::hits() const {
  std::lock_guard lock(mu_);
  return hits_;
}

std::size_t ScenarioCache::misses() const {
  std::lock_guard lock(mu_);
  return misses_;
}

std::size_t ScenarioCache::size() const {
  std::lock_guard lock(mu_);
  return order_.size();
}

struct SessionStore::Slot {
  std::mutex writer;
  mutable std::mutex published_mu;
  std::shared_ptr<const Session> current;
  std::vector<SessionEvent> events;
  std::string digest;
  std::string dir;  // empty when in memory

  std::shared_ptr<const Session> snapshot() const {
    std::lock_guard lock(published_mu);
    return current;
  }
};

namespace {

std::string random_id() {
  static std::mutex mu;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(mu);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng()));
  return buf;
}

bool valid_id(const std::string& id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id) {
    const bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    c == '-' || c == '_';
    if (!ok) return false;
  }
  return true;
}

void append_line(const std::string& path, const std::string& line) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw std::runtime_error("cannot append to " + path);
  out << line << '\n';
  out.flush();
  if (!out) throw std::runtime_error("short write to " + path);
}

}  // namespace

SessionStore::SessionStore(StoreOptions options)
    : options_(std::move(options)), cache_(options_.scenario_cache_size) {
  if (!options_.id_generator) options_.id_generator = random_id;
  if (options_.data_dir) {
    fs::create_directories(*options_.data_dir);
    std::vector<fs::path> dirs;
    for (const auto& entry : fs::directory_iterator(*options_.data_dir)) {
      if (entry.is_directory() && fs::exists(entry.path() / "session.json")) {
        dirs.push_back(entry.path());
      }
    }
    std::sort(dirs.begin(), dirs.end());
    for (const auto& d : dirs) load_dir(d.string());
  }
}

SessionStore::~SessionStore() = default;

std::int64_t SessionStore::now() const {
  if (options_.clock) return options_.clock();
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

void SessionStore::load_dir(const std::string& dir) {
  const json header = json::parse(read_text_file(dir + "/session.json"));
  const auto id = require_member<std::string>(header, "id");
  const auto created = require_member<std::int64_t>(header, "created_ms");
  Election election = validate_election(require_member<ElectionDraft>(header, "election"));

  std::vector<SessionEvent> events;
  const std::string log = dir + "/events.jsonl";
  if (fs::exists(log)) {
    std::istringstream in(read_text_file(log));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        events.push_back(json::parse(line).get<SessionEvent>());
      } catch (const json::exception& ex) {
        throw ParseError(log, lineno, 0, ex.what());
      }
    }
  }

  std::optional<Session> state;
  const std::string snap = dir + "/snapshot.json";
  if (fs::exists(snap)) {
    Session s = session_from_json(json::parse(read_text_file(snap)));
    if (s.id() == id && s.last_seq() <= static_cast<std::int64_t>(events.size())) {
      state.emplace(std::move(s));
    }
  }
  if (!state) state.emplace(id, election, created);
  for (std::size_t i = static_cast<std::size_t>(state->last_seq()); i < events.size(); ++i) {
    state->apply(events[i]);
  }

  auto slot = std::make_shared<Slot>();
  slot->digest = election_digest(state->election());
  slot->dir = dir;
  slot->events = std::move(events);
  slot->current = std::make_shared<const Session>(std::move(*state));
  std::unique_lock lock(map_mu_);
  slots_[id] = std::move(slot);
}

void SessionStore::persist_header(const Session& s) const {
  const json header{{"id", s.id()},
                    {"created_ms", s.created_ms()},
                    {"election", election_to_json(s.election())}};
  write_file_locked(*options_.data_dir + "/" + s.id() + "/session.json", header.dump(2) + "\n");
}

std::string SessionStore::create_session(Election election) {
  auto slot = std::make_shared<Slot>();
  slot->digest = election_digest(election);
  std::unique_lock lock(map_mu_);
  std::string id;
  do {
    id = options_.id_generator();
    if (!valid_id(id)) throw std::runtime_error("id generator produced an unusable id");
  } while (slots_.count(id));
  auto session = std::make_shared<const Session>(id, std::move(election), now());
  if (options_.data_dir) {
    slot->dir = *options_.data_dir + "/" + id;
    fs::create_directories(slot->dir);
    persist_header(*session);
  }
  slot->current = std::move(session);
  slots_.emplace(id, std::move(slot));
  return id;
}

std::shared_ptr<SessionStore::Slot> SessionStore::slot(const std::string& id) const {
  std::shared_lock lock(map_mu_);
  auto it = slots_.find(id);
  if (it == slots_.end()) throw SessionNotFound("no session '" + id + "'");
  return it->second;
}

std::shared_ptr<const Session> SessionStore::get(const std::string& id) const {
  return slot(id)->snapshot();
}

std::vector<std::string> SessionStore::session_ids() const {
  std::shared_lock lock(map_mu_);
  std::vector<std::string> ids;
  for (const auto& [id, s] : slots_) ids.push_back(id);
  return ids;
}

std::shared_ptr<const Session> SessionStore::append(Slot& slot, EventKind kind, json payload) {
  const auto base = slot.snapshot();
  SessionEvent e;
  e.seq = base->last_seq() + 1;
  e.timestamp_ms = now();
  e.kind = kind;
  e.payload = std::move(payload);

  auto next = std::make_shared<Session>(*base);
  next->apply(e);

  if (!slot.dir.empty()) {
    append_line(slot.dir + "/events.jsonl", json(e).dump());
    if (options_.snapshot_every > 0 &&
        static_cast<std::size_t>(e.seq) % options_.snapshot_every == 0) {
      write_file_locked(slot.dir + "/snapshot.json", json(*next).dump() + "\n");
    }
    if (next->report()) write_file_locked(slot.dir + "/report.json", next->report()->dump(2) + "\n");
  }

  std::shared_ptr<const Session> published = std::move(next);
  std::lock_guard lock(slot.published_mu);
  slot.events.push_back(std::move(e));
  slot.current = published;
  return published;
}

std::shared_ptr<const Scenario> SessionStore::scenario_for(const Slot& slot, const Election& e,
                                                           Money budget) {
  if (auto hit = cache_.find(slot.digest, budget)) return hit;
  auto s = std::make_shared<const Scenario>(compute_scenario(e, budget));
  cache_.insert(slot.digest, budget, s);
  return s;
}

std::shared_ptr<const Scenario> SessionStore::get_scenario(const std::string& id, Money budget) {
  auto sl = slot(id);
  const auto current = sl->snapshot();
  auto scenario = scenario_for(*sl, current->election(), budget);
  std::lock_guard writer(sl->writer);
  if (sl->snapshot()->state() != SessionState::Finalized) {
    append(*sl, EventKind::ScenarioViewed, scenario_viewed_payload(*scenario));
  }
  return scenario;
}

std::shared_ptr<const Session> SessionStore::commit_ratio(const std::string& id, Money mes_budget) {
  auto sl = slot(id);
  std::lock_guard writer(sl->writer);
  const auto current = sl->snapshot();
  if (current->state() != SessionState::Exploring) {
    throw WrongState("commit needs state Exploring, session is " +
                     std::string(to_string(current->state())));
  }
  auto scenario = scenario_for(*sl, current->election(), mes_budget);
  return append(*sl, EventKind::RatioCommitted,
                ratio_committed_payload(mes_budget, scenario->outcome));
}

std::shared_ptr<const Session> SessionStore::veto_project(const std::string& id,
                                                          const ProjectId& project_id,
                                                          const std::string& decided_by) {
  auto sl = slot(id);
  std::lock_guard writer(sl->writer);
  return append(*sl, EventKind::ProjectVetoed, project_vetoed_payload(project_id, decided_by));
}

std::shared_ptr<const Session> SessionStore::adjust_project_budget(const std::string& id,
                                                                   const ProjectId& project_id,
                                                                   Money new_cost) {
  auto sl = slot(id);
  std::lock_guard writer(sl->writer);
  return append(*sl, EventKind::BudgetAdjusted, budget_adjusted_payload(project_id, new_cost));
}

std::shared_ptr<const Session> SessionStore::rtr_vote(const std::string& id,
                                                      const LikertRecord& vote) {
  check_likert_score(vote.score);
  auto sl = slot(id);
  std::lock_guard writer(sl->writer);
  return append(*sl, EventKind::RTRVote, rtr_vote_payload(vote));
}

ShiftReport SessionStore::rtr_report(const std::string& id) const {
  return get(id)->rtr_report();
}

json SessionStore::finalize(const std::string& id, const std::vector<RankingSheet>& rankings) {
  auto sl = slot(id);
  std::lock_guard writer(sl->writer);
  return *append(*sl, EventKind::Finalized, finalized_payload(rankings))->report();
}

std::vector<SessionEvent> SessionStore::events(const std::string& id, std::size_t offset,
                                               std::size_t limit) const {
  auto sl = slot(id);
  std::lock_guard lock(sl->published_mu);
  std::vector<SessionEvent> out;
  for (std::size_t i = offset; i < sl->events.size() && out.size() < limit; ++i) {
    out.push_back(sl->events[i]);
  }
  return out;
}

std::size_t SessionStore::event_count(const std::string& id) const {
  auto sl = slot(id);
  std::lock_guard lock(sl->published_mu);
  return sl->events.size();
}

}  // namespace agora
