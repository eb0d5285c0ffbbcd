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

// Facilitated session state as a fold over an append-only event log.
//
// A session explores MES scenarios, commits part of the budget to MES, lets
// the room veto or trim frozen winners, collects pre/post Likert votes and
// ends with an immutable report. `Session::apply` is the only mutator; it
// checks every precondition, so replaying a log re-validates it.

#ifndef AGORA_SESSION_HPP_
#define AGORA_SESSION_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "agora/aggregation.hpp"
#include "agora/mes.hpp"
#include "agora/metrics.hpp"
#include "agora/model.hpp"
#include "agora/serialize.hpp"

namespace agora {

enum class SessionState { Exploring, RatioCommitted, VetoRound, Adjusted, Finalized };

std::string_view to_string(SessionState s);
std::optional<SessionState> parse_session_state(std::string_view text);

enum class EventKind {
  ScenarioViewed,
  RatioCommitted,
  ProjectVetoed,
  BudgetAdjusted,
  RTRVote,
  Finalized,
};

std::string_view to_string(EventKind k);
std::optional<EventKind> parse_event_kind(std::string_view text);

struct SessionEvent {
  std::int64_t seq = 0;
  /// Milliseconds since the Unix epoch.
  std::int64_t timestamp_ms = 0;
  EventKind kind = EventKind::ScenarioViewed;
  json payload;

  friend bool operator==(const SessionEvent&, const SessionEvent&) = default;
};

void to_json(json& j, const SessionEvent& e);
void from_json(const json& j, SessionEvent& e);

struct ScenarioRow {
  ProjectId project_id;
  std::string name;
  std::size_t votes = 0;
  Money cost = 0;
  bool funded = false;
};

struct Scenario {
  Money budget = 0;
  AllocationOutcome outcome;
  /// One row per project, in election order.
  std::vector<ScenarioRow> rows;
};

/// MES with completion at `budget`. Throws BudgetOutOfRange outside
/// [0, total budget].
Scenario compute_scenario(const Election& e, Money budget);

void to_json(json& j, const ScenarioRow& r);
void to_json(json& j, const Scenario& s);

struct FrozenProject {
  ProjectId project_id;
  Money original_cost = 0;
  Money cost = 0;

  friend bool operator==(const FrozenProject&, const FrozenProject&) = default;
};

/// Where every unit of the total budget currently sits.
struct Ledger {
  Money total = 0;
  Money committed = 0;
  /// Spent by the frozen MES outcome at commit time.
  Money mes_spent = 0;
  Money freed_by_veto = 0;
  Money freed_by_adjust = 0;

  /// committed - mes_spent; stays on the MES side.
  Money mes_unspent() const { return committed - mes_spent; }
  /// total - committed.
  Money remainder() const { return total - committed; }
  Money frozen_spend() const { return mes_spent - freed_by_veto - freed_by_adjust; }
  /// Budget handed to the deliberation track.
  Money deliberation_budget() const { return remainder() + freed_by_veto + freed_by_adjust; }

  friend bool operator==(const Ledger&, const Ledger&) = default;
};

void to_json(json& j, const Ledger& l);

class Session {
 public:
  Session(std::string id, Election election, std::int64_t created_ms);

  const std::string& id() const noexcept { return id_; }
  const Election& election() const noexcept { return election_; }
  std::int64_t created_ms() const noexcept { return created_ms_; }
  SessionState state() const noexcept { return state_; }
  Money committed_mes_budget() const noexcept { return ledger_.committed; }
  const Ledger& ledger() const noexcept { return ledger_; }
  /// Seq of the last applied event; 0 before any.
  std::int64_t last_seq() const noexcept { return last_seq_; }
  std::size_t scenario_views() const noexcept { return scenario_views_; }

  /// Frozen MES outcome; set once the ratio is committed.
  const std::optional<AllocationOutcome>& mes_outcome() const noexcept { return mes_outcome_; }
  /// Still-frozen winners, in MES selection order.
  const std::vector<FrozenProject>& frozen() const noexcept { return frozen_; }
  const std::vector<ProjectId>& vetoed() const noexcept { return vetoed_; }
  const std::vector<LikertRecord>& rtr_records() const noexcept { return rtr_records_; }
  /// Set once finalized.
  const std::optional<json>& report() const noexcept { return report_; }

  bool in_frozen_set(std::string_view project_id) const;
  /// Sum of the frozen projects' current costs + MES unspent + deliberation
  /// budget equals the total, with every term non-negative.
  bool budget_conserved() const;
  ShiftReport rtr_report() const;

  /// Fold step. Throws WrongState, BudgetOutOfRange, NotInFrozenSet,
  /// IncreaseNotAllowed, OutOfScaleScore or BadRequest and leaves the session
  /// untouched when the event is not admissible. `e.seq` must be last_seq()+1.
  void apply(const SessionEvent& e);

  friend bool operator==(const Session&, const Session&) = default;
  friend Session session_from_json(const json& j);

 private:
  void apply_commit(const json& p);
  void apply_veto(const json& p);
  void apply_adjust(const json& p);
  void apply_rtr_vote(const json& p);
  void apply_finalize(const SessionEvent& e);
  void require_not_finalized(std::string_view what) const;

  std::string id_;
  Election election_;
  std::int64_t created_ms_ = 0;
  SessionState state_ = SessionState::Exploring;
  Ledger ledger_;
  std::int64_t last_seq_ = 0;
  std::size_t scenario_views_ = 0;
  std::optional<AllocationOutcome> mes_outcome_;
  std::vector<FrozenProject> frozen_;
  std::vector<ProjectId> vetoed_;
  std::vector<LikertRecord> rtr_records_;
  std::optional<json> report_;
};

/// Snapshot encoding of the full fold state.
void to_json(json& j, const Session& s);
Session session_from_json(const json& j);

/// Replays `events` on a fresh session.
Session replay(std::string id, const Election& election, std::int64_t created_ms,
               const std::vector<SessionEvent>& events);

// Payload builders for the event kinds.
json scenario_viewed_payload(const Scenario& s);
json ratio_committed_payload(Money mes_budget, const AllocationOutcome& frozen);
json project_vetoed_payload(const ProjectId& project_id, const std::string& decided_by);
json budget_adjusted_payload(const ProjectId& project_id, Money new_cost);
json rtr_vote_payload(const LikertRecord& r);
json finalized_payload(const std::vector<RankingSheet>& rankings);

}  // namespace agora

#endif  // AGORA_SESSION_HPP_
