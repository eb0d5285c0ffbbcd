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

#include "agora/session.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace agora {

namespace {

constexpr std::array<std::string_view, 5> kStateNames{"Exploring", "RatioCommitted", "VetoRound",
                                                      "Adjusted", "Finalized"};
constexpr std::array<std::string_view, 6> kEventNames{
    "ScenarioViewed", "RatioCommitted", "ProjectVetoed", "BudgetAdjusted", "RTRVote", "Finalized"};

std::string state_list(std::initializer_list<SessionState> states) {
  std::string out;
  for (auto s : states) {
    if (!out.empty()) out += " or ";
    out += to_string(s);
  }
  return out;
}

}  // namespace

std::string_view to_string(SessionState s) { return kStateNames[static_cast<std::size_t>(s)]; }

std::optional<SessionState> parse_session_state(std::string_view text) {
  for (std::size_t i = 0; i < kStateNames.size(); ++i) {
    if (kStateNames[i] == text) return static_cast<SessionState>(i);
  }
  return std::nullopt;
}

std::string_view to_string(EventKind k) { return kEventNames[static_cast<std::size_t>(k)]; }

std::optional<EventKind> parse_event_kind(std::string_view text) {
  for (std::size_t i = 0; i < kEventNames.size(); ++i) {
    if (kEventNames[i] == text) return static_cast<EventKind>(i);
  }
  return std::nullopt;
}

void to_json(json& j, const SessionEvent& e) {
  j = json{{"seq", e.seq},
           {"timestamp_ms", e.timestamp_ms},
           {"kind", std::string(to_string(e.kind))},
           {"payload", e.payload}};
}

void from_json(const json& j, SessionEvent& e) {
  e.seq = require_member<std::int64_t>(j, "seq");
  e.timestamp_ms = require_member<std::int64_t>(j, "timestamp_ms");
  const auto kind = parse_event_kind(require_member<std::string>(j, "kind"));
  if (!kind) throw BadRequest("unknown event kind");
  e.kind = *kind;
  e.payload = j.value("payload", json::object());
}

Scenario compute_scenario(const Election& e, Money budget) {
  if (budget < 0 || budget > e.total_budget()) {
    throw BudgetOutOfRange("scenario budget " + std::to_string(budget) + " outside [0, " +
                           std::to_string(e.total_budget()) + "]");
  }
  const std::array<Money, 1> levels{budget};
  auto sweep = scenario_sweep(e, levels);
  Scenario s;
  s.budget = budget;
  s.outcome = std::move(sweep.front().second);
  const auto counts = approval_counts(e);
  for (const auto& p : e.projects()) {
    s.rows.push_back(ScenarioRow{p.id, p.name, counts.at(p.id), p.cost, s.outcome.funds(p.id)});
  }
  return s;
}

void to_json(json& j, const ScenarioRow& r) {
  j = json{{"project", r.project_id},
           {"name", r.name},
           {"votes", r.votes},
           {"cost", r.cost},
           {"funded", r.funded}};
}

void to_json(json& j, const Scenario& s) {
  j = json{{"budget", s.budget}, {"outcome", s.outcome}, {"rows", s.rows}};
}

void to_json(json& j, const Ledger& l) {
  j = json{{"total", l.total},
           {"committed", l.committed},
           {"mes_spent", l.mes_spent},
           {"mes_unspent", l.mes_unspent()},
           {"remainder", l.remainder()},
           {"freed_by_veto", l.freed_by_veto},
           {"freed_by_adjust", l.freed_by_adjust},
           {"frozen_spend", l.frozen_spend()},
           {"deliberation_budget", l.deliberation_budget()}};
}

json scenario_viewed_payload(const Scenario& s) {
  return json{{"budget", s.budget}, {"funded", s.outcome.winner_ids()}};
}

json ratio_committed_payload(Money mes_budget, const AllocationOutcome& frozen) {
  return json{{"mes_budget", mes_budget}, {"outcome", frozen}};
}

json project_vetoed_payload(const ProjectId& project_id, const std::string& decided_by) {
  return json{{"project", project_id}, {"decided_by", decided_by}};
}

json budget_adjusted_payload(const ProjectId& project_id, Money new_cost) {
  return json{{"project", project_id}, {"new_cost", new_cost}};
}

json rtr_vote_payload(const LikertRecord& r) { return json(r); }

json finalized_payload(const std::vector<RankingSheet>& rankings) {
  return json{{"rankings", rankings}};
}

Session::Session(std::string id, Election election, std::int64_t created_ms)
    : id_(std::move(id)), election_(std::move(election)), created_ms_(created_ms) {
  ledger_.total = election_.total_budget();
}

bool Session::in_frozen_set(std::string_view project_id) const {
  return std::any_of(frozen_.begin(), frozen_.end(),
                     [&](const FrozenProject& f) { return f.project_id == project_id; });
}

bool Session::budget_conserved() const {
  Money frozen_sum = 0;
  for (const auto& f : frozen_) frozen_sum += f.cost;
  const Ledger& l = ledger_;
  return l.committed >= 0 && l.committed <= l.total && l.mes_unspent() >= 0 &&
         frozen_sum >= 0 && frozen_sum + l.mes_unspent() + l.deliberation_budget() == l.total;
}

ShiftReport Session::rtr_report() const { return shift_report(rtr_records_); }

void Session::require_not_finalized(std::string_view what) const {
  if (state_ == SessionState::Finalized) {
    throw WrongState(std::string(what) + " rejected: session is Finalized");
  }
}

void Session::apply(const SessionEvent& e) {
  if (e.seq != last_seq_ + 1) {
    throw BadRequest("event seq " + std::to_string(e.seq) + " does not follow " +
                     std::to_string(last_seq_));
  }
  switch (e.kind) {
    case EventKind::ScenarioViewed: {
      require_not_finalized("scenario view");
      const Money budget = require_member<Money>(e.payload, "budget");
      if (budget < 0 || budget > election_.total_budget()) {
        throw BudgetOutOfRange("scenario budget out of range");
      }
      ++scenario_views_;
      break;
    }
    case EventKind::RatioCommitted:
      apply_commit(e.payload);
      break;
    case EventKind::ProjectVetoed:
      apply_veto(e.payload);
      break;
    case EventKind::BudgetAdjusted:
      apply_adjust(e.payload);
      break;
    case EventKind::RTRVote:
      apply_rtr_vote(e.payload);
      break;
    case EventKind::Finalized:
      apply_finalize(e);
      break;
  }
  last_seq_ = e.seq;
}

void Session::apply_commit(const json& p) {
  if (state_ != SessionState::Exploring) {
    throw WrongState("commit needs state Exploring, session is " + std::string(to_string(state_)));
  }
  const Money budget = require_member<Money>(p, "mes_budget");
  if (budget < 0 || budget > election_.total_budget()) {
    throw BudgetOutOfRange("committed budget " + std::to_string(budget) + " outside [0, " +
                           std::to_string(election_.total_budget()) + "]");
  }
  auto outcome = require_member<AllocationOutcome>(p, "outcome");
  std::vector<FrozenProject> frozen;
  Money spent = 0;
  for (const auto& r : outcome.winners) {
    if (!election_.project_index(r.project_id)) {
      throw BadRequest("frozen outcome names unknown project " + r.project_id);
    }
    const Money cost = election_.project(r.project_id).cost;
    frozen.push_back(FrozenProject{r.project_id, cost, cost});
    spent += cost;
  }
  if (spent != outcome.total_spent || spent > budget) {
    throw BadRequest("frozen outcome spends " + std::to_string(outcome.total_spent) +
                     " which does not fit the committed budget");
  }
  ledger_.committed = budget;
  ledger_.mes_spent = spent;
  frozen_ = std::move(frozen);
  mes_outcome_ = std::move(outcome);
  state_ = SessionState::RatioCommitted;
}

void Session::apply_veto(const json& p) {
  if (state_ != SessionState::RatioCommitted && state_ != SessionState::VetoRound) {
    throw WrongState("veto needs state " +
                     state_list({SessionState::RatioCommitted, SessionState::VetoRound}) +
                     ", session is " + std::string(to_string(state_)));
  }
  const auto pid = require_member<std::string>(p, "project");
  auto it = std::find_if(frozen_.begin(), frozen_.end(),
                         [&](const FrozenProject& f) { return f.project_id == pid; });
  if (it == frozen_.end()) throw NotInFrozenSet("project " + pid + " is not in the frozen set");
  ledger_.freed_by_veto += it->cost;
  vetoed_.push_back(pid);
  frozen_.erase(it);
  state_ = SessionState::VetoRound;
}

void Session::apply_adjust(const json& p) {
  if (state_ != SessionState::RatioCommitted && state_ != SessionState::VetoRound &&
      state_ != SessionState::Adjusted) {
    throw WrongState("adjust needs state " +
                     state_list({SessionState::RatioCommitted, SessionState::VetoRound,
                                 SessionState::Adjusted}) +
                     ", session is " + std::string(to_string(state_)));
  }
  const auto pid = require_member<std::string>(p, "project");
  const Money new_cost = require_member<Money>(p, "new_cost");
  auto it = std::find_if(frozen_.begin(), frozen_.end(),
                         [&](const FrozenProject& f) { return f.project_id == pid; });
  if (it == frozen_.end()) throw NotInFrozenSet("project " + pid + " is not in the frozen set");
  if (new_cost <= 0) {
    throw IncreaseNotAllowed("new cost must be positive; veto the project to drop it");
  }
  if (new_cost > it->cost) {
    throw IncreaseNotAllowed("project " + pid + " costs " + std::to_string(it->cost) +
                             "; adjustments may only reduce it");
  }
  ledger_.freed_by_adjust += it->cost - new_cost;
  it->cost = new_cost;
  state_ = SessionState::Adjusted;
}

void Session::apply_rtr_vote(const json& p) {
  require_not_finalized("vote");
  auto r = p.get<LikertRecord>();
  check_likert_score(r.score);
  if (r.participant_id.empty() || r.statement_id.empty()) {
    throw BadRequest("participant_id and statement_id must be non-empty");
  }
  // a re-vote replaces the earlier record in place
  auto same = std::find_if(rtr_records_.begin(), rtr_records_.end(), [&](const LikertRecord& o) {
    return o.participant_id == r.participant_id && o.statement_id == r.statement_id &&
           o.phase == r.phase;
  });
  if (same != rtr_records_.end()) {
    *same = std::move(r);
  } else {
    rtr_records_.push_back(std::move(r));
  }
}

void Session::apply_finalize(const SessionEvent& e) {
  if (state_ == SessionState::Exploring || state_ == SessionState::Finalized) {
    throw WrongState("finalize needs a committed, unfinalized session; session is " +
                     std::string(to_string(state_)));
  }
  const auto rankings = e.payload.value("rankings", std::vector<RankingSheet>{});
  std::set<ProjectId> excluded(vetoed_.begin(), vetoed_.end());
  for (const auto& f : frozen_) excluded.insert(f.project_id);
  const Money budget = ledger_.deliberation_budget();

  json deliberation{{"budget", budget}, {"rankings", rankings}};
  if (rankings.empty()) {
    deliberation["selection"] = json{{"winners", json::array()}, {"tally", json::array()},
                                     {"spent", 0}};
  } else {
    deliberation["selection"] = select_by_points(election_, rankings, budget, excluded);
  }

  json frozen = json::array();
  for (const auto& f : frozen_) {
    frozen.push_back(
        json{{"project", f.project_id}, {"original_cost", f.original_cost}, {"cost", f.cost}});
  }
  json report{{"session_id", id_},
              {"election_digest", election_digest(election_)},
              {"created_ms", created_ms_},
              {"finalized_ms", e.timestamp_ms},
              {"event_count", e.seq},
              {"scenario_views", scenario_views_},
              {"total_budget", election_.total_budget()},
              {"committed_mes_budget", ledger_.committed},
              {"mes",
               json{{"outcome", *mes_outcome_}, {"frozen", std::move(frozen)}, {"vetoed", vetoed_}}},
              {"deliberation", std::move(deliberation)},
              {"ledger", ledger_},
              {"rtr", rtr_report()}};
  report_ = std::move(report);
  state_ = SessionState::Finalized;
}

void to_json(json& j, const Session& s) {
  json frozen = json::array();
  for (const auto& f : s.frozen()) {
    frozen.push_back(
        json{{"project", f.project_id}, {"original_cost", f.original_cost}, {"cost", f.cost}});
  }
  j = json{{"id", s.id()},
           {"created_ms", s.created_ms()},
           {"election", election_to_json(s.election())},
           {"state", std::string(to_string(s.state()))},
           {"last_seq", s.last_seq()},
           {"scenario_views", s.scenario_views()},
           {"ledger", s.ledger()},
           {"frozen", std::move(frozen)},
           {"vetoed", s.vetoed()},
           {"rtr_records", s.rtr_records()}};
  j["mes_outcome"] = s.mes_outcome() ? json(*s.mes_outcome()) : json(nullptr);
  j["report"] = s.report() ? *s.report() : json(nullptr);
}

Session session_from_json(const json& j) {
  Session s(require_member<std::string>(j, "id"),
            validate_election(require_member<ElectionDraft>(j, "election")),
            require_member<std::int64_t>(j, "created_ms"));
  const auto state = parse_session_state(require_member<std::string>(j, "state"));
  if (!state) throw BadRequest("unknown session state");
  s.state_ = *state;
  s.last_seq_ = require_member<std::int64_t>(j, "last_seq");
  s.scenario_views_ = require_member<std::size_t>(j, "scenario_views");
  const json& l = j.at("ledger");
  s.ledger_.committed = require_member<Money>(l, "committed");
  s.ledger_.mes_spent = require_member<Money>(l, "mes_spent");
  s.ledger_.freed_by_veto = require_member<Money>(l, "freed_by_veto");
  s.ledger_.freed_by_adjust = require_member<Money>(l, "freed_by_adjust");
  for (const auto& f : j.at("frozen")) {
    s.frozen_.push_back(FrozenProject{require_member<std::string>(f, "project"),
                                      require_member<Money>(f, "original_cost"),
                                      require_member<Money>(f, "cost")});
  }
  s.vetoed_ = require_member<std::vector<ProjectId>>(j, "vetoed");
  s.rtr_records_ = require_member<std::vector<LikertRecord>>(j, "rtr_records");
  if (!j.at("mes_outcome").is_null()) s.mes_outcome_ = j.at("mes_outcome").get<AllocationOutcome>();
  if (!j.at("report").is_null()) s.report_ = j.at("report");
  if (!s.budget_conserved()) throw BadRequest("snapshot ledger does not balance");
  return s;
}

Session replay(std::string id, const Election& election, std::int64_t created_ms,
               const std::vector<SessionEvent>& events) {
  Session s(std::move(id), election, created_ms);
  for (const auto& e : events) s.apply(e);
  return s;
}

}  // namespace agora
