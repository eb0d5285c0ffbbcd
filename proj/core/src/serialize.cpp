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

#include "agora/serialize.hpp"

#include <cmath>
#include <limits>

namespace agora {

void to_json(json& j, const Rational& r) { j = r.to_string(); }

void from_json(const json& j, Rational& r) {
  if (j.is_number_integer()) {
    r = Rational(j.get<Money>());
    return;
  }
  r = Rational::parse(j.get<std::string>());
}

void to_json(json& j, const Project& p) {
  j = json{{"id", p.id}, {"name", p.name}, {"cost", p.cost}};
  if (!p.attributes.empty()) j["attributes"] = p.attributes;
}

void from_json(const json& j, Project& p) {
  p.id = require_member<std::string>(j, "id");
  p.name = j.value("name", std::string());
  p.cost = require_member<Money>(j, "cost");
  p.attributes = j.value("attributes", Attributes{});
}

void to_json(json& j, const Voter& v) {
  j = json{{"id", v.id}};
  if (!v.attributes.empty()) j["attributes"] = v.attributes;
}

void from_json(const json& j, Voter& v) {
  v.id = require_member<std::string>(j, "id");
  v.attributes = j.value("attributes", Attributes{});
}

void to_json(json& j, const ApprovalBallot& b) {
  j = json{{"voter_id", b.voter_id}, {"approved", b.approved}};
}

void from_json(const json& j, ApprovalBallot& b) {
  b.voter_id = require_member<std::string>(j, "voter_id");
  b.approved = j.value("approved", std::set<ProjectId>{});
}

void to_json(json& j, const ElectionDraft& e) {
  j = json{{"projects", e.projects},
           {"voters", e.voters},
           {"ballots", e.ballots},
           {"total_budget", e.total_budget}};
}

void from_json(const json& j, ElectionDraft& e) {
  e.projects = require_member<std::vector<Project>>(j, "projects");
  e.ballots = j.value("ballots", std::vector<ApprovalBallot>{});
  e.total_budget = require_member<Money>(j, "total_budget");
  if (j.contains("voters")) {
    e.voters = j.at("voters").get<std::vector<Voter>>();
  } else {
    // voters implied by ballots
    for (const auto& b : e.ballots) e.voters.push_back(Voter{b.voter_id, {}});
  }
}

json election_to_json(const Election& e) { return json(e.draft()); }

void to_json(json& j, const SelectionRound& r) {
  j = json{{"project", r.project_id}};
  j["q"] = r.price_q ? json(*r.price_q) : json(nullptr);
  json payments = json::object();
  for (const auto& [v, amount] : r.payments) payments[v] = amount;
  j["payments"] = std::move(payments);
}

void from_json(const json& j, SelectionRound& r) {
  r.project_id = require_member<std::string>(j, "project");
  if (j.contains("q") && !j.at("q").is_null()) {
    r.price_q = j.at("q").get<Rational>();
  } else {
    r.price_q.reset();
  }
  r.payments.clear();
  if (j.contains("payments")) {
    for (const auto& [v, amount] : j.at("payments").items()) {
      r.payments.emplace(v, amount.get<Rational>());
    }
  }
}

void to_json(json& j, const AllocationOutcome& o) {
  j = json{{"method", std::string(to_string(o.method))},
           {"total_spent", o.total_spent},
           {"rounds", o.winners},
           {"winners", o.winner_ids()}};
  j["start_budget_per_voter"] =
      o.start_budget_per_voter ? json(*o.start_budget_per_voter) : json(nullptr);
  json leftover = json::object();
  for (const auto& [v, amount] : o.leftover_budgets) leftover[v] = amount;
  j["leftover_budgets"] = std::move(leftover);
}

void from_json(const json& j, AllocationOutcome& o) {
  const auto method = require_member<std::string>(j, "method");
  if (method == "mes") {
    o.method = AllocationMethod::MES;
  } else if (method == "greedy") {
    o.method = AllocationMethod::Greedy;
  } else {
    throw BadRequest("unknown allocation method '" + method + "'");
  }
  o.total_spent = require_member<Money>(j, "total_spent");
  o.winners = j.value("rounds", std::vector<SelectionRound>{});
  if (j.contains("start_budget_per_voter") && !j.at("start_budget_per_voter").is_null()) {
    o.start_budget_per_voter = j.at("start_budget_per_voter").get<Rational>();
  } else {
    o.start_budget_per_voter.reset();
  }
  o.leftover_budgets.clear();
  if (j.contains("leftover_budgets")) {
    for (const auto& [v, amount] : j.at("leftover_budgets").items()) {
      o.leftover_budgets.emplace(v, amount.get<Rational>());
    }
  }
}

void to_json(json& j, const RankingSheet& s) {
  j = json{{"round", std::string(to_string(s.round))},
           {"group", s.group_label},
           {"ranked_projects", s.ranked_projects}};
}

void from_json(const json& j, RankingSheet& s) {
  const auto round = parse_round(require_member<std::string>(j, "round"));
  if (!round) throw BadRequest("round must be homogeneous or heterogeneous");
  s.round = *round;
  s.group_label = require_member<std::string>(j, "group");
  s.ranked_projects = require_member<std::vector<ProjectId>>(j, "ranked_projects");
}

void to_json(json& j, const TallyRow& r) {
  j = json{{"project", r.project_id},
           {"hm_points", r.hm_points},
           {"ht_points", r.ht_points},
           {"total", r.total},
           {"sheets", r.sheets}};
  j["tag"] = r.tag ? json(std::string(to_string(*r.tag))) : json(nullptr);
}

void to_json(json& j, const BordaSelection& s) {
  j = json{{"winners", s.winners}, {"tally", s.tally}, {"spent", s.spent}};
}

void to_json(json& j, const LikertRecord& r) {
  j = json{{"participant_id", r.participant_id},
           {"statement_id", r.statement_id},
           {"phase", std::string(to_string(r.phase))},
           {"score", r.score}};
}

void from_json(const json& j, LikertRecord& r) {
  r.participant_id = require_member<std::string>(j, "participant_id");
  r.statement_id = require_member<std::string>(j, "statement_id");
  const auto phase = parse_phase(require_member<std::string>(j, "phase"));
  if (!phase) throw BadRequest("phase must be pre or post");
  r.phase = *phase;
  r.score = require_member<int>(j, "score");
}

void to_json(json& j, const StatementShift& s) {
  j = json{{"statement_id", s.statement_id},
           {"n_paired", s.n_paired},
           {"pre_only", s.pre_only},
           {"post_only", s.post_only},
           {"percent_changed", s.percent_changed},
           {"polarisation_normalized_pre", s.polarisation_normalized_pre},
           {"polarisation_normalized_post", s.polarisation_normalized_post},
           {"polarisation_ratio_undefined", s.polarisation_ratio_undefined},
           {"consensus_majority_pre", s.consensus_majority_pre},
           {"consensus_majority_post", s.consensus_majority_post},
           {"consensus_inverse_std_pre", s.consensus_inverse_std_pre},
           {"consensus_inverse_std_post", s.consensus_inverse_std_post},
           {"mean_pre", s.mean_pre},
           {"mean_post", s.mean_post},
           {"mean_change", s.mean_change}};
  j["polarisation_ratio"] =
      s.polarisation_ratio_undefined ? json(nullptr) : json(s.polarisation_ratio);
}

void from_json(const json& j, StatementShift& s) {
  s.statement_id = j.at("statement_id").get<std::string>();
  s.n_paired = j.at("n_paired").get<int>();
  s.pre_only = j.value("pre_only", 0);
  s.post_only = j.value("post_only", 0);
  s.percent_changed = j.at("percent_changed").get<double>();
  s.polarisation_normalized_pre = j.at("polarisation_normalized_pre").get<double>();
  s.polarisation_normalized_post = j.at("polarisation_normalized_post").get<double>();
  s.polarisation_ratio_undefined = j.value("polarisation_ratio_undefined", false);
  s.polarisation_ratio = s.polarisation_ratio_undefined
                             ? std::numeric_limits<double>::infinity()
                             : j.at("polarisation_ratio").get<double>();
  s.consensus_majority_pre = j.at("consensus_majority_pre").get<double>();
  s.consensus_majority_post = j.at("consensus_majority_post").get<double>();
  s.consensus_inverse_std_pre = j.at("consensus_inverse_std_pre").get<double>();
  s.consensus_inverse_std_post = j.at("consensus_inverse_std_post").get<double>();
  s.mean_pre = j.at("mean_pre").get<double>();
  s.mean_post = j.at("mean_post").get<double>();
  s.mean_change = j.at("mean_change").get<double>();
}

void to_json(json& j, const ShiftReport& r) {
  j = json{{"statements", r.statements},
           {"skipped_statements", r.skipped_statements},
           {"unpaired_votes", r.unpaired_votes}};
}

void from_json(const json& j, ShiftReport& r) {
  r.statements = j.at("statements").get<std::vector<StatementShift>>();
  r.skipped_statements = j.value("skipped_statements", std::vector<std::string>{});
  r.unpaired_votes = j.value("unpaired_votes", 0);
}

void to_json(json& j, const GroupAssignment& g) {
  j = json{{"round", std::string(to_string(g.round))}};
  json groups = json::array();
  for (const auto& group : g.groups) {
    json item{{"label", group.label}, {"members", group.members}};
    if (group.sector) {
      item["sector"] = json{{"start_deg", group.sector->start_deg},
                            {"span_deg", group.sector->span_deg}};
    }
    if (!group.source_labels.empty()) item["source_labels"] = group.source_labels;
    groups.push_back(std::move(item));
  }
  j["groups"] = std::move(groups);
}

}  // namespace agora
