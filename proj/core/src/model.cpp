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

#include "agora/model.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace agora {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DanglingReference: return "DanglingReference";
    case ViolationKind::DuplicateId: return "DuplicateId";
    case ViolationKind::NonPositiveCost: return "NonPositiveCost";
    case ViolationKind::NegativeBudget: return "NegativeBudget";
  }
  return "Unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string out = "election failed validation:";
  for (const auto& v : violations) {
    out += " [";
    out += to_string(v.kind);
    out += " ";
    out += v.subject;
    if (!v.detail.empty()) {
      out += ": ";
      out += v.detail;
    }
    out += "]";
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error("ValidationError", summarize(violations)), violations_(std::move(violations)) {}

std::string_view to_string(Round round) {
  return round == Round::Homogeneous ? "homogeneous" : "heterogeneous";
}

std::optional<Round> parse_round(std::string_view text) {
  const std::string s = lower(text);
  if (s == "homogeneous" || s == "hm") return Round::Homogeneous;
  if (s == "heterogeneous" || s == "ht") return Round::Heterogeneous;
  return std::nullopt;
}

std::vector<Violation> check_election(const ElectionDraft& raw) {
  std::vector<Violation> out;

  std::set<std::string, std::less<>> project_ids;
  for (const auto& p : raw.projects) {
    if (!project_ids.insert(p.id).second) {
      out.push_back({ViolationKind::DuplicateId, p.id, "duplicate project id"});
    }
    if (p.cost <= 0) {
      out.push_back({ViolationKind::NonPositiveCost, p.id, "cost " + std::to_string(p.cost)});
    }
  }

  std::set<std::string, std::less<>> voter_ids;
  for (const auto& v : raw.voters) {
    if (!voter_ids.insert(v.id).second) {
      out.push_back({ViolationKind::DuplicateId, v.id, "duplicate voter id"});
    }
  }

  std::set<std::string, std::less<>> seen_ballots;
  for (const auto& b : raw.ballots) {
    if (!voter_ids.contains(b.voter_id)) {
      out.push_back({ViolationKind::DanglingReference, b.voter_id, "ballot names unknown voter"});
    }
    if (!seen_ballots.insert(b.voter_id).second) {
      out.push_back({ViolationKind::DuplicateId, b.voter_id, "more than one ballot for voter"});
    }
    for (const auto& pid : b.approved) {
      if (!project_ids.contains(pid)) {
        out.push_back({ViolationKind::DanglingReference, pid,
                       "ballot of voter " + b.voter_id + " approves unknown project"});
      }
    }
  }

  if (raw.total_budget < 0) {
    out.push_back({ViolationKind::NegativeBudget, "total_budget",
                   std::to_string(raw.total_budget)});
  }
  return out;
}

Election validate_election(ElectionDraft raw) {
  auto violations = check_election(raw);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return Election(std::move(raw));
}

Election::Election(ElectionDraft draft) : draft_(std::move(draft)) {
  for (std::size_t i = 0; i < draft_.projects.size(); ++i) {
    project_index_.emplace(draft_.projects[i].id, i);
  }
  for (std::size_t i = 0; i < draft_.voters.size(); ++i) {
    voter_index_.emplace(draft_.voters[i].id, i);
  }
  supporters_.assign(draft_.projects.size(), {});
  approvals_.assign(draft_.voters.size(), {});
  for (const auto& b : draft_.ballots) {
    const std::size_t v = voter_index_.find(b.voter_id)->second;
    for (const auto& pid : b.approved) {
      approvals_[v].push_back(project_index_.find(pid)->second);
    }
    std::sort(approvals_[v].begin(), approvals_[v].end());
  }
  for (std::size_t v = 0; v < approvals_.size(); ++v) {
    for (std::size_t p : approvals_[v]) supporters_[p].push_back(v);
  }
}

std::optional<std::size_t> Election::project_index(std::string_view id) const {
  auto it = project_index_.find(id);
  if (it == project_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Election::voter_index(std::string_view id) const {
  auto it = voter_index_.find(id);
  if (it == voter_index_.end()) return std::nullopt;
  return it->second;
}

const Project& Election::project(std::string_view id) const {
  auto idx = project_index(id);
  if (!idx) throw std::out_of_range("unknown project " + std::string(id));
  return draft_.projects[*idx];
}

Election Election::with_total_budget(Money budget) const {
  ElectionDraft d = draft_;
  d.total_budget = budget;
  return validate_election(std::move(d));
}

std::map<ProjectId, std::size_t> approval_counts(const Election& e) {
  std::map<ProjectId, std::size_t> counts;
  for (std::size_t p = 0; p < e.project_count(); ++p) {
    counts[e.projects()[p].id] = e.supporters()[p].size();
  }
  return counts;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string election_digest(const Election& e) {
  // Length-prefixed fields so that no two elections share a rendering.
  std::string canon;
  auto field = [&canon](std::string_view s) {
    canon += std::to_string(s.size());
    canon += ':';
    canon += s;
  };
  field("budget");
  field(std::to_string(e.total_budget()));
  for (const auto& p : e.projects()) {
    field("p");
    field(p.id);
    field(p.name);
    field(std::to_string(p.cost));
  }
  for (const auto& v : e.voters()) {
    field("v");
    field(v.id);
  }
  for (const auto& b : e.ballots()) {
    field("b");
    field(b.voter_id);
    for (const auto& pid : b.approved) field(pid);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canon)));
  return buf;
}

}  // namespace agora
