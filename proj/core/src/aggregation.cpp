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

#include "agora/aggregation.hpp"

#include <algorithm>
#include <stdexcept>

namespace agora {

std::string_view to_string(ProvenanceTag tag) {
  switch (tag) {
    case ProvenanceTag::HM: return "HM";
    case ProvenanceTag::HT: return "HT";
    case ProvenanceTag::HM_HT: return "HM/HT";
  }
  return "?";
}

ProvenanceTag provenance_tag(int hm_points, int ht_points) {
  if (hm_points > ht_points) return ProvenanceTag::HM;
  if (ht_points > hm_points) return ProvenanceTag::HT;
  return ProvenanceTag::HM_HT;
}

std::string_view to_string(WeightMode mode) {
  return mode == WeightMode::Unit ? "unit" : "points";
}

std::map<ProjectId, int> borda_points(const RankingSheet& sheet) {
  const int r = static_cast<int>(sheet.ranked_projects.size());
  std::map<ProjectId, int> points;
  for (int i = 0; i < r; ++i) {
    const auto& pid = sheet.ranked_projects[static_cast<std::size_t>(i)];
    if (!points.emplace(pid, r - i).second) {
      throw DuplicateProjectInRanking("project " + pid + " ranked twice by group " +
                                      sheet.group_label);
    }
  }
  return points;
}

BordaSelection select_by_points(const Election& e, std::span<const RankingSheet> sheets,
                                Money budget, const std::set<ProjectId>& excluded) {
  std::map<ProjectId, TallyRow> rows;
  std::vector<Violation> unknown;
  for (const auto& sheet : sheets) {
    for (const auto& [pid, pts] : borda_points(sheet)) {
      if (!e.project_index(pid)) {
        unknown.push_back({ViolationKind::DanglingReference, pid,
                           "ranked by group " + sheet.group_label + " but not in election"});
        continue;
      }
      auto& row = rows[pid];
      row.project_id = pid;
      (sheet.round == Round::Homogeneous ? row.hm_points : row.ht_points) += pts;
      row.total += pts;
      row.sheets += 1;
    }
  }
  if (!unknown.empty()) throw ValidationError(std::move(unknown));

  BordaSelection out;
  for (auto& [pid, row] : rows) out.tally.push_back(row);
  std::sort(out.tally.begin(), out.tally.end(), [&](const TallyRow& a, const TallyRow& b) {
    if (a.total != b.total) return a.total > b.total;
    if (a.sheets != b.sheets) return a.sheets > b.sheets;
    const Money ca = e.project(a.project_id).cost;
    const Money cb = e.project(b.project_id).cost;
    if (ca != cb) return ca < cb;
    return a.project_id < b.project_id;
  });

  Money remaining = budget;
  for (auto& row : out.tally) {
    if (excluded.contains(row.project_id)) continue;
    const Money cost = e.project(row.project_id).cost;
    if (cost > remaining) continue;
    remaining -= cost;
    out.spent += cost;
    row.tag = provenance_tag(row.hm_points, row.ht_points);
    out.winners.push_back(row.project_id);
  }
  return out;
}

std::map<ProjectId, double> normalized_point_weights(std::span<const TallyRow> tally) {
  int best = 0;
  for (const auto& row : tally) best = std::max(best, row.total);
  std::map<ProjectId, double> out;
  for (const auto& row : tally) {
    out[row.project_id] = best > 0 ? static_cast<double>(row.total) / best : 0.0;
  }
  return out;
}

AlignmentReport alignment(const Election& e, const GroupAssignment& groups,
                          const std::map<std::string, std::set<ProjectId>>& group_selections,
                          WeightMode mode, const std::map<ProjectId, double>& weights) {
  AlignmentReport report;
  report.round = groups.round;
  report.mode = mode;

  std::map<VoterId, std::string> voter_group;
  for (const auto& g : groups.groups) {
    for (const auto& m : g.members) voter_group[m] = g.label;
  }
  static const std::set<ProjectId> kNothing;

  for (std::size_t v = 0; v < e.voter_count(); ++v) {
    const auto& id = e.voters()[v].id;
    auto placed = voter_group.find(id);
    if (placed == voter_group.end()) continue;
    const auto& support = e.approvals()[v];
    if (support.empty()) {
      report.empty_support.push_back(id);
      continue;
    }
    auto sel = group_selections.find(placed->second);
    const auto& selected = sel == group_selections.end() ? kNothing : sel->second;
    double sum = 0.0;
    for (std::size_t p : support) {
      const auto& pid = e.projects()[p].id;
      if (!selected.contains(pid)) continue;
      if (mode == WeightMode::Unit) {
        sum += 1.0;
      } else {
        auto w = weights.find(pid);
        sum += w == weights.end() ? 0.0 : w->second;
      }
    }
    report.scores.push_back({id, groups.round, sum / static_cast<double>(support.size())});
  }
  return report;
}

}  // namespace agora
