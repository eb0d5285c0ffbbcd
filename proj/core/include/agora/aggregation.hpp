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

// Borda aggregation of group rankings, budget-constrained selection by
// points, provenance tags, and voter/group alignment scores.

#ifndef AGORA_AGGREGATION_HPP_
#define AGORA_AGGREGATION_HPP_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agora/clustering.hpp"
#include "agora/model.hpp"

namespace agora {

struct RankingSheet {
  Round round = Round::Homogeneous;
  std::string group_label;
  /// Best first.
  std::vector<ProjectId> ranked_projects;

  friend bool operator==(const RankingSheet&, const RankingSheet&) = default;
};

/// HM: homogeneous points exceed heterogeneous; HT: the reverse; HM_HT: equal.
enum class ProvenanceTag { HM, HT, HM_HT };

std::string_view to_string(ProvenanceTag tag);
ProvenanceTag provenance_tag(int hm_points, int ht_points);

struct TallyRow {
  ProjectId project_id;
  int hm_points = 0;
  int ht_points = 0;
  int total = 0;
  /// Number of sheets that list the project.
  int sheets = 0;
  /// Selected projects only.
  std::optional<ProvenanceTag> tag;

  friend bool operator==(const TallyRow&, const TallyRow&) = default;
};

struct BordaSelection {
  std::vector<ProjectId> winners;  // in selection order
  /// Every listed project, in ranking order (points desc, ...).
  std::vector<TallyRow> tally;
  Money spent = 0;
};

/// Rank r (1-based) of an R-long sheet earns R - r + 1 points.
/// Throws DuplicateProjectInRanking.
std::map<ProjectId, int> borda_points(const RankingSheet& sheet);

/// Sums points over all sheets; orders by total desc, then number of sheets
/// listing the project desc, then cost asc, then id; funds in that order while
/// the cost fits (skipping misfits). Projects in `excluded` are tallied but
/// never funded. Throws ValidationError for sheets naming unknown projects.
BordaSelection select_by_points(const Election& e, std::span<const RankingSheet> sheets,
                                Money budget, const std::set<ProjectId>& excluded = {});

enum class WeightMode {
  /// w_j = 1: score is the share of the voter's approvals the group selected.
  Unit,
  /// w_j = project's Borda total / largest Borda total.
  Points,
};

std::string_view to_string(WeightMode mode);

struct AlignmentScore {
  VoterId voter_id;
  Round round = Round::Homogeneous;
  double score = 0.0;
};

struct AlignmentReport {
  Round round = Round::Homogeneous;
  WeightMode mode = WeightMode::Unit;
  std::vector<AlignmentScore> scores;
  /// Voters with no approvals; excluded from `scores`.
  std::vector<VoterId> empty_support;
};

/// Weights for WeightMode::Points from a tally (total / max total).
std::map<ProjectId, double> normalized_point_weights(std::span<const TallyRow> tally);

/// A_i = sum_{j in P_i} w_j / |S_i| where S_i is voter i's approvals and
/// P_i = S_i intersected with the projects selected by i's group in `groups`.
/// Voters not placed in any group are skipped.
AlignmentReport alignment(const Election& e, const GroupAssignment& groups,
                          const std::map<std::string, std::set<ProjectId>>& group_selections,
                          WeightMode mode = WeightMode::Unit,
                          const std::map<ProjectId, double>& weights = {});

}  // namespace agora

#endif  // AGORA_AGGREGATION_HPP_
