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

// Opinion-shift metrics over pre/post Likert votes, and the Gini coefficient.
// Standard deviations are population (divide by n) throughout.

#ifndef AGORA_METRICS_HPP_
#define AGORA_METRICS_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agora/errors.hpp"

namespace agora {

enum class Phase { Pre, Post };

std::string_view to_string(Phase phase);
std::optional<Phase> parse_phase(std::string_view text);

/// Likert scale bounds; the range (max - min) is 4.
inline constexpr int kLikertMin = -2;
inline constexpr int kLikertMax = 2;
inline constexpr double kLikertRange = kLikertMax - kLikertMin;

struct LikertRecord {
  std::string participant_id;
  std::string statement_id;
  Phase phase = Phase::Pre;
  int score = 0;

  friend bool operator==(const LikertRecord&, const LikertRecord&) = default;
};

/// Throws OutOfScaleScore unless kLikertMin <= score <= kLikertMax.
void check_likert_score(int score);

/// Scores of participants who voted in both phases, aligned by participant.
struct PairedScores {
  std::string statement_id;
  std::vector<std::string> participants;  // sorted
  std::vector<int> pre;
  std::vector<int> post;
  /// Voted in exactly one phase.
  int pre_only = 0;
  int post_only = 0;

  std::size_t size() const noexcept { return pre.size(); }
};

/// Pairs the records of one statement. If a (participant, phase) pair repeats,
/// the last record wins.
PairedScores pair_statement(std::span<const LikertRecord> records, std::string_view statement_id);

double population_std(std::span<const int> scores);
double mean(std::span<const int> scores);

/// 100 * share of paired participants whose post score differs from pre.
double percent_changed(const PairedScores& s);

enum class PolarisationVariant {
  /// std / scale range, per phase.
  Normalized,
  /// std_post / std_pre.
  Ratio,
};

/// Normalized: std(phase)/4. Ratio: std_post/std_pre (phase ignored), throws
/// ZeroPreStd when the pre-phase spread is zero.
double polarisation(const PairedScores& s, PolarisationVariant variant, Phase phase = Phase::Post);

enum class ConsensusVariant {
  /// Share of responses equal to the modal score.
  Majority,
  /// 1 / (1 + std).
  InverseStd,
};

double consensus(const PairedScores& s, ConsensusVariant variant, Phase phase);

struct MeanChange {
  double mean_pre = 0.0;
  double mean_post = 0.0;
  double delta = 0.0;
};

MeanChange mean_change(const PairedScores& s);

/// Every metric variant for one statement, side by side.
struct StatementShift {
  std::string statement_id;
  int n_paired = 0;
  int pre_only = 0;
  int post_only = 0;
  double percent_changed = 0.0;
  double polarisation_normalized_pre = 0.0;
  double polarisation_normalized_post = 0.0;
  /// +infinity with `polarisation_ratio_undefined` when std_pre is zero.
  double polarisation_ratio = 0.0;
  bool polarisation_ratio_undefined = false;
  double consensus_majority_pre = 0.0;
  double consensus_majority_post = 0.0;
  double consensus_inverse_std_pre = 0.0;
  double consensus_inverse_std_post = 0.0;
  double mean_pre = 0.0;
  double mean_post = 0.0;
  double mean_change = 0.0;

  friend bool operator==(const StatementShift&, const StatementShift&) = default;
};

struct ShiftReport {
  /// Ordered by statement id.
  std::vector<StatementShift> statements;
  /// Statements that had records but no paired participant.
  std::vector<std::string> skipped_statements;
  /// Votes from participants not present in both phases.
  int unpaired_votes = 0;

  friend bool operator==(const ShiftReport&, const ShiftReport&) = default;
};

StatementShift statement_shift(const PairedScores& s);
ShiftReport shift_report(std::span<const LikertRecord> records);

/// sum_i sum_j |x_i - x_j| / (2 n^2 mean); 0 for all-zero input.
/// Throws std::invalid_argument for empty or negative input.
double gini(std::span<const double> values);

}  // namespace agora

#endif  // AGORA_METRICS_HPP_
