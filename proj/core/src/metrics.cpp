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

#include "agora/metrics.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace agora {

std::string_view to_string(Phase phase) { return phase == Phase::Pre ? "pre" : "post"; }

std::optional<Phase> parse_phase(std::string_view text) {
  std::string s(text);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "pre") return Phase::Pre;
  if (s == "post") return Phase::Post;
  return std::nullopt;
}

void check_likert_score(int score) {
  if (score < kLikertMin || score > kLikertMax) {
    throw OutOfScaleScore("score " + std::to_string(score) + " outside [" +
                          std::to_string(kLikertMin) + ", " + std::to_string(kLikertMax) + "]");
  }
}

PairedScores pair_statement(std::span<const LikertRecord> records, std::string_view statement_id) {
  std::map<std::string, int> pre;
  std::map<std::string, int> post;
  for (const auto& r : records) {
    if (r.statement_id != statement_id) continue;
    (r.phase == Phase::Pre ? pre : post)[r.participant_id] = r.score;
  }
  PairedScores out;
  out.statement_id = std::string(statement_id);
  for (const auto& [pid, score] : pre) {
    auto it = post.find(pid);
    if (it == post.end()) {
      ++out.pre_only;
      continue;
    }
    out.participants.push_back(pid);
    out.pre.push_back(score);
    out.post.push_back(it->second);
  }
  for (const auto& [pid, score] : post) {
    if (!pre.contains(pid)) ++out.post_only;
  }
  return out;
}

namespace {

void require_paired(const PairedScores& s) {
  if (s.size() == 0) {
    throw NoPairedParticipants("statement " + s.statement_id + " has no participant in both phases");
  }
}

const std::vector<int>& phase_scores(const PairedScores& s, Phase phase) {
  return phase == Phase::Pre ? s.pre : s.post;
}

}  // namespace

double mean(std::span<const int> scores) {
  if (scores.empty()) return 0.0;
  double sum = 0.0;
  for (int x : scores) sum += x;
  return sum / static_cast<double>(scores.size());
}

double population_std(std::span<const int> scores) {
  if (scores.empty()) return 0.0;
  const double m = mean(scores);
  double ss = 0.0;
  for (int x : scores) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(scores.size()));
}

double percent_changed(const PairedScores& s) {
  require_paired(s);
  std::size_t changed = 0;
  for (std::size_t i = 0; i < s.size(); ++i) changed += s.pre[i] != s.post[i] ? 1 : 0;
  return 100.0 * static_cast<double>(changed) / static_cast<double>(s.size());
}

double polarisation(const PairedScores& s, PolarisationVariant variant, Phase phase) {
  require_paired(s);
  if (variant == PolarisationVariant::Normalized) {
    return population_std(phase_scores(s, phase)) / kLikertRange;
  }
  const double before = population_std(s.pre);
  if (before == 0.0) {
    throw ZeroPreStd("statement " + s.statement_id + " has zero pre-deliberation spread");
  }
  return population_std(s.post) / before;
}

double consensus(const PairedScores& s, ConsensusVariant variant, Phase phase) {
  require_paired(s);
  const auto& scores = phase_scores(s, phase);
  if (variant == ConsensusVariant::InverseStd) return 1.0 / (1.0 + population_std(scores));
  std::array<int, kLikertMax - kLikertMin + 1> counts{};
  for (int x : scores) {
    check_likert_score(x);
    ++counts[static_cast<std::size_t>(x - kLikertMin)];
  }
  const int modal = *std::max_element(counts.begin(), counts.end());
  return static_cast<double>(modal) / static_cast<double>(scores.size());
}

MeanChange mean_change(const PairedScores& s) {
  require_paired(s);
  MeanChange m;
  m.mean_pre = mean(s.pre);
  m.mean_post = mean(s.post);
  m.delta = m.mean_post - m.mean_pre;
  return m;
}

StatementShift statement_shift(const PairedScores& s) {
  StatementShift r;
  r.statement_id = s.statement_id;
  r.n_paired = static_cast<int>(s.size());
  r.pre_only = s.pre_only;
  r.post_only = s.post_only;
  r.percent_changed = percent_changed(s);
  r.polarisation_normalized_pre = polarisation(s, PolarisationVariant::Normalized, Phase::Pre);
  r.polarisation_normalized_post = polarisation(s, PolarisationVariant::Normalized, Phase::Post);
  try {
    r.polarisation_ratio = polarisation(s, PolarisationVariant::Ratio);
  } catch (const ZeroPreStd&) {
    r.polarisation_ratio = std::numeric_limits<double>::infinity();
    r.polarisation_ratio_undefined = true;
  }
  r.consensus_majority_pre = consensus(s, ConsensusVariant::Majority, Phase::Pre);
  r.consensus_majority_post = consensus(s, ConsensusVariant::Majority, Phase::Post);
  r.consensus_inverse_std_pre = consensus(s, ConsensusVariant::InverseStd, Phase::Pre);
  r.consensus_inverse_std_post = consensus(s, ConsensusVariant::InverseStd, Phase::Post);
  const auto m = mean_change(s);
  r.mean_pre = m.mean_pre;
  r.mean_post = m.mean_post;
  r.mean_change = m.delta;
  return r;
}

ShiftReport shift_report(std::span<const LikertRecord> records) {
  std::set<std::string> statements;
  for (const auto& r : records) statements.insert(r.statement_id);
  ShiftReport report;
  for (const auto& sid : statements) {
    const PairedScores s = pair_statement(records, sid);
    report.unpaired_votes += s.pre_only + s.post_only;
    if (s.size() == 0) {
      report.skipped_statements.push_back(sid);
      continue;
    }
    report.statements.push_back(statement_shift(s));
  }
  return report;
}

double gini(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("gini of an empty list");
  double total = 0.0;
  for (double x : values) {
    if (x < 0.0) throw std::invalid_argument("gini needs non-negative values");
    total += x;
  }
  if (total == 0.0) return 0.0;
  // Sorted form of the pairwise sum: sum_i (2i - n + 1) x_(i), 0-based.
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double weighted = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    weighted += (2.0 * static_cast<double>(i) - n + 1.0) * sorted[i];
  }
  // sum_i sum_j |x_i - x_j| = 2 * weighted; mean = total / n.
  return (2.0 * weighted) / (2.0 * n * total);
}

}  // namespace agora
