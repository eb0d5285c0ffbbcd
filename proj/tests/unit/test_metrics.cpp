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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace agora {
namespace {

std::vector<LikertRecord> room(const std::vector<int>& pre, const std::vector<int>& post,
                               const std::string& statement = "S1") {
  std::vector<LikertRecord> out;
  for (std::size_t i = 0; i < pre.size(); ++i) {
    out.push_back({"p" + std::to_string(i), statement, Phase::Pre, pre[i]});
  }
  for (std::size_t i = 0; i < post.size(); ++i) {
    out.push_back({"p" + std::to_string(i), statement, Phase::Post, post[i]});
  }
  return out;
}

PairedScores paired(const std::vector<int>& pre, const std::vector<int>& post) {
  const auto r = room(pre, post);
  return pair_statement(r, "S1");
}

TEST(Likert, ScaleCheck) {
  EXPECT_NO_THROW(check_likert_score(-2));
  EXPECT_NO_THROW(check_likert_score(2));
  EXPECT_THROW(check_likert_score(3), OutOfScaleScore);
  EXPECT_THROW(check_likert_score(-3), OutOfScaleScore);
  EXPECT_EQ(parse_phase("pre"), Phase::Pre);
  EXPECT_EQ(parse_phase("post"), Phase::Post);
  EXPECT_FALSE(parse_phase("during").has_value());
}

TEST(Pairing, DropsOneSidedParticipants) {
  auto r = room({1, 2, 0}, {1, 2});
  r.push_back({"late", "S1", Phase::Post, 1});
  r.push_back({"x", "S2", Phase::Pre, 1});
  const auto s = pair_statement(r, "S1");
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.pre_only, 1);
  EXPECT_EQ(s.post_only, 1);
  EXPECT_TRUE(std::is_sorted(s.participants.begin(), s.participants.end()));
}

TEST(PercentChanged, Examples) {
  EXPECT_DOUBLE_EQ(percent_changed(paired({1, 1}, {1, 2})), 50.0);
  EXPECT_DOUBLE_EQ(percent_changed(paired({1, 0, -1}, {1, 0, -1})), 0.0);
  EXPECT_DOUBLE_EQ(percent_changed(paired({-2, -2, -2}, {2, 2, 2})), 100.0);
  EXPECT_THROW(percent_changed(paired({1}, {})), NoPairedParticipants);
}

TEST(Polarisation, Examples) {
  EXPECT_DOUBLE_EQ(polarisation(paired({1, 1}, {0, 0}), PolarisationVariant::Normalized), 0.0);
  const auto wide = paired({-2, 2}, {-2, 2});
  const std::vector<int> extremes{-2, 2};
  EXPECT_DOUBLE_EQ(population_std(extremes), 2.0);
  EXPECT_DOUBLE_EQ(polarisation(wide, PolarisationVariant::Normalized, Phase::Pre), 0.5);
  EXPECT_DOUBLE_EQ(polarisation(wide, PolarisationVariant::Ratio), 1.0);
  EXPECT_THROW(polarisation(paired({1, 1}, {0, 2}), PolarisationVariant::Ratio), ZeroPreStd);
}

TEST(Consensus, Examples) {
  const auto same = paired({1, 1, 1}, {2, 2, 2});
  for (auto ph : {Phase::Pre, Phase::Post}) {
    EXPECT_DOUBLE_EQ(consensus(same, ConsensusVariant::Majority, ph), 1.0);
    EXPECT_DOUBLE_EQ(consensus(same, ConsensusVariant::InverseStd, ph), 1.0);
  }
  EXPECT_DOUBLE_EQ(consensus(paired({2, 2, -1}, {0, 0, 0}), ConsensusVariant::Majority, Phase::Pre),
                   2.0 / 3.0);
}

// Counts of (-2, -1, 0, 1, 2) over n voters whose population std is closest
// to target.
std::vector<int> scores_with_std(int n, double target) {
  std::array<int, 5> best{};
  double best_err = 1e9;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b)
      for (int c = 0; a + b + c <= n; ++c)
        for (int d = 0; a + b + c + d <= n; ++d) {
          const int e = n - a - b - c - d;
          const double m = (-2.0 * a - b + d + 2.0 * e) / n;
          const double sq = (4.0 * a + b + d + 4.0 * e) / n;
          const double err = std::abs(std::sqrt(sq - m * m) - target);
          if (err < best_err) {
            best_err = err;
            best = {a, b, c, d, e};
          }
        }
  std::vector<int> out;
  for (int v = 0; v < 5; ++v) out.insert(out.end(), best[v], v - 2);
  return out;
}

TEST(Consensus, SyntheticRoomReproducesPrintedShift) {
  const auto pre = scores_with_std(35, 1.27);
  const auto post = scores_with_std(35, 1.13);
  const auto s = paired(pre, post);
  EXPECT_NEAR(consensus(s, ConsensusVariant::InverseStd, Phase::Pre), 0.44, 0.01);
  EXPECT_NEAR(consensus(s, ConsensusVariant::InverseStd, Phase::Post), 0.47, 0.01);
}

TEST(MeanChange, Examples) {
  const auto same = mean_change(paired({1, -1}, {1, -1}));
  EXPECT_DOUBLE_EQ(same.delta, 0.0);
  const auto flip = mean_change(paired({-2, -2}, {2, 2}));
  EXPECT_DOUBLE_EQ(flip.mean_pre, -2.0);
  EXPECT_DOUBLE_EQ(flip.delta, 4.0);
  // A room moving from -0.17 to 0.69 shows a shift of 0.86.
  std::vector<int> pre(100, 0), post(100, 0);
  std::fill(pre.begin(), pre.begin() + 17, -1);
  std::fill(post.begin(), post.begin() + 69, 1);
  const auto m = mean_change(paired(pre, post));
  EXPECT_NEAR(m.mean_pre, -0.17, 1e-12);
  EXPECT_NEAR(m.mean_post, 0.69, 1e-12);
  EXPECT_NEAR(m.delta, 0.86, 1e-12);
}

TEST(Gini, Examples) {
  const std::vector<double> equal{1, 1, 1, 1}, two{0, 1}, one{0, 0, 0, 4}, zeros{0, 0};
  EXPECT_DOUBLE_EQ(gini(equal), 0.0);
  EXPECT_DOUBLE_EQ(gini(two), 0.5);
  EXPECT_DOUBLE_EQ(gini(one), 0.75);
  EXPECT_DOUBLE_EQ(gini(zeros), 0.0);
}

TEST(Gini, ScaleInvariantAndMatchesPairwiseFormula) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0, 100);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> x(1 + rng() % 30);
    for (auto& v : x) v = u(rng);
    double pair_sum = 0, total = 0;
    for (double a : x) {
      total += a;
      for (double b : x) pair_sum += std::abs(a - b);
    }
    const double n = static_cast<double>(x.size());
    const double want = pair_sum / (2 * n * n * (total / n));
    EXPECT_NEAR(gini(x), want, 1e-12);
    std::vector<double> scaled = x;
    for (auto& v : scaled) v *= 7.5;
    EXPECT_NEAR(gini(scaled), gini(x), 1e-12);
  }
}

TEST(ShiftReport, PermutationInvariantAndDeterministic) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> score(-2, 2);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> pre(12), post(12);
    for (auto& v : pre) v = score(rng);
    for (auto& v : post) v = score(rng);
    auto records = room(pre, post);
    const auto a = shift_report(records);
    std::shuffle(records.begin(), records.end(), rng);
    const auto b = shift_report(records);
    EXPECT_EQ(a, b);
  }
}

TEST(ShiftReport, FlagsUndefinedRatioAndSkips) {
  auto r = room({1, 1}, {0, 2});
  r.push_back({"p9", "S2", Phase::Pre, 1});
  const auto rep = shift_report(r);
  ASSERT_EQ(rep.statements.size(), 1u);
  EXPECT_TRUE(rep.statements[0].polarisation_ratio_undefined);
  EXPECT_TRUE(std::isinf(rep.statements[0].polarisation_ratio));
  EXPECT_EQ(rep.skipped_statements, (std::vector<std::string>{"S2"}));
  EXPECT_EQ(rep.unpaired_votes, 1);
  EXPECT_EQ(rep.statements[0].n_paired, 2);
  EXPECT_DOUBLE_EQ(rep.statements[0].percent_changed, 100.0);
}

}  // namespace
}  // namespace agora
