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

#include "agora/statistics.hpp"

#include <gtest/gtest.h>

#include <random>

#include "agora/errors.hpp"
#include "oracles/stats_reference.hpp"

namespace agora {
namespace {

TEST(Midranks, Ties) {
  const std::vector<double> x{3, 1, 3, 2};
  EXPECT_EQ(midranks(x), (std::vector<double>{3.5, 1, 3.5, 2}));
}

TEST(MannWhitney, SeparatedSamplesExact) {
  const std::vector<double> a{1, 2, 3}, b{4, 5, 6};
  const auto r = mann_whitney_u(a, b);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_NEAR(r.p_value, 0.1, 1e-12);
  EXPECT_EQ(r.method, PValueMethod::Exact);
}

TEST(MannWhitney, TextbookCriticalValue) {
  // n = 5 + 5: U = 2 is the two-sided 5% critical value.
  const std::vector<double> a{1, 2, 3, 4, 7}, b{5, 6, 8, 9, 10};
  const auto r = mann_whitney_u(a, b);
  EXPECT_EQ(r.statistic, 2.0);
  EXPECT_NEAR(r.p_value, 0.031746031746, 1e-9);
  const std::vector<double> c{1, 2, 3, 5, 7}, d{4, 6, 8, 9, 10};
  const auto s = mann_whitney_u(c, d);
  EXPECT_EQ(s.statistic, 3.0);
  EXPECT_GT(s.p_value, 0.05);
}

TEST(MannWhitney, SameMultisetGivesHighP) {
  const std::vector<double> a{1, 4, 6, 9}, b{9, 6, 4, 1};
  EXPECT_GE(mann_whitney_u(a, b).p_value, 0.99);
}

TEST(MannWhitney, Empty) {
  const std::vector<double> a{1}, none;
  EXPECT_THROW(mann_whitney_u(a, none), EmptySample);
}

TEST(MannWhitney, ComplementaryStatistics) {
  std::mt19937_64 rng(47);
  std::normal_distribution<double> z;
  for (int t = 0; t < 200; ++t) {
    std::vector<double> a(1 + rng() % 15), b(1 + rng() % 15);
    for (auto& v : a) v = z(rng);
    for (auto& v : b) v = z(rng);
    const auto ab = mann_whitney_u(a, b);
    const auto ba = mann_whitney_u(b, a);
    EXPECT_DOUBLE_EQ(ab.statistic + ba.statistic, static_cast<double>(a.size() * b.size()));
    EXPECT_NEAR(ab.p_value, ba.p_value, 1e-12);
  }
}

TEST(MannWhitney, MatchesReference) {
  ASSERT_GE(oracle::kMwuCases.size(), 50u);
  for (const auto& c : oracle::kMwuCases) {
    const auto r = mann_whitney_u(c.a, c.b);
    EXPECT_DOUBLE_EQ(r.statistic, c.u);
    EXPECT_NEAR(r.p_value, c.p, 1e-6);
    EXPECT_EQ(r.method == PValueMethod::Exact, c.exact);
  }
}

TEST(Wilcoxon, ShiftByOne) {
  const std::vector<double> pre{1, 2, 3, 4, 5}, post{2, 3, 4, 5, 6};
  const auto r = wilcoxon_signed_rank(pre, post);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.method, PValueMethod::Asymptotic);  // all |d| tie
  const std::vector<double> spread{1.5, 3, 4.25, 5.5, 7};
  const auto e = wilcoxon_signed_rank(pre, spread);
  EXPECT_EQ(e.statistic, 0.0);
  EXPECT_NEAR(e.p_value, 0.0625, 1e-12);
  EXPECT_EQ(e.method, PValueMethod::Exact);
}

TEST(Wilcoxon, TextbookCriticalValue) {
  // n = 10: W = 8 is the two-sided 5% critical value, W = 9 is not.
  std::vector<double> pre(10, 0.0), post(10);
  for (int i = 0; i < 10; ++i) post[i] = i + 1;
  for (int r : {0, 2, 3}) post[r] = -post[r];
  const auto w8 = wilcoxon_signed_rank(pre, post);
  EXPECT_EQ(w8.statistic, 8.0);
  EXPECT_NEAR(w8.p_value, 0.048828125, 1e-12);
  for (int i = 0; i < 10; ++i) post[i] = i + 1;
  for (int r : {1, 2, 3}) post[r] = -post[r];
  const auto w9 = wilcoxon_signed_rank(pre, post);
  EXPECT_EQ(w9.statistic, 9.0);
  EXPECT_NEAR(w9.p_value, 0.064453125, 1e-12);
}

TEST(Wilcoxon, Errors) {
  const std::vector<double> a{1, 2}, b{1, 2}, c{1};
  EXPECT_THROW(wilcoxon_signed_rank(a, b), AllZeroDifferences);
  EXPECT_THROW(wilcoxon_signed_rank(a, c), std::invalid_argument);
}

TEST(Wilcoxon, MatchesReference) {
  ASSERT_GE(oracle::kWilcoxonCases.size(), 50u);
  for (const auto& c : oracle::kWilcoxonCases) {
    const auto r = wilcoxon_signed_rank(c.pre, c.post);
    EXPECT_DOUBLE_EQ(r.statistic, c.w);
    EXPECT_NEAR(r.p_value, c.p, 1e-6);
    EXPECT_EQ(r.method == PValueMethod::Exact, c.exact);
  }
}

TEST(FormatP, FiveDecimals) {
  EXPECT_EQ(format_p(0.227151), "0.22715");
  EXPECT_EQ(format_p(1.0), "1.00000");
  EXPECT_EQ(format_p(0.000001), "0.00000");
}

}  // namespace
}  // namespace agora
