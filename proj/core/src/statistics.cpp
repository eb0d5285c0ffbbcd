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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "agora/errors.hpp"

namespace agora {

namespace {

double normal_two_sided(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

// Sum over tie groups of (t^3 - t); zero when all values are distinct.
double tie_term(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double term = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    term += t * t * t - t;
    i = j;
  }
  return term;
}

// ways[s] = number of k-subsets of {1..n} with element sum s.
std::vector<double> subset_sum_counts(std::size_t n, std::size_t k) {
  const std::size_t max_sum = n * (n + 1) / 2;
  std::vector<std::vector<double>> ways(k + 1, std::vector<double>(max_sum + 1, 0.0));
  ways[0][0] = 1.0;
  for (std::size_t x = 1; x <= n; ++x) {
    for (std::size_t c = std::min(k, x); c >= 1; --c) {
      for (std::size_t s = max_sum; s >= x; --s) ways[c][s] += ways[c - 1][s - x];
    }
  }
  return ways[k];
}

// Two-sided p from a discrete null distribution over integer sums.
double two_sided_from_counts(const std::vector<double>& counts, std::size_t observed) {
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  double lower = 0.0;
  double upper = 0.0;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    if (s <= observed) lower += counts[s];
    if (s >= observed) upper += counts[s];
  }
  return std::min(1.0, 2.0 * std::min(lower, upper) / total);
}

}  // namespace

std::vector<double> midranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t t = i; t < j; ++t) ranks[order[t]] = rank;
    i = j;
  }
  return ranks;
}

TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw EmptySample("Mann-Whitney U needs two non-empty samples");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto ranks = midranks(pooled);
  const double rank_sum_a = std::accumulate(ranks.begin(), ranks.begin() + a.size(), 0.0);

  TestResult r;
  r.statistic = rank_sum_a - na * (na + 1.0) / 2.0;
  const double ties = tie_term(pooled);
  const std::size_t n = pooled.size();

  if (n <= kExactLimit && ties == 0.0) {
    r.method = PValueMethod::Exact;
    const auto counts = subset_sum_counts(n, a.size());
    r.p_value = two_sided_from_counts(counts, static_cast<std::size_t>(std::lround(rank_sum_a)));
    return r;
  }

  r.method = PValueMethod::Asymptotic;
  const double nn = static_cast<double>(n);
  const double mu = na * nb / 2.0;
  const double var = na * nb / 12.0 * ((nn + 1.0) - ties / (nn * (nn - 1.0)));
  if (var <= 0.0) {
    r.p_value = 1.0;
    return r;
  }
  const double u_big = std::max(r.statistic, na * nb - r.statistic);
  const double z = (u_big - mu - 0.5) / std::sqrt(var);
  r.p_value = std::min(1.0, 2.0 * 0.5 * std::erfc(z / std::sqrt(2.0)));
  return r;
}

TestResult wilcoxon_signed_rank(std::span<const double> pre, std::span<const double> post) {
  if (pre.size() != post.size()) throw std::invalid_argument("paired samples differ in length");
  std::vector<double> diffs;
  for (std::size_t i = 0; i < pre.size(); ++i) {
    const double d = post[i] - pre[i];
    if (d != 0.0) diffs.push_back(d);
  }
  if (diffs.empty()) throw AllZeroDifferences("every pair has zero difference");

  std::vector<double> magnitudes(diffs.size());
  std::transform(diffs.begin(), diffs.end(), magnitudes.begin(),
                 [](double d) { return std::abs(d); });
  const auto ranks = midranks(magnitudes);
  double w_plus = 0.0;
  double w_minus = 0.0;
  for (std::size_t i = 0; i < diffs.size(); ++i) (diffs[i] > 0 ? w_plus : w_minus) += ranks[i];

  TestResult r;
  r.statistic = std::min(w_plus, w_minus);
  const std::size_t n = diffs.size();
  const double ties = tie_term(magnitudes);

  if (n <= kExactLimit && ties == 0.0) {
    r.method = PValueMethod::Exact;
    // Null: each rank's sign is a fair coin; W+ ranges over all subset sums.
    const std::size_t max_sum = n * (n + 1) / 2;
    std::vector<double> counts(max_sum + 1, 0.0);
    counts[0] = 1.0;
    for (std::size_t x = 1; x <= n; ++x) {
      for (std::size_t s = max_sum; s >= x; --s) counts[s] += counts[s - x];
    }
    r.p_value = two_sided_from_counts(counts, static_cast<std::size_t>(std::lround(w_plus)));
    return r;
  }

  r.method = PValueMethod::Asymptotic;
  const double nn = static_cast<double>(n);
  const double mean = nn * (nn + 1.0) / 4.0;
  const double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - ties / 48.0;
  if (var <= 0.0) {
    r.p_value = 1.0;
    return r;
  }
  r.p_value = std::min(1.0, normal_two_sided((r.statistic - mean) / std::sqrt(var)));
  return r;
}

std::string format_p(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", p);
  return buf;
}

}  // namespace agora
