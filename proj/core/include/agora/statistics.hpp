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

// Rank tests: Mann-Whitney U and Wilcoxon signed-rank, two-sided.

#ifndef AGORA_STATISTICS_HPP_
#define AGORA_STATISTICS_HPP_

#include <span>
#include <string>
#include <vector>

namespace agora {

enum class PValueMethod { Exact, Asymptotic };

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;  // two-sided
  PValueMethod method = PValueMethod::Exact;
};

/// Largest combined sample size (MWU) or nonzero-pair count (Wilcoxon) for
/// which the exact null distribution is enumerated.
inline constexpr std::size_t kExactLimit = 20;

/// Midranks (1-based) of `values`, averaging ties.
std::vector<double> midranks(std::span<const double> values);

/// U is the statistic of `a`: pairs (a_i, b_j) with a_i > b_j, ties count 1/2.
/// Exact p when n_a + n_b <= 20 and there are no ties; otherwise the normal
/// approximation with tie and continuity correction. Throws EmptySample.
TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

/// W = min(W+, W-) over nonzero differences post - pre (zeros dropped).
/// Exact p for <= 20 nonzero pairs without tied |d|; otherwise the normal
/// approximation with tie correction. Throws AllZeroDifferences, or
/// std::invalid_argument for unequal lengths.
TestResult wilcoxon_signed_rank(std::span<const double> pre, std::span<const double> post);

/// p-value rendered with five decimals.
std::string format_p(double p);

}  // namespace agora

#endif  // AGORA_STATISTICS_HPP_
