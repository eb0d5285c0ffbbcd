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

// Method of Equal Shares for approval ballots, with budget completion, and
// the vote-count Greedy baseline.

#ifndef AGORA_MES_HPP_
#define AGORA_MES_HPP_

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "agora/model.hpp"
#include "agora/rational.hpp"

namespace agora {

enum class AllocationMethod { MES, Greedy };

std::string_view to_string(AllocationMethod method);

struct SelectionRound {
  ProjectId project_id;
  /// Price per unit of utility. Absent for Greedy.
  std::optional<Rational> price_q;
  /// Exact payment per approving voter. Empty for Greedy.
  std::map<VoterId, Rational> payments;

  friend bool operator==(const SelectionRound&, const SelectionRound&) = default;
};

struct AllocationOutcome {
  AllocationMethod method = AllocationMethod::MES;
  std::vector<SelectionRound> winners;
  /// MES only.
  std::optional<Rational> start_budget_per_voter;
  Money total_spent = 0;
  /// MES only: budget left to each voter after the last round.
  std::map<VoterId, Rational> leftover_budgets;

  std::vector<ProjectId> winner_ids() const;
  bool funds(std::string_view project_id) const;

  friend bool operator==(const AllocationOutcome&, const AllocationOutcome&) = default;
};

/// Smallest q with sum_i min(budget_i, q) >= cost over the given supporter
/// budgets, or nullopt when the supporters cannot afford `cost` at any q.
/// `budgets` need not be sorted.
std::optional<Rational> minimal_price(std::span<const Rational> budgets, const Rational& cost);

/// Runs MES with every voter starting at `start_budget`. Projects are
/// bought in order of minimal price q; ties go to more approvals, then lower
/// cost, then the lexicographically smaller id.
AllocationOutcome mes_fixed_start(const Election& e, const Rational& start_budget);

struct CompletionOptions {
  /// Increment of the per-voter start budget between runs (minor units).
  Money step = 1;
};

/// MES at B/n, then at B/n + step, B/n + 2*step, ... keeping the outcome of
/// the largest start budget whose total spending stays within B. Stops at
/// the first start budget that overspends, or when the start budget would
/// exceed B. Throws EmptyVoterSet when the election has no voters.
AllocationOutcome mes_complete(const Election& e, const CompletionOptions& options = {});

/// Funds projects by approval count (ties: lower cost, then id), skipping
/// any project that no longer fits. Projects nobody approves are never funded.
AllocationOutcome greedy(const Election& e);

/// mes_complete at each budget level; `budget_levels` must be non-decreasing.
/// Levels are evaluated in parallel when `parallel` is set.
std::vector<std::pair<Money, AllocationOutcome>> scenario_sweep(
    const Election& e, std::span<const Money> budget_levels,
    const CompletionOptions& options = {}, bool parallel = false);

/// Equal split of each funded project's cost among its approvers, summed
/// per voter, exactly.
std::map<VoterId, Rational> per_voter_allocation_exact(const Election& e,
                                                       const AllocationOutcome& o);

/// per_voter_allocation_exact rounded half-to-even to minor units.
std::map<VoterId, Money> per_voter_allocation(const Election& e, const AllocationOutcome& o);

/// Number of funded projects each voter approved.
std::map<VoterId, std::size_t> projects_won_per_voter(const Election& e,
                                                      const AllocationOutcome& o);

}  // namespace agora

#endif  // AGORA_MES_HPP_
