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

#include "agora/mes.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <stdexcept>

namespace agora {

std::string_view to_string(AllocationMethod method) {
  return method == AllocationMethod::MES ? "mes" : "greedy";
}

std::vector<ProjectId> AllocationOutcome::winner_ids() const {
  std::vector<ProjectId> ids;
  ids.reserve(winners.size());
  for (const auto& w : winners) ids.push_back(w.project_id);
  return ids;
}

bool AllocationOutcome::funds(std::string_view project_id) const {
  return std::any_of(winners.begin(), winners.end(),
                     [&](const SelectionRound& w) { return w.project_id == project_id; });
}

namespace {

// Walks the piecewise-linear payment curve f(q) = sum_i min(b_i, q) over
// budgets sorted ascending. Between consecutive budgets f has slope equal
// to the number of supporters not yet exhausted.
std::optional<Rational> minimal_price_sorted(std::span<const Rational> sorted,
                                             const Rational& cost) {
  Rational exhausted;  // sum of the j smallest budgets
  const std::size_t k = sorted.size();
  for (std::size_t j = 0; j < k; ++j) {
    Rational q = (cost - exhausted) / Rational(static_cast<Money>(k - j));
    if (q <= sorted[j]) return q;
    exhausted += sorted[j];
  }
  return std::nullopt;
}

// Index-based MES run; payments are materialized only for the kept outcome.
struct MesRun {
  Rational start;
  std::vector<std::size_t> winners;
  std::vector<Rational> prices;
  std::vector<std::vector<Rational>> payments;  // aligned with supporters()[winner]
  std::vector<Rational> budgets;
  Money spent = 0;
};

struct Candidate {
  Rational q;  // lower bound on the current minimal price
  std::size_t project;
};

class MesRunner {
 public:
  explicit MesRunner(const Election& e) : e_(e) {}

  MesRun run(const Rational& start) const {
    MesRun out;
    out.start = start;
    out.budgets.assign(e_.voter_count(), start);

    const auto& supporters = e_.supporters();
    auto before = [this, &supporters](const Candidate& a, const Candidate& b) {
      if (a.q != b.q) return a.q < b.q;
      const auto na = supporters[a.project].size();
      const auto nb = supporters[b.project].size();
      if (na != nb) return na > nb;
      const Money ca = e_.projects()[a.project].cost;
      const Money cb = e_.projects()[b.project].cost;
      if (ca != cb) return ca < cb;
      return e_.projects()[a.project].id < e_.projects()[b.project].id;
    };
    std::set<Candidate, decltype(before)> queue(before);

    std::vector<Rational> scratch;
    auto price_of = [&](std::size_t p) {
      scratch.clear();
      for (std::size_t v : supporters[p]) scratch.push_back(out.budgets[v]);
      std::sort(scratch.begin(), scratch.end());
      return minimal_price_sorted(scratch, Rational(e_.projects()[p].cost));
    };

    for (std::size_t p = 0; p < e_.project_count(); ++p) {
      if (supporters[p].empty()) continue;
      if (auto q = price_of(p)) queue.insert({std::move(*q), p});
    }

    // Budgets only shrink, so a project's price never decreases and stored
    // prices are valid lower bounds. Pop the best bound, refresh it, and
    // accept it once it still beats every other bound.
    while (!queue.empty()) {
      Candidate top = *queue.begin();
      queue.erase(queue.begin());
      auto fresh = price_of(top.project);
      if (!fresh) continue;  // budgets never grow back
      Candidate updated{std::move(*fresh), top.project};
      if (!queue.empty() && before(*queue.begin(), updated)) {
        queue.insert(std::move(updated));
        continue;
      }
      const std::size_t p = updated.project;
      std::vector<Rational> paid;
      paid.reserve(supporters[p].size());
      for (std::size_t v : supporters[p]) {
        Rational pay = min(out.budgets[v], updated.q);
        out.budgets[v] -= pay;
        paid.push_back(std::move(pay));
      }
      out.winners.push_back(p);
      out.prices.push_back(std::move(updated.q));
      out.payments.push_back(std::move(paid));
      out.spent += e_.projects()[p].cost;
    }
    return out;
  }

  AllocationOutcome materialize(const MesRun& r) const {
    AllocationOutcome o;
    o.method = AllocationMethod::MES;
    o.start_budget_per_voter = r.start;
    o.total_spent = r.spent;
    for (std::size_t w = 0; w < r.winners.size(); ++w) {
      const std::size_t p = r.winners[w];
      SelectionRound round;
      round.project_id = e_.projects()[p].id;
      round.price_q = r.prices[w];
      const auto& sup = e_.supporters()[p];
      for (std::size_t i = 0; i < sup.size(); ++i) {
        if (r.payments[w][i].sign() > 0) {
          round.payments.emplace(e_.voters()[sup[i]].id, r.payments[w][i]);
        }
      }
      o.winners.push_back(std::move(round));
    }
    for (std::size_t v = 0; v < e_.voter_count(); ++v) {
      o.leftover_budgets.emplace(e_.voters()[v].id, r.budgets[v]);
    }
    return o;
  }

 private:
  const Election& e_;
};

}  // namespace

std::optional<Rational> minimal_price(std::span<const Rational> budgets, const Rational& cost) {
  std::vector<Rational> sorted(budgets.begin(), budgets.end());
  std::sort(sorted.begin(), sorted.end());
  return minimal_price_sorted(sorted, cost);
}

AllocationOutcome mes_fixed_start(const Election& e, const Rational& start_budget) {
  if (start_budget.sign() < 0) throw std::invalid_argument("negative start budget");
  MesRunner runner(e);
  return runner.materialize(runner.run(start_budget));
}

AllocationOutcome mes_complete(const Election& e, const CompletionOptions& options) {
  if (e.voter_count() == 0) throw EmptyVoterSet("MES needs at least one voter");
  if (options.step <= 0) throw std::invalid_argument("completion step must be positive");

  const Money budget = e.total_budget();
  const Rational start(budget, static_cast<Money>(e.voter_count()));
  const Rational step(options.step);
  MesRunner runner(e);

  // Largest start budget the loop may try: start + k*step <= B.
  const Money max_increments = ((Rational(budget) - start) / step).floor();
  Money approved_cost = 0;
  for (std::size_t p = 0; p < e.project_count(); ++p) {
    if (!e.supporters()[p].empty()) approved_cost += e.projects()[p].cost;
  }
  // No start budget can overspend, so the loop would run to the cap.
  if (approved_cost <= budget) {
    return runner.materialize(
        runner.run(start + step * Rational(std::max<Money>(max_increments, 0))));
  }

  MesRun kept = runner.run(start);
  for (Money k = 1; k <= max_increments; ++k) {
    MesRun next = runner.run(start + step * Rational(k));
    if (next.spent > budget) break;
    kept = std::move(next);
  }
  return runner.materialize(kept);
}

AllocationOutcome greedy(const Election& e) {
  std::vector<std::size_t> order;
  for (std::size_t p = 0; p < e.project_count(); ++p) {
    if (!e.supporters()[p].empty()) order.push_back(p);
  }
  const auto& projects = e.projects();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto na = e.supporters()[a].size();
    const auto nb = e.supporters()[b].size();
    if (na != nb) return na > nb;
    if (projects[a].cost != projects[b].cost) return projects[a].cost < projects[b].cost;
    return projects[a].id < projects[b].id;
  });

  AllocationOutcome o;
  o.method = AllocationMethod::Greedy;
  Money remaining = e.total_budget();
  for (std::size_t p : order) {
    if (projects[p].cost > remaining) continue;
    remaining -= projects[p].cost;
    o.total_spent += projects[p].cost;
    o.winners.push_back(SelectionRound{projects[p].id, std::nullopt, {}});
  }
  return o;
}

std::vector<std::pair<Money, AllocationOutcome>> scenario_sweep(
    const Election& e, std::span<const Money> budget_levels, const CompletionOptions& options,
    bool parallel) {
  if (!std::is_sorted(budget_levels.begin(), budget_levels.end())) {
    throw std::invalid_argument("budget levels must be non-decreasing");
  }
  std::vector<std::pair<Money, AllocationOutcome>> out;
  out.reserve(budget_levels.size());
  if (!parallel) {
    for (Money level : budget_levels) {
      out.emplace_back(level, mes_complete(e.with_total_budget(level), options));
    }
    return out;
  }
  std::vector<std::future<AllocationOutcome>> pending;
  for (Money level : budget_levels) {
    pending.push_back(std::async(std::launch::async, [&e, level, options] {
      return mes_complete(e.with_total_budget(level), options);
    }));
  }
  for (std::size_t i = 0; i < pending.size(); ++i) {
    out.emplace_back(budget_levels[i], pending[i].get());
  }
  return out;
}

std::map<VoterId, Rational> per_voter_allocation_exact(const Election& e,
                                                       const AllocationOutcome& o) {
  std::vector<Rational> share(e.voter_count());
  for (const auto& w : o.winners) {
    const auto p = e.project_index(w.project_id);
    if (!p) throw std::invalid_argument("outcome names unknown project " + w.project_id);
    const auto& sup = e.supporters()[*p];
    if (sup.empty()) continue;
    const Rational each(e.projects()[*p].cost, static_cast<Money>(sup.size()));
    for (std::size_t v : sup) share[v] += each;
  }
  std::map<VoterId, Rational> out;
  for (std::size_t v = 0; v < e.voter_count(); ++v) out.emplace(e.voters()[v].id, share[v]);
  return out;
}

std::map<VoterId, Money> per_voter_allocation(const Election& e, const AllocationOutcome& o) {
  std::map<VoterId, Money> out;
  for (const auto& [id, value] : per_voter_allocation_exact(e, o)) {
    out.emplace(id, value.round_half_even());
  }
  return out;
}

std::map<VoterId, std::size_t> projects_won_per_voter(const Election& e,
                                                      const AllocationOutcome& o) {
  std::vector<std::size_t> won(e.voter_count(), 0);
  for (const auto& w : o.winners) {
    const auto p = e.project_index(w.project_id);
    if (!p) throw std::invalid_argument("outcome names unknown project " + w.project_id);
    for (std::size_t v : e.supporters()[*p]) ++won[v];
  }
  std::map<VoterId, std::size_t> out;
  for (std::size_t v = 0; v < e.voter_count(); ++v) out.emplace(e.voters()[v].id, won[v]);
  return out;
}

}  // namespace agora
