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

// Shared domain types for approval-ballot elections.

#ifndef AGORA_MODEL_HPP_
#define AGORA_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "agora/errors.hpp"
#include "agora/rational.hpp"

namespace agora {

using ProjectId = std::string;
using VoterId = std::string;
/// Free-form string tags. Used for segmentation only, never by allocation.
using Attributes = std::map<std::string, std::string>;

struct Project {
  ProjectId id;
  std::string name;
  Money cost = 0;
  Attributes attributes;

  friend bool operator==(const Project&, const Project&) = default;
};

struct Voter {
  VoterId id;
  Attributes attributes;

  friend bool operator==(const Voter&, const Voter&) = default;
};

struct ApprovalBallot {
  VoterId voter_id;
  std::set<ProjectId> approved;

  friend bool operator==(const ApprovalBallot&, const ApprovalBallot&) = default;
};

/// Unvalidated election record, as read from files or the wire.
struct ElectionDraft {
  std::vector<Project> projects;
  std::vector<Voter> voters;
  std::vector<ApprovalBallot> ballots;
  Money total_budget = 0;

  friend bool operator==(const ElectionDraft&, const ElectionDraft&) = default;
};

enum class ViolationKind { DanglingReference, DuplicateId, NonPositiveCost, NegativeBudget };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string subject;  // offending id (or "total_budget")
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Deliberation round; shared by clustering and aggregation.
enum class Round { Homogeneous, Heterogeneous };

std::string_view to_string(Round round);
/// Accepts "homogeneous"/"heterogeneous" and the short tags "HM"/"HT" (any case).
std::optional<Round> parse_round(std::string_view text);

/// A validated, immutable election. Only `validate_election` constructs one.
class Election {
 public:
  const std::vector<Project>& projects() const noexcept { return draft_.projects; }
  const std::vector<Voter>& voters() const noexcept { return draft_.voters; }
  const std::vector<ApprovalBallot>& ballots() const noexcept { return draft_.ballots; }
  Money total_budget() const noexcept { return draft_.total_budget; }

  std::size_t project_count() const noexcept { return draft_.projects.size(); }
  std::size_t voter_count() const noexcept { return draft_.voters.size(); }

  std::optional<std::size_t> project_index(std::string_view id) const;
  std::optional<std::size_t> voter_index(std::string_view id) const;
  const Project& project(std::string_view id) const;

  /// Voter indices approving each project, ascending.
  const std::vector<std::vector<std::size_t>>& supporters() const noexcept { return supporters_; }
  /// Project indices approved by each voter, ascending.
  const std::vector<std::vector<std::size_t>>& approvals() const noexcept { return approvals_; }

  /// Same election with the total budget replaced.
  Election with_total_budget(Money budget) const;

  const ElectionDraft& draft() const noexcept { return draft_; }

  friend bool operator==(const Election& a, const Election& b) { return a.draft_ == b.draft_; }

 private:
  friend Election validate_election(ElectionDraft raw);
  explicit Election(ElectionDraft draft);

  ElectionDraft draft_;
  std::map<std::string, std::size_t, std::less<>> project_index_;
  std::map<std::string, std::size_t, std::less<>> voter_index_;
  std::vector<std::vector<std::size_t>> supporters_;
  std::vector<std::vector<std::size_t>> approvals_;
};

/// Every violation in `raw`, in a deterministic order. Empty means valid.
std::vector<Violation> check_election(const ElectionDraft& raw);

/// Validates `raw`; throws ValidationError listing all violations.
Election validate_election(ElectionDraft raw);

/// Number of ballots approving each project; unapproved projects map to 0.
std::map<ProjectId, std::size_t> approval_counts(const Election& e);

/// Stable 64-bit FNV-1a over a canonical rendering, as 16 hex digits.
std::string election_digest(const Election& e);

/// FNV-1a 64-bit hash of arbitrary bytes.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace agora

#endif  // AGORA_MODEL_HPP_
