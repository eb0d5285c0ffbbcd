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

// On-disk formats.
//
//   projects     id,name,cost[,extra...]          cost in integer minor units
//   ballots      voter_id,project_id[,extra...]   one approval per row ("long")
//            or  voter_id,<project id>...         0/1 matrix ("wide")
//   rankings     round,group,rank,project_id
//   likert       participant_id,statement_id,phase,score
//   polis        participant,[metadata...],<statement id>...  values -1/0/1/blank
//   outcome      JSON, see serialize.hpp
//   manifest     JSON {schema_version, currency_unit, total_budget, files{...}}
//
// Extra columns of a long ballot file become voter attributes; extra project
// columns become project attributes. Writers hold an exclusive lock on a
// hidden ".<name>.lock" next to the target and replace it atomically.

#ifndef AGORA_INGEST_HPP_
#define AGORA_INGEST_HPP_

#include <optional>
#include <string>
#include <vector>

#include "agora/aggregation.hpp"
#include "agora/clustering.hpp"
#include "agora/csv.hpp"
#include "agora/mes.hpp"
#include "agora/metrics.hpp"
#include "agora/model.hpp"

namespace agora {

enum class BallotFormat { Long, Wide };

/// Long if the header has voter_id and project_id; wide if the first column
/// is voter_id and every other cell is 0 or 1. Throws ParseError otherwise.
BallotFormat detect_ballot_format(const csv::Table& table);

std::vector<Project> read_projects(const csv::Table& table);
/// Voters are listed in order of first appearance.
void read_ballots(const csv::Table& table, ElectionDraft& draft);

/// Parses and validates; ParseError for malformed files, ValidationError for
/// inconsistent content.
Election load_election(const std::string& projects_path, const std::string& ballots_path,
                       Money total_budget);

/// Ballot file alone: the project set is whatever the ballots mention (wide:
/// the header columns). Each project gets cost 1. Used for clustering.
Election load_ballots_only(const std::string& ballots_path);

void save_election(const Election& e, const std::string& projects_path,
                   const std::string& ballots_path, BallotFormat format = BallotFormat::Long);

struct LikertLoad {
  std::vector<LikertRecord> records;
  std::vector<std::string> warnings;
  /// Rows with an empty score.
  int abstentions = 0;
};

/// Duplicate (participant, statement, phase) rows keep the last and warn.
/// Throws OutOfScaleScore or ParseError.
LikertLoad load_likert(const std::string& path);
void save_likert(const std::vector<LikertRecord>& records, const std::string& path);

struct PolisMatrix {
  std::vector<std::string> participant_ids;
  std::vector<std::string> statement_ids;
  /// participants x statements; nullopt = no vote.
  std::vector<std::vector<std::optional<int>>> votes;

  std::size_t missing_count() const;
  /// Dense matrix with missing votes replaced by `fill`.
  DenseMatrix imputed(double fill = 0.0) const;

  friend bool operator==(const PolisMatrix&, const PolisMatrix&) = default;
};

PolisMatrix load_polis_matrix(const std::string& path);
void save_polis_matrix(const PolisMatrix& m, const std::string& path);

/// When `expected_ranks` is set every sheet must have exactly that many rows.
std::vector<RankingSheet> load_rankings(const std::string& path,
                                        std::optional<std::size_t> expected_ranks = std::nullopt);
void save_rankings(const std::vector<RankingSheet>& sheets, const std::string& path);

void save_outcome(const AllocationOutcome& o, const std::string& path);
AllocationOutcome load_outcome(const std::string& path);

void save_points(const std::vector<OpinionPoint>& points, const std::string& path);
std::vector<OpinionPoint> load_points(const std::string& path);

/// round,group,voter_id rows for one or more assignments.
void save_assignments(const std::vector<GroupAssignment>& rounds, const std::string& path);
std::vector<GroupAssignment> load_assignments(const std::string& path);

inline constexpr const char* kSchemaVersion = "1";

struct FileManifest {
  std::string path;  // manifest file location; relative entries resolve against it
  std::string schema_version;
  std::string currency_unit;
  Money total_budget = 0;
  std::string projects;
  std::string ballots;
  std::optional<std::string> rankings;
  std::optional<std::string> likert;
  std::optional<std::string> polis;
  BallotFormat ballot_format = BallotFormat::Long;
  std::optional<Money> commit_budget;
  std::optional<std::size_t> groups;
};

/// Reads the manifest and checks that every referenced file exists and parses.
FileManifest load_manifest(const std::string& path);

/// Atomically replaces `path` while holding an exclusive lock.
void write_file_locked(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace agora

#endif  // AGORA_INGEST_HPP_
