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

#include "agora/ingest.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "agora/serialize.hpp"

namespace agora {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void bad_cell(const csv::Table& t, std::size_t row, std::size_t col,
                           const std::string& what) {
  throw ParseError(t.source, t.lines[row], col + 1, what);
}

Money parse_money(const csv::Table& t, std::size_t row, std::size_t col) {
  const auto v = csv::parse_int(t.rows[row][col]);
  if (!v) {
    bad_cell(t, row, col,
             "expected integer minor units in column '" + t.header[col] + "', got '" +
                 t.rows[row][col] + "'");
  }
  return *v;
}

std::vector<std::string> attribute_columns(const std::vector<std::map<std::string, std::string>>& maps) {
  std::set<std::string> keys;
  for (const auto& m : maps) {
    for (const auto& [k, v] : m) keys.insert(k);
  }
  return {keys.begin(), keys.end()};
}

std::string lock_path_for(const std::string& path) {
  const fs::path p(path);
  return (p.parent_path() / ("." + p.filename().string() + ".lock")).string();
}

const std::set<std::string>& polis_metadata_columns() {
  static const std::set<std::string> kColumns{"group-id", "n-comments", "n-votes",
                                              "n-agree", "n-disagree", "xid"};
  return kColumns;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_locked(const std::string& path, const std::string& content) {
  const std::string lock = lock_path_for(path);
  const int fd = ::open(lock.c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
  if (fd < 0) throw std::runtime_error("cannot open lock file " + lock);
  if (::flock(fd, LOCK_EX) != 0) {
    ::close(fd);
    throw std::runtime_error("cannot lock " + lock);
  }
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write " + tmp);
      out << content;
      out.flush();
      if (!out) throw std::runtime_error("short write to " + tmp);
    }
    fs::rename(tmp, path);
  } catch (...) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    ::flock(fd, LOCK_UN);
    ::close(fd);
    throw;
  }
  ::flock(fd, LOCK_UN);
  ::close(fd);
}

BallotFormat detect_ballot_format(const csv::Table& table) {
  if (table.column("voter_id") && table.column("project_id")) return BallotFormat::Long;
  if (!table.header.empty() && table.header.front() == "voter_id") return BallotFormat::Wide;
  throw ParseError(table.source, 1, 1,
                   "ballot file needs columns voter_id,project_id or voter_id followed by "
                   "project columns");
}

std::vector<Project> read_projects(const csv::Table& table) {
  const std::size_t id_col = table.require_column("id");
  const std::size_t name_col = table.require_column("name");
  const std::size_t cost_col = table.require_column("cost");
  std::vector<Project> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    Project p;
    p.id = row[id_col];
    if (p.id.empty()) bad_cell(table, r, id_col, "empty project id");
    p.name = row[name_col];
    p.cost = parse_money(table, r, cost_col);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == id_col || c == name_col || c == cost_col || row[c].empty()) continue;
      p.attributes[table.header[c]] = row[c];
    }
    out.push_back(std::move(p));
  }
  return out;
}

void read_ballots(const csv::Table& table, ElectionDraft& draft) {
  std::map<std::string, std::size_t> voter_pos;
  auto voter = [&](const std::string& id) -> std::size_t {
    auto [it, inserted] = voter_pos.emplace(id, draft.voters.size());
    if (inserted) {
      draft.voters.push_back(Voter{id, {}});
      draft.ballots.push_back(ApprovalBallot{id, {}});
    }
    return it->second;
  };

  if (detect_ballot_format(table) == BallotFormat::Long) {
    const std::size_t v_col = *table.column("voter_id");
    const std::size_t p_col = *table.column("project_id");
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const auto& row = table.rows[r];
      if (row[v_col].empty()) bad_cell(table, r, v_col, "empty voter id");
      const std::size_t v = voter(row[v_col]);
      if (!row[p_col].empty()) draft.ballots[v].approved.insert(row[p_col]);
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c == v_col || c == p_col || row[c].empty()) continue;
        draft.voters[v].attributes.emplace(table.header[c], row[c]);
      }
    }
    return;
  }

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row[0].empty()) bad_cell(table, r, 0, "empty voter id");
    const std::size_t v = voter(row[0]);
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (row[c] == "1") {
        draft.ballots[v].approved.insert(table.header[c]);
      } else if (row[c] != "0" && !row[c].empty()) {
        bad_cell(table, r, c, "wide ballot cells must be 0 or 1, got '" + row[c] + "'");
      }
    }
  }
}

Election load_election(const std::string& projects_path, const std::string& ballots_path,
                       Money total_budget) {
  ElectionDraft draft;
  draft.projects = read_projects(csv::read_file(projects_path));
  read_ballots(csv::read_file(ballots_path), draft);
  draft.total_budget = total_budget;
  return validate_election(std::move(draft));
}

Election load_ballots_only(const std::string& ballots_path) {
  const auto table = csv::read_file(ballots_path);
  ElectionDraft draft;
  read_ballots(table, draft);
  std::vector<std::string> ids;
  if (detect_ballot_format(table) == BallotFormat::Wide) {
    ids.assign(table.header.begin() + 1, table.header.end());
  } else {
    std::set<std::string> seen;
    const std::size_t p_col = *table.column("project_id");
    for (const auto& row : table.rows) {
      if (!row[p_col].empty() && seen.insert(row[p_col]).second) ids.push_back(row[p_col]);
    }
  }
  for (const auto& id : ids) draft.projects.push_back(Project{id, id, 1, {}});
  return validate_election(std::move(draft));
}

void save_election(const Election& e, const std::string& projects_path,
                   const std::string& ballots_path, BallotFormat format) {
  {
    std::vector<std::map<std::string, std::string>> attrs;
    for (const auto& p : e.projects()) attrs.push_back(p.attributes);
    const auto extra = attribute_columns(attrs);
    std::vector<std::string> header{"id", "name", "cost"};
    header.insert(header.end(), extra.begin(), extra.end());
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : e.projects()) {
      std::vector<std::string> row{p.id, p.name, std::to_string(p.cost)};
      for (const auto& k : extra) {
        auto it = p.attributes.find(k);
        row.push_back(it == p.attributes.end() ? "" : it->second);
      }
      rows.push_back(std::move(row));
    }
    write_file_locked(projects_path, csv::format(header, rows));
  }

  std::map<VoterId, const ApprovalBallot*> ballot_of;
  for (const auto& b : e.ballots()) ballot_of[b.voter_id] = &b;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;

  if (format == BallotFormat::Wide) {
    header.push_back("voter_id");
    for (const auto& p : e.projects()) header.push_back(p.id);
    for (const auto& v : e.voters()) {
      std::vector<std::string> row{v.id};
      const ApprovalBallot* b = ballot_of.count(v.id) ? ballot_of[v.id] : nullptr;
      for (const auto& p : e.projects()) {
        row.push_back(b && b->approved.contains(p.id) ? "1" : "0");
      }
      rows.push_back(std::move(row));
    }
  } else {
    std::vector<std::map<std::string, std::string>> attrs;
    for (const auto& v : e.voters()) attrs.push_back(v.attributes);
    const auto extra = attribute_columns(attrs);
    header = {"voter_id", "project_id"};
    header.insert(header.end(), extra.begin(), extra.end());
    for (const auto& v : e.voters()) {
      std::vector<std::string> tail;
      for (const auto& k : extra) {
        auto it = v.attributes.find(k);
        tail.push_back(it == v.attributes.end() ? "" : it->second);
      }
      const ApprovalBallot* b = ballot_of.count(v.id) ? ballot_of[v.id] : nullptr;
      if (!b || b->approved.empty()) {
        std::vector<std::string> row{v.id, ""};
        row.insert(row.end(), tail.begin(), tail.end());
        rows.push_back(std::move(row));
        continue;
      }
      for (const auto& pid : b->approved) {
        std::vector<std::string> row{v.id, pid};
        row.insert(row.end(), tail.begin(), tail.end());
        rows.push_back(std::move(row));
      }
    }
  }
  write_file_locked(ballots_path, csv::format(header, rows));
}

LikertLoad load_likert(const std::string& path) {
  const auto t = csv::read_file(path);
  const std::size_t part_col = t.require_column("participant_id");
  const std::size_t stmt_col = t.require_column("statement_id");
  const std::size_t phase_col = t.require_column("phase");
  const std::size_t score_col = t.require_column("score");

  LikertLoad out;
  std::map<std::tuple<std::string, std::string, Phase>, std::size_t> seen;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    const auto phase = parse_phase(row[phase_col]);
    if (!phase) bad_cell(t, r, phase_col, "phase must be pre or post, got '" + row[phase_col] + "'");
    if (row[score_col].empty()) {
      ++out.abstentions;
      continue;
    }
    const auto score = csv::parse_int(row[score_col]);
    if (!score) bad_cell(t, r, score_col, "score must be an integer, got '" + row[score_col] + "'");
    try {
      check_likert_score(static_cast<int>(*score));
    } catch (const OutOfScaleScore& ex) {
      throw OutOfScaleScore(t.source + ":" + std::to_string(t.lines[r]) + ": " + ex.what());
    }
    LikertRecord rec{row[part_col], row[stmt_col], *phase, static_cast<int>(*score)};
    auto key = std::make_tuple(rec.participant_id, rec.statement_id, rec.phase);
    auto it = seen.find(key);
    if (it != seen.end()) {
      out.warnings.push_back(t.source + ":" + std::to_string(t.lines[r]) +
                             ": duplicate vote for participant " + rec.participant_id +
                             ", statement " + rec.statement_id + ", phase " +
                             std::string(to_string(rec.phase)) + "; keeping the later one");
      out.records[it->second] = std::move(rec);
      continue;
    }
    seen.emplace(std::move(key), out.records.size());
    out.records.push_back(std::move(rec));
  }
  return out;
}

void save_likert(const std::vector<LikertRecord>& records, const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : records) {
    rows.push_back({r.participant_id, r.statement_id, std::string(to_string(r.phase)),
                    std::to_string(r.score)});
  }
  write_file_locked(path, csv::format({"participant_id", "statement_id", "phase", "score"}, rows));
}

std::size_t PolisMatrix::missing_count() const {
  std::size_t n = 0;
  for (const auto& row : votes) {
    n += static_cast<std::size_t>(std::count(row.begin(), row.end(), std::nullopt));
  }
  return n;
}

DenseMatrix PolisMatrix::imputed(double fill) const {
  DenseMatrix m(participant_ids.size(), statement_ids.size());
  for (std::size_t r = 0; r < votes.size(); ++r) {
    for (std::size_t c = 0; c < statement_ids.size(); ++c) {
      m(r, c) = votes[r][c] ? static_cast<double>(*votes[r][c]) : fill;
    }
  }
  return m;
}

PolisMatrix load_polis_matrix(const std::string& path) {
  const auto t = csv::read_file(path);
  if (t.header.size() < 2) throw ParseError(path, 1, 1, "need a participant column and statements");
  std::vector<std::size_t> statement_cols;
  PolisMatrix m;
  for (std::size_t c = 1; c < t.header.size(); ++c) {
    if (polis_metadata_columns().contains(t.header[c])) continue;
    statement_cols.push_back(c);
    m.statement_ids.push_back(t.header[c]);
  }
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row[0].empty()) bad_cell(t, r, 0, "empty participant id");
    m.participant_ids.push_back(row[0]);
    std::vector<std::optional<int>> votes;
    for (std::size_t c : statement_cols) {
      if (row[c].empty()) {
        votes.push_back(std::nullopt);
        continue;
      }
      const auto v = csv::parse_int(row[c]);
      if (!v || *v < -1 || *v > 1) bad_cell(t, r, c, "vote must be -1, 0, 1 or blank");
      votes.push_back(static_cast<int>(*v));
    }
    m.votes.push_back(std::move(votes));
  }
  return m;
}

void save_polis_matrix(const PolisMatrix& m, const std::string& path) {
  std::vector<std::string> header{"participant"};
  header.insert(header.end(), m.statement_ids.begin(), m.statement_ids.end());
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < m.participant_ids.size(); ++r) {
    std::vector<std::string> row{m.participant_ids[r]};
    for (const auto& v : m.votes[r]) row.push_back(v ? std::to_string(*v) : "");
    rows.push_back(std::move(row));
  }
  write_file_locked(path, csv::format(header, rows));
}

std::vector<RankingSheet> load_rankings(const std::string& path,
                                        std::optional<std::size_t> expected_ranks) {
  const auto t = csv::read_file(path);
  const std::size_t round_col = t.require_column("round");
  const std::size_t group_col = t.require_column("group");
  const std::size_t rank_col = t.require_column("rank");
  const std::size_t project_col = t.require_column("project_id");

  struct Pending {
    RankingSheet sheet;
    std::map<std::int64_t, ProjectId> by_rank;
    std::size_t first_row = 0;
  };
  std::vector<Pending> sheets;
  std::map<std::pair<Round, std::string>, std::size_t> index;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    const auto round = parse_round(row[round_col]);
    if (!round) bad_cell(t, r, round_col, "round must be homogeneous or heterogeneous");
    const auto rank = csv::parse_int(row[rank_col]);
    if (!rank || *rank < 1) bad_cell(t, r, rank_col, "rank must be a positive integer");
    if (row[project_col].empty()) bad_cell(t, r, project_col, "empty project id");
    auto key = std::make_pair(*round, row[group_col]);
    auto [it, inserted] = index.emplace(key, sheets.size());
    if (inserted) {
      Pending p;
      p.sheet.round = *round;
      p.sheet.group_label = row[group_col];
      p.first_row = r;
      sheets.push_back(std::move(p));
    }
    auto& pending = sheets[it->second];
    if (!pending.by_rank.emplace(*rank, row[project_col]).second) {
      bad_cell(t, r, rank_col, "rank " + std::to_string(*rank) + " repeated for group " +
                                   row[group_col]);
    }
  }

  std::vector<RankingSheet> out;
  for (auto& p : sheets) {
    std::int64_t expect = 1;
    for (auto& [rank, pid] : p.by_rank) {
      if (rank != expect) {
        bad_cell(t, p.first_row, rank_col,
                 "ranks of group " + p.sheet.group_label + " must run 1..R without gaps");
      }
      ++expect;
      p.sheet.ranked_projects.push_back(pid);
    }
    if (expected_ranks && p.sheet.ranked_projects.size() != *expected_ranks) {
      bad_cell(t, p.first_row, rank_col,
               "group " + p.sheet.group_label + " ranks " +
                   std::to_string(p.sheet.ranked_projects.size()) + " projects, expected " +
                   std::to_string(*expected_ranks));
    }
    out.push_back(std::move(p.sheet));
  }
  return out;
}

void save_rankings(const std::vector<RankingSheet>& sheets, const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : sheets) {
    for (std::size_t i = 0; i < s.ranked_projects.size(); ++i) {
      rows.push_back({std::string(to_string(s.round)), s.group_label, std::to_string(i + 1),
                      s.ranked_projects[i]});
    }
  }
  write_file_locked(path, csv::format({"round", "group", "rank", "project_id"}, rows));
}

void save_outcome(const AllocationOutcome& o, const std::string& path) {
  write_file_locked(path, json(o).dump(2) + "\n");
}

AllocationOutcome load_outcome(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text).get<AllocationOutcome>();
  } catch (const json::parse_error& ex) {
    throw ParseError(path, 0, ex.byte, ex.what());
  } catch (const std::exception& ex) {
    throw ParseError(path, 0, 0, ex.what());
  }
}

void save_points(const std::vector<OpinionPoint>& points, const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : points) {
    rows.push_back({p.voter_id, csv::format_double(p.pc1), csv::format_double(p.pc2),
                    csv::format_double(p.theta_deg), p.theta_from_hash ? "1" : "0"});
  }
  write_file_locked(path,
                    csv::format({"voter_id", "pc1", "pc2", "theta_deg", "theta_from_hash"}, rows));
}

std::vector<OpinionPoint> load_points(const std::string& path) {
  const auto t = csv::read_file(path);
  const std::size_t cols[] = {t.require_column("voter_id"), t.require_column("pc1"),
                              t.require_column("pc2"), t.require_column("theta_deg"),
                              t.require_column("theta_from_hash")};
  std::vector<OpinionPoint> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    OpinionPoint p;
    p.voter_id = row[cols[0]];
    double* targets[] = {&p.pc1, &p.pc2, &p.theta_deg};
    for (int k = 0; k < 3; ++k) {
      const auto v = csv::parse_double(row[cols[k + 1]]);
      if (!v) bad_cell(t, r, cols[k + 1], "expected a number");
      *targets[k] = *v;
    }
    p.theta_from_hash = row[cols[4]] == "1";
    out.push_back(std::move(p));
  }
  return out;
}

void save_assignments(const std::vector<GroupAssignment>& rounds, const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& a : rounds) {
    for (const auto& g : a.groups) {
      for (std::size_t i = 0; i < g.members.size(); ++i) {
        rows.push_back({std::string(to_string(a.round)), g.label, g.members[i],
                        i < g.source_labels.size() ? g.source_labels[i] : "",
                        g.sector ? csv::format_double(g.sector->start_deg) : "",
                        g.sector ? csv::format_double(g.sector->span_deg) : ""});
      }
    }
  }
  write_file_locked(path, csv::format({"round", "group", "voter_id", "source_group",
                                       "sector_start_deg", "sector_span_deg"},
                                      rows));
}

std::vector<GroupAssignment> load_assignments(const std::string& path) {
  const auto t = csv::read_file(path);
  const std::size_t round_col = t.require_column("round");
  const std::size_t group_col = t.require_column("group");
  const std::size_t voter_col = t.require_column("voter_id");
  const auto source_col = t.column("source_group");
  const auto start_col = t.column("sector_start_deg");
  const auto span_col = t.column("sector_span_deg");

  std::vector<GroupAssignment> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    const auto round = parse_round(row[round_col]);
    if (!round) bad_cell(t, r, round_col, "round must be homogeneous or heterogeneous");
    if (out.empty() || out.back().round != *round) {
      GroupAssignment a;
      a.round = *round;
      out.push_back(std::move(a));
    }
    auto& groups = out.back().groups;
    if (groups.empty() || groups.back().label != row[group_col]) {
      Group g;
      g.label = row[group_col];
      if (start_col && span_col && !row[*start_col].empty()) {
        const auto s = csv::parse_double(row[*start_col]);
        const auto w = csv::parse_double(row[*span_col]);
        if (!s || !w) bad_cell(t, r, *start_col, "expected sector angles");
        g.sector = SectorBounds{*s, *w};
      }
      groups.push_back(std::move(g));
    }
    groups.back().members.push_back(row[voter_col]);
    if (source_col && !row[*source_col].empty()) {
      groups.back().source_labels.push_back(row[*source_col]);
    }
  }
  return out;
}

FileManifest load_manifest(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& ex) {
    throw ParseError(path, 0, ex.byte, ex.what());
  }
  FileManifest m;
  m.path = path;
  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&](const std::string& rel) {
    const fs::path p(rel);
    return (p.is_absolute() ? p : base / p).lexically_normal().string();
  };
  try {
    m.schema_version = j.at("schema_version").get<std::string>();
    m.currency_unit = j.at("currency_unit").get<std::string>();
    m.total_budget = j.at("total_budget").get<Money>();
    if (j.contains("commit_budget")) m.commit_budget = j.at("commit_budget").get<Money>();
    if (j.contains("groups")) m.groups = j.at("groups").get<std::size_t>();
    const auto& files = j.at("files");
    m.projects = resolve(files.at("projects").get<std::string>());
    m.ballots = resolve(files.at("ballots").get<std::string>());
    if (files.contains("rankings")) m.rankings = resolve(files.at("rankings").get<std::string>());
    if (files.contains("likert")) m.likert = resolve(files.at("likert").get<std::string>());
    if (files.contains("polis")) m.polis = resolve(files.at("polis").get<std::string>());
  } catch (const json::exception& ex) {
    throw ManifestError(path + ": " + ex.what());
  }
  if (m.schema_version != kSchemaVersion) {
    throw ManifestError(path + ": unsupported schema_version '" + m.schema_version + "'");
  }

  for (const auto* f : {&m.projects, &m.ballots}) {
    if (!fs::exists(*f)) throw ManifestError(path + ": missing file " + *f);
  }
  m.ballot_format = detect_ballot_format(csv::read_file(m.ballots));
  load_election(m.projects, m.ballots, m.total_budget);
  if (m.rankings) load_rankings(*m.rankings);
  if (m.likert) load_likert(*m.likert);
  if (m.polis) load_polis_matrix(*m.polis);
  return m;
}

}  // namespace agora
