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

#include "agora_cli/commands.hpp"

#include <fmt/format.h>
#include <pthread.h>
#include <signal.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <map>
#include <thread>

#include "agora/aggregation.hpp"
#include "agora/clustering.hpp"
#include "agora/csv.hpp"
#include "agora/ingest.hpp"
#include "agora/mes.hpp"
#include "agora/metrics.hpp"
#include "agora/serialize.hpp"

namespace agora::cli {

namespace fs = std::filesystem;

namespace {

std::string out_path(const std::string& dir, const std::string& name) {
  fs::create_directories(dir);
  return (fs::path(dir) / name).string();
}

std::string fixed(double v, int digits = 4) { return fmt::format("{:.{}f}", v, digits); }

bool numeric(const std::string& s) { return !s.empty() && csv::parse_double(s).has_value(); }

std::vector<double> as_doubles(const std::map<VoterId, Money>& m) {
  std::vector<double> out;
  for (const auto& [v, x] : m) out.push_back(static_cast<double>(x));
  return out;
}

std::vector<double> as_doubles(const std::map<VoterId, std::size_t>& m) {
  std::vector<double> out;
  for (const auto& [v, x] : m) out.push_back(static_cast<double>(x));
  return out;
}

void print_section(std::ostream& out, OutputFormat format, const std::string& title) {
  if (format == OutputFormat::Table) out << "\n== " << title << " ==\n";
  else out << "# " << title << "\n";
}

void print_winners(std::ostream& out, OutputFormat format, const Election& e,
                   const AllocationOutcome& o) {
  const auto counts = approval_counts(e);
  std::vector<std::vector<std::string>> rows;
  std::size_t i = 0;
  for (const auto& r : o.winners) {
    const auto& p = e.project(r.project_id);
    rows.push_back({std::to_string(++i), p.id, p.name, std::to_string(p.cost),
                    std::to_string(counts.at(p.id)),
                    r.price_q ? fixed(r.price_q->to_double()) : "-"});
  }
  out << render({"order", "project", "name", "cost", "votes", "q"}, rows, format);
  std::vector<std::vector<std::string>> summary{
      {std::string(to_string(o.method)), std::to_string(o.winners.size()),
       std::to_string(o.total_spent), std::to_string(e.total_budget() - o.total_spent),
       o.start_budget_per_voter ? fixed(o.start_budget_per_voter->to_double(), 2) : "-"}};
  out << render({"method", "winners", "spent", "unspent", "start_per_voter"}, summary, format);
}

struct Comparison {
  double gini_allocation_mes = 0.0;
  double gini_allocation_greedy = 0.0;
  double gini_projects_mes = 0.0;
  double gini_projects_greedy = 0.0;
};

/// Per-voter distributions of both outcomes; writes per_voter.csv.
Comparison compare_outcomes(const Election& e, const AllocationOutcome& mes,
                            const AllocationOutcome& grd, const std::string& dir,
                            std::ostream& out, OutputFormat format) {
  const auto won_m = projects_won_per_voter(e, mes);
  const auto won_g = projects_won_per_voter(e, grd);
  const auto alloc_m = per_voter_allocation(e, mes);
  const auto alloc_g = per_voter_allocation(e, grd);

  std::vector<std::vector<std::string>> rows;
  for (const auto& v : e.voters()) {
    rows.push_back({v.id, std::to_string(won_m.at(v.id)), std::to_string(won_g.at(v.id)),
                    std::to_string(alloc_m.at(v.id)), std::to_string(alloc_g.at(v.id))});
  }
  write_file_locked(out_path(dir, "per_voter.csv"),
                    csv::format({"voter_id", "mes_projects_won", "greedy_projects_won",
                                 "mes_allocation", "greedy_allocation"},
                                rows));

  std::map<std::size_t, std::pair<int, int>> hist;
  for (const auto& [v, n] : won_m) ++hist[n].first;
  for (const auto& [v, n] : won_g) ++hist[n].second;
  std::vector<std::vector<std::string>> hist_rows;
  for (const auto& [n, c] : hist) {
    hist_rows.push_back({std::to_string(n), std::to_string(c.first), std::to_string(c.second)});
  }
  print_section(out, format, "voters by number of funded approved projects");
  out << render({"projects_won", "mes_voters", "greedy_voters"}, hist_rows, format);

  Comparison c;
  if (e.voter_count() > 0) {
    c.gini_allocation_mes = gini(as_doubles(alloc_m));
    c.gini_allocation_greedy = gini(as_doubles(alloc_g));
    c.gini_projects_mes = gini(as_doubles(won_m));
    c.gini_projects_greedy = gini(as_doubles(won_g));
  }
  auto spread = [](const std::map<VoterId, Money>& m) {
    std::vector<Money> v;
    for (const auto& [k, x] : m) v.push_back(x);
    std::sort(v.begin(), v.end());
    if (v.empty()) return std::vector<std::string>{"-", "-", "-"};
    return std::vector<std::string>{std::to_string(v.front()), std::to_string(v[v.size() / 2]),
                                    std::to_string(v.back())};
  };
  const auto sm = spread(alloc_m);
  const auto sg = spread(alloc_g);
  print_section(out, format, "per-voter allocation");
  out << render({"method", "min", "median", "max", "gini_allocation", "gini_projects_won"},
                {{"mes", sm[0], sm[1], sm[2], fixed(c.gini_allocation_mes),
                  fixed(c.gini_projects_mes)},
                 {"greedy", sg[0], sg[1], sg[2], fixed(c.gini_allocation_greedy),
                  fixed(c.gini_projects_greedy)}},
                format);
  return c;
}

void run_allocate(const Election& e, const std::string& method, const std::string& dir,
                  std::ostream& out, OutputFormat format) {
  std::optional<AllocationOutcome> mes;
  std::optional<AllocationOutcome> grd;
  if (method == "mes" || method == "both") {
    mes = mes_complete(e);
    save_outcome(*mes, out_path(dir, "outcome_mes.json"));
    print_section(out, format, "MES winners");
    print_winners(out, format, e, *mes);
  }
  if (method == "greedy" || method == "both") {
    grd = greedy(e);
    save_outcome(*grd, out_path(dir, "outcome_greedy.json"));
    print_section(out, format, "Greedy winners");
    print_winners(out, format, e, *grd);
  }
  if (mes && grd) compare_outcomes(e, *mes, *grd, dir, out, format);
}

Projection run_projection(const Election& e, bool standardize, bool strict, std::ostream& err) {
  const DenseMatrix data = ballot_matrix(e);
  std::vector<VoterId> ids;
  for (const auto& v : e.voters()) ids.push_back(v.id);
  ProjectionOptions opts;
  opts.standardize = standardize;
  try {
    return project_2d(data, ids, opts);
  } catch (const DegenerateData& ex) {
    if (strict) throw;
    err << "note: DegenerateData: " << ex.what()
        << "; falling back to the first component alone (angles 0 or 180)\n";
    opts.fallback_on_degenerate = true;
    return project_2d(data, ids, opts);
  }
}

void print_assignment(std::ostream& out, OutputFormat format, const GroupAssignment& a) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& g : a.groups) {
    std::string members;
    for (const auto& m : g.members) members += (members.empty() ? "" : " ") + m;
    rows.push_back({std::string(to_string(a.round)), g.label, std::to_string(g.members.size()),
                    g.sector ? fixed(g.sector->start_deg, 2) : "-",
                    g.sector ? fixed(g.sector->span_deg, 2) : "-", members});
  }
  out << render({"round", "group", "size", "sector_start_deg", "sector_span_deg", "members"}, rows,
                format);
}

std::pair<GroupAssignment, GroupAssignment> run_cluster(const Election& e, std::size_t k,
                                                        bool standardize, bool strict,
                                                        const std::string& dir, std::ostream& out,
                                                        std::ostream& err, OutputFormat format) {
  if (k < 1) throw BadRequest("k must be at least 1");
  const Projection proj = run_projection(e, standardize, strict, err);
  auto hm = radial_partition(proj.points, k);
  auto ht = mix_groups(hm);
  save_points(proj.points, out_path(dir, "points.csv"));
  save_assignments({hm, ht}, out_path(dir, "assignments.csv"));

  print_section(out, format, "groups");
  print_assignment(out, format, hm);
  print_assignment(out, format, ht);
  const auto hashed = std::count_if(proj.points.begin(), proj.points.end(),
                                    [](const OpinionPoint& p) { return p.theta_from_hash; });
  out << "projection: lambda1=" << fixed(proj.eigenvalue1, 6)
      << " lambda2=" << fixed(proj.eigenvalue2, 6) << (proj.degenerate ? " (degenerate fallback)" : "")
      << "; " << hashed << " voter(s) at the centroid got hash angles\n";
  return {std::move(hm), std::move(ht)};
}

void print_tally(std::ostream& out, OutputFormat format, const Election& e,
                 const BordaSelection& sel) {
  std::set<ProjectId> won(sel.winners.begin(), sel.winners.end());
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : sel.tally) {
    rows.push_back({r.project_id, std::to_string(r.hm_points), std::to_string(r.ht_points),
                    std::to_string(r.total), std::to_string(r.sheets),
                    r.tag ? std::string(to_string(*r.tag)) : "-",
                    std::to_string(e.project(r.project_id).cost), won.count(r.project_id) ? "yes" : "no"});
  }
  out << render({"project", "hm_points", "ht_points", "total", "sheets", "tag", "cost", "funded"},
                rows, format);
  out << "selected " << sel.winners.size() << " project(s), spent " << sel.spent << "\n";
}

BordaSelection run_borda(const Election& e, const std::vector<RankingSheet>& sheets, Money budget,
                         const std::set<ProjectId>& excluded, const std::string& dir,
                         std::ostream& out, OutputFormat format) {
  auto sel = select_by_points(e, sheets, budget, excluded);
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : sel.tally) {
    rows.push_back({r.project_id, std::to_string(r.hm_points), std::to_string(r.ht_points),
                    std::to_string(r.total), std::to_string(r.sheets),
                    r.tag ? std::string(to_string(*r.tag)) : ""});
  }
  write_file_locked(out_path(dir, "tally.csv"),
                    csv::format({"project_id", "hm_points", "ht_points", "total", "sheets", "tag"},
                                rows));
  write_file_locked(out_path(dir, "borda_selection.json"), json(sel).dump(2) + "\n");
  print_section(out, format, "Borda tally");
  print_tally(out, format, e, sel);
  return sel;
}

std::string ratio_cell(const StatementShift& s) {
  return s.polarisation_ratio_undefined ? "inf (pre std 0)" : fixed(s.polarisation_ratio);
}

ShiftReport run_rtr(const std::vector<LikertRecord>& records, const std::string& dir,
                    std::ostream& out, OutputFormat format) {
  auto report = shift_report(records);
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : report.statements) {
    rows.push_back({s.statement_id, std::to_string(s.n_paired), std::to_string(s.pre_only),
                    std::to_string(s.post_only), fixed(s.percent_changed, 1), fixed(s.mean_pre),
                    fixed(s.mean_post), fixed(s.mean_change), fixed(s.polarisation_normalized_pre),
                    fixed(s.polarisation_normalized_post), ratio_cell(s),
                    fixed(s.consensus_majority_pre), fixed(s.consensus_majority_post),
                    fixed(s.consensus_inverse_std_pre), fixed(s.consensus_inverse_std_post)});
  }
  const std::vector<std::string> header{
      "statement",           "n_paired",          "pre_only",          "post_only",
      "percent_changed",     "mean_pre",          "mean_post",         "mean_change",
      "polarisation_std/4_pre", "polarisation_std/4_post", "polarisation_ratio",
      "consensus_majority_pre", "consensus_majority_post", "consensus_1/(1+std)_pre",
      "consensus_1/(1+std)_post"};
  write_file_locked(out_path(dir, "shift_report.csv"), csv::format(header, rows));
  write_file_locked(out_path(dir, "shift_report.json"), json(report).dump(2) + "\n");
  print_section(out, format, "ReadTheRoom shifts");
  out << render(header, rows, format);
  out << "unpaired votes excluded: " << report.unpaired_votes;
  if (!report.skipped_statements.empty()) {
    out << "; statements without paired participants:";
    for (const auto& s : report.skipped_statements) out << " " << s;
  }
  out << "\n";
  return report;
}

Election projects_only(const std::string& projects_path, Money budget) {
  ElectionDraft draft;
  draft.projects = read_projects(csv::read_file(projects_path));
  draft.total_budget = budget;
  return validate_election(std::move(draft));
}

OutputFormat parse_format(const std::string& s) {
  return s == "csv" ? OutputFormat::Csv : OutputFormat::Table;
}

}  // namespace

std::string render(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows, OutputFormat format) {
  if (format == OutputFormat::Csv) return csv::format(header, rows);
  std::vector<std::size_t> width(header.size());
  std::vector<bool> right(header.size(), true);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], r[c].size());
      if (!numeric(r[c]) && r[c] != "-") right[c] = false;
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string& cell = c < cells.size() ? cells[c] : std::string();
      if (c) s += "  ";
      if (c + 1 == width.size() && !right[c]) {
        s += cell;
      } else {
        s += right[c] ? fmt::format("{:>{}}", cell, width[c]) : fmt::format("{:<{}}", cell, width[c]);
      }
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };
  std::string out = line(header);
  std::string rule;
  for (std::size_t c = 0; c < width.size(); ++c) rule += (c ? "  " : "") + std::string(width[c], '-');
  out += rule + "\n";
  for (const auto& r : rows) out += line(r);
  return out;
}

void cmd_allocate(const AllocateArgs& args, std::ostream& out) {
  if (args.method != "mes" && args.method != "greedy" && args.method != "both") {
    throw BadRequest("method must be mes, greedy or both");
  }
  const Election e = load_election(args.projects, args.ballots, args.budget);
  run_allocate(e, args.method, args.out_dir, out, args.format);
}

void cmd_cluster(const ClusterArgs& args, std::ostream& out, std::ostream& err) {
  const Election e = load_ballots_only(args.ballots);
  run_cluster(e, args.k, args.standardize, args.strict, args.out_dir, out, err, args.format);
}

void cmd_borda(const BordaArgs& args, std::ostream& out) {
  const Election e = projects_only(args.projects, args.budget);
  const auto sheets = load_rankings(args.rankings, args.ranks);
  run_borda(e, sheets, args.budget, {}, args.out_dir, out, args.format);
}

void cmd_rtr(const RtrArgs& args, std::ostream& out, std::ostream& err) {
  const auto load = load_likert(args.likert);
  for (const auto& w : load.warnings) err << "warning: " << w << "\n";
  if (load.abstentions > 0) err << "note: " << load.abstentions << " abstention(s) skipped\n";
  run_rtr(load.records, args.out_dir, out, args.format);
}

void cmd_pipeline(const PipelineArgs& args, std::ostream& out, std::ostream& err) {
  const FileManifest m = load_manifest(args.manifest);
  const Election e = load_election(m.projects, m.ballots, m.total_budget);
  const OutputFormat f = args.format;
  const std::string& dir = args.out_dir;

  out << "election: " << e.voter_count() << " voters, " << e.project_count()
      << " projects, budget " << e.total_budget() << " " << m.currency_unit << "\n";
  run_allocate(e, "both", dir, out, f);
  const auto [hm, ht] =
      run_cluster(e, m.groups.value_or(6), false, false, dir, out, err, f);

  StoreOptions so;
  so.clock = [] { return std::int64_t{0}; };
  so.id_generator = [] { return std::string("pipeline"); };
  SessionStore store(std::move(so));
  const auto id = store.create_session(e);
  const Money commit = m.commit_budget.value_or(e.total_budget() / 2);
  const auto committed = store.commit_ratio(id, commit);
  save_outcome(*committed->mes_outcome(), out_path(dir, "outcome_committed.json"));
  print_section(out, f, "MES on the committed budget");
  print_winners(out, f, e.with_total_budget(commit), *committed->mes_outcome());

  std::vector<RankingSheet> sheets;
  if (m.rankings) sheets = load_rankings(*m.rankings);
  std::vector<LikertRecord> votes;
  if (m.likert) {
    const auto load = load_likert(*m.likert);
    for (const auto& w : load.warnings) err << "warning: " << w << "\n";
    votes = load.records;
    for (const auto& v : votes) store.rtr_vote(id, v);
  }

  const json report = store.finalize(id, sheets);
  write_file_locked(out_path(dir, "session_report.json"), report.dump(2) + "\n");
  const auto& ledger = store.get(id)->ledger();

  if (!sheets.empty()) {
    std::set<ProjectId> frozen;
    for (const auto& fp : store.get(id)->frozen()) frozen.insert(fp.project_id);
    const auto sel =
        run_borda(e, sheets, ledger.deliberation_budget(), frozen, dir, out, f);

    std::map<std::string, std::set<ProjectId>> picks;
    for (const auto& s : sheets) picks[s.group_label].insert(s.ranked_projects.begin(), s.ranked_projects.end());
    std::vector<std::vector<std::string>> rows;
    for (const auto* a : {&hm, &ht}) {
      const auto rep = alignment(e, *a, picks, WeightMode::Unit);
      for (const auto& sc : rep.scores) {
        rows.push_back({sc.voter_id, std::string(to_string(sc.round)), csv::format_double(sc.score)});
      }
    }
    write_file_locked(out_path(dir, "alignment.csv"),
                      csv::format({"voter_id", "round", "alignment"}, rows));
    out << "deliberation track: " << sel.winners.size() << " project(s) for " << sel.spent
        << " of " << ledger.deliberation_budget() << "\n";
  }
  if (!votes.empty()) run_rtr(votes, dir, out, f);

  print_section(out, f, "budget ledger");
  out << render({"total", "committed", "remainder", "mes_spent", "mes_unspent", "freed",
                 "deliberation_budget"},
                {{std::to_string(ledger.total), std::to_string(ledger.committed),
                  std::to_string(ledger.remainder()), std::to_string(ledger.mes_spent),
                  std::to_string(ledger.mes_unspent()),
                  std::to_string(ledger.freed_by_veto + ledger.freed_by_adjust),
                  std::to_string(ledger.deliberation_budget())}},
                f);
  out << "committed + remainder = " << ledger.committed + ledger.remainder() << " "
      << m.currency_unit << "\n";
}

void cmd_serve(const ServeOptions& options, std::ostream& out) {
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  SessionStore store(options.store);
  HttpServer server(store);
  const int port = server.bind(options.host, options.port);
  out << "agora service listening on http://" << options.host << ":" << port << "\n"
      << "  data dir: " << options.store.data_dir.value_or("(memory)") << "\n"
      << "  sessions loaded: " << store.session_ids().size() << "\n"
      << "  POST /sessions, GET /sessions/{id}, GET /sessions/{id}/scenario?budget=N,\n"
      << "  POST /sessions/{id}/{commit,veto,adjust,rtr/votes,finalize},\n"
      << "  GET /sessions/{id}/rtr/report, GET /sessions/{id}/events?offset=&limit=\n";
  out.flush();

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  server.serve();
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  pthread_sigmask(SIG_UNBLOCK, &signals, nullptr);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Participatory budgeting with equal shares, clustering and ReadTheRoom metrics",
               "agora"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "table";
  app.add_option("--format", format, "stdout format")
      ->check(CLI::IsMember({"table", "csv"}))
      ->capture_default_str();

  AllocateArgs alloc;
  auto* a = app.add_subcommand("allocate", "MES and/or Greedy on an approval election");
  a->add_option("--projects", alloc.projects, "projects CSV")->required();
  a->add_option("--ballots", alloc.ballots, "ballots CSV (long or wide)")->required();
  a->add_option("--budget", alloc.budget, "total budget in minor units")->required();
  a->add_option("--method", alloc.method)
      ->check(CLI::IsMember({"mes", "greedy", "both"}))
      ->capture_default_str();
  a->add_option("--out", alloc.out_dir, "output directory")->capture_default_str();

  ClusterArgs cl;
  auto* c = app.add_subcommand("cluster", "PCA projection and radial groups");
  c->add_option("--ballots", cl.ballots)->required();
  c->add_option("-k,--groups", cl.k)->capture_default_str();
  c->add_option("--out", cl.out_dir)->capture_default_str();
  c->add_flag("--standardize", cl.standardize, "scale columns to unit variance");
  c->add_flag("--strict", cl.strict, "fail on degenerate data instead of falling back");

  BordaArgs bo;
  auto* b = app.add_subcommand("borda", "Borda tally of deliberation rankings");
  b->add_option("--rankings", bo.rankings)->required();
  b->add_option("--projects", bo.projects)->required();
  b->add_option("--budget", bo.budget)->required();
  b->add_option("--ranks", bo.ranks, "expected ranks per sheet");
  b->add_option("--out", bo.out_dir)->capture_default_str();

  RtrArgs rt;
  auto* r = app.add_subcommand("rtr", "ReadTheRoom opinion-shift report");
  r->add_option("--likert", rt.likert)->required();
  r->add_option("--out", rt.out_dir)->capture_default_str();

  ServeOptions so;
  std::string data_dir;
  std::size_t cache_size = so.store.scenario_cache_size;
  auto* s = app.add_subcommand("serve", "run the session service");
  s->add_option("--host", so.host)->envname("AGORA_HOST")->capture_default_str();
  s->add_option("--port", so.port)->envname("AGORA_PORT")->capture_default_str();
  s->add_option("--data-dir", data_dir, "persist sessions here")->envname("AGORA_DATA_DIR");
  s->add_option("--cache-size", cache_size, "scenario cache entries")
      ->envname("AGORA_CACHE_SIZE")
      ->capture_default_str();

  PipelineArgs pl;
  auto* p = app.add_subcommand("pipeline", "every stage over a manifest");
  p->add_option("--manifest", pl.manifest)->required();
  p->add_option("--out", pl.out_dir)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUser;
  }

  const OutputFormat f = parse_format(format);
  alloc.format = cl.format = bo.format = rt.format = pl.format = f;
  try {
    if (a->parsed()) cmd_allocate(alloc, out);
    if (c->parsed()) cmd_cluster(cl, out, err);
    if (b->parsed()) cmd_borda(bo, out);
    if (r->parsed()) cmd_rtr(rt, out, err);
    if (p->parsed()) cmd_pipeline(pl, out, err);
    if (s->parsed()) {
      if (!data_dir.empty()) so.store.data_dir = data_dir;
      so.store.scenario_cache_size = cache_size;
      cmd_serve(so, out);
    }
  } catch (const ValidationError& ex) {
    err << "error: " << ex.code() << ": " << ex.what() << "\n";
    for (const auto& v : ex.violations()) {
      err << "  " << to_string(v.kind) << " " << v.subject << ": " << v.detail << "\n";
    }
    return kExitUser;
  } catch (const Error& ex) {
    err << "error: " << ex.code() << ": " << ex.what() << "\n";
    return kExitUser;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace agora::cli
