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

// Batch commands behind the `agora` executable. Each throws agora::Error for
// user-facing problems; run_cli maps outcomes to exit codes.

#ifndef AGORA_CLI_COMMANDS_HPP_
#define AGORA_CLI_COMMANDS_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "agora/http_api.hpp"

namespace agora::cli {

enum class OutputFormat { Table, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUser = 1;
inline constexpr int kExitInternal = 2;

/// Aligned plain text, or CSV when `format` is Csv.
std::string render(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows, OutputFormat format);

struct AllocateArgs {
  std::string projects;
  std::string ballots;
  Money budget = 0;
  std::string method = "both";  // mes | greedy | both
  std::string out_dir = ".";
  OutputFormat format = OutputFormat::Table;
};

struct ClusterArgs {
  std::string ballots;
  std::size_t k = 6;
  std::string out_dir = ".";
  bool standardize = false;
  /// Fail on degenerate data instead of using the one-axis fallback.
  bool strict = false;
  OutputFormat format = OutputFormat::Table;
};

struct BordaArgs {
  std::string rankings;
  std::string projects;
  Money budget = 0;
  std::optional<std::size_t> ranks;
  std::string out_dir = ".";
  OutputFormat format = OutputFormat::Table;
};

struct RtrArgs {
  std::string likert;
  std::string out_dir = ".";
  OutputFormat format = OutputFormat::Table;
};

struct PipelineArgs {
  std::string manifest;
  std::string out_dir = ".";
  OutputFormat format = OutputFormat::Table;
};

void cmd_allocate(const AllocateArgs& args, std::ostream& out);
void cmd_cluster(const ClusterArgs& args, std::ostream& out, std::ostream& err);
void cmd_borda(const BordaArgs& args, std::ostream& out);
void cmd_rtr(const RtrArgs& args, std::ostream& out, std::ostream& err);
/// Blocks until SIGINT or SIGTERM.
void cmd_serve(const ServeOptions& options, std::ostream& out);
/// Runs allocate, cluster, a committed session, borda and rtr over a manifest.
void cmd_pipeline(const PipelineArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv, dispatches and returns 0 (ok), 1 (user error) or 2 (internal).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace agora::cli

#endif  // AGORA_CLI_COMMANDS_HPP_
