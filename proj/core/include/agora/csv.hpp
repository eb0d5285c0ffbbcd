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

// Minimal RFC 4180 reader/writer: comma separator, double-quote escaping,
// header row required. Locale-independent.

#ifndef AGORA_CSV_HPP_
#define AGORA_CSV_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agora::csv {

struct Table {
  std::string source;  // file name for error messages
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// 1-based physical line on which each row starts.
  std::vector<std::size_t> lines;

  /// Index of a header column, if present.
  std::optional<std::size_t> column(std::string_view name) const;
  /// Index of a required column; throws ParseError naming the file.
  std::size_t require_column(std::string_view name) const;
};

/// Parses CSV text. Rows are padded to the header width; longer rows are a
/// ParseError. Blank lines are skipped. A UTF-8 BOM is ignored.
Table parse(std::string_view text, std::string source = "<memory>");

/// Reads and parses a file; missing files raise ParseError at line 0.
Table read_file(const std::string& path);

std::string quote(std::string_view field);
std::string format_row(const std::vector<std::string>& fields);
std::string format(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

/// Strict integer parse (no whitespace, optional '-'); nullopt on failure.
std::optional<std::int64_t> parse_int(std::string_view text);
/// Strict '.'-decimal parse; nullopt on failure.
std::optional<double> parse_double(std::string_view text);
/// Shortest round-tripping decimal rendering.
std::string format_double(double value);

}  // namespace agora::csv

#endif  // AGORA_CSV_HPP_
