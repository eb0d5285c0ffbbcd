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

#ifndef AGORA_ERRORS_HPP_
#define AGORA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace agora {

/// Base class of every error raised by the library. `code()` is the stable
/// machine-readable name (also used on the HTTP wire).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define AGORA_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& message) : Error(#Name, message) {}  \
  }

// mes-engine
AGORA_DEFINE_ERROR(EmptyVoterSet);
// clustering
AGORA_DEFINE_ERROR(DegenerateData);
AGORA_DEFINE_ERROR(TooFewVoters);
// aggregation
AGORA_DEFINE_ERROR(DuplicateProjectInRanking);
// metrics
AGORA_DEFINE_ERROR(NoPairedParticipants);
AGORA_DEFINE_ERROR(ZeroPreStd);
AGORA_DEFINE_ERROR(EmptySample);
AGORA_DEFINE_ERROR(AllZeroDifferences);
AGORA_DEFINE_ERROR(OutOfScaleScore);
// ingest
AGORA_DEFINE_ERROR(ManifestError);
// hitl-service
AGORA_DEFINE_ERROR(SessionNotFound);
AGORA_DEFINE_ERROR(WrongState);
AGORA_DEFINE_ERROR(BudgetOutOfRange);
AGORA_DEFINE_ERROR(NotInFrozenSet);
AGORA_DEFINE_ERROR(IncreaseNotAllowed);
AGORA_DEFINE_ERROR(BindError);
AGORA_DEFINE_ERROR(BadRequest);

#undef AGORA_DEFINE_ERROR

/// Malformed input file; line and column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, std::size_t column, const std::string& what)
      : Error("ParseError", file + ":" + std::to_string(line) + ":" + std::to_string(column) +
                                ": " + what),
        file_(std::move(file)),
        line_(line),
        column_(column) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace agora

#endif  // AGORA_ERRORS_HPP_
