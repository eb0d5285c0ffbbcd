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

// JSON encodings of the domain types. Rationals travel as "n/d" strings and
// money as integers in minor units.

#ifndef AGORA_SERIALIZE_HPP_
#define AGORA_SERIALIZE_HPP_

#include <nlohmann/json.hpp>

#include "agora/aggregation.hpp"
#include "agora/clustering.hpp"
#include "agora/mes.hpp"
#include "agora/metrics.hpp"
#include "agora/model.hpp"
#include "agora/rational.hpp"

namespace agora {

using json = nlohmann::json;

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);

void to_json(json& j, const Project& p);
void from_json(const json& j, Project& p);
void to_json(json& j, const Voter& v);
void from_json(const json& j, Voter& v);
void to_json(json& j, const ApprovalBallot& b);
void from_json(const json& j, ApprovalBallot& b);
void to_json(json& j, const ElectionDraft& e);
void from_json(const json& j, ElectionDraft& e);
json election_to_json(const Election& e);

void to_json(json& j, const SelectionRound& r);
void from_json(const json& j, SelectionRound& r);
void to_json(json& j, const AllocationOutcome& o);
void from_json(const json& j, AllocationOutcome& o);

void to_json(json& j, const RankingSheet& s);
void from_json(const json& j, RankingSheet& s);
void to_json(json& j, const TallyRow& r);
void to_json(json& j, const BordaSelection& s);

void to_json(json& j, const LikertRecord& r);
void from_json(const json& j, LikertRecord& r);
void to_json(json& j, const StatementShift& s);
void from_json(const json& j, StatementShift& s);
void to_json(json& j, const ShiftReport& r);
void from_json(const json& j, ShiftReport& r);

void to_json(json& j, const GroupAssignment& g);

/// Reads a required member, raising BadRequest with the member name.
template <typename T>
T require_member(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw BadRequest(std::string("missing field '") + name + "'");
  }
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& ex) {
    throw BadRequest(std::string("field '") + name + "': " + ex.what());
  }
}

}  // namespace agora

#endif  // AGORA_SERIALIZE_HPP_
