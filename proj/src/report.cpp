/*
   Copyright 2026 the stripcomb authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "stripcomb/report.hpp"

#include <json.hpp>

namespace stripcomb {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kVerifiedUpTo:
      return "VERIFIED_UP_TO";
    case CheckStatus::kCounterexample:
      return "COUNTEREXAMPLE";
    case CheckStatus::kSkipped:
      return "SKIPPED";
  }
  return "UNKNOWN";
}

namespace {

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j{{"id", r.id},
                   {"grid", r.grid},
                   {"status", status_name(r.status)},
                   {"checked_upto", r.checked_upto},
                   {"wall_ms", r.wall_ms}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

}  // namespace

std::string report_json(const CheckReport& r) { return to_json(r).dump(); }

std::string report_line(const CheckReport& r) {
  std::string line = r.id + ": " + status_name(r.status);
  if (!r.checked_upto.empty()) line += " (" + r.checked_upto + ")";
  if (!r.witness.empty()) line += " witness: " + r.witness;
  return line;
}

std::string reports_json(const std::vector<CheckReport>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  return arr.dump(2);
}

}  // namespace stripcomb
