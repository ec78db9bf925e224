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

#pragma once

#include <string>
#include <vector>

namespace stripcomb {

enum class CheckStatus { kVerifiedUpTo, kCounterexample, kSkipped };

std::string status_name(CheckStatus s);

// Outcome of one verification run over a finite grid. Open-ended claims
// are never reported as proved; the strongest status states the grid
// that was actually checked.
struct CheckReport {
  std::string id;
  std::string grid;          // e.g. "n <= 24, 1 <= k <= 5"
  CheckStatus status = CheckStatus::kSkipped;
  std::string checked_upto;  // summary of the verified range
  std::string witness;       // first failing instance, or informative note
  double wall_ms = 0.0;
};

std::string report_json(const CheckReport& r);
std::string report_line(const CheckReport& r);
std::string reports_json(const std::vector<CheckReport>& rs);

}  // namespace stripcomb
