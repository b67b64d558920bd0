// Copyright 2026 The Shuffle Blanket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shuffle_blanket::check {

struct criterion_result {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // measured vs expected, deterministic text
};

struct acceptance_summary {
  std::vector<criterion_result> results;
  bool all_passed = false;
};

// Runs the full acceptance grid, printing one pass/fail line per criterion
// to log as it goes, followed by a one-line summary. All randomness is
// internally seeded, so the numeric detail text is identical from run to
// run. Wall-clock budgets are enforced per criterion but reported only as
// within-budget booleans to keep the output deterministic.
acceptance_summary run_acceptance(std::ostream& log);

}  // namespace shuffle_blanket::check
