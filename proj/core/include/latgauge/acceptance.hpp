/*
   Copyright 2026 the latgauge authors

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

#include <iosfwd>
#include <string>
#include <vector>

namespace latgauge {

/// Outcome of one end-to-end verification check.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct CheckOptions {
  int workers = 1;
};

inline constexpr int kNumChecks = 10;

/// Runs verification check `id` (1-based).
CheckResult run_check(int id, const CheckOptions& options = {});

/// Runs the whole suite in order, streaming one verdict line per check to
/// `out` as results arrive.
std::vector<CheckResult> run_all_checks(std::ostream& out,
                                        const CheckOptions& options = {});

/// "[PASS] 3 second-moment-identity (1.24 s) ..." one-liner.
std::string format_check_line(const CheckResult& result);

}  // namespace latgauge
