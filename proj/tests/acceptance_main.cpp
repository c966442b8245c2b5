/*
   Copyright 2026 the wprm authors

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

// Acceptance suite: runs the full cross-validation grid and prints one
// pass/fail line per criterion. Exit status 0 iff everything passed.

#include <cstdio>

#include "wprm/sweep.hpp"

int main() {
    const wprm::SweepReport report = wprm::run_acceptance_sweep();
    for (const auto& c : report.criteria) {
        std::printf("criterion %2d: %s - %s (%lld cases, %.2fs)\n", c.index,
                    c.pass ? "PASS" : "FAIL", c.title.c_str(), c.cases, c.seconds);
        for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
        if (c.failure_count > (long long)c.failures.size())
            std::printf("    ... and %lld more failures\n",
                        c.failure_count - (long long)c.failures.size());
    }
    std::printf("%s\n", report.all_pass() ? "acceptance: ALL CRITERIA PASSED"
                                          : "acceptance: FAILURES PRESENT");
    return report.all_pass() ? 0 : 1;
}
