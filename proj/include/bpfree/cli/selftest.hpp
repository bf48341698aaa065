// Copyright 2026 The bpfree Authors
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


#ifndef BPFREE_CLI_SELFTEST_HPP
#define BPFREE_CLI_SELFTEST_HPP

#include <string>
#include <string_view>
#include <vector>

namespace bpfree::cli {

/// Deliberate defects used to check that the battery catches them.
enum class Fault { None, ParamShiftSign };

Fault parse_fault(std::string_view name);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Fast invariant battery. Deterministic: the same fault gives the same
/// results and text.
std::vector<CheckResult> run_selftest(Fault fault = Fault::None);

/// One "PASS name" or "FAIL name: detail" line per check, then a summary.
std::string format_report(const std::vector<CheckResult>& results);

} // namespace bpfree::cli

#endif // BPFREE_CLI_SELFTEST_HPP
