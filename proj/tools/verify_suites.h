// Copyright 2026 The locpur Authors
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

#ifndef LOCPUR_TOOLS_VERIFY_SUITES_H
#define LOCPUR_TOOLS_VERIFY_SUITES_H

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace locpur::cli {

struct CheckResult {
    std::string name;
    bool passed = false;
    /// The worst observed value for the quantity the check bounds.
    double measured = 0;
    double threshold = 0;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    nlohmann::json to_json() const;
};

const std::vector<std::string> &suite_names();

/// Throws locpur::OutOfRange for an unknown suite name.
SuiteResult run_suite(const std::string &name, std::uint64_t seed, std::size_t workers);

}  // namespace locpur::cli

#endif
