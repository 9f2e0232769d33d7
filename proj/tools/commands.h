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

#ifndef LOCPUR_TOOLS_COMMANDS_H
#define LOCPUR_TOOLS_COMMANDS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace locpur::cli {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitAbsentOutcome = 3,
};

const char *tool_version();

/// Shared by every command.
struct CommonOptions {
    std::string out;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    std::string command_line;
};

/// Selects a fidelity family: either a JSON file or a Bell target with residual weights.
struct FamilyOptions {
    std::string family_file;
    std::string target = "psi-minus";
    std::vector<double> residual_weights;
};

struct StateOptions {
    std::string kind;
    std::optional<double> fidelity;
    std::vector<double> weights;
    FamilyOptions family;
    std::vector<std::size_t> dims;
    std::optional<std::size_t> rank;
    double min_eigenvalue = 0.05;
    std::optional<double> theta;
    std::optional<double> p;
};

struct ApplyOptions {
    std::string state_file;
    std::string filter_file;
};

struct OptimizeOptions {
    std::string state_file;
    std::size_t restarts = 20;
    std::size_t max_evals = 20000;
    double simplex_tolerance = 1e-9;
    std::size_t workers = 1;
    std::string curve_out;
    bool epsilon = false;
    std::optional<double> gain_at;
    FamilyOptions family;
};

struct DeltaCurveOptions {
    std::string filter_file;
    FamilyOptions family;
    std::size_t points = 11;
    double f_min = 0.05;
    double f_max = 0.95;
    std::string sidecar;
};

struct VerifyOptions {
    std::string suite;
    std::size_t workers = 1;
};

// Each returns a process exit code. Errors in the library surface as kExitUsage with a
// diagnostic on stderr.
int cmd_state(const StateOptions &opts, const CommonOptions &common);
int cmd_apply(const ApplyOptions &opts, const CommonOptions &common);
int cmd_optimize(const OptimizeOptions &opts, const CommonOptions &common);
int cmd_delta_curve(const DeltaCurveOptions &opts, const CommonOptions &common);
int cmd_verify(const VerifyOptions &opts, const CommonOptions &common);

}  // namespace locpur::cli

#endif
