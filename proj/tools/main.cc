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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "verify_suites.h"

using namespace locpur::cli;

namespace {

void add_common(CLI::App *cmd, CommonOptions &common) {
    cmd->add_option("--out", common.out, "Output path (stdout when omitted)");
    cmd->add_option("--seed", common.seed, "Random seed (defaults to 42 and is recorded)");
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_family(CLI::App *cmd, FamilyOptions &family) {
    cmd->add_option("--family", family.family_file, "Family JSON {\"target\": pure, \"residual\": state}");
    cmd->add_option("--target", family.target, "Bell target of the family")
        ->check(CLI::IsMember({"psi-minus", "psi-plus", "phi-minus", "phi-plus"}));
    cmd->add_option("--residual-weights", family.residual_weights,
                    "Weights of the other three Bell states (default uniform)")
        ->delimiter(',');
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Local filtering, no-go certificates and fidelity optimization for bipartite mixed states"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);

    CommonOptions common;
    for (int i = 0; i < argc; ++i) {
        common.command_line += (i ? " " : "") + std::string(argv[i]);
    }

    StateOptions state;
    auto *state_cmd = app.add_subcommand("state", "Construct a state, write its JSON and print a summary");
    state_cmd->add_option("kind", state.kind,
                          "werner | bell-diagonal | rho-family-member | random-mixed | pure-theta | low-rank-example")
        ->required();
    state_cmd->add_option("--fidelity", state.fidelity, "Singlet fidelity F (werner, rho-family-member)");
    state_cmd->add_option("--weights", state.weights, "Bell weights psi-,psi+,phi-,phi+")->delimiter(',');
    state_cmd->add_option("--dims", state.dims, "Local dimensions n_a,n_b (random-mixed)")->delimiter(',');
    state_cmd->add_option("--rank", state.rank, "Rank (random-mixed, default full)");
    state_cmd->add_option("--min-eigenvalue", state.min_eigenvalue, "Eigenvalue floor (random-mixed)");
    state_cmd->add_option("--theta", state.theta, "Angle in radians (pure-theta)");
    state_cmd->add_option("--p", state.p, "Singlet weight (low-rank-example)");
    add_family(state_cmd, state.family);
    add_common(state_cmd, common);

    ApplyOptions apply;
    auto *apply_cmd = app.add_subcommand("apply", "Apply a local filter (or a list of steps) to a state");
    apply_cmd->add_option("--state", apply.state_file, "State JSON")->required();
    apply_cmd->add_option("--filter", apply.filter_file, "Filter JSON {A, B} or {steps: [...]}")->required();
    add_common(apply_cmd, common);

    OptimizeOptions optimize;
    auto *optimize_cmd = app.add_subcommand("optimize", "Multi-start search for the best locally reachable fidelity");
    optimize_cmd->add_option("--state", optimize.state_file, "State JSON");
    optimize_cmd->add_option("--restarts", optimize.restarts, "Number of restarts (restart 0 is the identity)");
    optimize_cmd->add_option("--max-evals", optimize.max_evals, "Objective evaluations per restart");
    optimize_cmd->add_option("--simplex-tol", optimize.simplex_tolerance, "Simplex diameter tolerance");
    optimize_cmd->add_option("--workers", optimize.workers, "Threads running restarts (does not change results)");
    optimize_cmd->add_option("--curve-out", optimize.curve_out, "CSV of best-so-far fidelity per restart");
    optimize_cmd->add_flag("--epsilon", optimize.epsilon, "Require full rank and attach the rank certificate");
    optimize_cmd->add_option("--gain-at", optimize.gain_at, "Maximize F'(F) - F on a family at this F instead");
    add_family(optimize_cmd, optimize.family);
    add_common(optimize_cmd, common);

    DeltaCurveOptions delta;
    auto *delta_cmd = app.add_subcommand("delta-curve", "Tabulate F'(F) and delta(F) for one filter on a family");
    delta_cmd->add_option("--filter", delta.filter_file, "Filter JSON")->required();
    delta_cmd->add_option("--points", delta.points, "Grid points");
    delta_cmd->add_option("--f-min", delta.f_min, "Smallest F on the grid");
    delta_cmd->add_option("--f-max", delta.f_max, "Largest F on the grid");
    delta_cmd->add_option("--sidecar", delta.sidecar, "Path of the JSON coefficient sidecar (default OUT.json)");
    add_family(delta_cmd, delta.family);
    add_common(delta_cmd, common);
    common.format = "json";

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run a fixed-seed theorem check bundle");
    verify_cmd->add_option("suite", verify.suite)->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--workers", verify.workers, "Threads for optimizer restarts");
    add_common(verify_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*state_cmd) {
        return cmd_state(state, common);
    }
    if (*apply_cmd) {
        return cmd_apply(apply, common);
    }
    if (*optimize_cmd) {
        return cmd_optimize(optimize, common);
    }
    if (*delta_cmd) {
        if (delta_cmd->count("--format") == 0) {
            common.format = "csv";
        }
        return cmd_delta_curve(delta, common);
    }
    return cmd_verify(verify, common);
}
