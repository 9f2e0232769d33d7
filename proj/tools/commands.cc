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

#include "commands.h"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <span>

#include <nlohmann/json.hpp>

#include "locpur/entanglement.h"
#include "locpur/errors.h"
#include "locpur/filter.h"
#include "locpur/io.h"
#include "locpur/optimize.h"
#include "locpur/states.h"
#include "verify_suites.h"

namespace locpur::cli {

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

#ifndef LOCPUR_VERSION
#define LOCPUR_VERSION "unknown"
#endif

Bell parse_bell(const std::string &name) {
    if (name == "psi-minus") {
        return Bell::PsiMinus;
    }
    if (name == "psi-plus") {
        return Bell::PsiPlus;
    }
    if (name == "phi-minus") {
        return Bell::PhiMinus;
    }
    if (name == "phi-plus") {
        return Bell::PhiPlus;
    }
    throw OutOfRange("unknown Bell state '" + name + "' (psi-minus, psi-plus, phi-minus, phi-plus)");
}

FidelityFamily build_family(const FamilyOptions &opts) {
    if (!opts.family_file.empty()) {
        json j = read_json_file(opts.family_file);
        if (!j.contains("target") || !j.contains("residual")) {
            throw ParseError(opts.family_file + ": family JSON needs \"target\" and \"residual\"");
        }
        return FidelityFamily::make(pure_state_from_json(j["target"]), state_from_json(j["residual"]));
    }
    std::array<double, 3> w{1.0 / 3, 1.0 / 3, 1.0 / 3};
    if (!opts.residual_weights.empty()) {
        if (opts.residual_weights.size() != 3) {
            throw OutOfRange("--residual-weights needs exactly three values");
        }
        std::copy(opts.residual_weights.begin(), opts.residual_weights.end(), w.begin());
    }
    return bell_family(parse_bell(opts.target), w);
}

json target_fidelities(const DensityMatrix &rho) {
    json out = json::object();
    auto dims = rho.dims();
    if (dims.n_a == 2 && dims.n_b == 2) {
        for (Bell b : kAllBell) {
            out[bell_name(b)] = fidelity(rho, bell_state(b));
        }
        return out;
    }
    for (std::size_t k = 2; k <= std::min(dims.n_a, dims.n_b); ++k) {
        out["schmidt_rank_" + std::to_string(k)] = fidelity(rho, canonical_entangled(dims, k));
    }
    out["embedded_singlet"] = fidelity(rho, embedded_singlet(dims));
    return out;
}

json dims_json(BipartiteDims d) {
    return json::array({d.n_a, d.n_b});
}

void emit(const json &j, const std::string &path) {
    std::string text = j.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
    } else {
        write_text_file(path, text);
    }
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void require_format(const CommonOptions &common, std::initializer_list<const char *> allowed) {
    for (const char *f : allowed) {
        if (common.format == f) {
            return;
        }
    }
    throw OutOfRange("unsupported --format '" + common.format + "' for this command");
}

template <typename Body>
int guarded(Body &&body) {
    try {
        return body();
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

DensityMatrix build_state(const StateOptions &opts, const CommonOptions &common, json &summary) {
    const std::string &kind = opts.kind;
    auto need = [&](const std::optional<double> &v, const char *flag) {
        if (!v) {
            throw OutOfRange("state " + kind + " requires " + flag);
        }
        return *v;
    };
    if (kind == "werner") {
        return werner_state(need(opts.fidelity, "--fidelity"));
    }
    if (kind == "bell-diagonal") {
        if (opts.weights.size() != 4) {
            throw OutOfRange("state bell-diagonal requires --weights with four values");
        }
        return bell_diagonal({opts.weights[0], opts.weights[1], opts.weights[2], opts.weights[3]});
    }
    if (kind == "rho-family-member") {
        return build_family(opts.family).member(need(opts.fidelity, "--fidelity"));
    }
    if (kind == "random-mixed") {
        BipartiteDims dims{2, 2};
        if (!opts.dims.empty()) {
            if (opts.dims.size() != 2) {
                throw OutOfRange("--dims needs two values");
            }
            dims = BipartiteDims::checked(opts.dims[0], opts.dims[1]);
        }
        std::uint64_t seed = common.seed.value_or(kDefaultSeed);
        summary["seed"] = seed;
        return random_mixed(dims, opts.rank.value_or(dims.total()), opts.min_eigenvalue, seed);
    }
    if (kind == "pure-theta") {
        return DensityMatrix::from_pure(pure_nonmax_entangled(need(opts.theta, "--theta")));
    }
    if (kind == "low-rank-example") {
        return low_rank_purifiable_example(need(opts.p, "--p"));
    }
    throw OutOfRange("unknown state kind '" + kind +
                     "' (werner, bell-diagonal, rho-family-member, random-mixed, pure-theta, low-rank-example)");
}

}  // namespace

const char *tool_version() {
    return LOCPUR_VERSION;
}

int cmd_state(const StateOptions &opts, const CommonOptions &common) {
    return guarded([&] {
        require_format(common, {"json"});
        json summary;
        DensityMatrix rho = build_state(opts, common, summary);
        summary["command"] = "state";
        summary["command_line"] = common.command_line;
        summary["tool_version"] = tool_version();
        summary["kind"] = opts.kind;
        summary["dims"] = dims_json(rho.dims());
        summary["rank"] = rank_with_tolerance(rho.matrix());
        summary["purity"] = rho.purity();
        summary["target_fidelities"] = target_fidelities(rho);
        summary["ppt_min_eigenvalue"] = ppt_min_eigenvalue(rho);
        summary["entanglement"] = verdict_name(is_entangled(rho));
        if (common.out.empty()) {
            summary["state"] = to_json(rho);
        } else {
            emit(to_json(rho), common.out);
            summary["out"] = common.out;
        }
        emit(summary, "");
        return static_cast<int>(kExitOk);
    });
}

int cmd_apply(const ApplyOptions &opts, const CommonOptions &common) {
    return guarded([&] {
        require_format(common, {"json"});
        DensityMatrix rho = state_from_json(read_json_file(opts.state_file));
        json filter_json = read_json_file(opts.filter_file);

        json report;
        report["command"] = "apply";
        report["command_line"] = common.command_line;
        report["tool_version"] = tool_version();

        std::vector<LocalFilter> steps;
        if (filter_json.contains("steps")) {
            for (const auto &s : filter_json["steps"]) {
                steps.push_back(filter_from_json(s));
            }
        } else {
            steps.push_back(filter_from_json(filter_json));
        }
        LocalFilter composed = compose(steps);

        if (steps.size() > 1) {
            // Conditional probability of each step given the previous ones succeeded.
            json per_step = json::array();
            std::optional<DensityMatrix> current = rho;
            for (const auto &s : steps) {
                if (!current) {
                    per_step.push_back(nullptr);
                    continue;
                }
                auto o = apply_filter(s, *current);
                per_step.push_back(o.success_probability);
                current = o.post_state;
            }
            report["step_probabilities"] = per_step;
        }

        PurificationOutcome outcome = apply_filter(composed, rho);
        report["filter"] = to_json(composed);
        report["success_probability"] = outcome.success_probability;
        report["dims"] = dims_json(rho.dims());
        if (outcome.post_state) {
            report["post_state"] = to_json(*outcome.post_state);
            report["target_fidelities"] = target_fidelities(*outcome.post_state);
            report["entanglement"] = verdict_name(is_entangled(*outcome.post_state));
        } else {
            report["post_state"] = nullptr;
        }
        report["certified_no_exact_purification"] = certify_no_exact_purification(rho, composed);
        emit(report, common.out);
        if (!outcome.post_state) {
            std::cerr << "outcome absent: success probability " << outcome.success_probability
                      << " is below the floor " << kProbabilityFloor << "\n";
            return static_cast<int>(kExitAbsentOutcome);
        }
        return static_cast<int>(kExitOk);
    });
}

int cmd_optimize(const OptimizeOptions &opts, const CommonOptions &common) {
    return guarded([&] {
        require_format(common, {"json", "csv"});
        auto started = std::chrono::steady_clock::now();
        OptimizerConfig config;
        config.restarts = opts.restarts;
        config.max_evals_per_restart = opts.max_evals;
        config.simplex_tolerance = opts.simplex_tolerance;
        config.seed = common.seed.value_or(kDefaultSeed);
        config.workers = opts.workers;
        if (config.restarts == 0) {
            throw OutOfRange("--restarts must be positive");
        }

        // Everything in `report` is a deterministic function of the inputs and config; run
        // metadata (command line, timing, workers) goes to a sidecar so reports compare byte-for-byte.
        json report;
        report["command"] = "optimize";
        report["tool_version"] = tool_version();
        report["config"] = {{"restarts", config.restarts},
                            {"max_evals_per_restart", config.max_evals_per_restart},
                            {"simplex_tolerance", config.simplex_tolerance},
                            {"seed", config.seed}};

        OptimizationReport result;
        if (opts.gain_at) {
            FidelityFamily family = build_family(opts.family);
            result = max_fidelity_gain(family, *opts.gain_at, config);
            report["mode"] = "fidelity_gain";
            report["family_fidelity"] = *opts.gain_at;
        } else {
            if (opts.state_file.empty()) {
                throw OutOfRange("optimize needs --state (or --gain-at with a family)");
            }
            DensityMatrix rho = state_from_json(read_json_file(opts.state_file));
            report["mode"] = "max_fidelity";
            if (opts.epsilon) {
                EpsilonEstimate est = estimate_epsilon(rho, config);
                result = est.report;
                report["certificate"] = {{"rank_r", est.certificate.rank_r},
                                         {"bound", est.certificate.bound},
                                         {"entangled_output_possible", est.certificate.entangled_output_possible}};
            } else {
                result = maximize_fidelity(rho, config);
            }
        }
        report["report"] = to_json(result);

        std::string csv = "restart,best_fidelity\n";
        double so_far = -1;
        for (std::size_t k = 0; k < result.per_restart_best.size(); ++k) {
            so_far = std::max(so_far, result.per_restart_best[k]);
            csv += std::to_string(k) + "," + format_double(so_far) + "\n";
        }
        if (!opts.curve_out.empty()) {
            write_text_file(opts.curve_out, csv);
        }
        if (common.format == "csv") {
            if (common.out.empty()) {
                std::cout << csv;
            } else {
                write_text_file(common.out, csv);
            }
        } else {
            emit(report, common.out);
        }

        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        json run = {{"command_line", common.command_line},
                    {"tool_version", tool_version()},
                    {"seed", config.seed},
                    {"workers", config.workers},
                    {"wall_clock_seconds", seconds}};
        if (common.out.empty()) {
            std::cerr << run.dump() << "\n";
        } else {
            emit(run, common.out + ".run.json");
        }
        return static_cast<int>(kExitOk);
    });
}

int cmd_delta_curve(const DeltaCurveOptions &opts, const CommonOptions &common) {
    return guarded([&] {
        require_format(common, {"csv", "json"});
        if (opts.points < 2 || !(opts.f_min > 0) || !(opts.f_max < 1) || !(opts.f_min < opts.f_max)) {
            throw OutOfRange("grid needs --points >= 2 and 0 < --f-min < --f-max < 1");
        }
        FidelityFamily family = build_family(opts.family);
        LocalFilter filter = filter_from_json(read_json_file(opts.filter_file));
        DeltaCurve curve = delta_coefficients(filter, family);

        std::string csv = "F,f_prime,delta,probability\n";
        json rows = json::array();
        for (std::size_t k = 0; k < opts.points; ++k) {
            double f = opts.f_min + (opts.f_max - opts.f_min) * static_cast<double>(k) /
                                        static_cast<double>(opts.points - 1);
            double probability = curve.probability(f);
            json row = {{"F", f}, {"probability", probability}, {"f_prime", nullptr}, {"delta", nullptr}};
            csv += format_double(f) + ",";
            if (probability >= kProbabilityFloor) {
                DeltaPoint p = delta_eval(curve, f);
                csv += format_double(p.f_prime) + "," + format_double(p.delta);
                row["f_prime"] = p.f_prime;
                row["delta"] = p.delta;
            } else {
                csv += ",";
            }
            csv += "," + format_double(probability) + "\n";
            rows.push_back(row);
        }

        json sidecar = to_json(curve);
        sidecar["command"] = "delta-curve";
        sidecar["command_line"] = common.command_line;
        sidecar["tool_version"] = tool_version();
        sidecar["curvature_sign"] = curve.beta_prime > 0 ? 1 : (curve.beta_prime < 0 ? -1 : 0);

        if (common.format == "json") {
            sidecar["rows"] = rows;
            emit(sidecar, common.out);
            return static_cast<int>(kExitOk);
        }
        if (common.out.empty()) {
            std::cout << csv;
        } else {
            write_text_file(common.out, csv);
        }
        std::string sidecar_path = opts.sidecar;
        if (sidecar_path.empty() && !common.out.empty()) {
            sidecar_path = common.out + ".json";
        }
        if (sidecar_path.empty()) {
            std::cerr << sidecar.dump() << "\n";
        } else {
            emit(sidecar, sidecar_path);
        }
        return static_cast<int>(kExitOk);
    });
}

int cmd_verify(const VerifyOptions &opts, const CommonOptions &common) {
    return guarded([&] {
        require_format(common, {"json"});
        auto started = std::chrono::steady_clock::now();
        SuiteResult result = run_suite(opts.suite, common.seed.value_or(kDefaultSeed), opts.workers);
        json summary = result.to_json();
        summary["command"] = "verify";
        summary["command_line"] = common.command_line;
        summary["tool_version"] = tool_version();
        summary["wall_clock_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        emit(summary, common.out);
        if (!common.out.empty()) {
            std::cout << (result.passed() ? "PASS " : "FAIL ") << result.suite << "\n";
        }
        return static_cast<int>(result.passed() ? kExitOk : kExitVerificationFailed);
    });
}

}  // namespace locpur::cli
