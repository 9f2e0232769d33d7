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

#include "verify_suites.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "locpur/entanglement.h"
#include "locpur/errors.h"
#include "locpur/optimize.h"
#include "locpur/rng.h"
#include "locpur/states.h"

namespace locpur::cli {

using nlohmann::json;

namespace {

constexpr double kExactTolerance = 1e-9;   // "never reaches fidelity 1 - 1e-9"
constexpr double kGainTolerance = 1e-8;    // admissible numerical fidelity gain
constexpr double kIdentityTolerance = 1e-12;

CheckResult at_most(std::string name, double measured, double threshold, std::string detail = {}) {
    return {std::move(name), measured <= threshold, measured, threshold, std::move(detail)};
}

CheckResult at_least(std::string name, double measured, double threshold, std::string detail = {}) {
    return {std::move(name), measured >= threshold, measured, threshold, std::move(detail)};
}

CheckResult below(std::string name, double measured, double threshold, std::string detail = {}) {
    return {std::move(name), measured < threshold, measured, threshold, std::move(detail)};
}

FilterParams random_params(Rng &rng, BipartiteDims dims) {
    FilterParams p(filter_param_count(dims));
    for (auto &x : p) {
        x = rng.normal();
    }
    return p;
}

void two_qubit_no_go(SuiteResult &out, std::size_t workers) {
    constexpr std::size_t kStates = 100;
    constexpr std::size_t kFilters = 10000;
    const BipartiteDims dims{2, 2};
    for (std::size_t rank : {2, 3, 4}) {
        double worst_sweep = 0;
        double worst_optimized = 0;
        std::size_t uncertified = 0;
        for (std::size_t s = 0; s < kStates; ++s) {
            std::uint64_t state_seed = derive_stream_seed(out.seed, 1000 * rank + s);
            DensityMatrix rho = random_mixed(dims, rank, 0.05, state_seed);
            PurificationCertifier certifier(rho);
            FilterObjective objective(rho, fidelity_targets(dims));
            Rng rng(state_seed, 1);
            for (std::size_t k = 0; k < kFilters; ++k) {
                FilterParams p = random_params(rng, dims);
                worst_sweep = std::max(worst_sweep, objective(p));
                if (!certifier.check(decode(p, dims)).certified()) {
                    ++uncertified;
                }
            }
            OptimizerConfig config{.restarts = 4, .max_evals_per_restart = 5000, .seed = state_seed, .workers = workers};
            OptimizationReport r = maximize_fidelity(rho, config);
            worst_optimized = std::max(worst_optimized, r.best_fidelity);
            if (!certifier.check(decode(r.best_params, dims)).certified()) {
                ++uncertified;
            }
        }
        std::string tag = "rank" + std::to_string(rank);
        out.checks.push_back(below(tag + "_max_random_filter_fidelity", worst_sweep, 1 - kExactTolerance));
        out.checks.push_back(below(tag + "_max_optimized_fidelity", worst_optimized, 1 - kExactTolerance));
        out.checks.push_back(at_most(tag + "_uncertified_filters", static_cast<double>(uncertified), 0));
    }
}

void generic_no_go(SuiteResult &out, std::size_t workers) {
    constexpr std::size_t kStates = 100;
    for (BipartiteDims dims : {BipartiteDims{2, 2}, BipartiteDims{2, 3}, BipartiteDims{3, 3}}) {
        std::size_t possible = 0;
        double worst = 0;
        for (std::size_t s = 0; s < kStates; ++s) {
            std::uint64_t seed = derive_stream_seed(out.seed, 100 * dims.total() + s);
            DensityMatrix rho = random_mixed(dims, dims.total(), 0.5 / static_cast<double>(dims.total()), seed);
            if (rank_bound_verdict(rho).entangled_output_possible) {
                ++possible;
            }
            OptimizerConfig config{.restarts = 2, .max_evals_per_restart = 3000, .seed = seed, .workers = workers};
            worst = std::max(worst, maximize_fidelity(rho, config).best_fidelity);
        }
        std::string tag = std::to_string(dims.n_a) + "x" + std::to_string(dims.n_b);
        out.checks.push_back(at_most(tag + "_full_rank_verdicts_allowing_entangled_output",
                                     static_cast<double>(possible), 0));
        out.checks.push_back(below(tag + "_max_optimized_fidelity", worst, 1.0));
    }
    BipartiteDims qutrits{3, 3};
    auto rank7 = rank_bound_verdict(random_mixed(qutrits, 7, 0.05, derive_stream_seed(out.seed, 7)));
    out.checks.push_back({"3x3_rank7_entangled_output_possible", !rank7.entangled_output_possible,
                          rank7.entangled_output_possible ? 1.0 : 0.0, 0, "expected false (bound 3)"});
    auto rank2 = rank_bound_verdict(random_mixed(qutrits, 2, 0.05, derive_stream_seed(out.seed, 2)));
    out.checks.push_back({"3x3_rank2_entangled_output_possible", rank2.entangled_output_possible,
                          rank2.entangled_output_possible ? 1.0 : 0.0, 1, "expected true (bound 8)"});
}

void non_increase(SuiteResult &out, const FidelityFamily &family, const std::vector<double> &fidelities,
                  bool check_max_fidelity, std::size_t workers) {
    OptimizerConfig config{.restarts = 200, .seed = out.seed, .workers = workers};
    for (double f : fidelities) {
        std::string tag = "F=" + std::to_string(f).substr(0, 4);
        OptimizationReport gain = max_fidelity_gain(family, f, config);
        out.checks.push_back(at_most(tag + "_best_delta", *gain.best_delta, kGainTolerance));
        if (check_max_fidelity) {
            OptimizationReport best = maximize_fidelity(family.member(f), config);
            out.checks.push_back(at_most(tag + "_best_fidelity_minus_F", best.best_fidelity - f, kGainTolerance));
            out.checks.push_back(at_least(tag + "_best_fidelity_not_below_F", best.best_fidelity - f, 0));
        }
    }
    double threshold = separability_threshold(family, 1e-10);
    out.checks.push_back(at_most("separability_threshold_error", std::abs(threshold - 0.5), 1e-9));
}

void counterexamples(SuiteResult &out, std::size_t workers) {
    const PureState singlet = bell_state(Bell::PsiMinus);
    for (double theta : {std::numbers::pi / 12, std::numbers::pi / 6, std::numbers::pi / 5}) {
        std::string tag = "procrustean_theta=" + std::to_string(theta).substr(0, 6);
        ComplexMatrix a = ComplexMatrix::Identity(2, 2);
        a(0, 0) = std::tan(theta);
        auto outcome = apply_filter(LocalFilter::make(a, ComplexMatrix::Identity(2, 2)),
                                    DensityMatrix::from_pure(pure_nonmax_entangled(theta)));
        double fid = outcome.post_state ? fidelity(*outcome.post_state, singlet) : 0;
        double expected = 2 * std::sin(theta) * std::sin(theta);
        out.checks.push_back(at_least(tag + "_singlet_fidelity", fid, 1 - 1e-12));
        out.checks.push_back(
            at_most(tag + "_probability_error", std::abs(outcome.success_probability - expected), 1e-12));
    }
    ComplexMatrix projector = ComplexMatrix::Zero(3, 3);
    projector(0, 0) = projector(1, 1) = 1;
    LocalFilter projector_filter = LocalFilter::make(projector, projector);
    for (double p : {0.3, 0.5, 0.9}) {
        std::string tag = "low_rank_p=" + std::to_string(p).substr(0, 3);
        DensityMatrix rho = low_rank_purifiable_example(p);
        auto outcome = apply_filter(projector_filter, rho);
        double fid = outcome.post_state ? fidelity(*outcome.post_state, embedded_singlet()) : 0;
        out.checks.push_back(at_least(tag + "_embedded_singlet_fidelity", fid, 1 - 1e-12));
        out.checks.push_back(at_most(tag + "_probability_error", std::abs(outcome.success_probability - p), 1e-12));
        out.checks.push_back({tag + "_exact_purification_not_excluded",
                              !certify_no_exact_purification(rho, projector_filter), 0, 0,
                              "projector filter purifies exactly"});
    }
    OptimizerConfig config{.restarts = 20, .seed = out.seed, .workers = workers};
    auto pure = maximize_fidelity(DensityMatrix::from_pure(pure_nonmax_entangled(std::numbers::pi / 6)), config);
    out.checks.push_back(at_least("optimizer_pure_theta_pi/6", pure.best_fidelity, 1 - 1e-6));
    auto low = maximize_fidelity(low_rank_purifiable_example(0.5), config);
    out.checks.push_back(at_least("optimizer_low_rank_p=0.5", low.best_fidelity, 1 - 1e-6));
}

using SuiteBody = std::function<void(SuiteResult &, std::size_t)>;

const std::map<std::string, SuiteBody> &suites() {
    static const std::map<std::string, SuiteBody> table = {
        {"two-qubit-no-go", two_qubit_no_go},
        {"generic-no-go", generic_no_go},
        {"werner-non-increase",
         [](SuiteResult &out, std::size_t workers) {
             non_increase(out, werner_family(), {0.6, 0.75, 0.9}, true, workers);
         }},
        {"bell-diagonal-non-increase",
         [](SuiteResult &out, std::size_t workers) {
             non_increase(out, bell_family(Bell::PsiMinus, {0.5, 0.3, 0.2}), {0.55, 0.8}, false, workers);
         }},
        {"counterexamples", counterexamples},
    };
    return table;
}

}  // namespace

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) {
        return c.passed;
    });
}

json SuiteResult::to_json() const {
    json list = json::array();
    for (const auto &c : checks) {
        json item = {{"name", c.name}, {"passed", c.passed}, {"measured", c.measured}, {"threshold", c.threshold}};
        if (!c.detail.empty()) {
            item["detail"] = c.detail;
        }
        list.push_back(item);
    }
    return {{"suite", suite}, {"seed", seed}, {"passed", passed()}, {"checks", list}};
}

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto &[k, v] : suites()) {
            n.push_back(k);
        }
        return n;
    }();
    return names;
}

SuiteResult run_suite(const std::string &name, std::uint64_t seed, std::size_t workers) {
    auto it = suites().find(name);
    if (it == suites().end()) {
        throw OutOfRange("unknown verify suite '" + name + "'");
    }
    SuiteResult out;
    out.suite = name;
    out.seed = seed;
    it->second(out, workers);
    return out;
}

}  // namespace locpur::cli
