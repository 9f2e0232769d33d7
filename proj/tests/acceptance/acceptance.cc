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

// Acceptance gate: one line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "locpur/entanglement.h"
#include "locpur/io.h"
#include "locpur/optimize.h"
#include "test_util.h"

using namespace locpur;
using namespace locpur::testing;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

class Detail {
   public:
    template <typename T>
    Detail &operator<<(const T &x) {
        ss_ << x;
        return *this;
    }
    std::string str() const {
        return ss_.str();
    }

   private:
    std::stringstream ss_;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

OptimizerConfig config(std::size_t restarts, std::uint64_t seed = 42) {
    OptimizerConfig c;
    c.restarts = restarts;
    c.seed = seed;
    return c;
}

Outcome werner_non_increase() {
    Outcome out;
    Detail d;
    auto family = werner_family();
    for (double f : {0.6, 0.75, 0.9}) {
        auto gain = max_fidelity_gain(family, f, config(200));
        auto best = maximize_fidelity(werner_state(f), config(200));
        bool ok = gain.best_delta && *gain.best_delta <= 1e-8 && best.best_fidelity >= f &&
                  best.best_fidelity <= f + 1e-8;
        out.passed &= ok;
        d << "F=" << f << " best_delta=" << fmt(*gain.best_delta) << " best_fidelity=" << fmt(best.best_fidelity)
          << "; ";
    }
    out.detail = d.str();
    return out;
}

Outcome bell_diagonal_non_increase() {
    Outcome out;
    Detail d;
    auto family = bell_family(Bell::PsiMinus, {0.5, 0.3, 0.2});
    for (double f : {0.55, 0.8}) {
        auto gain = max_fidelity_gain(family, f, config(200));
        out.passed &= gain.best_delta && *gain.best_delta <= 1e-8;
        d << "F=" << f << " best_delta=" << fmt(*gain.best_delta) << "; ";
    }
    out.detail = d.str();
    return out;
}

Outcome two_qubit_no_go() {
    Outcome out;
    double worst = 0;
    std::size_t uncertified = 0;
    std::size_t filters = 0;
    auto targets = fidelity_targets({2, 2});
    for (std::size_t rank : {2, 3, 4}) {
        for (std::uint64_t s = 0; s < 100; ++s) {
            std::uint64_t seed = 10000 * rank + s;
            auto rho = random_mixed({2, 2}, rank, 0.05, seed);
            PurificationCertifier certifier(rho);
            FilterObjective objective(rho, targets);
            Rng rng(seed, 1);
            FilterParams params(filter_param_count({2, 2}));
            for (int k = 0; k < 10000; ++k) {
                for (double &x : params) {
                    x = rng.normal();
                }
                worst = std::max(worst, objective(params));
                uncertified += !certifier.check(decode(params, {2, 2})).certified();
                ++filters;
            }
            OptimizerConfig c = config(4, seed);
            c.max_evals_per_restart = 5000;
            auto best = maximize_fidelity(rho, c);
            auto f = decode(best.best_params, {2, 2});
            auto post = apply_filter(f, rho);
            double achieved = 0;
            if (post.post_state) {
                for (const auto &t : targets) {
                    achieved = std::max(achieved, fidelity(*post.post_state, t));
                }
            }
            worst = std::max({worst, achieved, best.best_fidelity});
            uncertified += !certifier.check(f).certified();
            ++filters;
        }
    }
    out.passed = worst < 1 - 1e-9 && uncertified == 0;
    out.detail = (Detail() << "filters=" << filters << " max_bell_fidelity=" << fmt(worst)
                           << " uncertified=" << uncertified)
                     .str();
    return out;
}

Outcome generic_rank_certificate() {
    Outcome out;
    std::size_t possible = 0;
    for (BipartiteDims dims : {BipartiteDims{2, 2}, BipartiteDims{2, 3}, BipartiteDims{3, 3}}) {
        for (std::uint64_t s = 0; s < 100; ++s) {
            auto rho = random_mixed(dims, dims.total(), 0.5 / dims.total(), 20000 + 100 * dims.total() + s);
            possible += rank_bound_verdict(rho).entangled_output_possible;
        }
    }
    auto rank7 = rank_bound_verdict(random_mixed({3, 3}, 7, 0.01, 31));
    auto rank2 = rank_bound_verdict(random_mixed({3, 3}, 2, 0.01, 32));
    out.passed = possible == 0 && rank7.rank_r == 7 && !rank7.entangled_output_possible && rank2.rank_r == 2 &&
                 rank2.entangled_output_possible;
    out.detail = (Detail() << "full_rank_possible=" << possible << " rank7_possible=" << rank7.entangled_output_possible
                           << " rank2_possible=" << rank2.entangled_output_possible)
                     .str();
    return out;
}

Outcome epsilon_positivity() {
    Outcome out;
    double smallest = 1;
    for (std::uint64_t s = 0; s < 50; ++s) {
        auto e = estimate_epsilon(random_mixed({2, 2}, 4, 0.05, 30000 + s), config(20, s));
        smallest = std::min(smallest, e.epsilon_hat);
    }
    auto w = estimate_epsilon(werner_state(0.75), config(200));
    out.passed = smallest >= 1e-4 && std::abs(w.epsilon_hat - 0.25) <= 1e-8;
    out.detail = (Detail() << "min_epsilon_hat=" << fmt(smallest) << " werner_epsilon_hat=" << fmt(w.epsilon_hat)).str();
    return out;
}

Outcome counterexamples() {
    Outcome out;
    Detail d;
    auto singlet = bell_state(Bell::PsiMinus);
    for (double theta : {std::numbers::pi / 12, std::numbers::pi / 6, std::numbers::pi / 5}) {
        ComplexMatrix a = ComplexMatrix::Zero(2, 2);
        a(0, 0) = std::tan(theta);
        a(1, 1) = 1;
        auto rho = DensityMatrix::from_pure(pure_nonmax_entangled(theta));
        auto r = apply_filter(LocalFilter::make(a, ComplexMatrix::Identity(2, 2)), rho);
        double fid = r.post_state ? fidelity(*r.post_state, singlet) : 0;
        double expected = 2 * std::pow(std::sin(theta), 2);
        out.passed &= fid >= 1 - 1e-12 && std::abs(r.success_probability - expected) <= 1e-12;
        d << "theta=" << fmt(theta) << " fidelity=" << fmt(fid) << " p=" << fmt(r.success_probability) << "; ";
    }
    ComplexMatrix proj = ComplexMatrix::Zero(3, 3);
    proj(0, 0) = proj(1, 1) = 1;
    for (double p : {0.3, 0.5, 0.9}) {
        auto r = apply_filter(LocalFilter::make(proj, proj), low_rank_purifiable_example(p));
        double fid = r.post_state ? fidelity(*r.post_state, embedded_singlet()) : 0;
        out.passed &= fid >= 1 - 1e-12 && std::abs(r.success_probability - p) <= 1e-12;
        d << "p=" << p << " fidelity=" << fmt(fid) << " prob=" << fmt(r.success_probability) << "; ";
    }
    out.detail = d.str();
    return out;
}

Outcome delta_curve_structure() {
    Outcome out;
    auto family = werner_family();
    Rng rng(42, 7);
    double worst_eval = 0;
    double worst_fit = 0;
    std::size_t sign_checks = 0;
    std::size_t sign_mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto f = random_filter(rng, {2, 2});
        auto curve = delta_coefficients(f, family);
        for (int k = 0; k <= 10; ++k) {
            double x = 0.05 + 0.09 * k;
            // Oracle: conjugate the family member by kron_by_index(A, B) and renormalize.
            ComplexMatrix kk = kron_by_index(f.a(), f.b());
            ComplexMatrix image = kk * family.member(x).matrix() * kk.adjoint();
            double prob = image.trace().real();
            if (prob < kProbabilityFloor) {
                continue;
            }
            const ComplexVector &psi = family.target().amplitudes();
            double oracle = psi.dot(image * psi).real() / prob - x;
            worst_eval = std::max(worst_eval, std::abs(delta_eval(curve, x).delta - oracle));
            double a = curve.alpha - curve.gamma;
            double b = curve.gamma;
            double c = curve.mu - curve.nu;
            double dd = curve.nu;
            worst_fit = std::max(worst_fit, std::abs((a * x + b) / (c * x + dd) - x - oracle));
        }
        if (std::abs(curve.beta_prime) > 1e-8) {
            auto g = [&](double x) { return delta_by_conjugation(f, family, x); };
            for (double x : {0.2, 0.5, 0.8}) {
                ++sign_checks;
                sign_mismatches += sign_of(second_difference(g, x, 0.05)) != sign_of(curve.beta_prime);
            }
        }
    }
    out.passed = worst_eval <= 1e-12 && worst_fit < 1e-9 && sign_mismatches == 0;
    out.detail = (Detail() << "max_eval_error=" << fmt(worst_eval) << " max_fit_residual=" << fmt(worst_fit)
                           << " sign_checks=" << sign_checks << " sign_mismatches=" << sign_mismatches)
                     .str();
    return out;
}

Outcome separability_threshold_check() {
    Outcome out;
    Detail d;
    double threshold = separability_threshold(werner_family(), 1e-9);
    bool threshold_ok = std::abs(threshold - 0.5) <= 1e-9;
    d << "threshold=" << fmt(threshold) << (threshold_ok ? "" : " (out of tolerance)") << "; ";
    bool closed_form_ok = true;
    for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        // Direct diagonalization of the partial transpose as the reference value.
        ComplexMatrix pt = partial_transpose(werner_state(f).matrix(), {2, 2}, Subsystem::B);
        double direct = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(pt).eigenvalues()(0);
        double measured = ppt_min_eigenvalue(werner_state(f));
        double closed = (1 - 2 * f) / 2;
        bool ok = std::abs(measured - closed) <= 1e-12;
        closed_form_ok &= ok;
        d << "F=" << f << " ppt_min=" << fmt(measured) << " direct=" << fmt(direct) << " (1-2F)/2=" << fmt(closed)
          << (ok ? "" : " MISMATCH") << "; ";
    }
    out.passed = threshold_ok && closed_form_ok;
    out.detail = d.str();
    return out;
}

Outcome algebra_suite() {
    Outcome out;
    Detail d;
    Rng rng(42, 9);
    std::size_t rank_failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t ra = 1 + trial % 3;
        std::size_t rb = 1 + (trial / 3) % 3;
        auto a = matrix_with_rank(rng, 3, ra);
        auto b = matrix_with_rank(rng, 3, rb);
        rank_failures += rank_with_tolerance(tensor_product(a, b)) != ra * rb;
    }
    double worst_scale = 0;
    for (int trial = 0; trial < 100; ++trial) {
        ComplexMatrix a = rng.complex_gaussian(2, 2);
        ComplexMatrix b = rng.complex_gaussian(3, 3);
        Complex c = rng.complex_normal() * 5.0;
        Complex c2 = rng.complex_normal() * 0.2;
        auto rho = random_mixed({2, 3}, 1 + trial % 6, 0.0, 40000 + trial);
        auto x = apply_filter(LocalFilter::make(a, b), rho);
        auto y = apply_filter(LocalFilter::make(c * a, c2 * b), rho);
        if (x.post_state && y.post_state) {
            worst_scale = std::max(worst_scale, max_abs_diff(x.post_state->matrix(), y.post_state->matrix()));
        } else {
            worst_scale = INFINITY;
        }
    }
    double worst_compose = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<LocalFilter> steps = {random_filter(rng, {2, 2}), random_filter(rng, {2, 2}),
                                          random_filter(rng, {2, 2})};
        DensityMatrix rho = werner_state(0.75);
        bool present = true;
        for (const auto &s : steps) {
            auto r = apply_filter(s, rho);
            if (!r.post_state) {
                present = false;
                break;
            }
            rho = *r.post_state;
        }
        auto composed = apply_filter(compose(steps), werner_state(0.75));
        if (present && composed.post_state) {
            worst_compose = std::max(worst_compose, max_abs_diff(rho.matrix(), composed.post_state->matrix()));
        } else if (present != composed.post_state.has_value()) {
            worst_compose = INFINITY;
        }
    }
    double worst_polar = 0;
    for (int trial = 0; trial < 100; ++trial) {
        ComplexMatrix m = rng.complex_gaussian(2 + trial % 3, 2 + trial % 3);
        auto pd = polar_decompose(m);
        worst_polar = std::max(worst_polar, max_abs_diff(pd.unitary * pd.positive, m));
    }
    out.passed = rank_failures == 0 && worst_scale <= 1e-10 && worst_compose <= 1e-10 && worst_polar <= 1e-10;
    d << "rank_failures=" << rank_failures << " scale=" << fmt(worst_scale) << " compose=" << fmt(worst_compose)
      << " polar=" << fmt(worst_polar);
    out.detail = d.str();
    return out;
}

int run_cli(const std::string &args) {
    std::string command = std::string(LOCPUR_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    Outcome out;
    auto dir = std::filesystem::temp_directory_path() / "locpur_acceptance";
    std::filesystem::create_directories(dir);
    auto p = [&](const char *name) { return (dir / name).string(); };
    bool ok = run_cli("state random-mixed --dims 2,2 --rank 3 --min-eigenvalue 0.05 --seed 5 --out " + p("rho.json")) == 0;
    std::string base = "optimize --state " + p("rho.json") + " --restarts 40 --seed 42";
    ok &= run_cli(base + " --workers 1 --out " + p("r1.json")) == 0;
    ok &= run_cli(base + " --workers 1 --out " + p("r2.json")) == 0;
    ok &= run_cli(base + " --workers 4 --out " + p("r4.json")) == 0;
    std::string r1 = slurp(p("r1.json"));
    bool same_runs = !r1.empty() && r1 == slurp(p("r2.json"));
    bool same_workers = !r1.empty() && r1 == slurp(p("r4.json"));
    out.passed = ok && same_runs && same_workers;
    out.detail = (Detail() << "exit_ok=" << ok << " identical_across_runs=" << same_runs
                           << " identical_across_workers=" << same_workers << " bytes=" << r1.size())
                     .str();
    std::filesystem::remove_all(dir);
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        std::function<Outcome()> check;
    };
    std::vector<Criterion> criteria = {
        {1, "werner-non-increase", werner_non_increase},
        {2, "bell-diagonal-non-increase", bell_diagonal_non_increase},
        {3, "two-qubit-exact-no-go", two_qubit_no_go},
        {4, "generic-rank-certificate", generic_rank_certificate},
        {5, "epsilon-positivity", epsilon_positivity},
        {6, "counterexamples", counterexamples},
        {7, "delta-curve-structure", delta_curve_structure},
        {8, "separability-threshold", separability_threshold_check},
        {9, "algebra-suite", algebra_suite},
        {10, "determinism", determinism},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.passed;
        std::printf("[%s] %d %s (%.1fs): %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name, seconds, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
