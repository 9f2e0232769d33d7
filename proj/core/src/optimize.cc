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

#include "locpur/optimize.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "locpur/errors.h"
#include "locpur/rng.h"

namespace locpur {

namespace {

constexpr double kZeroBlockNorm = 1e-14;

ComplexMatrix block_from_params(std::span<const double> params, std::size_t offset, std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n * n; ++k) {
        m.data()[k] = {params[offset + 2 * k], params[offset + 2 * k + 1]};
    }
    return m;
}

// Largest eigenvalue of a Hermitian n x n Gram matrix, i.e. the squared operator norm.
double squared_operator_norm(const std::vector<Complex> &gram, std::size_t n) {
    if (n == 2) {
        double a = gram[0].real();
        double d = gram[3].real();
        double off = std::norm(gram[1]);
        return 0.5 * (a + d) + std::sqrt(0.25 * (a - d) * (a - d) + off);
    }
    Eigen::MatrixXcd g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g(i, j) = gram[i * n + j];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(n - 1);
}

FilterParams identity_params(BipartiteDims dims) {
    FilterParams p(filter_param_count(dims), 0.0);
    for (std::size_t i = 0; i < dims.n_a; ++i) {
        p[2 * (i * dims.n_a + i)] = 1;
    }
    std::size_t offset = 2 * dims.n_a * dims.n_a;
    for (std::size_t i = 0; i < dims.n_b; ++i) {
        p[offset + 2 * (i * dims.n_b + i)] = 1;
    }
    return p;
}

OptimizationReport run_multistart(const DensityMatrix &rho, std::vector<PureState> targets,
                                  const OptimizerConfig &config) {
    BipartiteDims dims = rho.dims();
    std::size_t restarts = std::max<std::size_t>(config.restarts, 1);
    std::vector<SimplexResult> results(restarts);

    auto run_one = [&](FilterObjective &objective, std::size_t index) {
        FilterParams start;
        if (index == 0) {
            start = identity_params(dims);
        } else {
            Rng rng(config.seed, index);
            start.resize(filter_param_count(dims));
            for (auto &x : start) {
                x = rng.normal();
            }
        }
        results[index] = nelder_mead_maximize(
            [&](std::span<const double> x) {
                return objective(x);
            },
            std::move(start), config.max_evals_per_restart, config.simplex_tolerance);
    };

    std::size_t workers = std::clamp<std::size_t>(config.workers, 1, restarts);
    if (workers == 1) {
        FilterObjective objective(rho, targets);
        for (std::size_t k = 0; k < restarts; ++k) {
            run_one(objective, k);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                FilterObjective objective(rho, targets);
                for (std::size_t k = next++; k < restarts; k = next++) {
                    run_one(objective, k);
                }
            });
        }
    }

    OptimizationReport report;
    report.dims = dims;
    report.seed = config.seed;
    report.restarts = restarts;
    std::size_t best = 0;
    for (std::size_t k = 0; k < restarts; ++k) {
        report.per_restart_best.push_back(results[k].value);
        report.evaluations += results[k].evaluations;
        if (results[k].value > results[best].value) {
            best = k;
        }
    }
    report.best_fidelity = results[best].value;
    report.best_params = results[best].x;
    report.epsilon_hat = std::clamp(1 - report.best_fidelity, 0.0, 1.0);
    return report;
}

}  // namespace

std::size_t filter_param_count(BipartiteDims dims) {
    return 2 * (dims.n_a * dims.n_a + dims.n_b * dims.n_b);
}

LocalFilter decode(std::span<const double> params, BipartiteDims dims) {
    dims = BipartiteDims::checked(dims.n_a, dims.n_b);
    if (params.size() != filter_param_count(dims)) {
        throw DimensionMismatch("filter parameter vector has length " + std::to_string(params.size()) +
                                ", expected " + std::to_string(filter_param_count(dims)));
    }
    ComplexMatrix a = block_from_params(params, 0, dims.n_a);
    ComplexMatrix b = block_from_params(params, 2 * dims.n_a * dims.n_a, dims.n_b);
    if (!(a.norm() > kZeroBlockNorm) || !(b.norm() > kZeroBlockNorm)) {
        throw ZeroOperator("filter parameter block is numerically zero");
    }
    return LocalFilter::make(a, b);
}

FilterParams encode(const LocalFilter &f) {
    FilterParams p;
    p.reserve(filter_param_count(f.dims()));
    for (const auto *m : {&f.a(), &f.b()}) {
        for (Eigen::Index k = 0; k < m->size(); ++k) {
            p.push_back(m->data()[k].real());
            p.push_back(m->data()[k].imag());
        }
    }
    return p;
}

std::vector<PureState> fidelity_targets(BipartiteDims dims) {
    std::vector<PureState> out;
    if (dims.n_a == 2 && dims.n_b == 2) {
        for (Bell b : kAllBell) {
            out.push_back(bell_state(b));
        }
        return out;
    }
    for (std::size_t k = 2; k <= std::min(dims.n_a, dims.n_b); ++k) {
        out.push_back(canonical_entangled(dims, k));
    }
    return out;
}

FilterObjective::FilterObjective(const DensityMatrix &rho, std::vector<PureState> targets)
    : dims_(rho.dims()), targets_(std::move(targets)) {
    std::size_t n = dims_.total();
    rho_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rho_[i * n + j] = rho.matrix()(i, j);
        }
    }
    for (const auto &t : targets_) {
        if (!(t.dims() == dims_)) {
            throw DimensionMismatch("objective target lives in a different space");
        }
        target_coefficients_.push_back(t.coefficient_matrix());
    }
    a_.resize(dims_.n_a * dims_.n_a);
    gram_a_.resize(a_.size());
    b_.resize(dims_.n_b * dims_.n_b);
    gram_b_.resize(b_.size());
    phi_.resize(n);
    tmp_.resize(n);
}

FilterObjective::Value FilterObjective::evaluate(std::span<const double> params) {
    const std::size_t na = dims_.n_a;
    const std::size_t nb = dims_.n_b;
    const std::size_t n = na * nb;
    if (params.size() != filter_param_count(dims_)) {
        throw DimensionMismatch("filter parameter vector has the wrong length");
    }
    double frob_a = 0;
    double frob_b = 0;
    for (std::size_t k = 0; k < na * na; ++k) {
        a_[k] = {params[2 * k], params[2 * k + 1]};
        frob_a += std::norm(a_[k]);
    }
    const std::size_t offset = 2 * na * na;
    for (std::size_t k = 0; k < nb * nb; ++k) {
        b_[k] = {params[offset + 2 * k], params[offset + 2 * k + 1]};
        frob_b += std::norm(b_[k]);
    }
    Value out;
    if (!(std::sqrt(frob_a) > kZeroBlockNorm) || !(std::sqrt(frob_b) > kZeroBlockNorm)) {
        return out;
    }

    // Gram matrices A^dagger A and B^dagger B.
    for (std::size_t k = 0; k < na; ++k) {
        for (std::size_t i = 0; i < na; ++i) {
            Complex s = 0;
            for (std::size_t r = 0; r < na; ++r) {
                s += std::conj(a_[r * na + k]) * a_[r * na + i];
            }
            gram_a_[k * na + i] = s;
        }
    }
    for (std::size_t l = 0; l < nb; ++l) {
        for (std::size_t j = 0; j < nb; ++j) {
            Complex s = 0;
            for (std::size_t r = 0; r < nb; ++r) {
                s += std::conj(b_[r * nb + l]) * b_[r * nb + j];
            }
            gram_b_[l * nb + j] = s;
        }
    }

    // Tr(rho (A^dagger A (x) B^dagger B)) = sum rho[(ij),(kl)] GA[k,i] GB[l,j].
    double trace = 0;
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            const Complex *row = &rho_[(i * nb + j) * n];
            for (std::size_t k = 0; k < na; ++k) {
                Complex ga = gram_a_[k * na + i];
                for (std::size_t l = 0; l < nb; ++l) {
                    trace += (row[k * nb + l] * ga * gram_b_[l * nb + j]).real();
                }
            }
        }
    }
    double probability = trace / (squared_operator_norm(gram_a_, na) * squared_operator_norm(gram_b_, nb));
    if (!(probability >= kProbabilityFloor)) {
        out.probability = std::max(probability, 0.0);
        return out;
    }
    out.probability = probability;

    for (std::size_t t = 0; t < target_coefficients_.size(); ++t) {
        const ComplexMatrix &m = target_coefficients_[t];
        // phi = (A^dagger (x) B^dagger) psi, i.e. Phi = A^dagger M conj(B).
        for (std::size_t k = 0; k < na; ++k) {
            for (std::size_t j = 0; j < nb; ++j) {
                Complex s = 0;
                for (std::size_t l = 0; l < nb; ++l) {
                    s += m(k, l) * std::conj(b_[l * nb + j]);
                }
                tmp_[k * nb + j] = s;
            }
        }
        for (std::size_t i = 0; i < na; ++i) {
            for (std::size_t j = 0; j < nb; ++j) {
                Complex s = 0;
                for (std::size_t k = 0; k < na; ++k) {
                    s += std::conj(a_[k * na + i]) * tmp_[k * nb + j];
                }
                phi_[i * nb + j] = s;
            }
        }
        double numerator = 0;
        for (std::size_t x = 0; x < n; ++x) {
            Complex s = 0;
            const Complex *row = &rho_[x * n];
            for (std::size_t y = 0; y < n; ++y) {
                s += row[y] * phi_[y];
            }
            numerator += (std::conj(phi_[x]) * s).real();
        }
        double value = numerator / trace;
        if (t == 0 || value > out.fidelity) {
            out.fidelity = value;
            out.target = t;
        }
    }
    return out;
}

SimplexResult nelder_mead_maximize(const std::function<double(std::span<const double>)> &objective,
                                   std::vector<double> start, std::size_t max_evals, double tolerance,
                                   double initial_step) {
    const std::size_t n = start.size();
    const double dn = static_cast<double>(std::max<std::size_t>(n, 2));
    const double expansion = 1 + 2 / dn;
    const double contraction = 0.75 - 1 / (2 * dn);
    const double shrink = 1 - 1 / dn;

    SimplexResult result;
    auto cost = [&](const std::vector<double> &x) {
        ++result.evaluations;
        double v = objective(x);
        return std::isfinite(v) ? -v : std::numeric_limits<double>::infinity();
    };

    std::vector<double> best_x = std::move(start);
    double best_cost = cost(best_x);
    if (n == 0) {
        result.x = best_x;
        result.value = -best_cost;
        return result;
    }

    std::vector<std::vector<double>> simplex(n + 1, std::vector<double>(n));
    std::vector<double> costs(n + 1);
    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), reflected(n), trial(n);

    auto point_along = [&](std::vector<double> &out, const std::vector<double> &from, double t) {
        // out = centroid + t * (from - centroid)
        for (std::size_t d = 0; d < n; ++d) {
            out[d] = centroid[d] + t * (from[d] - centroid[d]);
        }
    };

    while (result.evaluations + n + 1 <= max_evals) {
        double cycle_start_cost = best_cost;
        simplex[0] = best_x;
        costs[0] = best_cost;
        for (std::size_t i = 0; i < n; ++i) {
            simplex[i + 1] = best_x;
            simplex[i + 1][i] += initial_step * std::max(1.0, std::abs(best_x[i]));
            costs[i + 1] = cost(simplex[i + 1]);
        }

        bool converged = false;
        while (result.evaluations + n + 2 <= max_evals) {
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
                return costs[x] < costs[y];
            });
            const auto &lowest = simplex[order[0]];
            double diameter = 0;
            for (std::size_t i = 1; i <= n; ++i) {
                for (std::size_t d = 0; d < n; ++d) {
                    diameter = std::max(diameter, std::abs(simplex[order[i]][d] - lowest[d]));
                }
            }
            if (diameter < tolerance) {
                converged = true;
                break;
            }

            std::size_t worst = order[n];
            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                const auto &v = simplex[order[i]];
                for (std::size_t d = 0; d < n; ++d) {
                    centroid[d] += v[d];
                }
            }
            for (auto &c : centroid) {
                c /= static_cast<double>(n);
            }

            double f_best = costs[order[0]];
            double f_second_worst = costs[order[n - 1]];
            double f_worst = costs[worst];

            point_along(reflected, simplex[worst], -1.0);
            double f_reflected = cost(reflected);

            if (f_reflected < f_best) {
                point_along(trial, reflected, expansion);
                double f_expanded = cost(trial);
                if (f_expanded < f_reflected) {
                    simplex[worst] = trial;
                    costs[worst] = f_expanded;
                } else {
                    simplex[worst] = reflected;
                    costs[worst] = f_reflected;
                }
                continue;
            }
            if (f_reflected < f_second_worst) {
                simplex[worst] = reflected;
                costs[worst] = f_reflected;
                continue;
            }
            if (f_reflected < f_worst) {
                point_along(trial, reflected, contraction);
                double f_contracted = cost(trial);
                if (f_contracted <= f_reflected) {
                    simplex[worst] = trial;
                    costs[worst] = f_contracted;
                    continue;
                }
            } else {
                point_along(trial, simplex[worst], contraction);
                double f_contracted = cost(trial);
                if (f_contracted < f_worst) {
                    simplex[worst] = trial;
                    costs[worst] = f_contracted;
                    continue;
                }
            }
            // Shrink toward the lowest vertex.
            std::size_t keep = order[0];
            for (std::size_t i = 0; i <= n; ++i) {
                if (i == keep) {
                    continue;
                }
                if (result.evaluations >= max_evals) {
                    break;
                }
                for (std::size_t d = 0; d < n; ++d) {
                    simplex[i][d] = simplex[keep][d] + shrink * (simplex[i][d] - simplex[keep][d]);
                }
                costs[i] = cost(simplex[i]);
            }
        }

        for (std::size_t i = 0; i <= n; ++i) {
            if (costs[i] < best_cost) {
                best_cost = costs[i];
                best_x = simplex[i];
            }
        }
        if (!converged || !(best_cost < cycle_start_cost)) {
            break;
        }
    }

    result.x = std::move(best_x);
    result.value = -best_cost;
    return result;
}

OptimizationReport maximize_fidelity(const DensityMatrix &rho, const OptimizerConfig &config) {
    return run_multistart(rho, fidelity_targets(rho.dims()), config);
}

OptimizationReport max_fidelity_gain(const FidelityFamily &family, double f, const OptimizerConfig &config) {
    if (!(f > 0 && f < 1)) {
        throw OutOfRange("max_fidelity_gain needs F in (0, 1)");
    }
    // delta = F' - F differs from the fidelity objective by a constant, so both share maximizers.
    OptimizationReport report = run_multistart(family.member(f), {family.target()}, config);
    report.best_delta = report.best_fidelity - f;
    return report;
}

EpsilonEstimate estimate_epsilon(const DensityMatrix &rho, const OptimizerConfig &config) {
    EpsilonEstimate out;
    out.certificate = rank_bound_verdict(rho);
    if (out.certificate.rank_r != rho.dims().total()) {
        throw NotFullRank("estimate_epsilon needs a full-rank state, got rank " +
                          std::to_string(out.certificate.rank_r));
    }
    out.report = maximize_fidelity(rho, config);
    out.epsilon_hat = out.report.epsilon_hat;
    return out;
}

}  // namespace locpur
