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

#ifndef LOCPUR_OPTIMIZE_H
#define LOCPUR_OPTIMIZE_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "locpur/entanglement.h"
#include "locpur/filter.h"
#include "locpur/states.h"

namespace locpur {

/// Real parameters of an unnormalized filter: (re, im) pairs of A row-major, then of B.
using FilterParams = std::vector<double>;

std::size_t filter_param_count(BipartiteDims dims);

/// Throws DimensionMismatch on wrong length and ZeroOperator when either block has norm <= 1e-14.
LocalFilter decode(std::span<const double> params, BipartiteDims dims);
FilterParams encode(const LocalFilter &f);

/// Targets of the fidelity maximization: the four Bell states for 2x2, otherwise the canonical
/// states sum_{i<k}|ii>/sqrt(k) for k = 2..min(n_a, n_b). Local unitaries are absorbed by the filter.
std::vector<PureState> fidelity_targets(BipartiteDims dims);

/// max_target <target| (A(x)B) rho (A(x)B)^dagger |target> / Tr(...) evaluated straight from
/// FilterParams without building A(x)B. Holds scratch space, so use one instance per thread.
class FilterObjective {
   public:
    FilterObjective(const DensityMatrix &rho, std::vector<PureState> targets);

    struct Value {
        double fidelity = 0;
        double probability = 0;  // with both operators normalized
        std::size_t target = 0;
    };

    /// Degenerate parameters (zero block, probability below kProbabilityFloor) give fidelity 0.
    Value evaluate(std::span<const double> params);
    double operator()(std::span<const double> params) {
        return evaluate(params).fidelity;
    }
    const std::vector<PureState> &targets() const {
        return targets_;
    }

   private:
    BipartiteDims dims_;
    std::vector<Complex> rho_;
    std::vector<ComplexMatrix> target_coefficients_;
    std::vector<PureState> targets_;
    std::vector<Complex> a_, b_, gram_a_, gram_b_, phi_, tmp_;
};

struct SimplexResult {
    std::vector<double> x;
    double value = 0;
    std::size_t evaluations = 0;
};

/// Nelder-Mead maximization with dimension-adaptive coefficients. When the simplex diameter
/// falls below `tolerance`, the search restarts around the best vertex and stops once such a
/// restart no longer improves the value.
SimplexResult nelder_mead_maximize(const std::function<double(std::span<const double>)> &objective,
                                   std::vector<double> start, std::size_t max_evals, double tolerance,
                                   double initial_step = 0.5);

struct OptimizerConfig {
    std::size_t restarts = 20;
    std::size_t max_evals_per_restart = 20000;
    std::uint64_t seed = 42;
    double simplex_tolerance = 1e-9;
    /// Restarts run on this many threads. Results do not depend on it.
    std::size_t workers = 1;
};

struct OptimizationReport {
    double best_fidelity = 0;
    std::optional<double> best_delta;
    FilterParams best_params;
    double epsilon_hat = 1;
    std::size_t restarts = 0;
    std::size_t evaluations = 0;
    std::uint64_t seed = 0;
    std::vector<double> per_restart_best;
    BipartiteDims dims;
};

/// Multi-start estimate of the best fidelity to a maximally entangled target reachable by one local filter.
/// Restart 0 starts at the identity filter; restart k draws standard normal parameters from stream k.
OptimizationReport maximize_fidelity(const DensityMatrix &rho, const OptimizerConfig &config);

/// Largest delta(F) = F'(F) - F over local filters for the family member at F in (0, 1).
OptimizationReport max_fidelity_gain(const FidelityFamily &family, double f, const OptimizerConfig &config);

struct EpsilonEstimate {
    double epsilon_hat = 1;
    RankBoundVerdict certificate;
    OptimizationReport report;
};

/// 1 - maximize_fidelity(rho).best_fidelity together with the rank certificate.
/// Throws NotFullRank unless rho has rank n_a n_b.
EpsilonEstimate estimate_epsilon(const DensityMatrix &rho, const OptimizerConfig &config);

}  // namespace locpur

#endif
