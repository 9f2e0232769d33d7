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

#ifndef LOCPUR_FILTER_H
#define LOCPUR_FILTER_H

#include <optional>
#include <span>
#include <vector>

#include "locpur/linalg.h"
#include "locpur/states.h"

namespace locpur {

/// Success probabilities below this are reported as an absent outcome.
inline constexpr double kProbabilityFloor = 1e-12;

/// A single postselected branch A (x) B of a local protocol, stored with ||A|| = ||B|| = 1.
class LocalFilter {
   public:
    /// Divides each operator by its operator norm.
    /// Throws DimensionMismatch for non-square or undersized operators and ZeroOperator for zero input.
    static LocalFilter make(const ComplexMatrix &a, const ComplexMatrix &b);
    static LocalFilter identity(BipartiteDims dims);

    const ComplexMatrix &a() const {
        return a_;
    }
    const ComplexMatrix &b() const {
        return b_;
    }
    BipartiteDims dims() const {
        return {static_cast<std::size_t>(a_.rows()), static_cast<std::size_t>(b_.rows())};
    }
    /// A (x) B
    ComplexMatrix joint() const;

   private:
    LocalFilter(ComplexMatrix a, ComplexMatrix b) : a_(std::move(a)), b_(std::move(b)) {
    }
    ComplexMatrix a_;
    ComplexMatrix b_;
};

struct PurificationOutcome {
    std::optional<DensityMatrix> post_state;
    double success_probability = 0;
};

/// rho -> (A(x)B) rho (A(x)B)^dagger / Tr(...), absent when the trace is below kProbabilityFloor.
PurificationOutcome apply_filter(const LocalFilter &f, const DensityMatrix &rho);

/// Unnormalized success probability Tr((A(x)B) rho (A(x)B)^dagger).
double success_probability(const LocalFilter &f, const DensityMatrix &rho);

/// Product of the steps in application order (steps[0] acts first, so it sits rightmost).
LocalFilter compose(std::span<const LocalFilter> steps);

struct PolarDecomposition {
    ComplexMatrix unitary;
    ComplexMatrix positive;
};

/// m = unitary * positive. The unitary is completed arbitrarily on the kernel of m.
PolarDecomposition polar_decompose(const ComplexMatrix &m);

/// <psi|rho|psi>
double fidelity(const DensityMatrix &rho, const PureState &psi);

/// Coefficients of F'(F) = (alpha F + gamma (1-F)) / (mu F + nu (1-F)) for a filter acting on a
/// fidelity family; beta_prime is the F-independent numerator of the second derivative of
/// delta(F) = F'(F) - F.
struct DeltaCurve {
    double alpha = 0;  // |<Psi|A(x)B|Psi>|^2
    double gamma = 0;  // <Psi|A(x)B rho~ (A(x)B)^dagger|Psi>
    double mu = 0;     // Tr(A(x)B |Psi><Psi| (A(x)B)^dagger)
    double nu = 0;     // Tr(A(x)B rho~ (A(x)B)^dagger)
    double beta_prime = 0;

    /// mu F + nu (1 - F)
    double probability(double f) const {
        return mu * f + nu * (1 - f);
    }
};

DeltaCurve delta_coefficients(const LocalFilter &f, const FidelityFamily &family);

struct DeltaPoint {
    double f_prime = 0;
    double delta = 0;
};

/// Throws OutOfRange unless F in (0, 1) and VanishingProbability when mu F + nu (1-F) < kProbabilityFloor.
DeltaPoint delta_eval(const DeltaCurve &curve, double f);

}  // namespace locpur

#endif
