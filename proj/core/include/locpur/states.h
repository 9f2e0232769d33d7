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

#ifndef LOCPUR_STATES_H
#define LOCPUR_STATES_H

#include <array>
#include <cstdint>

#include "locpur/linalg.h"

namespace locpur {

/// Normalized bipartite state vector.
class PureState {
   public:
    /// Throws DimensionMismatch on length mismatch and OutOfRange unless the norm is 1 within 1e-12.
    static PureState from_amplitudes(BipartiteDims dims, ComplexVector amplitudes);
    /// Rescales to unit norm first; throws ZeroOperator for a (numerically) zero vector.
    static PureState normalized(BipartiteDims dims, ComplexVector amplitudes);

    BipartiteDims dims() const {
        return dims_;
    }
    const ComplexVector &amplitudes() const {
        return amplitudes_;
    }
    /// |psi><psi|
    ComplexMatrix projector() const;
    /// Reshape to the n_a x n_b coefficient matrix M with psi = sum_ij M_ij |i>|j>.
    ComplexMatrix coefficient_matrix() const;

   private:
    PureState(BipartiteDims dims, ComplexVector amplitudes) : dims_(dims), amplitudes_(std::move(amplitudes)) {
    }
    BipartiteDims dims_;
    ComplexVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace operator on H_A (x) H_B.
class DensityMatrix {
   public:
    static constexpr double kHermitianTolerance = 1e-10;
    static constexpr double kEigenvalueTolerance = 1e-10;
    static constexpr double kTraceTolerance = 1e-12;

    /// Validates every invariant; throws NotDensityMatrix (or DimensionMismatch) otherwise.
    static DensityMatrix from_matrix(BipartiteDims dims, ComplexMatrix matrix);
    static DensityMatrix from_pure(const PureState &psi);

    BipartiteDims dims() const {
        return dims_;
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    double purity() const;

   private:
    DensityMatrix(BipartiteDims dims, ComplexMatrix matrix) : dims_(dims), matrix_(std::move(matrix)) {
    }
    BipartiteDims dims_;
    ComplexMatrix matrix_;
};

/// Bell basis in the computational convention |0> = up, |1> = down, Alice's index major.
enum class Bell { PsiMinus, PsiPlus, PhiMinus, PhiPlus };
inline constexpr std::array<Bell, 4> kAllBell = {Bell::PsiMinus, Bell::PsiPlus, Bell::PhiMinus, Bell::PhiPlus};

const char *bell_name(Bell which);

PureState bell_state(Bell which);

/// F |Psi-><Psi-| + (1-F)/3 (remaining Bell projectors). F in [0, 1].
DensityMatrix werner_state(double fidelity);

/// Weights ordered as kAllBell: (Psi-, Psi+, Phi-, Phi+). Non-negative, summing to 1 within 1e-12.
DensityMatrix bell_diagonal(const std::array<double, 4> &weights);

/// The affine family rho_F = F |Psi><Psi| + (1-F) rho~ with <Psi|rho~|Psi> = 0.
class FidelityFamily {
   public:
    static constexpr double kOrthogonalityTolerance = 1e-10;

    /// Throws OrthogonalityViolated when <target|residual|target> exceeds the tolerance.
    static FidelityFamily make(PureState target, DensityMatrix residual);

    const PureState &target() const {
        return target_;
    }
    const DensityMatrix &residual() const {
        return residual_;
    }
    double constraint_value() const {
        return constraint_value_;
    }
    BipartiteDims dims() const {
        return target_.dims();
    }

    /// rho_F for F in [0, 1].
    DensityMatrix member(double fidelity) const;

   private:
    FidelityFamily(PureState target, DensityMatrix residual, double constraint_value)
        : target_(std::move(target)), residual_(std::move(residual)), constraint_value_(constraint_value) {
    }
    PureState target_;
    DensityMatrix residual_;
    double constraint_value_;
};

/// Werner family: target Psi-, residual the uniform mixture of the other three Bell states.
FidelityFamily werner_family();

/// Family with a Bell target and a residual mixing the other three Bell states.
/// `residual_weights` follows kAllBell order with `target` skipped.
FidelityFamily bell_family(Bell target, const std::array<double, 3> &residual_weights);

/// Haar-random pure state: normalized complex Gaussian vector. Deterministic per seed.
PureState random_pure(BipartiteDims dims, std::uint64_t seed);

/// Random mixed state of exact rank `rank` with every nonzero eigenvalue >= min_eigenvalue.
///
/// Eigenvalues are min_eigenvalue + (1 - rank * min_eigenvalue) * u with u uniform on the simplex;
/// eigenvectors are the columns of a Haar-random isometry.
DensityMatrix random_mixed(BipartiteDims dims, std::size_t rank, double min_eigenvalue, std::uint64_t seed);

/// cos(theta)|01> - sin(theta)|10>, theta in (0, pi/4].
PureState pure_nonmax_entangled(double theta);

/// 3x3 state p |Psi-><Psi-| (embedded in levels 0,1) + (1-p) |22><22|, p in (0, 1). Rank 2.
DensityMatrix low_rank_purifiable_example(double p);

/// (|01> - |10>)/sqrt(2) embedded in the first two levels of each party.
PureState embedded_singlet(BipartiteDims dims = {3, 3});

/// (u_a (x) u_b) sum_i |ii>/sqrt(d).
PureState maximally_entangled(const ComplexMatrix &u_a, const ComplexMatrix &u_b, std::size_t d);

/// sum_{i<k} |ii>/sqrt(k) in the given dims (requires 1 <= k <= min(n_a, n_b)).
PureState canonical_entangled(BipartiteDims dims, std::size_t k);

}  // namespace locpur

#endif
