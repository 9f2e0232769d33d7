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

#ifndef LOCPUR_ENTANGLEMENT_H
#define LOCPUR_ENTANGLEMENT_H

#include <cstddef>
#include <vector>

#include "locpur/filter.h"
#include "locpur/states.h"

namespace locpur {

/// Minimum eigenvalues more negative than this count as genuine partial-transpose negativity.
inline constexpr double kEntanglementTolerance = 1e-10;

/// Smallest eigenvalue of the partial transpose over subsystem B.
double ppt_min_eigenvalue(const DensityMatrix &rho);

enum class EntanglementVerdict { Entangled, Separable, Inconclusive };

const char *verdict_name(EntanglementVerdict v);

/// PPT test. Separable is only reported for 2x2 and 2x3 (either order), where PPT is exact.
EntanglementVerdict is_entangled(const DensityMatrix &rho);

/// Bisection for the F where ppt_min_eigenvalue(member(F)) changes sign, to absolute tolerance `tol`.
///
/// The minimum eigenvalue of an affine family is concave in F, so a PPT member at F = 0 and an
/// entangled member at F = 1 bound exactly one crossing. Throws NoCrossing otherwise.
double separability_threshold(const FidelityFamily &family, double tol);

/// Rank bookkeeping for exact purification: a filter that sends the r-dimensional support onto one ray
/// has rank(A(x)B) <= N_A N_B - r + 1, and an entangled image needs rank(A(x)B) >= 4.
struct RankBoundVerdict {
    std::size_t rank_r = 0;
    long long bound = 0;
    bool entangled_output_possible = true;
};

RankBoundVerdict rank_bound_verdict(const DensityMatrix &rho);

/// Tolerance on 1 - |<u_i|u_j>|^2 between normalized filter images of the support of rho.
inline constexpr double kParallelismTolerance = 1e-8;

/// Which arguments rule out that a given filter maps rho exactly onto an entangled pure state.
struct PurificationCertificate {
    RankBoundVerdict verdict;
    std::size_t rank_a = 0;
    std::size_t rank_b = 0;
    /// rank(A) rank(B) exceeds verdict.bound.
    bool filter_rank_exceeds_bound = false;
    /// A or B has rank <= 1, so every image is a product vector.
    bool local_rank_deficient = false;
    /// All images of the support vanish (absent outcome).
    bool annihilates_support = false;
    /// Some pair of nonzero images is not parallel (residual > kParallelismTolerance).
    bool images_not_parallel = false;
    /// Images are parallel but the common image is a product vector.
    bool common_image_product = false;
    /// Worst pairwise residual 1 - |<u_i|u_j>|^2 among nonzero images.
    double max_parallel_residual = 0;

    /// True when at least one argument proves no exact entangled purification by this filter.
    bool certified() const {
        return !verdict.entangled_output_possible || filter_rank_exceeds_bound || local_rank_deficient ||
               annihilates_support || images_not_parallel || common_image_product;
    }
};

/// Precomputes the support of rho so many filters can be checked cheaply.
class PurificationCertifier {
   public:
    explicit PurificationCertifier(const DensityMatrix &rho);

    PurificationCertificate check(const LocalFilter &f) const;
    const RankBoundVerdict &verdict() const {
        return verdict_;
    }

   private:
    BipartiteDims dims_;
    RankBoundVerdict verdict_;
    std::vector<ComplexVector> support_;
};

PurificationCertificate purification_certificate(const DensityMatrix &rho, const LocalFilter &f);

/// True when `f` provably cannot map rho onto an exact entangled pure state.
bool certify_no_exact_purification(const DensityMatrix &rho, const LocalFilter &f);

}  // namespace locpur

#endif
