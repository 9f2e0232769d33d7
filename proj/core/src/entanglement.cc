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

#include "locpur/entanglement.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "locpur/errors.h"

namespace locpur {

double ppt_min_eigenvalue(const DensityMatrix &rho) {
    return min_hermitian_eigenvalue(partial_transpose(rho.matrix(), rho.dims(), Subsystem::B));
}

const char *verdict_name(EntanglementVerdict v) {
    switch (v) {
        case EntanglementVerdict::Entangled:
            return "Entangled";
        case EntanglementVerdict::Separable:
            return "Separable";
        case EntanglementVerdict::Inconclusive:
            return "Inconclusive";
    }
    return "?";
}

EntanglementVerdict is_entangled(const DensityMatrix &rho) {
    if (ppt_min_eigenvalue(rho) < -kEntanglementTolerance) {
        return EntanglementVerdict::Entangled;
    }
    auto d = rho.dims();
    bool ppt_exact = d.n_a * d.n_b <= 6;
    return ppt_exact ? EntanglementVerdict::Separable : EntanglementVerdict::Inconclusive;
}

double separability_threshold(const FidelityFamily &family, double tol) {
    if (!(tol > 0)) {
        throw OutOfRange("separability_threshold tolerance must be positive");
    }
    auto ppt_at = [&](double f) {
        return ppt_min_eigenvalue(family.member(f));
    };
    if (ppt_at(1.0) >= -kEntanglementTolerance) {
        throw NoCrossing("family member at F = 1 is not detected as entangled");
    }
    if (ppt_at(0.0) < -kEntanglementTolerance) {
        throw NoCrossing("family is already entangled at F = 0");
    }

    // Concavity makes the crossing unique; a coarse scan confirms a single sign change.
    constexpr int kSamples = 20;
    int sign_changes = 0;
    bool previous_negative = false;
    for (int k = 0; k <= kSamples; ++k) {
        bool negative = ppt_at(static_cast<double>(k) / kSamples) < 0;
        if (k > 0 && negative != previous_negative) {
            ++sign_changes;
        }
        previous_negative = negative;
    }
    if (sign_changes != 1) {
        throw NoCrossing("partial-transpose eigenvalue changes sign " + std::to_string(sign_changes) +
                         " times on [0, 1]");
    }

    double lo = 0;
    double hi = 1;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (ppt_at(mid) < 0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

RankBoundVerdict rank_bound_verdict(const DensityMatrix &rho) {
    RankBoundVerdict v;
    v.rank_r = rank_with_tolerance(rho.matrix());
    v.bound = static_cast<long long>(rho.dims().total()) - static_cast<long long>(v.rank_r) + 1;
    v.entangled_output_possible = v.bound >= 4;
    return v;
}

PurificationCertifier::PurificationCertifier(const DensityMatrix &rho)
    : dims_(rho.dims()), verdict_(rank_bound_verdict(rho)) {
    auto eig = hermitian_eigensystem(rho.matrix());
    auto n = eig.values.size();
    // Eigenvalues ascend, so the support is the last rank_r columns.
    for (Eigen::Index k = n - static_cast<Eigen::Index>(verdict_.rank_r); k < n; ++k) {
        support_.push_back(eig.vectors.col(k));
    }
}

PurificationCertificate PurificationCertifier::check(const LocalFilter &f) const {
    if (!(f.dims() == dims_)) {
        throw DimensionMismatch("filter and state dimensions differ");
    }
    PurificationCertificate c;
    c.verdict = verdict_;
    c.rank_a = rank_with_tolerance(f.a());
    c.rank_b = rank_with_tolerance(f.b());
    c.filter_rank_exceeds_bound = static_cast<long long>(c.rank_a * c.rank_b) > verdict_.bound;
    c.local_rank_deficient = c.rank_a <= 1 || c.rank_b <= 1;

    ComplexMatrix k = f.joint();
    std::vector<ComplexVector> images;
    for (const auto &psi : support_) {
        ComplexVector v = k * psi;
        double norm = v.norm();
        if (norm > 1e-12) {
            images.push_back(v / norm);
        }
    }
    if (images.empty()) {
        c.annihilates_support = true;
        return c;
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            double residual = 1 - std::norm(images[i].dot(images[j]));
            c.max_parallel_residual = std::max(c.max_parallel_residual, residual);
        }
    }
    c.images_not_parallel = c.max_parallel_residual > kParallelismTolerance;
    if (!c.images_not_parallel) {
        ComplexMatrix schmidt(dims_.n_a, dims_.n_b);
        for (Eigen::Index idx = 0; idx < schmidt.size(); ++idx) {
            schmidt.data()[idx] = images.front()(idx);
        }
        c.common_image_product = rank_with_tolerance(schmidt, 1e-8) <= 1;
    }
    return c;
}

PurificationCertificate purification_certificate(const DensityMatrix &rho, const LocalFilter &f) {
    return PurificationCertifier(rho).check(f);
}

bool certify_no_exact_purification(const DensityMatrix &rho, const LocalFilter &f) {
    return purification_certificate(rho, f).certified();
}

}  // namespace locpur
