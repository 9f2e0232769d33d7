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

#include "locpur/filter.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "locpur/errors.h"

namespace locpur {

namespace {

ComplexMatrix normalized_operator(const ComplexMatrix &m, const char *name) {
    if (m.rows() != m.cols() || m.rows() < 2) {
        throw DimensionMismatch(std::string(name) + " must be square with dimension >= 2");
    }
    if (!all_finite(m)) {
        throw ZeroOperator(std::string(name) + " has non-finite entries");
    }
    double norm = operator_norm(m);
    if (!(norm > 0)) {
        throw ZeroOperator(std::string(name) + " is the zero operator");
    }
    return m / norm;
}

void require_same_dims(BipartiteDims a, BipartiteDims b, const char *what) {
    if (!(a == b)) {
        throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.n_a) + "x" + std::to_string(a.n_b) +
                                " vs " + std::to_string(b.n_a) + "x" + std::to_string(b.n_b));
    }
}

// Clips round-off negativity that survives when a tiny-probability branch is renormalized.
DensityMatrix renormalize_post_state(BipartiteDims dims, const ComplexMatrix &m, double trace) {
    ComplexMatrix post = m / trace;
    try {
        return DensityMatrix::from_matrix(dims, post);
    } catch (const NotDensityMatrix &) {
        auto eig = hermitian_eigensystem(0.5 * (post + post.adjoint()));
        RealVector clipped = eig.values.cwiseMax(0.0);
        clipped /= clipped.sum();
        ComplexMatrix fixed = eig.vectors * clipped.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
        return DensityMatrix::from_matrix(dims, fixed);
    }
}

}  // namespace

LocalFilter LocalFilter::make(const ComplexMatrix &a, const ComplexMatrix &b) {
    return LocalFilter(normalized_operator(a, "filter operator A"), normalized_operator(b, "filter operator B"));
}

LocalFilter LocalFilter::identity(BipartiteDims dims) {
    dims = BipartiteDims::checked(dims.n_a, dims.n_b);
    return LocalFilter(ComplexMatrix::Identity(dims.n_a, dims.n_a), ComplexMatrix::Identity(dims.n_b, dims.n_b));
}

ComplexMatrix LocalFilter::joint() const {
    return tensor_product(a_, b_);
}

double success_probability(const LocalFilter &f, const DensityMatrix &rho) {
    require_same_dims(f.dims(), rho.dims(), "filter and state dimensions differ");
    ComplexMatrix k = f.joint();
    return (k * rho.matrix() * k.adjoint()).trace().real();
}

PurificationOutcome apply_filter(const LocalFilter &f, const DensityMatrix &rho) {
    require_same_dims(f.dims(), rho.dims(), "filter and state dimensions differ");
    ComplexMatrix k = f.joint();
    ComplexMatrix m = k * rho.matrix() * k.adjoint();
    double trace = m.trace().real();
    PurificationOutcome out;
    out.success_probability = std::max(trace, 0.0);
    if (trace >= kProbabilityFloor) {
        out.post_state = renormalize_post_state(rho.dims(), m, trace);
    }
    return out;
}

LocalFilter compose(std::span<const LocalFilter> steps) {
    if (steps.empty()) {
        throw EmptyList("cannot compose an empty list of filters");
    }
    BipartiteDims dims = steps.front().dims();
    ComplexMatrix a = ComplexMatrix::Identity(dims.n_a, dims.n_a);
    ComplexMatrix b = ComplexMatrix::Identity(dims.n_b, dims.n_b);
    for (const auto &step : steps) {
        require_same_dims(step.dims(), dims, "composed filters differ in dimension");
        a = step.a() * a;
        b = step.b() * b;
    }
    return LocalFilter::make(a, b);
}

PolarDecomposition polar_decompose(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("polar decomposition needs a square matrix");
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::MatrixXcd &u = svd.matrixU();
    const Eigen::MatrixXcd &v = svd.matrixV();
    PolarDecomposition out;
    out.unitary = u * v.adjoint();
    ComplexMatrix p = v * svd.singularValues().cast<Complex>().asDiagonal() * v.adjoint();
    out.positive = 0.5 * (p + p.adjoint());
    return out;
}

double fidelity(const DensityMatrix &rho, const PureState &psi) {
    require_same_dims(rho.dims(), psi.dims(), "fidelity target lives in a different space");
    const auto &v = psi.amplitudes();
    return v.dot(rho.matrix() * v).real();
}

DeltaCurve delta_coefficients(const LocalFilter &f, const FidelityFamily &family) {
    require_same_dims(f.dims(), family.dims(), "filter and family dimensions differ");
    ComplexMatrix k = f.joint();
    const ComplexVector &psi = family.target().amplitudes();
    ComplexVector image = k * psi;
    ComplexMatrix filtered_residual = k * family.residual().matrix() * k.adjoint();

    DeltaCurve c;
    c.alpha = std::norm(psi.dot(image));
    c.gamma = psi.dot(filtered_residual * psi).real();
    c.mu = image.squaredNorm();
    c.nu = filtered_residual.trace().real();
    // F' = (aF + b)/(cF + d) with a = alpha - gamma, b = gamma, c = mu - nu, d = nu has
    // F'' = 2c(bc - ad)/(cF + d)^3, and bc - ad = gamma mu - alpha nu.
    c.beta_prime = 2 * (c.mu - c.nu) * (c.gamma * c.mu - c.alpha * c.nu);
    return c;
}

DeltaPoint delta_eval(const DeltaCurve &curve, double f) {
    if (!(f > 0 && f < 1)) {
        throw OutOfRange("delta_eval needs F in (0, 1)");
    }
    double denominator = curve.probability(f);
    if (denominator < kProbabilityFloor) {
        throw VanishingProbability("success probability " + std::to_string(denominator) + " is below the floor");
    }
    DeltaPoint p;
    p.f_prime = (curve.alpha * f + curve.gamma * (1 - f)) / denominator;
    p.delta = p.f_prime - f;
    return p;
}

}  // namespace locpur
