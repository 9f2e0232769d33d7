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

#include "locpur/states.h"

#include <cmath>
#include <numbers>
#include <string>

#include "locpur/errors.h"
#include "locpur/rng.h"

namespace locpur {

namespace {

constexpr double kNormTolerance = 1e-12;

void require_unit_interval(double x, const char *name) {
    if (!(x >= 0 && x <= 1)) {
        throw OutOfRange(std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
    }
}

}  // namespace

PureState PureState::from_amplitudes(BipartiteDims dims, ComplexVector amplitudes) {
    dims = BipartiteDims::checked(dims.n_a, dims.n_b);
    if (static_cast<std::size_t>(amplitudes.size()) != dims.total()) {
        throw DimensionMismatch("pure state needs " + std::to_string(dims.total()) + " amplitudes, got " +
                                std::to_string(amplitudes.size()));
    }
    if (!amplitudes.allFinite()) {
        throw OutOfRange("pure state has non-finite amplitudes");
    }
    double norm = amplitudes.norm();
    if (std::abs(norm - 1) > kNormTolerance) {
        throw OutOfRange("pure state norm is " + std::to_string(norm) + ", expected 1");
    }
    return PureState(dims, std::move(amplitudes));
}

PureState PureState::normalized(BipartiteDims dims, ComplexVector amplitudes) {
    double norm = amplitudes.norm();
    if (!(norm > 1e-300) || !std::isfinite(norm)) {
        throw ZeroOperator("cannot normalize a zero or non-finite vector");
    }
    amplitudes /= norm;
    return from_amplitudes(dims, std::move(amplitudes));
}

ComplexMatrix PureState::projector() const {
    return amplitudes_ * amplitudes_.adjoint();
}

ComplexMatrix PureState::coefficient_matrix() const {
    ComplexMatrix m(dims_.n_a, dims_.n_b);
    for (Eigen::Index k = 0; k < amplitudes_.size(); ++k) {
        m.data()[k] = amplitudes_(k);
    }
    return m;
}

DensityMatrix DensityMatrix::from_matrix(BipartiteDims dims, ComplexMatrix matrix) {
    dims = BipartiteDims::checked(dims.n_a, dims.n_b);
    auto n = static_cast<Eigen::Index>(dims.total());
    if (matrix.rows() != n || matrix.cols() != n) {
        throw DimensionMismatch("density matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    if (!all_finite(matrix)) {
        throw NotDensityMatrix("density matrix has non-finite entries");
    }
    double asym = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTolerance) {
        throw NotDensityMatrix("density matrix is not Hermitian (deviation " + std::to_string(asym) + ")");
    }
    ComplexMatrix h = 0.5 * (matrix + matrix.adjoint());
    double tr = h.trace().real();
    if (std::abs(tr - 1) > kTraceTolerance) {
        throw NotDensityMatrix("density matrix trace is " + std::to_string(tr) + ", expected 1");
    }
    double lowest = min_hermitian_eigenvalue(h);
    if (lowest < -kEigenvalueTolerance) {
        throw NotDensityMatrix("density matrix has negative eigenvalue " + std::to_string(lowest));
    }
    return DensityMatrix(dims, std::move(h));
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
    return from_matrix(psi.dims(), psi.projector());
}

double DensityMatrix::purity() const {
    return (matrix_ * matrix_).trace().real();
}

const char *bell_name(Bell which) {
    switch (which) {
        case Bell::PsiMinus:
            return "psi_minus";
        case Bell::PsiPlus:
            return "psi_plus";
        case Bell::PhiMinus:
            return "phi_minus";
        case Bell::PhiPlus:
            return "phi_plus";
    }
    return "?";
}

PureState bell_state(Bell which) {
    const double h = std::numbers::sqrt2 / 2;
    ComplexVector v = ComplexVector::Zero(4);
    switch (which) {
        case Bell::PsiMinus:
            v(1) = h;
            v(2) = -h;
            break;
        case Bell::PsiPlus:
            v(1) = h;
            v(2) = h;
            break;
        case Bell::PhiMinus:
            v(0) = h;
            v(3) = -h;
            break;
        case Bell::PhiPlus:
            v(0) = h;
            v(3) = h;
            break;
    }
    return PureState::from_amplitudes({2, 2}, std::move(v));
}

DensityMatrix werner_state(double fidelity) {
    require_unit_interval(fidelity, "Werner fidelity");
    double rest = (1 - fidelity) / 3;
    return bell_diagonal({fidelity, rest, rest, rest});
}

DensityMatrix bell_diagonal(const std::array<double, 4> &weights) {
    double total = 0;
    for (double w : weights) {
        if (!(w >= 0) || !std::isfinite(w)) {
            throw OutOfRange("Bell-diagonal weights must be finite and non-negative");
        }
        total += w;
    }
    if (std::abs(total - 1) > 1e-12) {
        throw OutOfRange("Bell-diagonal weights must sum to 1, got " + std::to_string(total));
    }
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
        m += weights[k] * bell_state(kAllBell[k]).projector();
    }
    return DensityMatrix::from_matrix({2, 2}, std::move(m));
}

FidelityFamily FidelityFamily::make(PureState target, DensityMatrix residual) {
    if (!(target.dims() == residual.dims())) {
        throw DimensionMismatch("family target and residual live in different spaces");
    }
    const auto &psi = target.amplitudes();
    double overlap = psi.dot(residual.matrix() * psi).real();
    if (std::abs(overlap) > kOrthogonalityTolerance) {
        throw OrthogonalityViolated("<Psi|residual|Psi> = " + std::to_string(overlap) + " is not zero");
    }
    return FidelityFamily(std::move(target), std::move(residual), overlap);
}

DensityMatrix FidelityFamily::member(double fidelity) const {
    require_unit_interval(fidelity, "family fidelity");
    ComplexMatrix m = fidelity * target_.projector() + (1 - fidelity) * residual_.matrix();
    return DensityMatrix::from_matrix(dims(), std::move(m));
}

FidelityFamily werner_family() {
    return bell_family(Bell::PsiMinus, {1.0 / 3, 1.0 / 3, 1.0 / 3});
}

FidelityFamily bell_family(Bell target, const std::array<double, 3> &residual_weights) {
    std::array<double, 4> w{};
    std::size_t next = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        if (kAllBell[k] == target) {
            w[k] = 0;
        } else {
            w[k] = residual_weights[next++];
        }
    }
    return FidelityFamily::make(bell_state(target), bell_diagonal(w));
}

PureState random_pure(BipartiteDims dims, std::uint64_t seed) {
    dims = BipartiteDims::checked(dims.n_a, dims.n_b);
    Rng rng(seed);
    ComplexMatrix g = rng.complex_gaussian(dims.total(), 1);
    ComplexVector v = g.col(0);
    return PureState::normalized(dims, std::move(v));
}

DensityMatrix random_mixed(BipartiteDims dims, std::size_t rank, double min_eigenvalue, std::uint64_t seed) {
    dims = BipartiteDims::checked(dims.n_a, dims.n_b);
    if (rank == 0 || rank > dims.total()) {
        throw InfeasibleParameters("rank must lie in [1, " + std::to_string(dims.total()) + "]");
    }
    if (!(min_eigenvalue >= 0) || min_eigenvalue * static_cast<double>(rank) > 1) {
        throw InfeasibleParameters("min_eigenvalue must be >= 0 with min_eigenvalue * rank <= 1");
    }
    Rng rng(seed);

    // Uniform point on the simplex via normalized exponentials.
    std::vector<double> u(rank);
    double total = 0;
    for (auto &x : u) {
        x = -std::log(rng.uniform_open_zero());
        total += x;
    }
    double free_mass = 1 - min_eigenvalue * static_cast<double>(rank);

    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(rng.complex_gaussian(dims.total(), rank));
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dims.total(), rank);

    ComplexMatrix m = ComplexMatrix::Zero(dims.total(), dims.total());
    for (std::size_t k = 0; k < rank; ++k) {
        double lambda = min_eigenvalue + free_mass * u[k] / total;
        m += lambda * q.col(k) * q.col(k).adjoint();
    }
    return DensityMatrix::from_matrix(dims, std::move(m));
}

PureState pure_nonmax_entangled(double theta) {
    if (!(theta > 0 && theta <= std::numbers::pi / 4 + 1e-15)) {
        throw OutOfRange("theta must lie in (0, pi/4]");
    }
    ComplexVector v = ComplexVector::Zero(4);
    v(1) = std::cos(theta);
    v(2) = -std::sin(theta);
    return PureState::normalized({2, 2}, std::move(v));
}

PureState embedded_singlet(BipartiteDims dims) {
    dims = BipartiteDims::checked(dims.n_a, dims.n_b);
    const double h = std::numbers::sqrt2 / 2;
    ComplexVector v = ComplexVector::Zero(dims.total());
    v(0 * dims.n_b + 1) = h;
    v(1 * dims.n_b + 0) = -h;
    return PureState::from_amplitudes(dims, std::move(v));
}

DensityMatrix low_rank_purifiable_example(double p) {
    if (!(p > 0 && p < 1)) {
        throw OutOfRange("p must lie in (0, 1)");
    }
    ComplexMatrix m = p * embedded_singlet().projector();
    m(8, 8) += 1 - p;
    return DensityMatrix::from_matrix({3, 3}, std::move(m));
}

PureState maximally_entangled(const ComplexMatrix &u_a, const ComplexMatrix &u_b, std::size_t d) {
    auto n = static_cast<Eigen::Index>(d);
    if (d < 2 || u_a.rows() != n || u_a.cols() != n || u_b.rows() != n || u_b.cols() != n) {
        throw DimensionMismatch("maximally_entangled needs two d x d unitaries with d >= 2");
    }
    if (!is_unitary(u_a, 1e-10) || !is_unitary(u_b, 1e-10)) {
        throw NotUnitary("maximally_entangled needs unitary local operators");
    }
    ComplexVector phi = canonical_entangled({d, d}, d).amplitudes();
    return PureState::normalized({d, d}, tensor_product(u_a, u_b) * phi);
}

PureState canonical_entangled(BipartiteDims dims, std::size_t k) {
    if (k == 0 || k > std::min(dims.n_a, dims.n_b)) {
        throw OutOfRange("Schmidt rank k must lie in [1, min(n_a, n_b)]");
    }
    ComplexVector v = ComplexVector::Zero(dims.total());
    double amp = 1 / std::sqrt(static_cast<double>(k));
    for (std::size_t i = 0; i < k; ++i) {
        v(i * dims.n_b + i) = amp;
    }
    return PureState::normalized(dims, std::move(v));
}

}  // namespace locpur
