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

#ifndef LOCPUR_TESTS_TEST_UTIL_H
#define LOCPUR_TESTS_TEST_UTIL_H

#include <algorithm>
#include <cmath>
#include <functional>

#include "locpur/filter.h"
#include "locpur/linalg.h"
#include "locpur/rng.h"
#include "locpur/states.h"

namespace locpur::testing {

inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline ComplexMatrix random_matrix(Rng &rng, std::size_t rows, std::size_t cols) {
    return rng.complex_gaussian(rows, cols);
}

inline ComplexMatrix random_unitary(Rng &rng, std::size_t n) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(rng.complex_gaussian(n, n));
    Eigen::MatrixXcd q = qr.householderQ();
    return q;
}

/// U diag(s) V^dagger with `rank` singular values drawn from [0.5, 1] and the rest exactly zero.
inline ComplexMatrix matrix_with_rank(Rng &rng, std::size_t n, std::size_t rank) {
    Eigen::VectorXcd s = Eigen::VectorXcd::Zero(n);
    for (std::size_t k = 0; k < rank; ++k) {
        s(k) = 0.5 + 0.5 * rng.uniform();
    }
    return random_unitary(rng, n) * s.asDiagonal() * random_unitary(rng, n).adjoint();
}

inline ComplexMatrix random_hermitian(Rng &rng, std::size_t n) {
    ComplexMatrix g = rng.complex_gaussian(n, n);
    return 0.5 * (g + g.adjoint());
}

inline LocalFilter random_filter(Rng &rng, BipartiteDims dims) {
    return LocalFilter::make(rng.complex_gaussian(dims.n_a, dims.n_a), rng.complex_gaussian(dims.n_b, dims.n_b));
}

/// Family with a random pure target and a random residual supported on its orthogonal complement.
inline FidelityFamily random_family(Rng &rng, BipartiteDims dims, std::uint64_t seed) {
    PureState target = random_pure(dims, seed);
    std::size_t n = dims.total();
    ComplexMatrix project = ComplexMatrix::Identity(n, n) - target.projector();
    ComplexMatrix g = rng.complex_gaussian(n, n);
    ComplexMatrix residual = project * g * g.adjoint() * project;
    residual /= residual.trace().real();
    residual = 0.5 * (residual + residual.adjoint()).eval();
    return FidelityFamily::make(target, DensityMatrix::from_matrix(dims, residual));
}

/// Kronecker product straight from the index formula, independent of tensor_product's block copies.
inline ComplexMatrix kron_by_index(const ComplexMatrix &m1, const ComplexMatrix &m2) {
    ComplexMatrix out(m1.rows() * m2.rows(), m1.cols() * m2.cols());
    for (Eigen::Index i = 0; i < m1.rows(); ++i) {
        for (Eigen::Index j = 0; j < m1.cols(); ++j) {
            for (Eigen::Index k = 0; k < m2.rows(); ++k) {
                for (Eigen::Index l = 0; l < m2.cols(); ++l) {
                    out(i * m2.rows() + k, j * m2.cols() + l) = m1(i, j) * m2(k, l);
                }
            }
        }
    }
    return out;
}

/// delta(F) recomputed end to end: filter the family member, renormalize, take the overlap.
inline double delta_by_conjugation(const LocalFilter &f, const FidelityFamily &family, double x) {
    ComplexMatrix k = tensor_product(f.a(), f.b());
    ComplexMatrix rho = x * family.target().projector() + (1 - x) * family.residual().matrix();
    ComplexMatrix out = k * rho * k.adjoint();
    const ComplexVector &psi = family.target().amplitudes();
    return psi.dot(out * psi).real() / out.trace().real() - x;
}

/// Central second difference.
inline double second_difference(const std::function<double(double)> &g, double x, double h) {
    return g(x + h) - 2 * g(x) + g(x - h);
}

inline int sign_of(double x) {
    return (x > 0) - (x < 0);
}

}  // namespace locpur::testing

#endif
