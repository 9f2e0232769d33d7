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

#ifndef LOCPUR_LINALG_H
#define LOCPUR_LINALG_H

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace locpur {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default relative cutoff for numerical rank.
inline constexpr double kRankTolerance = 1e-10;

/// Local dimensions of a two-party system. Basis index of |i>|j> is i * n_b + j.
struct BipartiteDims {
    std::size_t n_a = 2;
    std::size_t n_b = 2;

    /// Throws DimensionMismatch unless both factors are at least 2.
    static BipartiteDims checked(std::size_t n_a, std::size_t n_b);

    std::size_t total() const {
        return n_a * n_b;
    }
    bool operator==(const BipartiteDims &) const = default;
};

enum class Subsystem { A, B };

/// Kronecker product; m1 indexes the outer blocks.
ComplexMatrix tensor_product(const ComplexMatrix &m1, const ComplexMatrix &m2);

/// Number of singular values above rel_tol * sigma_max. Zero matrix has rank 0.
std::size_t rank_with_tolerance(const ComplexMatrix &m, double rel_tol = kRankTolerance);

/// Largest singular value.
double operator_norm(const ComplexMatrix &m);

struct HermitianEigensystem {
    RealVector values;     // ascending
    ComplexMatrix vectors; // column k pairs with values[k]
};

/// Throws NotHermitian when |m - m^dagger| exceeds 1e-10 of the largest entry magnitude.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix &m);

/// Smallest eigenvalue of a Hermitian matrix (same checks as hermitian_eigensystem).
double min_hermitian_eigenvalue(const ComplexMatrix &m);

ComplexMatrix partial_transpose(const ComplexMatrix &rho, BipartiteDims dims, Subsystem subsystem);
ComplexMatrix partial_trace(const ComplexMatrix &rho, BipartiteDims dims, Subsystem traced);

bool all_finite(const ComplexMatrix &m);
bool is_hermitian(const ComplexMatrix &m, double rel_tol);
bool is_unitary(const ComplexMatrix &m, double tol);

}  // namespace locpur

#endif
