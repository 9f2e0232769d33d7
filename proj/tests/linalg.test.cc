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

#include "locpur/linalg.h"

#include "gtest/gtest.h"

#include "locpur/errors.h"
#include "locpur/states.h"
#include "test_util.h"

using namespace locpur;
using namespace locpur::testing;

namespace {

ComplexMatrix diag(std::initializer_list<double> values) {
    Eigen::VectorXcd v(values.size());
    std::size_t k = 0;
    for (double x : values) {
        v(k++) = x;
    }
    return ComplexMatrix(v.asDiagonal());
}

}  // namespace

TEST(tensor_product, identity) {
    EXPECT_EQ(tensor_product(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)),
              ComplexMatrix(ComplexMatrix::Identity(4, 4)));
}

TEST(tensor_product, diagonal) {
    EXPECT_EQ(tensor_product(diag({1, 0}), diag({0, 1})), diag({0, 1, 0, 0}));
}

TEST(tensor_product, matches_index_formula) {
    Rng rng(11);
    auto a = random_matrix(rng, 2, 3);
    auto b = random_matrix(rng, 3, 2);
    EXPECT_EQ(tensor_product(a, b), kron_by_index(a, b));
}

TEST(tensor_product, rank_one_times_rank_two) {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = matrix_with_rank(rng, 2, 1);
        auto b = matrix_with_rank(rng, 2, 2);
        EXPECT_EQ(rank_with_tolerance(tensor_product(a, b)), 2u);
    }
}

TEST(tensor_product, rank_is_multiplicative) {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t ra = 1 + trial % 3;
        std::size_t rb = 1 + (trial / 3) % 3;
        auto a = matrix_with_rank(rng, 3, ra);
        auto b = matrix_with_rank(rng, 3, rb);
        ASSERT_EQ(rank_with_tolerance(a), ra);
        ASSERT_EQ(rank_with_tolerance(b), rb);
        EXPECT_EQ(rank_with_tolerance(tensor_product(a, b)), ra * rb);
    }
}

TEST(tensor_product, associative_exactly_on_gaussian_integers) {
    Rng rng(7);
    auto gaussian_integers = [&](Eigen::Index r, Eigen::Index c) {
        ComplexMatrix m(r, c);
        for (Eigen::Index k = 0; k < m.size(); ++k) {
            m.data()[k] = Complex(std::floor(rng.uniform() * 17) - 8, std::floor(rng.uniform() * 17) - 8);
        }
        return m;
    };
    for (int trial = 0; trial < 10; ++trial) {
        auto a = gaussian_integers(2, 2);
        auto b = gaussian_integers(3, 2);
        auto c = gaussian_integers(2, 3);
        EXPECT_EQ(tensor_product(tensor_product(a, b), c), tensor_product(a, tensor_product(b, c)));
    }
}

TEST(tensor_product, associative_to_rounding) {
    Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_matrix(rng, 2, 2);
        auto b = random_matrix(rng, 3, 2);
        auto c = random_matrix(rng, 2, 3);
        ComplexMatrix left = tensor_product(tensor_product(a, b), c);
        ComplexMatrix right = tensor_product(a, tensor_product(b, c));
        ComplexMatrix magnitude = tensor_product(tensor_product(a.cwiseAbs().cast<Complex>(), b.cwiseAbs().cast<Complex>()),
                                                 c.cwiseAbs().cast<Complex>());
        for (Eigen::Index k = 0; k < left.size(); ++k) {
            EXPECT_LE(std::abs(left.data()[k] - right.data()[k]), 1e-15 * magnitude.data()[k].real());
        }
    }
}

TEST(rank_with_tolerance, basic_cases) {
    EXPECT_EQ(rank_with_tolerance(ComplexMatrix::Zero(3, 3)), 0u);
    EXPECT_EQ(rank_with_tolerance(ComplexMatrix::Identity(4, 4)), 4u);
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix u = rng.complex_gaussian(4, 1);
        ComplexMatrix v = rng.complex_gaussian(4, 1);
        EXPECT_EQ(rank_with_tolerance(u * v.adjoint()), 1u);
    }
}

TEST(operator_norm, cases) {
    Rng rng(17);
    EXPECT_NEAR(operator_norm(random_unitary(rng, 4)), 1.0, 1e-12);
    EXPECT_EQ(operator_norm(ComplexMatrix::Zero(3, 3)), 0.0);
    EXPECT_NEAR(operator_norm(diag({0.3, 0.7})), 0.7, 1e-15);
}

TEST(operator_norm, multiplicative_over_tensor_product) {
    Rng rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_matrix(rng, 2, 2);
        auto b = random_matrix(rng, 3, 3);
        EXPECT_NEAR(operator_norm(tensor_product(a, b)), operator_norm(a) * operator_norm(b), 1e-10);
    }
}

TEST(hermitian_eigensystem, diagonal_sorted) {
    auto e = hermitian_eigensystem(diag({3, 1, 2}));
    EXPECT_NEAR(e.values(0), 1, 1e-15);
    EXPECT_NEAR(e.values(1), 2, 1e-15);
    EXPECT_NEAR(e.values(2), 3, 1e-15);
}

TEST(hermitian_eigensystem, singlet_projector_spectrum) {
    auto e = hermitian_eigensystem(bell_state(Bell::PsiMinus).projector());
    const double expected[] = {0, 0, 0, 1};
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(e.values(k), expected[k], 1e-14);
    }
}

TEST(hermitian_eigensystem, reconstruction_and_orthonormality) {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = random_hermitian(rng, 4);
        auto e = hermitian_eigensystem(m);
        ComplexMatrix rebuilt = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
        EXPECT_LE((m - rebuilt).norm(), 1e-10 * m.norm());
        EXPECT_LE(max_abs_diff(e.vectors.adjoint() * e.vectors, ComplexMatrix::Identity(4, 4)), 1e-10);
        for (int k = 1; k < 4; ++k) {
            EXPECT_LE(e.values(k - 1), e.values(k));
        }
    }
}

TEST(hermitian_eigensystem, rejects_non_hermitian) {
    ComplexMatrix m = ComplexMatrix::Identity(3, 3);
    m(0, 1) = 0.5;
    EXPECT_THROW(hermitian_eigensystem(m), NotHermitian);
    EXPECT_THROW(hermitian_eigensystem(ComplexMatrix::Identity(2, 3)), NotHermitian);
}

TEST(partial_transpose, product_state_factorizes) {
    Rng rng(29);
    auto ra = random_mixed({2, 2}, 4, 0.0, 1).matrix();
    ComplexMatrix rho_a = partial_trace(ra, {2, 2}, Subsystem::B);
    ComplexMatrix rho_b = partial_trace(random_mixed({3, 3}, 9, 0.0, 2).matrix(), {3, 3}, Subsystem::A);
    ComplexMatrix product = tensor_product(rho_a, rho_b);
    ComplexMatrix rho_b_t = rho_b.transpose();
    EXPECT_LE(max_abs_diff(partial_transpose(product, {2, 3}, Subsystem::B), tensor_product(rho_a, rho_b_t)),
              1e-15);
    ComplexMatrix rho_a_t = rho_a.transpose();
    EXPECT_LE(max_abs_diff(partial_transpose(product, {2, 3}, Subsystem::A), tensor_product(rho_a_t, rho_b)),
              1e-15);
}

TEST(partial_transpose, singlet_spectrum) {
    auto pt = partial_transpose(bell_state(Bell::PsiMinus).projector(), {2, 2}, Subsystem::B);
    auto e = hermitian_eigensystem(pt);
    const double expected[] = {-0.5, 0.5, 0.5, 0.5};
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(e.values(k), expected[k], 1e-14);
    }
}

TEST(partial_transpose, involution_trace_hermiticity) {
    Rng rng(31);
    for (BipartiteDims dims : {BipartiteDims{2, 2}, BipartiteDims{2, 3}, BipartiteDims{3, 2}}) {
        auto m = random_hermitian(rng, dims.total());
        for (Subsystem s : {Subsystem::A, Subsystem::B}) {
            auto pt = partial_transpose(m, dims, s);
            EXPECT_EQ(partial_transpose(pt, dims, s), m);
            EXPECT_NEAR(std::abs(pt.trace() - m.trace()), 0, 1e-13);
            EXPECT_TRUE(is_hermitian(pt, 1e-14));
        }
        // Transposing both factors is the full transpose.
        ComplexMatrix full = partial_transpose(partial_transpose(m, dims, Subsystem::A), dims, Subsystem::B);
        EXPECT_EQ(full, ComplexMatrix(m.transpose()));
    }
}

TEST(partial_transpose, dimension_mismatch) {
    EXPECT_THROW(partial_transpose(ComplexMatrix::Identity(4, 4), {2, 3}, Subsystem::B), DimensionMismatch);
}

TEST(partial_trace, cases) {
    auto singlet = bell_state(Bell::PsiMinus).projector();
    EXPECT_LE(max_abs_diff(partial_trace(singlet, {2, 2}, Subsystem::B), 0.5 * ComplexMatrix::Identity(2, 2)),
              1e-15);
    EXPECT_LE(max_abs_diff(partial_trace(singlet, {2, 2}, Subsystem::A), 0.5 * ComplexMatrix::Identity(2, 2)),
              1e-15);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto rho = random_mixed({2, 2}, 4, 0.0, seed).matrix();
        EXPECT_NEAR(partial_trace(rho, {2, 2}, Subsystem::B).trace().real(), 1.0, 1e-12);
        EXPECT_NEAR(partial_trace(rho, {2, 2}, Subsystem::A).trace().real(), 1.0, 1e-12);
    }
    EXPECT_THROW(partial_trace(ComplexMatrix::Identity(5, 5), {2, 2}, Subsystem::A), DimensionMismatch);
}

TEST(partial_trace, of_product_recovers_factor) {
    Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_hermitian(rng, 3);
        auto b = random_hermitian(rng, 2);
        auto traced = partial_trace(tensor_product(a, b), {3, 2}, Subsystem::B);
        EXPECT_LE(max_abs_diff(traced, a * b.trace()), 1e-12);
        auto traced_a = partial_trace(tensor_product(a, b), {3, 2}, Subsystem::A);
        EXPECT_LE(max_abs_diff(traced_a, b * a.trace()), 1e-12);
    }
}

TEST(bipartite_dims, rejects_small_factors) {
    EXPECT_THROW(BipartiteDims::checked(1, 2), DimensionMismatch);
    EXPECT_THROW(BipartiteDims::checked(2, 0), DimensionMismatch);
    EXPECT_EQ(BipartiteDims::checked(2, 3).total(), 6u);
}
