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

#include <algorithm>
#include <cmath>
#include <string>

#include "locpur/errors.h"

namespace locpur {

namespace {

void require_bipartite_square(const ComplexMatrix &rho, BipartiteDims dims, const char *what) {
    auto n = static_cast<Eigen::Index>(dims.total());
    if (rho.rows() != n || rho.cols() != n) {
        throw DimensionMismatch(std::string(what) + ": expected a " + std::to_string(n) + "x" + std::to_string(n) +
                                " matrix, got " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()));
    }
}

}  // namespace

BipartiteDims BipartiteDims::checked(std::size_t n_a, std::size_t n_b) {
    if (n_a < 2 || n_b < 2) {
        throw DimensionMismatch("local dimensions must both be at least 2, got " + std::to_string(n_a) + "x" +
                                std::to_string(n_b));
    }
    return {n_a, n_b};
}

ComplexMatrix tensor_product(const ComplexMatrix &m1, const ComplexMatrix &m2) {
    ComplexMatrix out(m1.rows() * m2.rows(), m1.cols() * m2.cols());
    for (Eigen::Index i = 0; i < m1.rows(); ++i) {
        for (Eigen::Index j = 0; j < m1.cols(); ++j) {
            out.block(i * m2.rows(), j * m2.cols(), m2.rows(), m2.cols()) = m1(i, j) * m2;
        }
    }
    return out;
}

std::size_t rank_with_tolerance(const ComplexMatrix &m, double rel_tol) {
    if (m.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto &s = svd.singularValues();
    double s_max = s.size() ? s(0) : 0.0;
    if (s_max == 0) {
        return 0;
    }
    std::size_t r = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        if (s(k) > rel_tol * s_max) {
            ++r;
        }
    }
    return r;
}

double operator_norm(const ComplexMatrix &m) {
    if (m.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

bool all_finite(const ComplexMatrix &m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const auto &z = m.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

bool is_hermitian(const ComplexMatrix &m, double rel_tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    double scale = m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
    double asym = m.size() ? (m - m.adjoint()).cwiseAbs().maxCoeff() : 0.0;
    return asym <= rel_tol * scale;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    ComplexMatrix g = m.adjoint() * m;
    return (g - ComplexMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw NotHermitian("eigensystem of a non-square matrix");
    }
    if (!is_hermitian(m, 1e-10)) {
        throw NotHermitian("matrix is not Hermitian within 1e-10 of its largest entry");
    }
    // Symmetrize so round-off on the strict upper triangle is not silently dropped.
    Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_hermitian_eigenvalue(const ComplexMatrix &m) {
    if (m.rows() != m.cols() || !is_hermitian(m, 1e-10)) {
        throw NotHermitian("matrix is not Hermitian within 1e-10 of its largest entry");
    }
    Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

ComplexMatrix partial_transpose(const ComplexMatrix &rho, BipartiteDims dims, Subsystem subsystem) {
    require_bipartite_square(rho, dims, "partial_transpose");
    auto na = static_cast<Eigen::Index>(dims.n_a);
    auto nb = static_cast<Eigen::Index>(dims.n_b);
    ComplexMatrix out(rho.rows(), rho.cols());
    for (Eigen::Index i = 0; i < na; ++i) {
        for (Eigen::Index j = 0; j < nb; ++j) {
            for (Eigen::Index k = 0; k < na; ++k) {
                for (Eigen::Index l = 0; l < nb; ++l) {
                    // <ij|rho|kl> moves to <kj|.|il> (A) or <il|.|kj> (B).
                    if (subsystem == Subsystem::A) {
                        out(k * nb + j, i * nb + l) = rho(i * nb + j, k * nb + l);
                    } else {
                        out(i * nb + l, k * nb + j) = rho(i * nb + j, k * nb + l);
                    }
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, BipartiteDims dims, Subsystem traced) {
    require_bipartite_square(rho, dims, "partial_trace");
    auto na = static_cast<Eigen::Index>(dims.n_a);
    auto nb = static_cast<Eigen::Index>(dims.n_b);
    if (traced == Subsystem::B) {
        ComplexMatrix out = ComplexMatrix::Zero(na, na);
        for (Eigen::Index i = 0; i < na; ++i) {
            for (Eigen::Index k = 0; k < na; ++k) {
                for (Eigen::Index j = 0; j < nb; ++j) {
                    out(i, k) += rho(i * nb + j, k * nb + j);
                }
            }
        }
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(nb, nb);
    for (Eigen::Index j = 0; j < nb; ++j) {
        for (Eigen::Index l = 0; l < nb; ++l) {
            for (Eigen::Index i = 0; i < na; ++i) {
                out(j, l) += rho(i * nb + j, i * nb + l);
            }
        }
    }
    return out;
}

}  // namespace locpur
