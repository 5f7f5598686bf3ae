// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qcorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace qcorr {

namespace {

constexpr double inv_sqrt2 = 0.70710678118654752440;

Eigen::Vector4cd basis_combination(int first, int second, double sign) {
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    v(first) = inv_sqrt2;
    v(second) = sign * inv_sqrt2;
    return v;
}

double expectation(const Matrix4cd& rho, const Matrix4cd& op) {
    return (rho * op).trace().real();
}

} // namespace

double BellSpectrum::min() const {
    const auto a = as_array();
    return *std::min_element(a.begin(), a.end());
}

double BellSpectrum::max() const {
    const auto a = as_array();
    return *std::max_element(a.begin(), a.end());
}

TwoQubitState TwoQubitState::from_matrix(const Matrix4cd& rho) {
    for (Eigen::Index i = 0; i < rho.size(); ++i) {
        const auto z = rho(i);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidState("state: non-finite entry");
        }
    }
    if (qmat::hermiticity_defect(rho) > tolerance) {
        throw InvalidState("state: matrix is not Hermitian within 1e-10");
    }
    if (std::abs(rho.trace() - std::complex<double>(1.0)) > tolerance) {
        throw InvalidState("state: trace differs from 1 by more than 1e-10");
    }
    Matrix4cd hermitian = (rho + rho.adjoint()) / 2.0;
    if (qmat::hermitian_eigenvalues(hermitian).minCoeff() < -tolerance) {
        throw InvalidState("state: eigenvalue below -1e-10");
    }
    return TwoQubitState(std::move(hermitian));
}

TwoQubitState TwoQubitState::pure(const Eigen::Vector4cd& psi) {
    const double norm = psi.norm();
    if (!(norm > 0)) throw InvalidState("state: zero state vector");
    const Eigen::Vector4cd unit = psi / norm;
    return from_matrix(unit * unit.adjoint());
}

TwoQubitState TwoQubitState::maximally_mixed() {
    return TwoQubitState(Matrix4cd::Identity() / 4.0);
}

BellSpectrum bd_eigenvalues(const CorrelationVector& c) {
    return {
        (1 + c.c1 - c.c2 + c.c3) / 4,
        (1 - c.c1 + c.c2 + c.c3) / 4,
        (1 + c.c1 + c.c2 - c.c3) / 4,
        (1 - c.c1 - c.c2 - c.c3) / 4,
    };
}

BellSpectrum bd_eigenvalues_plus_c3_variant(const CorrelationVector& c) {
    BellSpectrum s = bd_eigenvalues(c);
    s.phi_plus = (1 + c.c1 + c.c2 + c.c3) / 4;
    s.phi_minus = (1 - c.c1 - c.c2 + c.c3) / 4;
    return s;
}

bool is_physical(const CorrelationVector& c) {
    for (int i = 0; i < 3; ++i) {
        if (!std::isfinite(c[i])) return false;
    }
    return bd_eigenvalues(c).min() >= -physicality_tolerance;
}

void require_physical(const CorrelationVector& c) {
    if (is_physical(c)) return;
    const BellSpectrum s = bd_eigenvalues(c);
    const char* names[4] = {"lambda_psi_plus", "lambda_psi_minus", "lambda_phi_plus",
                            "lambda_phi_minus"};
    const auto values = s.as_array();
    const auto worst = std::min_element(values.begin(), values.end()) - values.begin();
    std::ostringstream msg;
    msg.precision(12);
    msg << "unphysical correlation vector (" << c.c1 << "," << c.c2 << "," << c.c3
        << "): " << names[worst] << " = " << values[static_cast<std::size_t>(worst)];
    throw Unphysical(msg.str());
}

TwoQubitState bd_from_c(const CorrelationVector& c) {
    require_physical(c);
    const double diag_plus = (1 + c.c3) / 4;
    const double diag_minus = (1 - c.c3) / 4;
    const double corner = (c.c1 - c.c2) / 4;
    const double inner = (c.c1 + c.c2) / 4;
    Matrix4cd rho;
    // clang-format off
    rho << diag_plus, 0,          0,          corner,
           0,         diag_minus, inner,      0,
           0,         inner,      diag_minus, 0,
           corner,    0,          0,          diag_plus;
    // clang-format on
    return TwoQubitState::from_matrix(rho);
}

Eigen::Matrix3d correlation_matrix(const TwoQubitState& rho) {
    Eigen::Matrix3d t;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            t(i, j) = expectation(rho.matrix(), qmat::kron(qmat::pauli(i), qmat::pauli(j)));
        }
    }
    return t;
}

CorrelationVector c_from_state(const TwoQubitState& rho) {
    CorrelationVector c;
    c.c1 = expectation(rho.matrix(), qmat::kron(qmat::pauli_x(), qmat::pauli_x()));
    c.c2 = expectation(rho.matrix(), qmat::kron(qmat::pauli_y(), qmat::pauli_y()));
    c.c3 = expectation(rho.matrix(), qmat::kron(qmat::pauli_z(), qmat::pauli_z()));
    return c;
}

Matrix2cd marginal(const TwoQubitState& rho, Subsystem keep) {
    const Matrix4cd& m = rho.matrix();
    Matrix2cd out = Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                out(i, j) += keep == Subsystem::a ? m(2 * i + k, 2 * j + k)
                                                  : m(2 * k + i, 2 * k + j);
            }
        }
    }
    return out;
}

Eigen::Vector3d bloch_of_marginal(const TwoQubitState& rho) {
    const Matrix2cd ra = marginal(rho, Subsystem::a);
    Eigen::Vector3d x;
    for (int i = 0; i < 3; ++i) x(i) = (ra * qmat::pauli(i)).trace().real();
    return x;
}

Eigen::Vector3d bloch_of_marginal_b(const TwoQubitState& rho) {
    const Matrix2cd rb = marginal(rho, Subsystem::b);
    Eigen::Vector3d y;
    for (int i = 0; i < 3; ++i) y(i) = (rb * qmat::pauli(i)).trace().real();
    return y;
}

bool is_bell_diagonal(const TwoQubitState& rho, double tol) {
    if (bloch_of_marginal(rho).cwiseAbs().maxCoeff() > tol) return false;
    if (bloch_of_marginal_b(rho).cwiseAbs().maxCoeff() > tol) return false;
    Eigen::Matrix3d t = correlation_matrix(rho);
    t.diagonal().setZero();
    return t.cwiseAbs().maxCoeff() <= tol;
}

Eigen::Vector4cd bell_psi_plus() { return basis_combination(0, 3, +1); }
Eigen::Vector4cd bell_psi_minus() { return basis_combination(0, 3, -1); }
Eigen::Vector4cd bell_phi_plus() { return basis_combination(1, 2, +1); }
Eigen::Vector4cd bell_phi_minus() { return basis_combination(1, 2, -1); }

} // namespace qcorr
