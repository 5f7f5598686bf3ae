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
#pragma once

#include <array>

#include <Eigen/Dense>

#include "qcorr/qmat.hpp"

namespace qcorr {

using qmat::Matrix2cd;
using qmat::Matrix4cd;

/// Correlation coefficients <sigma_i (x) sigma_i>, i = x, y, z, of a
/// Bell-diagonal state.
struct CorrelationVector {
    double c1 = 0;
    double c2 = 0;
    double c3 = 0;

    double operator[](int i) const { return i == 0 ? c1 : (i == 1 ? c2 : c3); }
    Eigen::Vector3d as_vector() const { return {c1, c2, c3}; }
    static CorrelationVector from_vector(const Eigen::Vector3d& v) { return {v(0), v(1), v(2)}; }

    friend bool operator==(const CorrelationVector&, const CorrelationVector&) = default;
};

/// Weights of the four Bell projectors, |psi+-> = (|00> +- |11>)/sqrt2 and
/// |phi+-> = (|01> +- |10>)/sqrt2.
struct BellSpectrum {
    double psi_plus = 0;
    double psi_minus = 0;
    double phi_plus = 0;
    double phi_minus = 0;

    std::array<double, 4> as_array() const { return {psi_plus, psi_minus, phi_plus, phi_minus}; }
    double min() const;
    double max() const;
};

enum class Subsystem { a, b };

/// Validated two-qubit density matrix, basis order |00>, |01>, |10>, |11>.
///
/// Construction checks Hermiticity and unit trace within 1e-10 and
/// eigenvalues >= -1e-10, then stores the Hermitian part.
class TwoQubitState {
  public:
    static constexpr double tolerance = 1e-10;

    static TwoQubitState from_matrix(const Matrix4cd& rho);
    /// |psi><psi| for a (not necessarily normalized) pure state vector.
    static TwoQubitState pure(const Eigen::Vector4cd& psi);
    static TwoQubitState maximally_mixed();

    const Matrix4cd& matrix() const { return rho_; }

  private:
    explicit TwoQubitState(Matrix4cd rho) : rho_(std::move(rho)) {}

    Matrix4cd rho_;
};

/// Bell eigenvalue tolerance used for physicality.
inline constexpr double physicality_tolerance = 1e-12;

/// Bell-basis spectrum of the Bell-diagonal state with correlations c:
/// psi+- = (1 +- c1 -+ c2 + c3)/4, phi+- = (1 +- c1 +- c2 - c3)/4.
BellSpectrum bd_eigenvalues(const CorrelationVector& c);

/// The phi+- weights with +c3 in place of -c3. This is the commonly printed
/// variant, which is wrong; kept only so the discrepancy can be reported.
BellSpectrum bd_eigenvalues_plus_c3_variant(const CorrelationVector& c);

bool is_physical(const CorrelationVector& c);
/// Throws Unphysical naming the most negative Bell weight.
void require_physical(const CorrelationVector& c);

/// (1/4)[1 + sum_i c_i sigma_i (x) sigma_i] as an explicit 4x4 matrix.
TwoQubitState bd_from_c(const CorrelationVector& c);

/// c_i = Tr(rho sigma_i (x) sigma_i).
CorrelationVector c_from_state(const TwoQubitState& rho);

/// T_ij = Tr(rho sigma_i (x) sigma_j).
Eigen::Matrix3d correlation_matrix(const TwoQubitState& rho);

/// Partial trace over the complementary subsystem.
Matrix2cd marginal(const TwoQubitState& rho, Subsystem keep);

/// Bloch vector x_i = Tr(rho sigma_i (x) 1) of subsystem a.
Eigen::Vector3d bloch_of_marginal(const TwoQubitState& rho);
/// Bloch vector y_i = Tr(rho 1 (x) sigma_i) of subsystem b.
Eigen::Vector3d bloch_of_marginal_b(const TwoQubitState& rho);

/// True when rho has vanishing local Bloch vectors and a diagonal correlation
/// matrix, i.e. is of the form bd_from_c(c_from_state(rho)).
bool is_bell_diagonal(const TwoQubitState& rho, double tol = 1e-12);

/// Bell states in the computational basis.
Eigen::Vector4cd bell_psi_plus();
Eigen::Vector4cd bell_psi_minus();
Eigen::Vector4cd bell_phi_plus();
Eigen::Vector4cd bell_phi_minus();

} // namespace qcorr
