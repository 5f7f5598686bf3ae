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
#include "qcorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>
#include <vector>

namespace qcorr {

namespace {

using std::numbers::pi;

int argmin_abs(const CorrelationVector& c) {
    int best = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(c[i]) < std::abs(c[best])) best = i;
    }
    return best;
}

int argmax_abs(const CorrelationVector& c) {
    int best = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(c[i]) > std::abs(c[best])) best = i;
    }
    return best;
}

Matrix4cd spin_flip_operator() {
    return qmat::kron(qmat::pauli_y(), qmat::pauli_y());
}

Matrix4cd dephase(const Matrix4cd& rho, const MeasurementAxis& axis) {
    Matrix4cd out = Matrix4cd::Zero();
    for (const Matrix2cd& p : axis.projectors()) {
        const Matrix4cd lifted = qmat::kron(p, qmat::identity2());
        out += lifted * rho * lifted;
    }
    return out;
}

double spectrum_entropy(const Matrix4cd& rho) {
    return qmat::entropy_base2(qmat::hermitian_eigenvalues(rho));
}

// Distance evaluator with S(rho) cached for the relative-entropy case.
class DistanceEvaluator {
  public:
    DistanceEvaluator(const Matrix4cd& rho, Distance distance)
        : rho_(rho), distance_(distance),
          entropy_(distance == Distance::re ? spectrum_entropy(rho) : 0.0) {}

    double operator()(const MeasurementAxis& axis) const {
        const Matrix4cd post = dephase(rho_, axis);
        switch (distance_) {
        case Distance::hs: return qmat::frobenius_norm_sq(Matrix4cd(rho_ - post));
        case Distance::trace: return qmat::trace_norm(Matrix4cd(rho_ - post));
        case Distance::re:
            // Pi is a pinching, so supp rho lies in supp Pi(rho) and
            // S(rho || Pi(rho)) = S(Pi(rho)) - S(rho).
            return std::max(0.0, spectrum_entropy(post) - entropy_);
        }
        return 0.0;
    }

  private:
    Matrix4cd rho_;
    Distance distance_;
    double entropy_;
};

double wrap_phi(double phi) {
    phi = std::fmod(phi, 2 * pi);
    if (phi < 0) phi += 2 * pi;
    return phi;
}

struct Candidate {
    double value;
    MeasurementAxis axis;
};

// Larger value wins; equal values resolve to the lexicographically smaller axis.
bool better(const Candidate& l, const Candidate& r) {
    if (l.value != r.value) return l.value > r.value;
    return std::tie(l.axis.theta, l.axis.phi) < std::tie(r.axis.theta, r.axis.phi);
}

Candidate coordinate_ascent(const DistanceEvaluator& f, Candidate start, double step_theta,
                            double step_phi) {
    constexpr double min_step = 1e-7;
    constexpr int max_moves = 100000;
    Candidate cur = start;
    int moves = 0;
    while (std::max(step_theta, step_phi) >= min_step && moves < max_moves) {
        bool improved = false;
        const MeasurementAxis trials[4] = {
            {std::min(pi, cur.axis.theta + step_theta), cur.axis.phi},
            {std::max(0.0, cur.axis.theta - step_theta), cur.axis.phi},
            {cur.axis.theta, wrap_phi(cur.axis.phi + step_phi)},
            {cur.axis.theta, wrap_phi(cur.axis.phi - step_phi)},
        };
        for (const MeasurementAxis& axis : trials) {
            const double v = f(axis);
            if (v > cur.value) {
                cur = {v, axis};
                improved = true;
            }
            ++moves;
        }
        if (!improved) {
            step_theta /= 2;
            step_phi /= 2;
        }
    }
    return cur;
}

// Symmetric real 3x3 eigensystem through the Hermitian kernel.
qmat::HermitianEigenSystem<double, 3> symmetric_eig(const Eigen::Matrix3d& m) {
    return qmat::hermitian_eig(Eigen::Matrix3cd(m.cast<std::complex<double>>()));
}

} // namespace

Eigen::Vector3d MeasurementAxis::unit_vector() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

std::array<Matrix2cd, 2> MeasurementAxis::projectors() const {
    const Eigen::Vector3d n = unit_vector();
    Matrix2cd n_sigma = Matrix2cd::Zero();
    for (int i = 0; i < 3; ++i) n_sigma += n(i) * qmat::pauli(i);
    return {(qmat::identity2() + n_sigma) / 2.0, (qmat::identity2() - n_sigma) / 2.0};
}

MeasurementAxis MeasurementAxis::from_vector(const Eigen::Vector3d& n) {
    const double norm = n.norm();
    if (!(norm > 0)) return {};
    const double z = std::clamp(n(2) / norm, -1.0, 1.0);
    return {std::acos(z), wrap_phi(std::atan2(n(1), n(0)))};
}

MeasurementAxis MeasurementAxis::coordinate(int axis) {
    switch (axis) {
    case 0: return {pi / 2, 0};
    case 1: return {pi / 2, pi / 2};
    default: return {0, 0};
    }
}

TwoQubitState post_measurement(const TwoQubitState& rho, const MeasurementAxis& axis) {
    return TwoQubitState::from_matrix(dephase(rho.matrix(), axis));
}

double concurrence_margin(const TwoQubitState& rho) {
    const Matrix4cd flip = spin_flip_operator();
    const Matrix4cd sqrt_rho = qmat::psd_sqrt(rho.matrix());
    // sqrt(rho~) = flip sqrt(rho)* flip, since the square root commutes with
    // complex conjugation and unitary conjugation.
    const Matrix4cd sqrt_tilde = flip * sqrt_rho.conjugate() * flip;
    // The eigenvalues of sqrt(sqrt(rho) rho~ sqrt(rho)) are the singular
    // values of sqrt(rho) sqrt(rho~); the latter keeps small ones accurate.
    const Eigen::Vector4d lambda = qmat::singular_values(Matrix4cd(sqrt_rho * sqrt_tilde));
    return lambda(0) - lambda(1) - lambda(2) - lambda(3);
}

double concurrence(const TwoQubitState& rho) {
    return std::clamp(concurrence_margin(rho), 0.0, 1.0);
}

double concurrence_bd_margin(const CorrelationVector& c) {
    return 0.5 * std::max(std::abs(c.c1 - c.c2) - (1 - c.c3), std::abs(c.c1 + c.c2) - (1 + c.c3));
}

double concurrence_bd(const CorrelationVector& c) {
    require_physical(c);
    return std::max(0.0, concurrence_bd_margin(c));
}

MinResult hs_min_bd(const CorrelationVector& c) {
    require_physical(c);
    const int k = argmin_abs(c);
    const double value = 0.25 * (c.c1 * c.c1 + c.c2 * c.c2 + c.c3 * c.c3 - c[k] * c[k]);
    return {std::max(0.0, value), MeasurementAxis::coordinate(k), MinMethod::closed_form};
}

MinResult hs_min(const TwoQubitState& rho) {
    const Eigen::Vector3d x = bloch_of_marginal(rho);
    const Eigen::Matrix3d t = correlation_matrix(rho);
    const Eigen::Matrix3d ttt = t * t.transpose();
    const double total = t.squaredNorm();
    if (x.norm() > marginal_gap_tolerance) {
        const Eigen::Vector3d n = x.normalized();
        const double value = 0.25 * (total - n.dot(ttt * n));
        return {std::max(0.0, value), MeasurementAxis::from_vector(n), MinMethod::closed_form};
    }
    const auto sys = symmetric_eig(ttt);
    const Eigen::Vector3d n = sys.eigenvectors.col(2).real();
    const double value = 0.25 * (total - sys.eigenvalues(2));
    return {std::max(0.0, value), MeasurementAxis::from_vector(n), MinMethod::closed_form};
}

MinResult trace_min(const TwoQubitState& rho) {
    const Eigen::Vector3d x = bloch_of_marginal(rho);
    const Eigen::Matrix3d t = correlation_matrix(rho);
    const auto sys = symmetric_eig(Eigen::Matrix3d(t * t.transpose()));
    const double x_norm = x.norm();

    if (x_norm <= marginal_gap_tolerance) {
        const double value = std::sqrt(std::max(0.0, sys.eigenvalues(0)));
        const Eigen::Vector3d n = sys.eigenvectors.col(2).real();
        return {value, MeasurementAxis::from_vector(n), MinMethod::closed_form};
    }

    // Frame where T = U diag(c) V^T; only c_i^2 and the rotated x_i^2 enter.
    const Eigen::Matrix3d u = sys.eigenvectors.real();
    const Eigen::Vector3d xr = u.transpose() * x;
    Eigen::Vector3d c_sq, x_sq;
    for (int i = 0; i < 3; ++i) {
        c_sq(i) = std::max(0.0, sys.eigenvalues(i));
        x_sq(i) = xr(i) * xr(i);
    }
    const double x_norm_sq = x_norm * x_norm;
    const double alpha = c_sq.sum() * x_norm_sq - c_sq.dot(x_sq);
    const double beta = x_sq(0) * c_sq(1) * c_sq(2) + x_sq(1) * c_sq(2) * c_sq(0) +
                        x_sq(2) * c_sq(0) * c_sq(1);
    const double spread = 2 * std::sqrt(std::max(0.0, beta)) * x_norm;
    const double chi_plus = std::max(0.0, alpha + spread);
    const double chi_minus = std::max(0.0, alpha - spread);
    const double value = (std::sqrt(chi_plus) + std::sqrt(chi_minus)) / (2 * x_norm);
    return {value, MeasurementAxis::from_vector(x), MinMethod::closed_form};
}

MinResult trace_min_bd(const CorrelationVector& c) {
    require_physical(c);
    // Measuring along any axis but the largest keeps the largest |c_i|.
    return {std::abs(c[argmax_abs(c)]), MeasurementAxis::coordinate(argmin_abs(c)),
            MinMethod::closed_form};
}

double trace_min_bd_min_variant(const CorrelationVector& c) {
    require_physical(c);
    return std::abs(c[argmin_abs(c)]);
}

MinResult re_min_bd(const CorrelationVector& c) {
    require_physical(c);
    const int k = argmin_abs(c);
    const double c0 = std::abs(c[k]);
    const double measured = 1.0 + qmat::binary_entropy((1.0 + c0) / 2.0);
    const auto weights = bd_eigenvalues(c).as_array();
    const double value = measured - qmat::entropy_base2(weights);
    return {std::max(0.0, value), MeasurementAxis::coordinate(k), MinMethod::closed_form};
}

MinResult re_min(const TwoQubitState& rho, int grid_n) {
    const Eigen::Vector3d x = bloch_of_marginal(rho);
    if (x.norm() > marginal_gap_tolerance) {
        const MeasurementAxis axis = MeasurementAxis::from_vector(x);
        return {DistanceEvaluator(rho.matrix(), Distance::re)(axis), axis,
                MinMethod::closed_form};
    }
    if (is_bell_diagonal(rho)) {
        CorrelationVector c = c_from_state(rho);
        if (is_physical(c)) return re_min_bd(c);
    }
    return oracle_min(rho, Distance::re, grid_n);
}

double relative_entropy(const TwoQubitState& x, const TwoQubitState& y) {
    constexpr double support = 1e-12;
    const auto sys_y = qmat::hermitian_eig(y.matrix());
    double cross = 0;
    for (Eigen::Index k = 0; k < 4; ++k) {
        const Eigen::Vector4cd v = sys_y.eigenvectors.col(k);
        const double weight = (v.adjoint() * x.matrix() * v)(0).real();
        const double mu = sys_y.eigenvalues(k);
        if (mu < support) {
            if (weight > support) return relative_entropy_infinity;
            continue;
        }
        if (weight > 0) cross += weight * std::log2(mu);
    }
    return std::max(0.0, -spectrum_entropy(x.matrix()) - cross);
}

double measurement_distance(const TwoQubitState& rho, const MeasurementAxis& axis,
                            Distance distance) {
    return DistanceEvaluator(rho.matrix(), distance)(axis);
}

MinResult oracle_min(const TwoQubitState& rho, Distance distance, int grid_n) {
    if (grid_n < 2) throw InvalidSweep("oracle_min: grid_n must be at least 2");
    const DistanceEvaluator f(rho.matrix(), distance);

    const Eigen::Vector3d x = bloch_of_marginal(rho);
    if (x.norm() > marginal_gap_tolerance) {
        const MeasurementAxis axis = MeasurementAxis::from_vector(x);
        return {f(axis), axis, MinMethod::oracle};
    }

    const double step_theta = pi / (grid_n - 1);
    const double step_phi = 2 * pi / grid_n;
    std::vector<Candidate> grid;
    grid.reserve(static_cast<std::size_t>(grid_n) * static_cast<std::size_t>(grid_n));
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            const MeasurementAxis axis{i * step_theta, j * step_phi};
            grid.push_back({f(axis), axis});
        }
    }

    constexpr std::size_t seeds = 6;
    const std::size_t count = std::min(seeds, grid.size());
    std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(count), grid.end(),
                      better);

    Candidate best = grid.front();
    for (std::size_t k = 0; k < count; ++k) {
        const Candidate polished = coordinate_ascent(f, grid[k], step_theta, step_phi);
        if (better(polished, best)) best = polished;
    }
    return {best.value, best.axis, MinMethod::oracle};
}

} // namespace qcorr
