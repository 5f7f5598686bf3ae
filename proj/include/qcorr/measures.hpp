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
#include <limits>

#include <Eigen/Dense>

#include "qcorr/states.hpp"

namespace qcorr {

/// Bloch-sphere direction n of a projective measurement on qubit a, in
/// spherical angles theta in [0, pi], phi in [0, 2 pi).
struct MeasurementAxis {
    double theta = 0;
    double phi = 0;

    Eigen::Vector3d unit_vector() const;
    /// P+- = (1 +- n.sigma)/2.
    std::array<Matrix2cd, 2> projectors() const;

    static MeasurementAxis from_vector(const Eigen::Vector3d& n);
    /// Coordinate axis 0 (x), 1 (y) or 2 (z).
    static MeasurementAxis coordinate(int axis);
};

enum class MinMethod { closed_form, oracle };

struct MinResult {
    double value = 0;
    MeasurementAxis axis;
    MinMethod method = MinMethod::closed_form;
};

/// Distance used by a measurement-induced nonlocality.
enum class Distance {
    hs,    ///< squared Hilbert-Schmidt norm
    trace, ///< trace norm
    re,    ///< relative entropy S(rho || Pi(rho))
};

/// Returned by relative_entropy on a support violation.
inline constexpr double relative_entropy_infinity = std::numeric_limits<double>::infinity();

/// Marginal Bloch length above which rho^a counts as non-degenerate and the
/// measurement basis is pinned to its eigenbasis.
inline constexpr double marginal_gap_tolerance = 1e-8;

/// Pi(rho) = sum_k (P_k (x) 1) rho (P_k (x) 1).
TwoQubitState post_measurement(const TwoQubitState& rho, const MeasurementAxis& axis);

/// Wootters concurrence max{0, l1 - l2 - l3 - l4}, with l_i the eigenvalues
/// of sqrt(sqrt(rho) rho~ sqrt(rho)), rho~ = (sy (x) sy) rho* (sy (x) sy).
double concurrence(const TwoQubitState& rho);
/// l1 - l2 - l3 - l4 before clamping at zero.
double concurrence_margin(const TwoQubitState& rho);

/// Closed form (1/2) max{0, |c1 - c2| - (1 - c3), |c1 + c2| - (1 + c3)}.
double concurrence_bd(const CorrelationVector& c);
/// The same expression before clamping at zero.
double concurrence_bd_margin(const CorrelationVector& c);

/// (1/4)(c1^2 + c2^2 + c3^2 - min_i c_i^2), measured along the axis of the
/// smallest |c_i| (lowest index on ties).
MinResult hs_min_bd(const CorrelationVector& c);
/// Hilbert-Schmidt MIN of a general state from its local Bloch vector and
/// correlation matrix.
MinResult hs_min(const TwoQubitState& rho);

/// Trace-norm MIN. For a maximally mixed marginal this is the largest
/// singular value of the correlation matrix; otherwise the measurement is
/// pinned to x/|x| and evaluated in the frame diagonalizing T:
/// (sqrt(chi+) + sqrt(chi-)) / (2|x|), chi+- = alpha +- 2 sqrt(beta) |x|.
MinResult trace_min(const TwoQubitState& rho);
/// max_i |c_i|.
MinResult trace_min_bd(const CorrelationVector& c);
/// min_i |c_i|, the alternative reading reported next to trace_min_bd.
double trace_min_bd_min_variant(const CorrelationVector& c);

/// S(Pi*(rho)) - S(rho) with Pi* along the smallest |c_i|:
/// 1 + h((1 + c0)/2) - S(bell spectrum), c0 = min_i |c_i|.
MinResult re_min_bd(const CorrelationVector& c);
/// Relative-entropy MIN of a general state: pinned axis when rho^a is
/// non-degenerate, closed form for Bell-diagonal input, otherwise the oracle.
MinResult re_min(const TwoQubitState& rho, int grid_n = 60);

/// S(x || y) = Tr x (log2 x - log2 y); relative_entropy_infinity when the
/// support of x is not contained in that of y.
double relative_entropy(const TwoQubitState& x, const TwoQubitState& y);

/// Distance between rho and its image under the measurement along axis.
double measurement_distance(const TwoQubitState& rho, const MeasurementAxis& axis,
                            Distance distance);

/**
 * Brute-force maximization of a measurement-induced distance.
 *
 * A non-degenerate marginal (|x| > 1e-8) fixes the measurement basis and no
 * search happens. Otherwise a grid_n x grid_n (theta, phi) grid is scanned and
 * the best grid points are polished by coordinate ascent with step halving
 * down to 1e-7. Deterministic.
 */
MinResult oracle_min(const TwoQubitState& rho, Distance distance, int grid_n = 60);

} // namespace qcorr
