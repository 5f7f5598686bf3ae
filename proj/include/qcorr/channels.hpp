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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcorr/states.hpp"

namespace qcorr {

enum class ChannelKind { bit_phase_flip, depolarizing, gad };

std::string_view to_string(ChannelKind kind);
/// Accepts "bit-phase-flip", "depolarizing", "gad".
std::optional<ChannelKind> parse_channel_kind(std::string_view name);

/// Channel parameters; which ones are read depends on the kind
/// (bit-phase flip: p; depolarizing: gamma; GAD: p and gamma).
struct ChannelParams {
    double p = 0.5;
    double gamma = 0.0;
};

/// Single-qubit Kraus channel with sum_i E_i^dagger E_i = 1.
struct KrausChannel {
    ChannelKind kind;
    std::string name;
    std::vector<Matrix2cd> operators;
    ChannelParams params;

    /// max |sum_i E_i^dagger E_i - 1|.
    double completeness_defect() const;
};

/// {sqrt(1-p) 1, sqrt(p) sigma_y}.
KrausChannel bit_phase_flip(double p);
/// {sqrt(1-g) 1, sqrt(g/3) sigma_x, sqrt(g/3) sigma_y, sqrt(g/3) sigma_z}.
KrausChannel depolarizing(double gamma);
/// Generalized amplitude damping at stationary population p and damping gamma.
KrausChannel gad(double p, double gamma);

KrausChannel make_channel(ChannelKind kind, const ChannelParams& params);

/// Local single-qubit action E(rho) = sum_i E_i rho E_i^dagger.
Matrix2cd apply_single(const KrausChannel& channel, const Matrix2cd& rho);

/// The same channel on both qubits: sum_ij (E_i (x) E_j) rho (E_i (x) E_j)^dagger.
TwoQubitState apply_product(const KrausChannel& channel, const TwoQubitState& rho);

/**
 * Closed-form image of a Bell-diagonal correlation vector.
 *
 *   depolarizing:   c_i -> (4 gamma / 3 - 1)^2 c_i
 *   GAD, p = 1/2:   (c1, c2, c3) -> ((1-gamma) c1, (1-gamma) c2, (1-gamma)^2 c3)
 *   bit-phase flip: (c1, c2, c3) -> ((1-2p)^2 c1, c2, (1-2p)^2 c3)
 *
 * GAD with p != 1/2 leaves the Bell-diagonal family and throws MapUnavailable.
 */
CorrelationVector coefficient_map(ChannelKind kind, const ChannelParams& params,
                                  const CorrelationVector& c);

/// gamma = 1 - exp(-gamma_prime t).
double gamma_of_time(double gamma_prime, double t);

} // namespace qcorr
