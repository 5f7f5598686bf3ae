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
#include "qcorr/channels.hpp"

#include <cmath>
#include <sstream>

namespace qcorr {

namespace {

void require_unit_interval(double value, const char* name, const char* channel) {
    if (!(value >= 0.0 && value <= 1.0)) {
        std::ostringstream msg;
        msg << channel << ": parameter " << name << " = " << value << " outside [0, 1]";
        throw ParamOutOfRange(msg.str());
    }
}

// GAD keeps the Bell-diagonal form only at p = 1/2.
constexpr double gad_symmetric_tolerance = 1e-15;

} // namespace

std::string_view to_string(ChannelKind kind) {
    switch (kind) {
    case ChannelKind::bit_phase_flip: return "bit-phase-flip";
    case ChannelKind::depolarizing: return "depolarizing";
    case ChannelKind::gad: return "gad";
    }
    return "unknown";
}

std::optional<ChannelKind> parse_channel_kind(std::string_view name) {
    if (name == "bit-phase-flip") return ChannelKind::bit_phase_flip;
    if (name == "depolarizing") return ChannelKind::depolarizing;
    if (name == "gad") return ChannelKind::gad;
    return std::nullopt;
}

double KrausChannel::completeness_defect() const {
    Matrix2cd sum = Matrix2cd::Zero();
    for (const Matrix2cd& e : operators) sum += e.adjoint() * e;
    return (sum - Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

KrausChannel bit_phase_flip(double p) {
    require_unit_interval(p, "p", "bit-phase-flip");
    return {ChannelKind::bit_phase_flip,
            "bit-phase-flip",
            {std::sqrt(1 - p) * qmat::identity2(), std::sqrt(p) * qmat::pauli_y()},
            {p, 0.0}};
}

KrausChannel depolarizing(double gamma) {
    require_unit_interval(gamma, "gamma", "depolarizing");
    const double w = std::sqrt(gamma / 3);
    return {ChannelKind::depolarizing,
            "depolarizing",
            {std::sqrt(1 - gamma) * qmat::identity2(), w * qmat::pauli_x(), w * qmat::pauli_y(),
             w * qmat::pauli_z()},
            {0.5, gamma}};
}

KrausChannel gad(double p, double gamma) {
    require_unit_interval(p, "p", "gad");
    require_unit_interval(gamma, "gamma", "gad");
    const double sp = std::sqrt(p);
    const double sq = std::sqrt(1 - p);
    const double keep = std::sqrt(1 - gamma);
    const double decay = std::sqrt(gamma);
    Matrix2cd e0, e1, e2, e3;
    e0 << sp, 0, 0, sp * keep;
    e1 << 0, sp * decay, 0, 0;
    e2 << sq * keep, 0, 0, sq;
    e3 << 0, 0, sq * decay, 0;
    return {ChannelKind::gad, "gad", {e0, e1, e2, e3}, {p, gamma}};
}

KrausChannel make_channel(ChannelKind kind, const ChannelParams& params) {
    switch (kind) {
    case ChannelKind::bit_phase_flip: return bit_phase_flip(params.p);
    case ChannelKind::depolarizing: return depolarizing(params.gamma);
    case ChannelKind::gad: return gad(params.p, params.gamma);
    }
    throw MapUnavailable("unknown channel kind");
}

Matrix2cd apply_single(const KrausChannel& channel, const Matrix2cd& rho) {
    Matrix2cd out = Matrix2cd::Zero();
    for (const Matrix2cd& e : channel.operators) out += e * rho * e.adjoint();
    return out;
}

TwoQubitState apply_product(const KrausChannel& channel, const TwoQubitState& rho) {
    Matrix4cd out = Matrix4cd::Zero();
    for (const Matrix2cd& ei : channel.operators) {
        for (const Matrix2cd& ej : channel.operators) {
            const Matrix4cd k = qmat::kron(ei, ej);
            out += k * rho.matrix() * k.adjoint();
        }
    }
    return TwoQubitState::from_matrix(out);
}

CorrelationVector coefficient_map(ChannelKind kind, const ChannelParams& params,
                                  const CorrelationVector& c) {
    require_physical(c);
    switch (kind) {
    case ChannelKind::depolarizing: {
        require_unit_interval(params.gamma, "gamma", "depolarizing");
        const double f = 4 * params.gamma / 3 - 1;
        const double s = f * f;
        return {s * c.c1, s * c.c2, s * c.c3};
    }
    case ChannelKind::gad: {
        require_unit_interval(params.p, "p", "gad");
        require_unit_interval(params.gamma, "gamma", "gad");
        if (std::abs(params.p - 0.5) > gad_symmetric_tolerance) {
            throw MapUnavailable("gad: closed-form map requires p = 1/2; use the Kraus path");
        }
        const double k = 1 - params.gamma;
        return {k * c.c1, k * c.c2, k * k * c.c3};
    }
    case ChannelKind::bit_phase_flip: {
        require_unit_interval(params.p, "p", "bit-phase-flip");
        const double f = 1 - 2 * params.p;
        const double s = f * f;
        return {s * c.c1, c.c2, s * c.c3};
    }
    }
    throw MapUnavailable("unknown channel kind");
}

double gamma_of_time(double gamma_prime, double t) {
    if (!(gamma_prime >= 0.0) || !(t >= 0.0)) {
        throw ParamOutOfRange("gamma_of_time: rate and time must be non-negative");
    }
    return -std::expm1(-gamma_prime * t);
}

} // namespace qcorr
