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
#include "qcorr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include <Eigen/QR>

#include "qcorr/channels.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/qmat.hpp"
#include "qcorr/report.hpp"
#include "qcorr/states.hpp"

namespace qcorr::verify {

namespace {

using Rng = std::mt19937_64;
using report::format_number;

std::string exact(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string show(const CorrelationVector& c) {
    return "c=(" + exact(c.c1) + "," + exact(c.c2) + "," + exact(c.c3) + ")";
}

CorrelationVector random_physical_c(Rng& rng) {
    std::exponential_distribution<double> expo(1.0);
    double w[4];
    double total = 0;
    for (double& x : w) total += (x = expo(rng));
    for (double& x : w) x /= total;
    return {(w[0] - w[1]) + (w[2] - w[3]), (w[2] - w[3]) - (w[0] - w[1]),
            (w[0] + w[1]) - (w[2] + w[3])};
}

Matrix4cd random_complex4(Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix4cd g;
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = {normal(rng), normal(rng)};
    return g;
}

Matrix4cd random_hermitian(Rng& rng) {
    const Matrix4cd g = random_complex4(rng);
    return (g + g.adjoint()) / 2.0;
}

Matrix4cd random_unitary(Rng& rng) {
    Eigen::HouseholderQR<Matrix4cd> qr(random_complex4(rng));
    return qr.householderQ() * Matrix4cd::Identity();
}

TwoQubitState random_state(Rng& rng) {
    const Matrix4cd g = random_complex4(rng);
    Matrix4cd p = g * g.adjoint();
    p /= p.trace().real();
    return TwoQubitState::from_matrix((p + p.adjoint()) / 2.0);
}

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

/// Outcome of one sample: empty on success, otherwise a description.
using Check = std::function<std::optional<std::string>(Rng&)>;

struct Suite {
    std::string name;
    Check check;
};

std::optional<std::string> gap_failure(const std::string& input, double a, double b, double tol,
                                       const char* a_name, const char* b_name) {
    const double gap = std::abs(a - b);
    if (gap <= tol && std::isfinite(gap)) return std::nullopt;
    return input + " " + a_name + "=" + exact(a) + " " + b_name + "=" + exact(b) +
           " gap=" + exact(gap) + " tol=" + exact(tol);
}

std::optional<std::string> map_vs_kraus(Rng& rng, ChannelKind kind) {
    const CorrelationVector c = random_physical_c(rng);
    ChannelParams params;
    if (kind == ChannelKind::bit_phase_flip) {
        params.p = uniform01(rng);
    } else {
        params.gamma = uniform01(rng);
    }
    const CorrelationVector mapped = coefficient_map(kind, params, c);
    const TwoQubitState evolved = apply_product(make_channel(kind, params), bd_from_c(c));
    const CorrelationVector direct = c_from_state(evolved);
    const double gap = (mapped.as_vector() - direct.as_vector()).cwiseAbs().maxCoeff();
    const double off_bd = is_bell_diagonal(evolved) ? 0.0 : 1.0;
    if (gap <= 1e-12 && off_bd == 0.0) return std::nullopt;
    return show(c) + " p=" + exact(params.p) + " gamma=" + exact(params.gamma) +
           " max_gap=" + exact(gap) + (off_bd != 0.0 ? " (evolved state not Bell-diagonal)" : "");
}

std::vector<Suite> suites(int oracle_grid) {
    std::vector<Suite> out;
    out.push_back({"eigensolver-reconstruction", [](Rng& rng) -> std::optional<std::string> {
        const Matrix4cd h = random_hermitian(rng);
        const auto sys = qmat::hermitian_eig(h);
        const double rec = (sys.reconstruct() - h).cwiseAbs().maxCoeff();
        const double uni =
            (sys.eigenvectors.adjoint() * sys.eigenvectors - Matrix4cd::Identity()).cwiseAbs().maxCoeff();
        if (rec <= 1e-10 && uni <= 1e-10) return std::nullopt;
        return "reconstruction=" + exact(rec) + " unitarity=" + exact(uni);
    }});
    out.push_back({"trace-norm-unitary-invariance", [](Rng& rng) {
        const Matrix4cd h = random_hermitian(rng);
        const Matrix4cd u = random_unitary(rng);
        const double a = qmat::trace_norm(h);
        const double b = qmat::trace_norm(Matrix4cd(u * h * u.adjoint()));
        return gap_failure("random hermitian", a, b, 1e-10 * std::max(1.0, a), "norm", "rotated");
    }});
    out.push_back({"correlation-round-trip", [](Rng& rng) -> std::optional<std::string> {
        const CorrelationVector c = random_physical_c(rng);
        const double gap = (c_from_state(bd_from_c(c)).as_vector() - c.as_vector()).cwiseAbs().maxCoeff();
        if (gap <= 1e-12) return std::nullopt;
        return show(c) + " round_trip_gap=" + exact(gap);
    }});
    out.push_back({"bell-spectrum-agreement", [](Rng& rng) -> std::optional<std::string> {
        const CorrelationVector c = random_physical_c(rng);
        auto formula = bd_eigenvalues(c).as_array();
        std::sort(formula.begin(), formula.end(), std::greater<>());
        const Eigen::Vector4d numeric = qmat::hermitian_eigenvalues(bd_from_c(c).matrix());
        double gap = 0;
        for (int k = 0; k < 4; ++k) gap = std::max(gap, std::abs(formula[k] - numeric(k)));
        if (gap <= 1e-12) return std::nullopt;
        return show(c) + " spectrum_gap=" + exact(gap);
    }});
    out.push_back({"concurrence-consistency", [](Rng& rng) {
        const CorrelationVector c = random_physical_c(rng);
        return gap_failure(show(c), concurrence_bd(c), concurrence(bd_from_c(c)), 1e-10,
                           "closed", "general");
    }});
    const std::pair<const char*, Distance> distances[] = {
        {"hs", Distance::hs}, {"trace", Distance::trace}, {"re", Distance::re}};
    for (const auto& [tag, distance] : distances) {
        out.push_back({std::string("oracle-agreement-") + tag,
                       [distance, oracle_grid](Rng& rng) {
            const CorrelationVector c = random_physical_c(rng);
            double closed = 0;
            switch (distance) {
            case Distance::hs: closed = hs_min_bd(c).value; break;
            case Distance::trace: closed = trace_min_bd(c).value; break;
            case Distance::re: closed = re_min_bd(c).value; break;
            }
            const double oracle = oracle_min(bd_from_c(c), distance, oracle_grid).value;
            return gap_failure(show(c), closed, oracle, 1e-4, "closed", "oracle");
        }});
    }
    out.push_back({"oracle-agreement-general-hs", [oracle_grid](Rng& rng) {
        const TwoQubitState rho = random_state(rng);
        return gap_failure("random state", hs_min(rho).value,
                           oracle_min(rho, Distance::hs, oracle_grid).value, 1e-4, "closed", "oracle");
    }});
    out.push_back({"oracle-agreement-general-trace", [oracle_grid](Rng& rng) {
        const TwoQubitState rho = random_state(rng);
        return gap_failure("random state", trace_min(rho).value,
                           oracle_min(rho, Distance::trace, oracle_grid).value, 1e-4, "closed",
                           "oracle");
    }});
    for (ChannelKind kind : {ChannelKind::bit_phase_flip, ChannelKind::depolarizing, ChannelKind::gad}) {
        out.push_back({"map-kraus-" + std::string(to_string(kind)),
                       [kind](Rng& rng) { return map_vs_kraus(rng, kind); }});
    }
    out.push_back({"kraus-completeness", [](Rng& rng) -> std::optional<std::string> {
        const double p = uniform01(rng);
        const double gamma = uniform01(rng);
        for (ChannelKind kind : {ChannelKind::bit_phase_flip, ChannelKind::depolarizing, ChannelKind::gad}) {
            const double defect = make_channel(kind, {p, gamma}).completeness_defect();
            if (defect > 1e-12) {
                return std::string(to_string(kind)) + " p=" + exact(p) + " gamma=" + exact(gamma) +
                       " defect=" + exact(defect);
            }
        }
        return std::nullopt;
    }});
    return out;
}

} // namespace

bool Report::all_passed() const {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteResult& s) { return s.passed == s.total; });
}

Report run_verify(int samples, std::uint64_t seed, int oracle_grid) {
    Report report;
    report.samples = samples;
    report.seed = seed;
    report.oracle_grid = oracle_grid;
    const std::vector<Suite> all = suites(oracle_grid);
    for (std::size_t s = 0; s < all.size(); ++s) {
        SuiteResult result{all[s].name, 0, samples, std::nullopt};
        for (int k = 0; k < samples; ++k) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                              static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(k)};
            Rng rng(seq);
            std::optional<std::string> failure;
            try {
                failure = all[s].check(rng);
            } catch (const std::exception& e) {
                failure = std::string("exception: ") + e.what();
            }
            if (!failure) {
                ++result.passed;
            } else if (!result.first_failure) {
                result.first_failure = "sample=" + std::to_string(k) + " seed=" + std::to_string(seed) +
                                       " " + *failure;
            }
        }
        report.suites.push_back(std::move(result));
    }
    report.discrepancies = discrepancies();
    return report;
}

std::vector<Discrepancy> discrepancies() {
    std::vector<Discrepancy> out;

    {
        const CorrelationVector c{1, 1, -1};
        const double printed = bd_eigenvalues_plus_c3_variant(c).phi_minus;
        const double corrected = bd_eigenvalues(c).phi_minus;
        const double numeric = qmat::hermitian_eigenvalues(bd_from_c(c).matrix()).minCoeff();
        out.push_back({"bell-spectrum-phi-sign",
                       "lambda_phi(+-) = (1 +- c1 +- c2 + c3)/4 gives lambda_phi_minus = " +
                           format_number(printed) + " at c = (1,1,-1), a pure Bell state",
                       "(1 +- c1 +- c2 - c3)/4 gives " + format_number(corrected) +
                           "; smallest eigenvalue of the matrix = " +
                           format_number(std::abs(numeric) < 1e-14 ? 0.0 : numeric)});
    }
    {
        const CorrelationVector c{1, 0.3, -0.3};
        const double min_reading = trace_min_bd_min_variant(c);
        const double max_reading = trace_min_bd(c).value;
        const double oracle = oracle_min(bd_from_c(c), Distance::trace).value;
        out.push_back({"trace-min-extremum",
                       "trace MIN of a Bell-diagonal state = min|c_i| gives " +
                           format_number(min_reading) + " at c = (1,0.3,-0.3)",
                       "trace-norm formula max|c_i| = " + format_number(max_reading) +
                           "; brute-force oracle = " + format_number(oracle)});
    }
    {
        SweepSpec spec;
        spec.initial_c = {1, 0.3, -0.3};
        spec.channel = ChannelKind::bit_phase_flip;
        spec.sweep = SweepParameter::p;
        spec.grid = {0.0, 0.5, 0.01};
        spec.measures = {Measure::concurrence};
        const auto records = run_sweep(spec);
        const EventReport ev = detect_events(spec, records, Measure::concurrence);
        const double at_042 = evaluate_point(spec, 0.42).values.at(Measure::concurrence);
        out.push_back({"bit-phase-flip-death-point",
                       "entanglement of c = (1,0.3,-0.3) under bit-phase flip dies at p = 0.42",
                       "sudden death at p = " +
                           (ev.esd_threshold ? format_number(*ev.esd_threshold) : std::string("none")) +
                           "; concurrence at p = 0.42 is " + format_number(at_042)});
    }
    return out;
}

void print(const Report& report, std::ostream& out) {
    out << "verify: samples=" << report.samples << " seed=" << report.seed
        << " oracle_grid=" << report.oracle_grid << "\n";
    std::size_t width = 0;
    for (const SuiteResult& s : report.suites) width = std::max(width, s.name.size());
    for (const SuiteResult& s : report.suites) {
        out << "suite " << s.name << std::string(width - s.name.size() + 2, ' ') << s.passed << "/"
            << s.total << (s.passed == s.total ? " pass" : " FAIL") << "\n";
        if (s.first_failure) out << "  first failure: " << *s.first_failure << "\n";
    }
    out << "discrepancies: " << report.discrepancies.size() << "\n";
    for (std::size_t i = 0; i < report.discrepancies.size(); ++i) {
        const Discrepancy& d = report.discrepancies[i];
        out << "  [" << i + 1 << "] " << d.id << "\n"
            << "      reference: " << d.reference << "\n"
            << "      computed:  " << d.computed << "\n";
    }
    int passed = 0;
    for (const SuiteResult& s : report.suites) passed += s.passed == s.total;
    out << "result: " << (report.all_passed() ? "PASS" : "FAIL") << " (" << passed << "/"
        << report.suites.size() << " suites)\n";
}

} // namespace qcorr::verify
