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
#include "qcorr/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace qcorr {

namespace {

constexpr double bisection_width = 1e-11;

double measure_closed(Measure m, const CorrelationVector& c, TraceReading reading) {
    switch (m) {
    case Measure::concurrence: return concurrence_bd(c);
    case Measure::hs_min: return hs_min_bd(c).value;
    case Measure::trace_min:
        return reading == TraceReading::max ? trace_min_bd(c).value : trace_min_bd_min_variant(c);
    case Measure::re_min: return re_min_bd(c).value;
    }
    return 0.0;
}

double measure_general(Measure m, const TwoQubitState& rho, const CorrelationVector& c_t,
                       const SweepSpec& spec) {
    switch (m) {
    case Measure::concurrence: return concurrence(rho);
    case Measure::hs_min: return hs_min(rho).value;
    case Measure::trace_min:
        return spec.trace_reading == TraceReading::max ? trace_min(rho).value
                                                       : trace_min_bd_min_variant(c_t);
    case Measure::re_min: return re_min(rho, spec.oracle_grid).value;
    }
    return 0.0;
}

TwoQubitState evolved_state(const SweepSpec& spec, double param) {
    return apply_product(make_channel(spec.channel, params_at(spec, param)),
                         bd_from_c(spec.initial_c));
}

CorrelationVector evolved_c(const SweepSpec& spec, double param) {
    if (spec.path == EvolutionPath::closed_form) {
        return coefficient_map(spec.channel, params_at(spec, param), spec.initial_c);
    }
    return c_from_state(evolved_state(spec, param));
}

// Signed quantity whose positivity means "alive"; exact zero crossing for
// concurrence, threshold crossing for the other measures.
double liveness(const SweepSpec& spec, Measure m, double param) {
    if (m == Measure::concurrence) {
        if (spec.path == EvolutionPath::closed_form) {
            return concurrence_bd_margin(evolved_c(spec, param));
        }
        return concurrence_margin(evolved_state(spec, param));
    }
    SweepSpec single = spec;
    single.measures = {m};
    return evaluate_point(single, param).values.at(m) - dead_threshold;
}

// Shrinks [lo, hi] around the point where pred changes from pred(lo).
double bisect(double lo, double hi, const std::function<bool(double)>& pred) {
    const bool left = pred(lo);
    while (hi - lo > bisection_width) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid) == left) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    if (v.size() % 2 == 1) return *mid;
    const double upper = *mid;
    const double lower = *std::max_element(v.begin(), mid);
    return 0.5 * (lower + upper);
}

} // namespace

std::string_view to_string(Measure m) {
    switch (m) {
    case Measure::concurrence: return "concurrence";
    case Measure::hs_min: return "hs_min";
    case Measure::trace_min: return "trace_min";
    case Measure::re_min: return "re_min";
    }
    return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
    if (name == "concurrence") return Measure::concurrence;
    if (name == "hs-min" || name == "hs_min") return Measure::hs_min;
    if (name == "trace-min" || name == "trace_min") return Measure::trace_min;
    if (name == "re-min" || name == "re_min") return Measure::re_min;
    return std::nullopt;
}

std::vector<double> Grid::points() const {
    const double span = stop - start;
    const auto count = static_cast<long>(std::floor(span / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0L)));
    for (long k = 0; k < count; ++k) out.push_back(std::min(stop, start + static_cast<double>(k) * step));
    return out;
}

SweepParameter default_sweep_parameter(ChannelKind kind) {
    return kind == ChannelKind::bit_phase_flip ? SweepParameter::p : SweepParameter::gamma;
}

void validate(const SweepSpec& spec) {
    const Grid& g = spec.grid;
    if (!std::isfinite(g.start) || !std::isfinite(g.stop) || !std::isfinite(g.step)) {
        throw InvalidSweep("grid values must be finite");
    }
    if (!(g.step > 0)) throw InvalidSweep("grid step must be positive");
    if (!(g.start >= 0 && g.start < g.stop && g.stop <= 1)) {
        throw InvalidSweep("grid must satisfy 0 <= start < stop <= 1");
    }
    if (g.points().size() < 2) throw InvalidSweep("grid must contain at least 2 points");
    if (spec.measures.empty()) throw InvalidSweep("no measures requested");
    if (spec.channel == ChannelKind::depolarizing && spec.sweep == SweepParameter::p) {
        throw InvalidSweep("depolarizing channel has no parameter p to sweep");
    }
    if (spec.channel == ChannelKind::bit_phase_flip && spec.sweep == SweepParameter::gamma) {
        throw InvalidSweep("bit-phase-flip channel has no parameter gamma to sweep");
    }
    if (spec.oracle_grid < 2) throw InvalidSweep("oracle grid must be at least 2");
    require_physical(spec.initial_c);
    // Surfaces out-of-range fixed parameters before any evaluation.
    make_channel(spec.channel, params_at(spec, g.start));
}

ChannelParams params_at(const SweepSpec& spec, double value) {
    ChannelParams params = spec.fixed;
    if (spec.sweep == SweepParameter::p) {
        params.p = value;
    } else {
        params.gamma = value;
    }
    return params;
}

SweepRecord evaluate_point(const SweepSpec& spec, double param) {
    SweepRecord record;
    record.param = param;
    if (spec.path == EvolutionPath::closed_form) {
        record.c_t = coefficient_map(spec.channel, params_at(spec, param), spec.initial_c);
        for (Measure m : spec.measures) {
            record.values[m] = measure_closed(m, record.c_t, spec.trace_reading);
        }
        return record;
    }
    const TwoQubitState rho = evolved_state(spec, param);
    record.c_t = c_from_state(rho);
    for (Measure m : spec.measures) record.values[m] = measure_general(m, rho, record.c_t, spec);
    return record;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
    validate(spec);
    std::vector<SweepRecord> records;
    for (double param : spec.grid.points()) records.push_back(evaluate_point(spec, param));
    return records;
}

int extremal_index(Measure measure, const CorrelationVector& c) {
    if (measure == Measure::concurrence) {
        const auto w = bd_eigenvalues(c).as_array();
        return static_cast<int>(std::max_element(w.begin(), w.end()) - w.begin());
    }
    int best = 0;
    for (int i = 1; i < 3; ++i) {
        const bool wins = measure == Measure::trace_min ? std::abs(c[i]) > std::abs(c[best])
                                                        : std::abs(c[i]) < std::abs(c[best]);
        if (wins) best = i;
    }
    return best;
}

EventReport detect_events(const SweepSpec& spec, std::span<const SweepRecord> records,
                          Measure measure) {
    EventReport report;
    const std::size_t n = records.size();
    if (n < 2) return report;

    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto it = records[i].values.find(measure);
        if (it == records[i].values.end()) {
            throw InvalidSweep("detect_events: measure missing from records");
        }
        v[i] = it->second;
    }
    auto dead = [&](std::size_t i) { return v[i] <= dead_threshold; };

    // Sudden death.
    std::size_t tail = n;
    while (tail > 0 && dead(tail - 1)) --tail;
    if (tail > 0 && tail < n) {
        const double lo = records[tail - 1].param;
        const double hi = records[tail].param;
        report.esd_threshold =
            bisect(lo, hi, [&](double x) { return liveness(spec, measure, x) > 0; });
    }

    // Zero runs: dark points and revivals.
    for (std::size_t a = 0; a < n;) {
        if (!dead(a)) {
            ++a;
            continue;
        }
        std::size_t b = a;
        while (b + 1 < n && dead(b + 1)) ++b;

        const double lowest = *std::min_element(v.begin() + static_cast<std::ptrdiff_t>(a),
                                                v.begin() + static_cast<std::ptrdiff_t>(b) + 1);
        std::vector<std::size_t> at_lowest;
        for (std::size_t i = a; i <= b; ++i) {
            if (v[i] == lowest) at_lowest.push_back(i);
        }
        const double location = records[at_lowest[at_lowest.size() / 2]].param;

        if (a > 0 && b + 1 < n) report.dark_points.push_back(location);
        for (std::size_t j = b + 1; j < n; ++j) {
            if (v[j] > revived_threshold) {
                report.revivals.emplace_back(location, records[j].param);
                break;
            }
        }
        a = b + 1;
    }

    // Kinks.
    if (n >= 3) {
        std::vector<double> second(n, 0.0);
        std::vector<double> interior;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            second[i] = std::abs(v[i + 1] - 2 * v[i] + v[i - 1]);
            interior.push_back(second[i]);
        }
        const double bar = 10.0 * median(interior);
        for (std::size_t i = 1; i < n; ++i) {
            const int before = extremal_index(measure, records[i - 1].c_t);
            const int after = extremal_index(measure, records[i].c_t);
            if (before == after) continue;
            double local = 0.0;
            if (i - 1 >= 1) local = std::max(local, second[i - 1]);
            if (i + 1 < n) local = std::max(local, second[i]);
            if (!(local > bar)) continue;
            report.kinks.push_back(bisect(records[i - 1].param, records[i].param, [&](double x) {
                return extremal_index(measure, evolved_c(spec, x)) == before;
            }));
        }
    }
    return report;
}

} // namespace qcorr
