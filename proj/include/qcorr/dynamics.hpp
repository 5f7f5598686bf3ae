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

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/measures.hpp"

namespace qcorr {

/// Declaration order is the fixed output column order.
enum class Measure { concurrence, hs_min, trace_min, re_min };

inline constexpr Measure all_measures[] = {Measure::concurrence, Measure::hs_min,
                                           Measure::trace_min, Measure::re_min};

std::string_view to_string(Measure m);
/// Accepts "concurrence", "hs-min"/"hs_min", "trace-min"/"trace_min", "re-min"/"re_min".
std::optional<Measure> parse_measure(std::string_view name);

enum class SweepParameter { p, gamma };
enum class EvolutionPath { closed_form, kraus };

/// Which value trace_min reports for Bell-diagonal states: the largest
/// |c_i| (the trace-norm MIN) or the smallest.
enum class TraceReading { max, min };

struct Grid {
    double start = 0.0;
    double stop = 1.0;
    double step = 0.01;

    /// start + k * step for k = 0 .. floor((stop - start) / step), inclusive of
    /// stop up to rounding.
    std::vector<double> points() const;
};

struct SweepSpec {
    CorrelationVector initial_c;
    ChannelKind channel = ChannelKind::depolarizing;
    /// Values of the parameters that are not swept.
    ChannelParams fixed;
    SweepParameter sweep = SweepParameter::gamma;
    Grid grid;
    std::vector<Measure> measures{std::begin(all_measures), std::end(all_measures)};
    EvolutionPath path = EvolutionPath::closed_form;
    TraceReading trace_reading = TraceReading::max;
    /// Grid for the relative-entropy oracle on the Kraus path, when needed.
    int oracle_grid = 60;
};

/// The natural swept parameter: p for bit-phase flip, gamma otherwise.
SweepParameter default_sweep_parameter(ChannelKind kind);

/// Throws InvalidSweep or Unphysical.
void validate(const SweepSpec& spec);

struct SweepRecord {
    double param = 0;
    CorrelationVector c_t;
    std::map<Measure, double> values;
};

/// Channel parameters at one value of the swept parameter.
ChannelParams params_at(const SweepSpec& spec, double value);

/// One record at an arbitrary parameter value (not necessarily on the grid).
SweepRecord evaluate_point(const SweepSpec& spec, double param);

/// One record per grid point, ascending.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

struct EventReport {
    std::optional<double> esd_threshold;
    std::vector<double> dark_points;
    /// (dark point, first later parameter where the measure exceeds 1e-6).
    std::vector<std::pair<double, double>> revivals;
    std::vector<double> kinks;
};

inline constexpr double dead_threshold = 1e-9;
inline constexpr double revived_threshold = 1e-6;

/**
 * Qualitative features of one measure along a sweep.
 *
 * - Sudden death: the first grid point from which the measure stays at or
 *   below 1e-9 to the end of the grid, refined by bisection (for concurrence
 *   on the signed margin) to 1e-8 or better.
 * - Dark point: a run of zero values with live values on both sides; located
 *   at the run's minimum.
 * - Revival: a zero run followed later by a value above 1e-6.
 * - Kink: the extremal |c_i| index feeding the measure's closed form switches
 *   between neighbouring grid points and the local second difference exceeds
 *   ten times its median over the grid; refined by bisection on the switch.
 */
EventReport detect_events(const SweepSpec& spec, std::span<const SweepRecord> records,
                          Measure measure);

/// Index of the coefficient (or Bell weight, for concurrence) that selects the
/// branch of the measure's closed form. Lowest index wins ties.
int extremal_index(Measure measure, const CorrelationVector& c);

} // namespace qcorr
