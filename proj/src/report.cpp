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
#include "qcorr/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>

namespace qcorr::report {

namespace {

std::vector<Measure> ordered(const std::vector<Measure>& requested) {
    std::vector<Measure> out;
    for (Measure m : all_measures) {
        if (std::find(requested.begin(), requested.end(), m) != requested.end()) out.push_back(m);
    }
    return out;
}

std::string list(const std::vector<double>& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += format_number(values[i]);
    }
    return s + "]";
}

} // namespace

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    if (res.ec != std::errc{}) return "nan";
    return std::string(buf, res.ptr);
}

std::string sweep_csv(const SweepSpec& spec, std::span<const SweepRecord> records) {
    const std::vector<Measure> columns = ordered(spec.measures);
    std::string out = "param,c1,c2,c3";
    for (Measure m : columns) {
        out += ",";
        out += to_string(m);
    }
    out += "\n";
    for (const SweepRecord& r : records) {
        out += format_number(r.param);
        for (int i = 0; i < 3; ++i) out += "," + format_number(r.c_t[i]);
        for (Measure m : columns) out += "," + format_number(r.values.at(m));
        out += "\n";
    }
    return out;
}

std::string events_summary(const std::map<Measure, EventReport>& events) {
    std::string out;
    for (const auto& [m, ev] : events) {
        out += "events ";
        out += to_string(m);
        out += ": esd=" + (ev.esd_threshold ? format_number(*ev.esd_threshold) : std::string("none"));
        out += " dark=" + list(ev.dark_points);
        out += " revivals=[";
        for (std::size_t i = 0; i < ev.revivals.size(); ++i) {
            if (i) out += ",";
            out += "(" + format_number(ev.revivals[i].first) + "," +
                   format_number(ev.revivals[i].second) + ")";
        }
        out += "] kinks=" + list(ev.kinks) + "\n";
    }
    return out;
}

nlohmann::json to_json(const EventReport& ev) {
    nlohmann::json j;
    j["esd_threshold"] = ev.esd_threshold ? nlohmann::json(*ev.esd_threshold) : nlohmann::json();
    j["dark_points"] = ev.dark_points;
    j["revivals"] = nlohmann::json::array();
    for (const auto& [dark, rebirth] : ev.revivals) {
        j["revivals"].push_back({{"dark", dark}, {"rebirth", rebirth}});
    }
    j["kinks"] = ev.kinks;
    return j;
}

nlohmann::json sweep_json(const SweepSpec& spec, std::span<const SweepRecord> records,
                          const std::map<Measure, EventReport>& events) {
    nlohmann::json j;
    j["channel"] = std::string(to_string(spec.channel));
    j["initial_c"] = {spec.initial_c.c1, spec.initial_c.c2, spec.initial_c.c3};
    j["sweep_parameter"] = spec.sweep == SweepParameter::p ? "p" : "gamma";
    j["fixed"] = {{"p", spec.fixed.p}, {"gamma", spec.fixed.gamma}};
    j["grid"] = {{"start", spec.grid.start}, {"stop", spec.grid.stop}, {"step", spec.grid.step}};
    j["path"] = spec.path == EvolutionPath::closed_form ? "closed" : "kraus";
    j["trace_reading"] = spec.trace_reading == TraceReading::max ? "max" : "min";

    const std::vector<Measure> columns = ordered(spec.measures);
    j["records"] = nlohmann::json::array();
    for (const SweepRecord& r : records) {
        nlohmann::json row;
        row["param"] = r.param;
        row["c"] = {r.c_t.c1, r.c_t.c2, r.c_t.c3};
        nlohmann::json values = nlohmann::json::object();
        for (Measure m : columns) values[std::string(to_string(m))] = r.values.at(m);
        row["values"] = values;
        j["records"].push_back(row);
    }
    j["events"] = nlohmann::json::object();
    for (const auto& [m, ev] : events) j["events"][std::string(to_string(m))] = to_json(ev);
    return j;
}

} // namespace qcorr::report
