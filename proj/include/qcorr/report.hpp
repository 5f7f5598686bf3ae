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
#include <span>
#include <string>

#include "json.hpp"
#include "qcorr/dynamics.hpp"

namespace qcorr::report {

/// Locale-independent, 12 significant digits, shortest form; -0 prints as 0.
std::string format_number(double value);

/// Header "param,c1,c2,c3,<measures in fixed order>" and one LF-terminated
/// row per record.
std::string sweep_csv(const SweepSpec& spec, std::span<const SweepRecord> records);

/// One line per measure, e.g.
/// "events concurrence: esd=0.316987298108 dark=[] revivals=[] kinks=[]".
std::string events_summary(const std::map<Measure, EventReport>& events);

nlohmann::json to_json(const EventReport& events);
nlohmann::json sweep_json(const SweepSpec& spec, std::span<const SweepRecord> records,
                          const std::map<Measure, EventReport>& events);

} // namespace qcorr::report
