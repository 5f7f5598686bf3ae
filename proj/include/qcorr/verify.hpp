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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qcorr::verify {

struct SuiteResult {
    std::string name;
    int passed = 0;
    int total = 0;
    /// Reproducible description of the first failing sample.
    std::optional<std::string> first_failure;
};

/// A place where a printed reference formula or value disagrees with what
/// the library computes.
struct Discrepancy {
    std::string id;
    std::string reference;
    std::string computed;
};

struct Report {
    int samples = 0;
    std::uint64_t seed = 0;
    int oracle_grid = 60;
    std::vector<SuiteResult> suites;
    std::vector<Discrepancy> discrepancies;

    bool all_passed() const;
};

/// Sample k of every suite draws from its own generator seeded with
/// (seed, suite, k), so any failure can be replayed in isolation.
Report run_verify(int samples, std::uint64_t seed, int oracle_grid = 60);

/// The reference-formula disagreements, each with computed counter-values.
std::vector<Discrepancy> discrepancies();

/// Deterministic text rendering; no timings.
void print(const Report& report, std::ostream& out);

} // namespace qcorr::verify
