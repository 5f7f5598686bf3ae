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
#include "qcorr/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qcorr/channels.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/report.hpp"
#include "qcorr/states.hpp"
#include "qcorr/verify.hpp"

namespace qcorr::cli {

namespace {

using report::format_number;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

double parse_double(std::string_view text, std::string_view what) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size() ||
        !std::isfinite(value)) {
        throw InputError(std::string(what) + ": cannot parse '" + std::string(text) + "' as a number");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = text.find(sep, begin);
        parts.push_back(text.substr(begin, end - begin));
        if (end == std::string_view::npos) break;
        begin = end + 1;
    }
    return parts;
}

CorrelationVector parse_c(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) {
        throw InputError("--c: expected three comma-separated numbers, got '" + text + "'");
    }
    return {parse_double(parts[0], "--c"), parse_double(parts[1], "--c"), parse_double(parts[2], "--c")};
}

Grid parse_grid(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw InputError("--grid: expected start:stop:step, got '" + text + "'");
    return {parse_double(parts[0], "--grid"), parse_double(parts[1], "--grid"),
            parse_double(parts[2], "--grid")};
}

std::vector<Measure> parse_measures(const std::string& text) {
    std::vector<Measure> out;
    for (std::string_view name : split(text, ',')) {
        const auto m = parse_measure(name);
        if (!m) throw InputError("--measures: unknown measure '" + std::string(name) + "'");
        if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
    }
    return out;
}

std::string show_c(const CorrelationVector& c) {
    return "(" + format_number(c.c1) + ", " + format_number(c.c2) + ", " + format_number(c.c3) + ")";
}

std::string show_complex(const std::complex<double>& z) {
    const double re = std::abs(z.real()) < 1e-15 ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < 1e-15 ? 0.0 : z.imag();
    if (im == 0.0) return format_number(re);
    std::string s = re == 0.0 ? "" : format_number(re);
    s += (im < 0 ? (re == 0.0 ? "-" : " - ") : (re == 0.0 ? "" : " + "));
    return s + format_number(std::abs(im)) + "i";
}

template <typename M>
void print_matrix(std::ostream& out, const M& m) {
    std::vector<std::string> cells;
    std::size_t width = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            cells.push_back(show_complex(m(r, c)));
            width = std::max(width, cells.back().size());
        }
    }
    std::size_t k = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out << " ";
        for (Eigen::Index c = 0; c < m.cols(); ++c) out << " " << std::setw(int(width)) << cells[k++];
        out << "\n";
    }
}

void print_spectrum(std::ostream& out, const BellSpectrum& s) {
    out << "bell spectrum: psi+ = " << format_number(s.psi_plus)
        << ", psi- = " << format_number(s.psi_minus) << ", phi+ = " << format_number(s.phi_plus)
        << ", phi- = " << format_number(s.phi_minus) << "\n";
}

int cmd_state(const std::string& c_text, std::ostream& out) {
    const CorrelationVector c = parse_c(c_text);
    const BellSpectrum spectrum = bd_eigenvalues(c);
    out << "correlation vector: " << show_c(c) << "\n";
    print_spectrum(out, spectrum);
    if (!is_physical(c)) {
        out << "verdict: unphysical\n";
        require_physical(c);
    }
    const TwoQubitState rho = bd_from_c(c);
    out << "density matrix:\n";
    print_matrix(out, rho.matrix());
    const bool pure = spectrum.max() >= 1.0 - physicality_tolerance;
    out << "verdict: " << (pure ? "physical (pure)" : "physical") << "\n";
    out << "marginal a:\n";
    print_matrix(out, marginal(rho, Subsystem::a));
    out << "marginal b:\n";
    print_matrix(out, marginal(rho, Subsystem::b));
    return success;
}

int cmd_measures(const std::string& c_text, int oracle_grid, const std::string& trace_reading,
                 std::ostream& out) {
    const CorrelationVector c = parse_c(c_text);
    if (oracle_grid < 2) throw InputError("--oracle-grid: must be at least 2");
    out << "correlation vector: " << show_c(c) << "\n";
    require_physical(c);
    const TwoQubitState rho = bd_from_c(c);

    struct Row {
        std::string name;
        double closed;
        double oracle;
    };
    std::vector<Row> rows;
    rows.push_back({"concurrence", concurrence_bd(c), concurrence(rho)});
    rows.push_back({"hs_min", hs_min_bd(c).value, oracle_min(rho, Distance::hs, oracle_grid).value});
    const double trace_oracle = oracle_min(rho, Distance::trace, oracle_grid).value;
    if (trace_reading == "min") {
        rows.push_back({"trace_min (min reading)", trace_min_bd_min_variant(c), trace_oracle});
    } else {
        rows.push_back({"trace_min", trace_min_bd(c).value, trace_oracle});
    }
    rows.push_back({"re_min", re_min_bd(c).value, oracle_min(rho, Distance::re, oracle_grid).value});

    std::size_t width = std::string("measure").size();
    for (const Row& r : rows) width = std::max(width, r.name.size());
    const auto cell = [](const std::string& s) { return s + std::string(s.size() < 20 ? 20 - s.size() : 1, ' '); };
    out << std::left << std::setw(int(width + 2)) << "measure" << cell("closed_form") << cell("oracle")
        << "gap\n";
    double max_gap = 0;
    for (const Row& r : rows) {
        const double gap = std::abs(r.closed - r.oracle);
        max_gap = std::max(max_gap, gap);
        out << std::left << std::setw(int(width + 2)) << r.name << cell(format_number(r.closed))
            << cell(format_number(r.oracle)) << format_number(gap) << "\n";
    }
    out << "max gap: " << format_number(max_gap) << (max_gap <= 1e-4 ? " (within 1e-4)" : " (exceeds 1e-4)")
        << "\n";
    return success;
}

struct SweepOptions {
    std::string channel;
    std::string c;
    std::optional<double> p;
    std::optional<double> gamma_fixed;
    std::string grid = "0:1:0.01";
    std::string measures = "concurrence,hs_min,trace_min,re_min";
    std::string format = "csv";
    std::string out_path;
    std::string path = "closed";
    std::string sweep;
    std::string trace_reading = "max";
    int oracle_grid = 60;
};

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
    SweepSpec spec;
    const auto kind = parse_channel_kind(o.channel);
    if (!kind) throw InputError("--channel: unknown channel '" + o.channel + "'");
    spec.channel = *kind;
    spec.initial_c = parse_c(o.c);
    spec.grid = parse_grid(o.grid);
    spec.measures = parse_measures(o.measures);
    spec.path = o.path == "kraus" ? EvolutionPath::kraus : EvolutionPath::closed_form;
    spec.trace_reading = o.trace_reading == "min" ? TraceReading::min : TraceReading::max;
    spec.oracle_grid = o.oracle_grid;
    spec.sweep = o.sweep.empty() ? default_sweep_parameter(spec.channel)
                                 : (o.sweep == "p" ? SweepParameter::p : SweepParameter::gamma);
    if (spec.channel == ChannelKind::bit_phase_flip && spec.sweep != SweepParameter::p) {
        throw InputError("--sweep: bit-phase-flip has no gamma parameter");
    }
    if (spec.channel == ChannelKind::depolarizing && spec.sweep != SweepParameter::gamma) {
        throw InputError("--sweep: depolarizing has no p parameter");
    }
    if (o.p) {
        if (spec.sweep == SweepParameter::p) throw InputError("--p: p is the swept parameter");
        if (spec.channel != ChannelKind::gad) throw InputError("--p: only gad takes a fixed p");
        spec.fixed.p = *o.p;
    }
    if (o.gamma_fixed) {
        if (spec.sweep == SweepParameter::gamma) {
            throw InputError("--gamma-fixed: gamma is the swept parameter");
        }
        if (spec.channel != ChannelKind::gad) throw InputError("--gamma-fixed: only gad takes a fixed gamma");
        spec.fixed.gamma = *o.gamma_fixed;
    }
    validate(spec);

    const std::vector<SweepRecord> records = run_sweep(spec);
    std::map<Measure, EventReport> events;
    for (Measure m : all_measures) {
        if (std::find(spec.measures.begin(), spec.measures.end(), m) != spec.measures.end()) {
            events[m] = detect_events(spec, records, m);
        }
    }

    std::string body;
    if (o.format == "json") {
        body = report::sweep_json(spec, records, events).dump(2) + "\n";
    } else {
        body = report::sweep_csv(spec, records);
    }
    if (o.out_path.empty()) {
        out << body;
    } else {
        std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw InputError("--out: cannot open '" + o.out_path + "' for writing");
        file << body;
        if (!file.flush()) throw InputError("--out: write to '" + o.out_path + "' failed");
    }
    err << report::events_summary(events);
    return success;
}

int cmd_verify(int samples, std::uint64_t seed, int oracle_grid, std::ostream& out, std::ostream& err) {
    if (samples < 1) throw InputError("--samples: must be at least 1");
    if (oracle_grid < 2) throw InputError("--oracle-grid: must be at least 2");
    const verify::Report report = verify::run_verify(samples, seed, oracle_grid);
    verify::print(report, out);
    if (report.all_passed()) return success;
    for (const verify::SuiteResult& s : report.suites) {
        if (s.first_failure) {
            err << "error: suite " << s.name << " failed: " << one_line(*s.first_failure) << "\n";
            break;
        }
    }
    return verification_failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement and measurement-induced nonlocality of two-qubit states", "qcorr"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qcorr 1.0.0");

    std::string c_text;
    int oracle_grid = 60;
    std::string trace_reading = "max";

    CLI::App* state = app.add_subcommand("state", "Density matrix, Bell spectrum and marginals");
    state->add_option("--c", c_text, "Correlation vector c1,c2,c3")->required();

    CLI::App* measures = app.add_subcommand("measures", "Closed-form measures against brute-force oracles");
    measures->add_option("--c", c_text, "Correlation vector c1,c2,c3")->required();
    measures->add_option("--oracle-grid", oracle_grid, "Oracle sphere grid size")->capture_default_str();
    measures->add_option("--trace-reading", trace_reading, "Bell-diagonal trace MIN: max|c_i| or min|c_i|")
        ->check(CLI::IsMember({"max", "min"}))
        ->capture_default_str();

    SweepOptions so;
    CLI::App* sweep = app.add_subcommand("sweep", "Evolve under a noise channel and tabulate measures");
    sweep->add_option("--channel", so.channel, "bit-phase-flip, depolarizing or gad")->required();
    sweep->add_option("--c", so.c, "Initial correlation vector c1,c2,c3")->required();
    sweep->add_option("--p", so.p, "Fixed p (gad)");
    sweep->add_option("--gamma-fixed", so.gamma_fixed, "Fixed gamma (gad, when sweeping p)");
    sweep->add_option("--grid", so.grid, "start:stop:step")->capture_default_str();
    sweep->add_option("--measures", so.measures, "Comma-separated measures")->capture_default_str();
    sweep->add_option("--format", so.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep->add_option("--out", so.out_path, "Write the table to this file instead of stdout");
    sweep->add_option("--path", so.path, "closed (coefficient map) or kraus (full evolution)")
        ->check(CLI::IsMember({"closed", "kraus"}))
        ->capture_default_str();
    sweep->add_option("--sweep", so.sweep, "Swept parameter: p or gamma")->check(CLI::IsMember({"p", "gamma"}));
    sweep->add_option("--trace-reading", so.trace_reading, "Bell-diagonal trace MIN: max|c_i| or min|c_i|")
        ->check(CLI::IsMember({"max", "min"}))
        ->capture_default_str();
    sweep->add_option("--oracle-grid", so.oracle_grid, "Oracle sphere grid size (kraus path)")
        ->capture_default_str();

    int samples = 200;
    std::uint64_t seed = 7;
    CLI::App* verify = app.add_subcommand("verify", "Seeded property suite and reference discrepancies");
    verify->add_option("--samples", samples, "Samples per suite")->capture_default_str();
    verify->add_option("--seed", seed, "Generator seed")->capture_default_str();
    verify->add_option("--oracle-grid", oracle_grid, "Oracle sphere grid size")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return input_error;
    }

    try {
        if (*state) return cmd_state(c_text, out);
        if (*measures) return cmd_measures(c_text, oracle_grid, trace_reading, out);
        if (*sweep) return cmd_sweep(so, out, err);
        if (*verify) return cmd_verify(samples, seed, oracle_grid, out, err);
        err << "error: no subcommand\n";
        return input_error;
    } catch (const MapUnavailable& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return unsupported;
    } catch (const Unphysical& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return input_error;
    } catch (const InputError& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return input_error;
    } catch (const Error& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return input_error;
    } catch (const std::exception& e) {
        err << "error: internal: " << one_line(e.what()) << "\n";
        return verification_failure;
    }
}

} // namespace qcorr::cli
