// Copyright 2026 The qpa-certify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpa/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

namespace qpa {

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

State parse_state_literal(std::string_view text) {
    const std::string s(text);
    double v[4];
    const char *p = s.c_str();
    for (int i = 0; i < 4; ++i) {
        while (*p == ' ') {
            ++p;
        }
        char *end = nullptr;
        errno = 0;
        v[i] = std::strtod(p, &end);
        if (end == p || errno == ERANGE) {
            throw RejectedState("cannot parse state literal '" + s + "'");
        }
        p = end;
        while (*p == ' ') {
            ++p;
        }
        if (i < 3) {
            if (*p != ',') {
                throw RejectedState("state literal needs four comma-separated values: '" + s + "'");
            }
            ++p;
        }
    }
    if (*p != '\0') {
        throw RejectedState("trailing characters in state literal '" + s + "'");
    }
    return make_state(v[0], v[1], v[2], v[3]);
}

std::string format_state_literal(const State &state) {
    const auto &v = state.coefficients();
    return format_double(v[0]) + "," + format_double(v[1]) + "," + format_double(v[2]) + "," + format_double(v[3]);
}

void write_trajectory_csv(std::ostream &out, const Trajectory<double> &trajectory) {
    out << kTrajectoryCsvHeader << '\n';
    for (std::size_t k = 0; k < trajectory.states.size(); ++k) {
        const auto &s = trajectory.states[k];
        out << k << ',' << format_state_literal(s) << ',';
        if (k > 0) {
            out << format_double(trajectory.p_values[k - 1]);
        }
        out << ',' << format_double(trajectory.f_values[k]) << ',' << format_double(fidelity(s, BellIndex::PhiPlus))
            << '\n';
    }
}

nlohmann::json trajectory_json(const Trajectory<double> &trajectory) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < trajectory.states.size(); ++k) {
        const auto &s = trajectory.states[k];
        rows.push_back({{"iter", k},
                        {"a", s.a()},
                        {"b", s.b()},
                        {"c", s.c()},
                        {"d", s.d()},
                        {"p", k > 0 ? nlohmann::json(trajectory.p_values[k - 1]) : nlohmann::json(nullptr)},
                        {"f", trajectory.f_values[k]},
                        {"fidelity_phi_plus", fidelity(s, BellIndex::PhiPlus)}});
    }
    return {{"iterations", trajectory.iterations},
            {"terminated", std::string(to_string(trajectory.termination))},
            {"rows", std::move(rows)}};
}

namespace {

nlohmann::json cell_json(const SweepCell<double> &cell) {
    const auto &s = cell.initial;
    return {{"a", s.a()},
            {"b", s.b()},
            {"c", s.c()},
            {"d", s.d()},
            {"region_class", std::string(to_string(cell.region))},
            {"attractor", std::string(to_string(cell.report.attractor))},
            {"iterations", cell.report.iterations},
            {"final_fidelity", cell.report.final_fidelity}};
}

}  // namespace

void write_sweep_csv(std::ostream &out, const SweepReport<double> &report) {
    out << kSweepCsvHeader << '\n';
    for (const auto &cell : report.cells) {
        out << format_state_literal(cell.initial) << ',' << to_string(cell.region) << ','
            << to_string(cell.report.attractor) << ',' << cell.report.iterations << ','
            << format_double(cell.report.final_fidelity) << '\n';
    }
}

nlohmann::json sweep_summary_json(const SweepReport<double> &report) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto &[key, n] : report.counts) {
        counts.push_back({{"region_class", std::string(to_string(key.first))},
                          {"attractor", std::string(to_string(key.second))},
                          {"count", n}});
    }
    nlohmann::json violations = nlohmann::json::array();
    for (const auto i : report.violations) {
        violations.push_back(cell_json(report.cells[i]));
    }
    return {{"grid_step", report.grid_step},
            {"epsilon", report.options.epsilon},
            {"max_iters", report.options.max_iters},
            {"cells", report.cells.size()},
            {"counts", std::move(counts)},
            {"violations", std::move(violations)}};
}

nlohmann::json sweep_json(const SweepReport<double> &report) {
    nlohmann::json j = sweep_summary_json(report);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &cell : report.cells) {
        rows.push_back(cell_json(cell));
    }
    j["rows"] = std::move(rows);
    return j;
}

nlohmann::json roots_json(const CriticalPointResult<double> &result, double reference, bool matches) {
    return {{"y0", result.y0},
            {"x0", result.x0},
            {"residual", result.residual},
            {"g_min", result.g_min},
            {"bracket", {result.bracket.first, result.bracket.second}},
            {"derivative_discriminant", result.derivative_discriminant},
            {"unique", result.unique},
            {"iterations", result.iterations},
            {"reference_y0", reference},
            {"matches_reference", matches}};
}

nlohmann::json verification_json(const VerificationReport &report) {
    nlohmann::json props = nlohmann::json::array();
    for (const auto &p : report.properties) {
        props.push_back({{"name", p.name},
                         {"passed", p.passed()},
                         {"samples", p.samples},
                         {"violations", p.violations},
                         {"worst_margin", p.worst_margin},
                         {"margin", p.margin_meaning}});
    }
    return {{"seed", report.seed},
            {"samples", report.samples},
            {"passed", report.passed()},
            {"properties", std::move(props)}};
}

}  // namespace qpa
