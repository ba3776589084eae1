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

#ifndef QPA_IO_HPP
#define QPA_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qpa/dynamics.hpp"
#include "qpa/lyapunov.hpp"
#include "qpa/state.hpp"
#include "qpa/sweep.hpp"
#include "qpa/verify.hpp"

namespace qpa {

enum class OutputFormat { Csv, Json };

/// 17 significant digits; parses back to the same double.
std::string format_double(double value);

/// "a,b,c,d" as decimals. Throws RejectedState on malformed text or an
/// invalid state.
State parse_state_literal(std::string_view text);
std::string format_state_literal(const State &state);

inline constexpr std::string_view kTrajectoryCsvHeader = "iter,a,b,c,d,p,f,fidelity_phi_plus";
inline constexpr std::string_view kSweepCsvHeader = "a,b,c,d,region_class,attractor,iterations,final_fidelity";

/// One row per recorded state; p is empty on row 0.
void write_trajectory_csv(std::ostream &out, const Trajectory<double> &trajectory);
nlohmann::json trajectory_json(const Trajectory<double> &trajectory);

void write_sweep_csv(std::ostream &out, const SweepReport<double> &report);
nlohmann::json sweep_summary_json(const SweepReport<double> &report);
nlohmann::json sweep_json(const SweepReport<double> &report);

nlohmann::json roots_json(const CriticalPointResult<double> &result, double reference, bool matches);
nlohmann::json verification_json(const VerificationReport &report);

}  // namespace qpa

#endif  // QPA_IO_HPP
