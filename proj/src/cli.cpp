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

#include "qpa/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>

#include "qpa/dynamics.hpp"
#include "qpa/io.hpp"
#include "qpa/lyapunov.hpp"
#include "qpa/sweep.hpp"
#include "qpa/verify.hpp"

namespace qpa {
namespace {

constexpr double kReferenceRoot = 0.205122;
constexpr double kReferenceRootTolerance = 1e-6;

struct CommonFlags {
    std::string format = "csv";
    std::string out_path;
    double epsilon = 0.0;
    std::size_t max_iters = 10000;
};

void add_output_flags(CLI::App *cmd, CommonFlags &flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", flags.out_path, "Output file (default: standard output)");
}

void add_iteration_flags(CLI::App *cmd, CommonFlags &flags) {
    cmd->add_option("--eps", flags.epsilon, "Convergence threshold on 1 - max component")->capture_default_str();
    cmd->add_option("--max-iters", flags.max_iters, "Iteration cap")->capture_default_str();
}

/// Runs `write` against --out or the given default stream.
int with_output(const std::string &path, std::ostream &fallback, std::ostream &err,
                const std::function<int(std::ostream &)> &write) {
    if (path.empty()) {
        return write(fallback);
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open " << path << " for writing\n";
        return kExitBadInput;
    }
    const int code = write(file);
    file.flush();
    if (!file) {
        err << "error: failed writing " << path << "\n";
        return kExitBadInput;
    }
    return code;
}

std::optional<IterationOptions> iteration_options(const CommonFlags &flags, bool record_full, std::ostream &err) {
    IterationOptions opts;
    opts.epsilon = flags.epsilon;
    opts.max_iters = flags.max_iters;
    opts.record_full = record_full;
    try {
        opts.validate();
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return std::nullopt;
    }
    return opts;
}

int cmd_trajectory(const std::string &literal, const CommonFlags &flags, std::ostream &out, std::ostream &err) {
    State initial = make_state(1.0, 0.0, 0.0, 0.0);
    try {
        initial = parse_state_literal(literal);
    } catch (const RejectedState &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    const auto opts = iteration_options(flags, true, err);
    if (!opts) {
        return kExitBadInput;
    }
    const auto traj = iterate(initial, *opts);
    return with_output(flags.out_path, out, err, [&](std::ostream &os) {
        if (flags.format == "json") {
            os << trajectory_json(traj).dump(2) << '\n';
        } else {
            write_trajectory_csv(os, traj);
        }
        return traj.termination == Termination::Converged ? kExitOk : kExitNotConverged;
    });
}

int cmd_sweep(double step, const CommonFlags &flags, const std::string &summary_path, unsigned workers,
              std::ostream &out, std::ostream &err) {
    try {
        grid_divisions(step);
    } catch (const RejectedStep &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    const auto opts = iteration_options(flags, false, err);
    if (!opts) {
        return kExitBadInput;
    }
    const auto report = run_sweep<double>(step, *opts, workers);
    const int verdict = report.violations.empty() ? kExitOk : kExitCheckFailed;
    if (flags.format == "json") {
        return with_output(flags.out_path, out, err, [&](std::ostream &os) {
            os << sweep_json(report).dump(2) << '\n';
            return verdict;
        });
    }
    const int code = with_output(flags.out_path, out, err, [&](std::ostream &os) {
        write_sweep_csv(os, report);
        return verdict;
    });
    if (code == kExitBadInput) {
        return code;
    }
    return with_output(summary_path, err, err, [&](std::ostream &os) {
        os << sweep_summary_json(report).dump(2) << '\n';
        return code;
    });
}

int cmd_roots(double tol, std::ostream &out, std::ostream &err) {
    if (!(tol > 0.0)) {
        err << "error: --tol must be positive\n";
        return kExitBadInput;
    }
    try {
        const auto r = solve_critical_cubic<double>(tol);
        const bool matches = std::abs(r.y0 - kReferenceRoot) <= kReferenceRootTolerance;
        out << roots_json(r, kReferenceRoot, matches).dump(2) << '\n';
        return matches && r.unique ? kExitOk : kExitCheckFailed;
    } catch (const SolverFailure &e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

int cmd_verify(std::size_t samples, std::uint64_t seed, const std::string &out_path, std::ostream &out,
               std::ostream &err) {
    if (samples < 1) {
        err << "error: --samples must be at least 1\n";
        return kExitBadInput;
    }
    const auto report = run_verification(samples, seed);
    return with_output(out_path, out, err, [&](std::ostream &os) {
        os << verification_json(report).dump(2) << '\n';
        return report.passed() ? kExitOk : kExitCheckFailed;
    });
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Bell-diagonal purification map: trajectories, sweeps and proof checks", "qpa"};
    app.require_subcommand(1);

    CommonFlags traj_flags;
    traj_flags.epsilon = 1e-9;
    std::string state_literal;
    auto *traj = app.add_subcommand("trajectory", "Iterate the map from one state");
    traj->add_option("--state", state_literal, "Initial state as a,b,c,d")->required();
    add_iteration_flags(traj, traj_flags);
    add_output_flags(traj, traj_flags);

    CommonFlags sweep_flags;
    sweep_flags.epsilon = sweep_default_options().epsilon;
    double step = 0.0;
    std::string summary_path;
    unsigned workers = 0;
    auto *sweep = app.add_subcommand("sweep", "Classify every cell of a simplex grid");
    sweep->add_option("--step", step, "Grid step, 1/n")->required();
    add_iteration_flags(sweep, sweep_flags);
    add_output_flags(sweep, sweep_flags);
    sweep->add_option("--summary", summary_path, "JSON summary file for CSV output (default: standard error)");
    sweep->add_option("--workers", workers, "Worker threads (0 = all cores)")->capture_default_str();

    double tol = 1e-12;
    auto *roots = app.add_subcommand("roots", "Solve the critical-point cubic of g");
    roots->add_option("--tol", tol, "Residual tolerance")->capture_default_str();

    std::size_t samples = 100000;
    std::uint64_t seed = 42;
    std::string verify_out;
    auto *verify = app.add_subcommand("verify", "Run the seeded property suite");
    verify->add_option("--samples", samples, "Samples per property")->capture_default_str();
    verify->add_option("--seed", seed, "Sampler seed")->capture_default_str();
    verify->add_option("--out", verify_out, "Output file (default: standard output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    if (traj->parsed()) {
        return cmd_trajectory(state_literal, traj_flags, out, err);
    }
    if (sweep->parsed()) {
        return cmd_sweep(step, sweep_flags, summary_path, workers, out, err);
    }
    if (roots->parsed()) {
        return cmd_roots(tol, out, err);
    }
    return cmd_verify(samples, seed, verify_out, out, err);
}

}  // namespace qpa
