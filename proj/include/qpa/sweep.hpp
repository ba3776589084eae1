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

#ifndef QPA_SWEEP_HPP
#define QPA_SWEEP_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "qpa/dynamics.hpp"
#include "qpa/simplex_grid.hpp"
#include "qpa/state.hpp"

namespace qpa {

/// Sweeps default to a looser epsilon than single trajectories.
inline IterationOptions sweep_default_options() {
    IterationOptions opts;
    opts.epsilon = 1e-6;
    opts.record_full = false;
    return opts;
}

template <typename Scalar>
struct SweepCell {
    BellDiagonalState<Scalar> initial;
    RegionClass region;
    ConvergenceReport<Scalar> report;
};

template <typename Scalar>
struct SweepReport {
    double grid_step = 0.0;
    IterationOptions options;
    std::vector<SweepCell<Scalar>> cells;
    std::map<std::pair<RegionClass, Attractor>, std::size_t> counts;
    /// Indices into cells.
    std::vector<std::size_t> violations;
};

/// Whether an observed outcome agrees with the purification theorem:
/// a or b above 0.5 ends at phi+, c or d above 0.5 at psi+, and a state with
/// every weight below 0.5 never reaches 0.5 in any slot. Boundary cells
/// carry no prediction.
template <typename Scalar>
bool matches_prediction(RegionClass region, const ConvergenceReport<Scalar> &report, double epsilon) {
    const Scalar threshold = Scalar(1) - static_cast<Scalar>(epsilon);
    switch (region) {
        case RegionClass::InRegionR:
        case RegionClass::BIsLarge:
            return report.attractor == Attractor::PhiPlus && report.final_state.a() >= threshold;
        case RegionClass::CIsLarge:
        case RegionClass::DIsLarge:
            return report.attractor == Attractor::PsiPlus && report.final_state.c() >= threshold;
        case RegionClass::NonPurifiable:
            return report.attractor != Attractor::PhiPlus && report.attractor != Attractor::PsiPlus &&
                   report.peak.maxCoeff() < Scalar(0.5);
        case RegionClass::Boundary:
            return true;
    }
    return false;
}

/// Classifies every cell of simplex_grid(grid_step). Cells are split into
/// contiguous blocks across `workers` threads (0 = hardware concurrency);
/// each result lands in its grid slot, so the report does not depend on the
/// worker count.
template <typename Scalar = double>
SweepReport<Scalar> run_sweep(double grid_step, const IterationOptions &opts = sweep_default_options(),
                              unsigned workers = 0) {
    opts.validate();
    const auto grid = simplex_grid<Scalar>(grid_step);

    std::vector<RegionClass> regions(grid.size());
    std::vector<ConvergenceReport<Scalar>> reports;
    reports.reserve(grid.size());
    for (const auto &s : grid) {
        reports.push_back({s, Attractor::None, 0, s, Termination::MaxItersReached, Scalar(0), s.coefficients()});
    }

    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(grid.size(), 1)));
    const std::size_t block = (grid.size() + workers - 1) / workers;
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            regions[i] = classify_region(grid[i]);
            reports[i] = classify_convergence(grid[i], opts);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) {
            const std::size_t begin = std::min(grid.size(), w * block);
            const std::size_t end = std::min(grid.size(), begin + block);
            pool.emplace_back(work, begin, end);
        }
        work(0, std::min(grid.size(), block));
    }

    SweepReport<Scalar> report;
    report.grid_step = grid_step;
    report.options = opts;
    report.cells.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        ++report.counts[{regions[i], reports[i].attractor}];
        if (!matches_prediction(regions[i], reports[i], opts.epsilon)) {
            report.violations.push_back(i);
        }
        report.cells.push_back({grid[i], regions[i], std::move(reports[i])});
    }
    return report;
}

}  // namespace qpa

#endif  // QPA_SWEEP_HPP
