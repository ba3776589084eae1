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

#include "qpa/sweep.hpp"

#include <map>
#include <sstream>

#include "gtest/gtest.h"

#include "oracle.hpp"
#include "qpa/io.hpp"

using namespace qpa;

TEST(sweep, grid_sizes) {
    EXPECT_EQ(simplex_grid(0.5).size(), oracle::count_compositions(2));
    EXPECT_EQ(simplex_grid(0.5).size(), 10u);
    EXPECT_EQ(simplex_grid(0.05).size(), oracle::count_compositions(20));
    EXPECT_EQ(simplex_grid(0.05).size(), 1771u);
    EXPECT_EQ(simplex_grid(0.02).size(), 23426u);
    EXPECT_EQ(simplex_grid(1.0 / 3.0).size(), oracle::count_compositions(3));
}

TEST(sweep, unit_step_gives_vertices) {
    const auto grid = simplex_grid(1.0);
    ASSERT_EQ(grid.size(), 4u);
    EXPECT_EQ(grid[0], make_state(0.0, 0.0, 0.0, 1.0));
    EXPECT_EQ(grid[1], make_state(0.0, 0.0, 1.0, 0.0));
    EXPECT_EQ(grid[2], make_state(0.0, 1.0, 0.0, 0.0));
    EXPECT_EQ(grid[3], make_state(1.0, 0.0, 0.0, 0.0));
}

TEST(sweep, grid_is_lexicographic_and_on_simplex) {
    const auto grid = simplex_grid(0.1);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const auto &p = grid[i - 1].coefficients();
        const auto &q = grid[i].coefficients();
        const bool less = std::lexicographical_compare(p.data(), p.data() + 3, q.data(), q.data() + 3);
        ASSERT_TRUE(less) << i;
    }
    for (const auto &s : grid) {
        ASSERT_NEAR(s.coefficients().sum(), 1.0, 1e-15);
        ASSERT_GE(s.coefficients().minCoeff(), 0.0);
    }
}

TEST(sweep, rejects_non_reciprocal_steps) {
    EXPECT_THROW(simplex_grid(0.3), RejectedStep);
    EXPECT_THROW(simplex_grid(0.0), RejectedStep);
    EXPECT_THROW(simplex_grid(-0.5), RejectedStep);
    EXPECT_THROW(simplex_grid(2.0), RejectedStep);
    EXPECT_NO_THROW(simplex_grid(1.0 / 7.0));
}

TEST(sweep, coarse_grid_vertex) {
    const auto report = run_sweep(0.5);
    ASSERT_EQ(report.cells.size(), 10u);
    const auto &vertex = report.cells.back();
    EXPECT_EQ(vertex.initial, make_state(1.0, 0.0, 0.0, 0.0));
    EXPECT_EQ(vertex.region, RegionClass::InRegionR);
    EXPECT_EQ(vertex.report.attractor, Attractor::PhiPlus);
    EXPECT_EQ(vertex.report.iterations, 0u);
    EXPECT_TRUE(report.violations.empty());
}

TEST(sweep, uniform_cell_is_not_purified) {
    const auto report = run_sweep(0.25);
    bool seen = false;
    for (const auto &cell : report.cells) {
        if (cell.initial == make_state(0.25, 0.25, 0.25, 0.25)) {
            seen = true;
            EXPECT_EQ(cell.region, RegionClass::NonPurifiable);
            EXPECT_EQ(cell.report.attractor, Attractor::WernerFixedPoint);
        }
    }
    EXPECT_TRUE(seen);
    EXPECT_TRUE(report.violations.empty());
}

TEST(sweep, theorem_holds_on_twentieth_grid) {
    const auto report = run_sweep(0.05, sweep_default_options());
    EXPECT_EQ(report.cells.size(), 1771u);
    EXPECT_TRUE(report.violations.empty());
    std::size_t total = 0;
    for (const auto &[key, n] : report.counts) {
        total += n;
    }
    EXPECT_EQ(total, report.cells.size());
}

TEST(sweep, swap_consistency) {
    const auto report = run_sweep(0.05);
    std::map<Attractor, std::size_t> by_attractor;
    std::map<std::vector<double>, Attractor> lookup;
    for (const auto &cell : report.cells) {
        ++by_attractor[cell.report.attractor];
        const auto &v = cell.initial.coefficients();
        lookup[{v[0], v[1], v[2], v[3]}] = cell.report.attractor;
    }
    EXPECT_EQ(by_attractor[Attractor::PhiPlus], by_attractor[Attractor::PsiPlus]);
    for (const auto &cell : report.cells) {
        const auto mirror = swap_symmetry(cell.initial);
        const auto &v = mirror.coefficients();
        const Attractor mirrored = lookup.at({v[0], v[1], v[2], v[3]});
        Attractor expected = cell.report.attractor;
        if (expected == Attractor::PhiPlus) {
            expected = Attractor::PsiPlus;
        } else if (expected == Attractor::PsiPlus) {
            expected = Attractor::PhiPlus;
        }
        ASSERT_EQ(mirrored, expected);
    }
}

TEST(sweep, deterministic_across_worker_counts) {
    std::ostringstream one, many;
    write_sweep_csv(one, run_sweep(0.1, sweep_default_options(), 1));
    write_sweep_csv(many, run_sweep(0.1, sweep_default_options(), 5));
    EXPECT_EQ(one.str(), many.str());
    EXPECT_EQ(sweep_summary_json(run_sweep(0.1, sweep_default_options(), 1)).dump(),
              sweep_summary_json(run_sweep(0.1, sweep_default_options(), 3)).dump());
}

TEST(sweep, prediction_rules) {
    const auto s = make_state(0.6, 0.2, 0.1, 0.1);
    ConvergenceReport<double> r{s, Attractor::PsiPlus, 5, make_state(0.0, 0.0, 1.0, 0.0),
                                Termination::Converged, 1.0, s.coefficients()};
    EXPECT_FALSE(matches_prediction(RegionClass::InRegionR, r, 1e-6));
    EXPECT_TRUE(matches_prediction(RegionClass::CIsLarge, r, 1e-6));
    EXPECT_TRUE(matches_prediction(RegionClass::Boundary, r, 1e-6));
    EXPECT_FALSE(matches_prediction(RegionClass::NonPurifiable, r, 1e-6));

    const auto u = make_state(0.4, 0.3, 0.2, 0.1);
    ConvergenceReport<double> stuck{u, Attractor::None, 10, u, Termination::MaxItersReached, 0.4,
                                    Eigen::Vector4d(0.4, 0.3, 0.2, 0.1)};
    EXPECT_TRUE(matches_prediction(RegionClass::NonPurifiable, stuck, 1e-6));
    stuck.peak[0] = 0.5;
    EXPECT_FALSE(matches_prediction(RegionClass::NonPurifiable, stuck, 1e-6));
}
