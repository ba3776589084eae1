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

#include "qpa/lyapunov.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "oracle.hpp"
#include "qpa/sampling.hpp"

using namespace qpa;

TEST(lyapunov, f_value) {
    EXPECT_EQ(f_value(make_state(1.0, 0.0, 0.0, 0.0)), 1.0);
    EXPECT_NEAR(f_value(make_state(0.57, 0.41, 0.01, 0.01)), 0.0252, 1e-15);
    EXPECT_EQ(f_value(make_state(0.25, 0.25, 0.25, 0.25)), -0.25);
}

TEST(lyapunov, g_value) {
    EXPECT_EQ(g_value(0.0, 0.0), 0.0);
    EXPECT_EQ(g_value(0.25, 0.25), 0.0);
    EXPECT_NEAR(g_value(0.1, 0.1), -0.0888, 1e-15);
    // y = 0.25: 2/256 - 4/64 + 4/16 - 1/4 - 1/16
    EXPECT_EQ(g_value(0.0, 0.25), -0.1171875);
    EXPECT_NEAR(g_value(0.4, 0.1), -0.045, 1e-15);
}

TEST(lyapunov, monotonicity_delta_examples) {
    auto [df, g] = monotonicity_delta(make_state(1.0, 0.0, 0.0, 0.0));
    EXPECT_EQ(df, 0.0);
    EXPECT_EQ(g, 0.0);

    std::tie(df, g) = monotonicity_delta(make_state(0.57, 0.41, 0.01, 0.01));
    EXPECT_NEAR(df, 0.0010172239203938433, 1e-15);
    EXPECT_NEAR(f_value(make_state(0.57, 0.41, 0.01, 0.01)) + df, 0.026217223920393843, 1e-15);
    EXPECT_LT(g, 0.0);

    std::tie(df, g) = monotonicity_delta(make_state(0.6, 0.4, 0.0, 0.0));
    EXPECT_LE(std::abs(df), 1e-15);
    EXPECT_EQ(g, 0.0);
}

TEST(lyapunov, increment_factors_through_g) {
    // delta f = -2 f(a,b) g(c,d) / p^2, checked in long double.
    SimplexSampler sampler(21);
    for (int i = 0; i < 20000; ++i) {
        const auto s = sampler.uniform_state();
        const oracle::Coeffs x{s.a(), s.b(), s.c(), s.d()};
        const auto step = oracle::step(x);
        const long double lhs = oracle::f(step.out[0], step.out[1]) - oracle::f(x[0], x[1]);
        const long double rhs = -2 * oracle::f(x[0], x[1]) * oracle::g(x[2], x[3]) / (step.p * step.p);
        ASSERT_NEAR(static_cast<double>(lhs), static_cast<double>(rhs), 1e-15);
        ASSERT_NEAR(monotonicity_delta(s).first, static_cast<double>(lhs), 1e-14);
    }
}

TEST(lyapunov, critical_cubic_root) {
    const auto r = solve_critical_cubic<double>(1e-12);
    EXPECT_NEAR(r.y0, 0.205122, 1e-6);
    EXPECT_NEAR(r.y0, static_cast<double>(oracle::cubic_root_bisection()), 1e-12);
    EXPECT_LE(std::abs(8 * r.y0 * r.y0 * r.y0 - 12 * r.y0 * r.y0 + 7 * r.y0 - 1), 1e-12);
    EXPECT_LE(std::abs(r.residual), 1e-12);
    EXPECT_EQ(r.x0, 0.0);
    EXPECT_GT(r.y0, 0.0);
    EXPECT_LT(r.y0, 0.5);
    EXPECT_EQ(r.derivative_discriminant, -96.0);
    EXPECT_TRUE(r.unique);
    EXPECT_NEAR(r.g_min, -0.088840822007777758, 1e-12);
    EXPECT_EQ(r.bracket, std::make_pair(0.0, 0.5));
}

TEST(lyapunov, critical_cubic_loose_tolerance) {
    const auto r = solve_critical_cubic<double>(1e-3);
    EXPECT_LE(std::abs(r.residual), 1e-3);
    EXPECT_THROW(solve_critical_cubic<double>(0.0), std::invalid_argument);
}

TEST(lyapunov, critical_cubic_long_double) {
    const auto r = solve_critical_cubic<long double>(1e-15L);
    EXPECT_NEAR(static_cast<double>(r.y0), 0.20512274384927081, 1e-15);
}

TEST(lyapunov, critical_point_is_a_saddle) {
    // g = h(c+d) - (c-d)^2 / 2: a minimum along c = d, a maximum across it.
    const auto r = solve_critical_cubic<double>();
    const double h = r.y0 / 2;
    for (double e : {1e-3, 1e-2}) {
        EXPECT_GE(g_value(h + e, h + e), r.g_min);
        EXPECT_GE(g_value(h - e, h - e), r.g_min);
        EXPECT_LT(g_value(h + e, h - e), r.g_min);
        EXPECT_LT(g_value(h - e, h + e), r.g_min);
        EXPECT_NEAR(g_value(h + e, h - e), r.g_min - 2 * e * e, 1e-12);
    }
}

TEST(lyapunov, boundary_scan) {
    const auto scan = g_boundary_scan<double>(101);
    ASSERT_EQ(scan.size(), 303u);
    int zeros = 0;
    for (const auto &pt : scan) {
        if (is_g_zero_point(pt.c, pt.d)) {
            ++zeros;
            EXPECT_LE(std::abs(pt.g), 1e-15);
        } else {
            EXPECT_LT(pt.g, 0.0) << pt.c << "," << pt.d;
        }
    }
    // (0,0) ends both axes; (0.25,0.25) is the midpoint of c+d=0.5.
    EXPECT_EQ(zeros, 3);

    EXPECT_EQ(scan[50].segment, BoundarySegment::AxisCZero);
    EXPECT_EQ(scan[50].d, 0.25);
    EXPECT_EQ(scan[50].g, -0.1171875);
    EXPECT_EQ(scan[202 + 50].c, 0.25);
    EXPECT_EQ(scan[202 + 50].g, 0.0);
    EXPECT_NEAR(scan[202 + 80].c, 0.4, 1e-15);
    EXPECT_NEAR(scan[202 + 80].g, -0.045, 1e-14);
    EXPECT_THROW(g_boundary_scan<double>(1), std::invalid_argument);
}

TEST(lyapunov, g_negative_inside_triangle) {
    SimplexSampler sampler(23);
    for (int i = 0; i < 20000; ++i) {
        const auto [c, d] = sampler.triangle_point();
        if (std::hypot(c, d) < 1e-6) {
            continue;
        }
        ASSERT_LT(g_value(c, d), 0.0) << c << "," << d;
    }
}

TEST(lyapunov, strict_increase_in_region) {
    SimplexSampler sampler(24);
    for (int i = 0; i < 20000; ++i) {
        const auto s = sampler.region_r_state();
        const auto [df, g] = monotonicity_delta(s);
        ASSERT_GE(df, -1e-15);
        if (g < -1e-12) {
            ASSERT_GT(df, 0.0);
        }
    }
}

TEST(lyapunov, f_maximum_only_at_pure_state) {
    EXPECT_EQ(f_value(1.0, 0.0), 1.0);
    SimplexSampler sampler(25);
    for (int i = 0; i < 20000; ++i) {
        const auto [da, b] = sampler.triangle_point();
        ASSERT_LT(f_value(0.5 + da, b), 1.0);
    }
}
