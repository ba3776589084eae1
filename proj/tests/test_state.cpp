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

#include "qpa/state.hpp"

#include <random>

#include "gtest/gtest.h"

#include "qpa/sampling.hpp"

using namespace qpa;

TEST(state, vertex_is_valid) {
    const auto s = make_state(1.0, 0.0, 0.0, 0.0);
    EXPECT_EQ(s.a(), 1.0);
    EXPECT_EQ(s.b() + s.c() + s.d(), 0.0);
}

TEST(state, mixed_state_is_valid) {
    const auto s = make_state(0.57, 0.41, 0.01, 0.01);
    EXPECT_NEAR(s.a(), 0.57, 1e-15);
    EXPECT_NEAR(s.b(), 0.41, 1e-15);
    EXPECT_NEAR(s.coefficients().sum(), 1.0, 1e-15);
}

TEST(state, rejects_bad_normalization) {
    EXPECT_THROW(make_state(0.5, 0.5, 0.5, 0.5), RejectedState);
    EXPECT_THROW(make_state(0.25, 0.25, 0.25, 0.2499), RejectedState);
}

TEST(state, rejects_out_of_range_components) {
    EXPECT_THROW(make_state(-1e-9, 0.5, 0.5, 1e-9), RejectedState);
    EXPECT_THROW(make_state(1.1, -0.1, 0.0, 0.0), RejectedState);
    EXPECT_THROW(make_state(std::nan(""), 0.0, 0.0, 1.0), RejectedState);
}

TEST(state, small_errors_are_absorbed) {
    const auto s = make_state(0.25 + 5e-10, 0.25, 0.25, 0.25);
    EXPECT_NEAR(s.coefficients().sum(), 1.0, 1e-15);
    const auto t = make_state(1.0, -5e-13, 0.0, 0.0);
    EXPECT_EQ(t.b(), 0.0);
}

TEST(state, fidelity_reads_slot) {
    EXPECT_EQ(fidelity(make_state(1.0, 0.0, 0.0, 0.0), BellIndex::PhiPlus), 1.0);
    EXPECT_NEAR(fidelity(make_state(0.57, 0.41, 0.01, 0.01), BellIndex::PhiPlus), 0.57, 1e-15);
    EXPECT_NEAR(fidelity(make_state(0.1, 0.1, 0.6, 0.2), BellIndex::PsiPlus), 0.6, 1e-15);
    EXPECT_NEAR(fidelity(make_state(0.1, 0.1, 0.6, 0.2), BellIndex::PhiMinus), 0.2, 1e-15);
}

TEST(state, classify_region) {
    EXPECT_EQ(classify_region(make_state(0.57, 0.41, 0.01, 0.01)), RegionClass::InRegionR);
    EXPECT_EQ(classify_region(make_state(0.4, 0.3, 0.2, 0.1)), RegionClass::NonPurifiable);
    EXPECT_EQ(classify_region(make_state(0.5, 0.3, 0.1, 0.1)), RegionClass::Boundary);
    EXPECT_EQ(classify_region(make_state(0.2, 0.6, 0.1, 0.1)), RegionClass::BIsLarge);
    EXPECT_EQ(classify_region(make_state(0.1, 0.1, 0.6, 0.2)), RegionClass::CIsLarge);
    EXPECT_EQ(classify_region(make_state(0.1, 0.1, 0.2, 0.6)), RegionClass::DIsLarge);
    EXPECT_EQ(classify_region(make_state(0.5 + 1e-13, 0.3, 0.1, 0.1 - 1e-13)), RegionClass::Boundary);
    EXPECT_EQ(classify_region(make_state(0.5 + 1e-13, 0.3, 0.1, 0.1 - 1e-13), 0.0), RegionClass::InRegionR);
}

TEST(state, swap_symmetry) {
    EXPECT_EQ(swap_symmetry(make_state(1.0, 0.0, 0.0, 0.0)), make_state(0.0, 0.0, 1.0, 0.0));
    const auto s = make_state(0.57, 0.41, 0.01, 0.01);
    const auto t = swap_symmetry(s);
    EXPECT_EQ(t.a(), s.c());
    EXPECT_EQ(t.b(), s.d());
    EXPECT_EQ(t.c(), s.a());
    EXPECT_EQ(t.d(), s.b());
}

TEST(state, properties_on_random_states) {
    SimplexSampler sampler(11);
    for (int i = 0; i < 20000; ++i) {
        const auto s = sampler.uniform_state();
        int large = 0;
        double total = 0.0;
        for (auto idx : kBellIndices) {
            large += fidelity(s, idx) > 0.5;
            total += fidelity(s, idx);
        }
        ASSERT_LE(large, 1);
        ASSERT_NEAR(total, 1.0, 1e-12);
        ASSERT_EQ(swap_symmetry(swap_symmetry(s)), s);
        ASSERT_EQ(classify_region(swap_symmetry(s)), swapped(classify_region(s)));
    }
}

TEST(state, swap_maps_region_classes) {
    EXPECT_EQ(swapped(RegionClass::InRegionR), RegionClass::CIsLarge);
    EXPECT_EQ(swapped(RegionClass::BIsLarge), RegionClass::DIsLarge);
    EXPECT_EQ(swapped(RegionClass::NonPurifiable), RegionClass::NonPurifiable);
    EXPECT_EQ(swapped(RegionClass::Boundary), RegionClass::Boundary);
    EXPECT_EQ(classify_region(swap_symmetry(make_state(0.5, 0.2, 0.2, 0.1))), RegionClass::Boundary);
}

TEST(state, float_scalar_instantiates) {
    const auto s = make_state<float>(0.7f, 0.1f, 0.1f, 0.1f);
    EXPECT_EQ(classify_region(s, 1e-6f), RegionClass::InRegionR);
}
