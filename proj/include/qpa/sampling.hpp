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

#ifndef QPA_SAMPLING_HPP
#define QPA_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <utility>

#include "qpa/state.hpp"

namespace qpa {

/// Deterministic sampler over the state simplex and its sub-regions.
///
/// Only the raw 64-bit output of mt19937_64 is consumed (no std::
/// distributions), so a seed reproduces the same stream on every standard
/// library. Uniform simplex points come from normalized exponential draws.
class SimplexSampler {
   public:
    explicit SimplexSampler(std::uint64_t seed, std::uint64_t stream = 0);

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01();
    /// Uniform on (0, 1].
    double uniform_open_closed();

    /// Uniform on the whole simplex.
    State uniform_state();
    /// Uniform on {a > 0.5}.
    State region_r_state();
    /// Uniform on {slot > 0.5} for the given slot.
    State large_component_state(BellIndex slot);
    /// Uniform on {a, b, c, d < 0.5}, by rejection.
    State non_purifiable_state();
    /// Uniform on {a = 0.5}.
    State a_half_state();
    /// Uniform (c, d) in the open triangle {c, d >= 0, c + d < 0.5}.
    std::pair<double, double> triangle_point();

   private:
    Eigen::Vector4d dirichlet4();

    std::mt19937_64 rng_;
};

}  // namespace qpa

#endif  // QPA_SAMPLING_HPP
