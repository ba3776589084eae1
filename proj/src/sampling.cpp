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

#include "qpa/sampling.hpp"

#include <cmath>

namespace qpa {

SimplexSampler::SimplexSampler(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    rng_.seed(seq);
}

double SimplexSampler::uniform01() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double SimplexSampler::uniform_open_closed() {
    return 1.0 - uniform01();
}

Eigen::Vector4d SimplexSampler::dirichlet4() {
    Eigen::Vector4d e;
    for (int i = 0; i < 4; ++i) {
        e[i] = -std::log(uniform_open_closed());
    }
    const double total = e.sum();
    if (!(total > 0.0)) {
        return Eigen::Vector4d::Constant(0.25);
    }
    return e / total;
}

State SimplexSampler::uniform_state() {
    return State::make(dirichlet4());
}

State SimplexSampler::large_component_state(BellIndex slot) {
    const int k = static_cast<int>(slot);
    for (;;) {
        Eigen::Vector4d w = 0.5 * dirichlet4();
        w[k] += 0.5;
        const State s = State::make(w);
        if (s.coefficients()[k] > 0.5) {
            return s;
        }
    }
}

State SimplexSampler::region_r_state() {
    return large_component_state(BellIndex::PhiPlus);
}

State SimplexSampler::non_purifiable_state() {
    for (;;) {
        const State s = uniform_state();
        if (s.coefficients().maxCoeff() < 0.5) {
            return s;
        }
    }
}

State SimplexSampler::a_half_state() {
    Eigen::Vector4d w = 0.5 * dirichlet4();
    w[0] = 0.5;
    w[1] = 0.5 - w[2] - w[3];
    if (w[1] < 0.0) {
        w[1] = 0.0;
    }
    return State::from_simplex_unchecked(w);
}

std::pair<double, double> SimplexSampler::triangle_point() {
    for (;;) {
        double u = uniform01();
        double v = uniform01();
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        const double c = 0.5 * u;
        const double d = 0.5 * v;
        if (c + d < 0.5) {
            return {c, d};
        }
    }
}

}  // namespace qpa
