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

#ifndef QPA_SIMPLEX_GRID_HPP
#define QPA_SIMPLEX_GRID_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qpa/state.hpp"

namespace qpa {

struct RejectedStep : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// n such that grid_step == 1/n (within 1e-9 on 1/grid_step).
inline int grid_divisions(double grid_step) {
    if (!(grid_step > 0.0) || !std::isfinite(grid_step)) {
        throw RejectedStep("grid step must be positive");
    }
    const double inverse = 1.0 / grid_step;
    const double n = std::round(inverse);
    if (n < 1.0 || std::abs(inverse - n) > 1e-9) {
        throw RejectedStep("grid step must be 1/n for an integer n");
    }
    return static_cast<int>(n);
}

/// All states (i/n, j/n, k/n, (n-i-j-k)/n) in lexicographic (i,j,k) order;
/// C(n+3, 3) of them.
template <typename Scalar = double>
std::vector<BellDiagonalState<Scalar>> simplex_grid(double grid_step) {
    const int n = grid_divisions(grid_step);
    using Vec = typename BellDiagonalState<Scalar>::Vector;
    const Scalar denom = static_cast<Scalar>(n);
    std::vector<BellDiagonalState<Scalar>> out;
    out.reserve(static_cast<std::size_t>(n + 1) * (n + 2) * (n + 3) / 6);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            for (int k = 0; i + j + k <= n; ++k) {
                const int l = n - i - j - k;
                // Each slot is a correctly rounded rational, so the cell set
                // is closed under the a<->c, b<->d relabeling bit for bit.
                out.push_back(BellDiagonalState<Scalar>::from_simplex_unchecked(
                    Vec(Scalar(i) / denom, Scalar(j) / denom, Scalar(k) / denom, Scalar(l) / denom)));
            }
        }
    }
    return out;
}

}  // namespace qpa

#endif  // QPA_SIMPLEX_GRID_HPP
