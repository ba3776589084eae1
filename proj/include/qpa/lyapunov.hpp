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

#ifndef QPA_LYAPUNOV_HPP
#define QPA_LYAPUNOV_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "qpa/qpa_map.hpp"
#include "qpa/state.hpp"

namespace qpa {

/// f(a,b) = (2a-1)(1-2b). Increases along every trajectory that starts with
/// a > 0.5 and attains its maximum 1 only at the pure state {1,0,0,0}.
template <typename Scalar>
Scalar f_value(Scalar a, Scalar b) {
    return (Scalar(2) * a - 1) * (1 - Scalar(2) * b);
}

template <typename Scalar>
Scalar f_value(const BellDiagonalState<Scalar> &state) {
    return f_value(state.a(), state.b());
}

/// g(c,d) = 2y^4 - 4y^3 + 4y^2 - y - (c^2+d^2) with y = c+d.
///
/// For a > 0.5 one step increases f exactly when g(c,d) < 0: the increment
/// factors as -2 f(a,b) g(c,d) / p^2.
template <typename Scalar>
Scalar g_value(Scalar c, Scalar d) {
    const Scalar y = c + d;
    const Scalar y2 = y * y;
    return Scalar(2) * y2 * y2 - Scalar(4) * y2 * y + Scalar(4) * y2 - y - (c * c + d * d);
}

/// (f after one step - f before, g at the input's (c,d)).
template <typename Scalar>
std::pair<Scalar, Scalar> monotonicity_delta(const BellDiagonalState<Scalar> &state) {
    const auto next = qpa_step(state).output;
    return {f_value(next) - f_value(state), g_value(state.c(), state.d())};
}

struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Stationary point of g in the coordinates x = c-d, y = c+d.
///
/// dg/dx = -x vanishes at x = 0 and dg/dy (at x = 0) is the cubic
/// 8y^3 - 12y^2 + 7y - 1. Along x the point is a maximum of g, along the
/// c = d diagonal a minimum.
template <typename Scalar>
struct CriticalPointResult {
    Scalar y0;
    Scalar x0;
    Scalar g_min;
    std::pair<Scalar, Scalar> bracket;
    Scalar residual;
    /// Discriminant of the derivative 24y^2 - 24y + 7. Negative means the
    /// cubic is strictly increasing and y0 is its only real root.
    Scalar derivative_discriminant;
    bool unique;
    int iterations;
};

inline constexpr std::array<double, 4> kCriticalCubic = {8.0, -12.0, 7.0, -1.0};

template <typename Scalar>
Scalar critical_cubic(Scalar y) {
    return ((Scalar(kCriticalCubic[0]) * y + Scalar(kCriticalCubic[1])) * y + Scalar(kCriticalCubic[2])) * y +
           Scalar(kCriticalCubic[3]);
}

template <typename Scalar>
Scalar critical_cubic_derivative(Scalar y) {
    return (Scalar(3 * kCriticalCubic[0]) * y + Scalar(2 * kCriticalCubic[1])) * y + Scalar(kCriticalCubic[2]);
}

/// Safeguarded Newton on (0, 0.5): Newton steps that leave the current
/// bracket fall back to bisection.
template <typename Scalar>
CriticalPointResult<Scalar> solve_critical_cubic(Scalar tol = Scalar(1e-12)) {
    if (!(tol > Scalar(0))) {
        throw std::invalid_argument("solve_critical_cubic: tol must be positive");
    }
    CriticalPointResult<Scalar> r{};
    r.bracket = {Scalar(0), Scalar(0.5)};

    const Scalar q2 = Scalar(2 * kCriticalCubic[1]);
    const Scalar q3 = Scalar(3 * kCriticalCubic[0]);
    r.derivative_discriminant = q2 * q2 - Scalar(4) * q3 * Scalar(kCriticalCubic[2]);
    r.unique = r.derivative_discriminant < Scalar(0) && kCriticalCubic[0] > 0;

    Scalar lo = r.bracket.first, hi = r.bracket.second;
    Scalar f_lo = critical_cubic(lo), f_hi = critical_cubic(hi);
    if (!(f_lo < Scalar(0) && f_hi > Scalar(0))) {
        throw SolverFailure("critical cubic has no sign change on (0, 0.5)");
    }

    Scalar y = (lo + hi) / 2;
    Scalar fy = critical_cubic(y);
    constexpr int kMaxIterations = 200;
    int it = 0;
    for (; it < kMaxIterations && std::abs(fy) > tol; ++it) {
        if (fy < Scalar(0)) {
            lo = y;
        } else {
            hi = y;
        }
        const Scalar slope = critical_cubic_derivative(y);
        Scalar next = y - fy / slope;
        if (!(next > lo && next < hi)) {
            next = (lo + hi) / 2;
        }
        if (next == y) {
            break;
        }
        y = next;
        fy = critical_cubic(y);
    }
    if (std::abs(fy) > tol) {
        throw SolverFailure("critical cubic: residual above tolerance after refinement");
    }
    r.y0 = y;
    r.x0 = Scalar(0);
    r.residual = fy;
    r.g_min = g_value(y / 2, y / 2);
    r.iterations = it;
    return r;
}

enum class BoundarySegment { AxisCZero, AxisDZero, LineSumHalf };

std::string_view to_string(BoundarySegment segment);

template <typename Scalar>
struct BoundarySample {
    BoundarySegment segment;
    Scalar c;
    Scalar d;
    Scalar g;
};

/// g on the three edges of the triangle {c,d >= 0, c+d <= 0.5}:
/// c = 0, d = 0 and c + d = 0.5, `samples` evenly spaced points each,
/// endpoints included.
template <typename Scalar>
std::vector<BoundarySample<Scalar>> g_boundary_scan(std::size_t samples) {
    if (samples < 2) {
        throw std::invalid_argument("g_boundary_scan: need at least 2 samples");
    }
    std::vector<BoundarySample<Scalar>> out;
    out.reserve(3 * samples);
    const Scalar denom = static_cast<Scalar>(samples - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const Scalar t = Scalar(0.5) * static_cast<Scalar>(i) / denom;
        out.push_back({BoundarySegment::AxisCZero, Scalar(0), t, g_value(Scalar(0), t)});
    }
    for (std::size_t i = 0; i < samples; ++i) {
        const Scalar t = Scalar(0.5) * static_cast<Scalar>(i) / denom;
        out.push_back({BoundarySegment::AxisDZero, t, Scalar(0), g_value(t, Scalar(0))});
    }
    for (std::size_t i = 0; i < samples; ++i) {
        const Scalar c = Scalar(0.5) * static_cast<Scalar>(i) / denom;
        const Scalar d = Scalar(0.5) - c;
        out.push_back({BoundarySegment::LineSumHalf, c, d, g_value(c, d)});
    }
    return out;
}

/// The two boundary points where g vanishes: c = d = 0 and c = d = 0.25.
template <typename Scalar>
bool is_g_zero_point(Scalar c, Scalar d) {
    return (c == Scalar(0) && d == Scalar(0)) || (c == Scalar(0.25) && d == Scalar(0.25));
}

}  // namespace qpa

#endif  // QPA_LYAPUNOV_HPP
