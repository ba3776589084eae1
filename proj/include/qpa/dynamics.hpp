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

#ifndef QPA_DYNAMICS_HPP
#define QPA_DYNAMICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qpa/lyapunov.hpp"
#include "qpa/qpa_map.hpp"
#include "qpa/simplex_grid.hpp"
#include "qpa/state.hpp"

namespace qpa {

struct IterationOptions {
    /// Stop once 1 - max(a, c) <= epsilon.
    double epsilon = 1e-9;
    std::size_t max_iters = 10000;
    bool record_full = true;

    void validate() const {
        if (!(epsilon > 0.0 && epsilon < 0.5)) {
            throw std::invalid_argument("epsilon must lie in (0, 0.5)");
        }
        if (max_iters < 1) {
            throw std::invalid_argument("max_iters must be at least 1");
        }
    }
};

/// Successive states closer than this in every slot count as a fixed point.
inline constexpr double kFixedPointStep = 1e-16;

enum class Termination { Converged, MaxItersReached, FixedPointDetected };
enum class Attractor { PhiPlus, PsiPlus, WernerFixedPoint, None };

std::string_view to_string(Termination termination);
std::string_view to_string(Attractor attractor);

template <typename Scalar>
struct Trajectory {
    using Vector = typename BellDiagonalState<Scalar>::Vector;

    std::vector<BellDiagonalState<Scalar>> states;
    /// p_values[k] produced states[k+1].
    std::vector<Scalar> p_values;
    std::vector<Scalar> f_values;
    /// Product over completed steps of p/2: two pairs in, at most one out.
    /// Underflows to 0 on very long runs.
    std::vector<Scalar> cumulative_yield;

    /// Number of steps taken.
    std::size_t iterations = 0;
    Termination termination = Termination::MaxItersReached;
    /// Per-slot maximum over every visited state, recorded or not.
    Vector peak = Vector::Zero();
    /// Smallest f(next) - f(current) over all steps; +inf when no step ran.
    Scalar min_f_increment = std::numeric_limits<Scalar>::infinity();

    const BellDiagonalState<Scalar> &initial() const {
        return states.front();
    }
    const BellDiagonalState<Scalar> &final_state() const {
        return states.back();
    }
};

/// 1 - max(a, c): distance to the nearer of the two fixed Bell vertices
/// {1,0,0,0} and {0,0,1,0}. The b and d vertices are not fixed (one step
/// sends them to a and c), so they do not count as converged.
template <typename Scalar>
Scalar distance_to_attractor(const BellDiagonalState<Scalar> &state) {
    return Scalar(1) - std::max(state.a(), state.c());
}

/// Applies qpa_step until the state is within epsilon of {1,0,0,0} or {0,0,1,0}, a
/// fixed point is reached, or max_iters steps have run. With record_full
/// off only the initial and final states (and their f and yield) are kept;
/// p_values then holds the last step's p.
template <typename Scalar>
Trajectory<Scalar> iterate(const BellDiagonalState<Scalar> &state, const IterationOptions &opts = {}) {
    opts.validate();
    Trajectory<Scalar> t;
    t.states.push_back(state);
    t.f_values.push_back(f_value(state));
    t.cumulative_yield.push_back(Scalar(1));
    t.peak = state.coefficients();

    const Scalar eps = static_cast<Scalar>(opts.epsilon);
    if (distance_to_attractor(state) <= eps) {
        t.termination = Termination::Converged;
        return t;
    }

    BellDiagonalState<Scalar> current = state;
    Scalar f_current = t.f_values.back();
    Scalar yield = Scalar(1);
    Scalar last_p = Scalar(0);
    t.termination = Termination::MaxItersReached;
    for (std::size_t k = 1; k <= opts.max_iters; ++k) {
        const auto step = qpa_step(current);
        const Scalar f_next = f_value(step.output);
        yield *= step.p / 2;
        last_p = step.p;
        t.min_f_increment = std::min(t.min_f_increment, f_next - f_current);
        t.peak = t.peak.cwiseMax(step.output.coefficients());
        if (opts.record_full) {
            t.states.push_back(step.output);
            t.p_values.push_back(step.p);
            t.f_values.push_back(f_next);
            t.cumulative_yield.push_back(yield);
        }
        const Scalar moved = (step.output.coefficients() - current.coefficients()).cwiseAbs().maxCoeff();
        current = step.output;
        f_current = f_next;
        t.iterations = k;
        if (distance_to_attractor(current) <= eps) {
            t.termination = Termination::Converged;
            break;
        }
        if (moved < Scalar(kFixedPointStep)) {
            t.termination = Termination::FixedPointDetected;
            break;
        }
    }
    if (!opts.record_full) {
        t.states.push_back(current);
        t.p_values.push_back(last_p);
        t.f_values.push_back(f_current);
        t.cumulative_yield.push_back(yield);
    }
    return t;
}

template <typename Scalar>
struct ConvergenceReport {
    BellDiagonalState<Scalar> initial;
    Attractor attractor;
    std::size_t iterations;
    BellDiagonalState<Scalar> final_state;
    Termination terminated;
    /// Largest Bell weight of the final state, i.e. the fidelity to the
    /// nearest Bell vertex.
    Scalar final_fidelity;
    typename BellDiagonalState<Scalar>::Vector peak;
};

inline constexpr double kUniformTolerance = 1e-12;

template <typename Scalar>
bool is_uniform(const BellDiagonalState<Scalar> &state) {
    return (state.coefficients().array() - Scalar(0.25)).abs().maxCoeff() <= Scalar(kUniformTolerance);
}

template <typename Scalar>
ConvergenceReport<Scalar> classify_convergence(const BellDiagonalState<Scalar> &state, IterationOptions opts = {}) {
    opts.record_full = false;
    const auto t = iterate(state, opts);
    const auto &last = t.final_state();
    const Scalar threshold = Scalar(1) - static_cast<Scalar>(opts.epsilon);
    Attractor attractor = Attractor::None;
    if (last.a() >= threshold) {
        attractor = Attractor::PhiPlus;
    } else if (last.c() >= threshold) {
        attractor = Attractor::PsiPlus;
    } else if (t.termination == Termination::FixedPointDetected && is_uniform(last)) {
        attractor = Attractor::WernerFixedPoint;
    }
    return {state, attractor, t.iterations, last, t.termination, last.coefficients().maxCoeff(), t.peak};
}

/// Grid states s with |qpa_step(s) - s| <= tol in every slot, in grid
/// order, with later points within grid_step of an earlier hit dropped.
template <typename Scalar = double>
std::vector<BellDiagonalState<Scalar>> find_fixed_points(double grid_step, Scalar tol = Scalar(1e-10)) {
    if (!(grid_step > 0.0 && grid_step <= 0.25)) {
        throw std::invalid_argument("find_fixed_points: grid step must lie in (0, 0.25]");
    }
    if (!(tol > Scalar(0))) {
        throw std::invalid_argument("find_fixed_points: tol must be positive");
    }
    std::vector<BellDiagonalState<Scalar>> found;
    for (const auto &s : simplex_grid<Scalar>(grid_step)) {
        const auto next = qpa_step(s).output;
        if ((next.coefficients() - s.coefficients()).cwiseAbs().maxCoeff() > tol) {
            continue;
        }
        const bool duplicate = std::any_of(found.begin(), found.end(), [&](const auto &f) {
            return (f.coefficients() - s.coefficients()).cwiseAbs().maxCoeff() < Scalar(grid_step);
        });
        if (!duplicate) {
            found.push_back(s);
        }
    }
    return found;
}

}  // namespace qpa

#endif  // QPA_DYNAMICS_HPP
