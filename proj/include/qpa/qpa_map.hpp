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

#ifndef QPA_QPA_MAP_HPP
#define QPA_QPA_MAP_HPP

#include <utility>

#include "qpa/state.hpp"

namespace qpa {

/// Result of one purification round on two pairs: the surviving pair and
/// the probability p that the round keeps it.
template <typename Scalar>
struct StepOutcome {
    BellDiagonalState<Scalar> output;
    Scalar p;
};

/// p = (a+b)^2 + (c+d)^2, always in [0.5, 1].
template <typename Scalar>
Scalar success_probability(const BellDiagonalState<Scalar> &state) {
    const Scalar ab = state.a() + state.b();
    const Scalar cd = state.c() + state.d();
    return ab * ab + cd * cd;
}

namespace detail {

/// Un-renormalized image {A,B,C,D}; exact only up to rounding.
template <typename Scalar>
typename BellDiagonalState<Scalar>::Vector raw_step(const BellDiagonalState<Scalar> &state, Scalar p) {
    const Scalar a = state.a(), b = state.b(), c = state.c(), d = state.d();
    return typename BellDiagonalState<Scalar>::Vector(
        (a * a + b * b) / p, Scalar(2) * c * d / p, (c * c + d * d) / p, Scalar(2) * a * b / p);
}

}  // namespace detail

/// One elementary step:
///   A = (a^2+b^2)/p, B = 2cd/p, C = (c^2+d^2)/p, D = 2ab/p.
/// The output is renormalized by its computed sum so long trajectories stay
/// on the simplex.
template <typename Scalar>
StepOutcome<Scalar> qpa_step(const BellDiagonalState<Scalar> &state) {
    const Scalar p = success_probability(state);
    const auto raw = detail::raw_step(state, p);
    return {BellDiagonalState<Scalar>::make(raw), p};
}

/// Residuals of the two closed forms
///   1 - 2A = (2a-1)(2b-1)/p
///   1 - 2B = (2(c^2+d^2) - 2(c+d) + 1)/p
/// evaluated with the pre-renormalization A and B. Returns (r_A, r_B).
template <typename Scalar>
std::pair<Scalar, Scalar> identity_residuals(const BellDiagonalState<Scalar> &state) {
    const Scalar a = state.a(), b = state.b(), c = state.c(), d = state.d();
    const Scalar p = success_probability(state);
    const auto raw = detail::raw_step(state, p);
    const Scalar rhs_a = (Scalar(2) * a - 1) * (Scalar(2) * b - 1) / p;
    const Scalar rhs_b = (Scalar(2) * (c * c + d * d) - Scalar(2) * (c + d) + 1) / p;
    return {(Scalar(1) - Scalar(2) * raw[0]) - rhs_a, (Scalar(1) - Scalar(2) * raw[1]) - rhs_b};
}

}  // namespace qpa

#endif  // QPA_QPA_MAP_HPP
