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

#ifndef QPA_STATE_HPP
#define QPA_STATE_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace qpa {

/// Bell basis labels. The enumerator value is the coefficient slot, in the
/// order {phi+, psi-, psi+, phi-}. Note that slots b (psi-) and d (phi-) do
/// NOT play symmetric roles in the map: the a<->c, b<->d exchange is the
/// only symmetry.
enum class BellIndex : int { PhiPlus = 0, PsiMinus = 1, PsiPlus = 2, PhiMinus = 3 };

inline constexpr std::array<BellIndex, 4> kBellIndices = {
    BellIndex::PhiPlus, BellIndex::PsiMinus, BellIndex::PsiPlus, BellIndex::PhiMinus};

std::string_view to_string(BellIndex index);

enum class RegionClass { InRegionR, BIsLarge, CIsLarge, DIsLarge, NonPurifiable, Boundary };

std::string_view to_string(RegionClass region);

struct RejectedState : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kComponentSlack = 1e-12;
inline constexpr double kSumTolerance = 1e-9;
inline constexpr double kBoundaryTolerance = 1e-12;

/// Diagonal of a two-qubit density operator in the Bell basis.
///
/// Instances always lie on the probability simplex: components are
/// nonnegative and sum to one up to rounding. The only way to build one is
/// through make_state (or the mapping functions that call it), so every
/// value in flight has been validated.
template <typename Scalar>
class BellDiagonalState {
   public:
    using Vector = Eigen::Matrix<Scalar, 4, 1>;

    /// Validates and renormalizes. Components within kComponentSlack below
    /// zero are clamped to zero; the result is divided by its sum.
    static BellDiagonalState make(const Vector &coefficients) {
        Vector v = coefficients;
        for (int i = 0; i < 4; ++i) {
            if (!std::isfinite(static_cast<double>(v[i]))) {
                throw RejectedState("state component is not finite");
            }
            if (v[i] < Scalar(-kComponentSlack) || v[i] > Scalar(1 + kComponentSlack)) {
                throw RejectedState(
                    "state component " + std::to_string(static_cast<double>(v[i])) + " outside [0, 1]");
            }
            if (v[i] < Scalar(0)) {
                v[i] = Scalar(0);
            }
        }
        const Scalar sum = v.sum();
        if (std::abs(static_cast<double>(sum) - 1.0) > kSumTolerance) {
            throw RejectedState(
                "state components sum to " + std::to_string(static_cast<double>(sum)) + ", expected 1");
        }
        v /= sum;
        int large = 0;
        for (int i = 0; i < 4; ++i) {
            large += v[i] > Scalar(0.5) ? 1 : 0;
        }
        if (large > 1) {
            throw RejectedState("more than one component exceeds 0.5");
        }
        return BellDiagonalState(v);
    }

    /// For values already known to be on the simplex, e.g. a permutation of
    /// a valid state's coefficients. No validation, no renormalization.
    static BellDiagonalState from_simplex_unchecked(const Vector &coefficients) {
        return BellDiagonalState(coefficients);
    }

    const Vector &coefficients() const {
        return coeffs_;
    }
    Scalar a() const {
        return coeffs_[0];
    }
    Scalar b() const {
        return coeffs_[1];
    }
    Scalar c() const {
        return coeffs_[2];
    }
    Scalar d() const {
        return coeffs_[3];
    }
    Scalar operator[](BellIndex index) const {
        return coeffs_[static_cast<int>(index)];
    }

    bool operator==(const BellDiagonalState &other) const {
        return coeffs_ == other.coeffs_;
    }

   private:
    explicit BellDiagonalState(const Vector &v) : coeffs_(v) {
    }

    Vector coeffs_;
};

using State = BellDiagonalState<double>;

template <typename Scalar>
BellDiagonalState<Scalar> make_state(Scalar a, Scalar b, Scalar c, Scalar d) {
    return BellDiagonalState<Scalar>::make(typename BellDiagonalState<Scalar>::Vector(a, b, c, d));
}

inline State make_state(double a, double b, double c, double d) {
    return make_state<double>(a, b, c, d);
}

/// Weight of the given Bell component, i.e. the fidelity to that Bell state.
template <typename Scalar>
Scalar fidelity(const BellDiagonalState<Scalar> &state, BellIndex target) {
    return state[target];
}

template <typename Scalar>
RegionClass classify_region(const BellDiagonalState<Scalar> &state, Scalar tol = Scalar(kBoundaryTolerance)) {
    const auto &v = state.coefficients();
    const Scalar half(0.5);
    for (int i = 0; i < 4; ++i) {
        if (std::abs(v[i] - half) <= tol) {
            return RegionClass::Boundary;
        }
    }
    static constexpr RegionClass kLarge[4] = {
        RegionClass::InRegionR, RegionClass::BIsLarge, RegionClass::CIsLarge, RegionClass::DIsLarge};
    for (int i = 0; i < 4; ++i) {
        if (v[i] > half + tol) {
            return kLarge[i];
        }
    }
    return RegionClass::NonPurifiable;
}

/// The a<->c, b<->d exchange. Involutive.
template <typename Scalar>
BellDiagonalState<Scalar> swap_symmetry(const BellDiagonalState<Scalar> &state) {
    const auto &v = state.coefficients();
    return BellDiagonalState<Scalar>::from_simplex_unchecked(
        typename BellDiagonalState<Scalar>::Vector(v[2], v[3], v[0], v[1]));
}

/// Image of a region class under swap_symmetry.
RegionClass swapped(RegionClass region);

}  // namespace qpa

#endif  // QPA_STATE_HPP
