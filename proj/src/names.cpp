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

#include "qpa/dynamics.hpp"
#include "qpa/lyapunov.hpp"
#include "qpa/state.hpp"

namespace qpa {

std::string_view to_string(BellIndex index) {
    switch (index) {
        case BellIndex::PhiPlus:
            return "PhiPlus";
        case BellIndex::PsiMinus:
            return "PsiMinus";
        case BellIndex::PsiPlus:
            return "PsiPlus";
        case BellIndex::PhiMinus:
            return "PhiMinus";
    }
    return "?";
}

std::string_view to_string(RegionClass region) {
    switch (region) {
        case RegionClass::InRegionR:
            return "InRegionR";
        case RegionClass::BIsLarge:
            return "BIsLarge";
        case RegionClass::CIsLarge:
            return "CIsLarge";
        case RegionClass::DIsLarge:
            return "DIsLarge";
        case RegionClass::NonPurifiable:
            return "NonPurifiable";
        case RegionClass::Boundary:
            return "Boundary";
    }
    return "?";
}

RegionClass swapped(RegionClass region) {
    switch (region) {
        case RegionClass::InRegionR:
            return RegionClass::CIsLarge;
        case RegionClass::CIsLarge:
            return RegionClass::InRegionR;
        case RegionClass::BIsLarge:
            return RegionClass::DIsLarge;
        case RegionClass::DIsLarge:
            return RegionClass::BIsLarge;
        default:
            return region;
    }
}

std::string_view to_string(Termination termination) {
    switch (termination) {
        case Termination::Converged:
            return "Converged";
        case Termination::MaxItersReached:
            return "MaxItersReached";
        case Termination::FixedPointDetected:
            return "FixedPointDetected";
    }
    return "?";
}

std::string_view to_string(Attractor attractor) {
    switch (attractor) {
        case Attractor::PhiPlus:
            return "PhiPlus";
        case Attractor::PsiPlus:
            return "PsiPlus";
        case Attractor::WernerFixedPoint:
            return "WernerFixedPoint";
        case Attractor::None:
            return "None";
    }
    return "?";
}

std::string_view to_string(BoundarySegment segment) {
    switch (segment) {
        case BoundarySegment::AxisCZero:
            return "c=0";
        case BoundarySegment::AxisDZero:
            return "d=0";
        case BoundarySegment::LineSumHalf:
            return "c+d=0.5";
    }
    return "?";
}

}  // namespace qpa
