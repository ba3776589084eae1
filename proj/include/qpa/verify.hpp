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

#ifndef QPA_VERIFY_HPP
#define QPA_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qpa {

/// Outcome of one seeded property check.
///
/// `worst_margin` is the smallest slack observed against the property's
/// threshold; it is negative (or zero, for strict properties) exactly when
/// some sample violated the property.
struct PropertyResult {
    std::string name;
    std::size_t samples = 0;
    std::size_t violations = 0;
    double worst_margin = 0.0;
    std::string margin_meaning;

    bool passed() const {
        return violations == 0;
    }
};

struct VerificationReport {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<PropertyResult> properties;

    bool passed() const;
};

// Each check draws from its own stream derived from (seed, check), so the
// checks are independent of each other and of the order they run in.

PropertyResult check_simplex_preservation(std::uint64_t seed, std::size_t samples);
PropertyResult check_success_probability_bound(std::uint64_t seed, std::size_t samples);
PropertyResult check_identity_residuals(std::uint64_t seed, std::size_t samples);
PropertyResult check_symmetry_commutation(std::uint64_t seed, std::size_t samples);
PropertyResult check_region_trapping_up(std::uint64_t seed, std::size_t samples);
PropertyResult check_b_large_enters_region(std::uint64_t seed, std::size_t samples);
PropertyResult check_region_trapping_down(std::uint64_t seed, std::size_t samples);
PropertyResult check_boundary_invariance(std::uint64_t seed, std::size_t samples);
PropertyResult check_monotonicity(std::uint64_t seed, std::size_t samples);
PropertyResult check_strict_monotonicity(std::uint64_t seed, std::size_t samples);
PropertyResult check_reduction_equivalence(std::uint64_t seed, std::size_t samples);
PropertyResult check_flat_edge(std::uint64_t seed, std::size_t samples);
PropertyResult check_g_negativity(std::uint64_t seed, std::size_t samples);
PropertyResult check_g_boundary(std::size_t samples);
PropertyResult check_f_maximum(std::uint64_t seed, std::size_t samples);
PropertyResult check_critical_cubic();
PropertyResult check_critical_point_diagonal_minimum();
PropertyResult check_trajectory_monotonicity(std::uint64_t seed, std::size_t samples);
PropertyResult check_trajectory_symmetry(std::uint64_t seed, std::size_t samples);
PropertyResult check_non_purifiable_trajectories(std::uint64_t seed, std::size_t samples);

/// Every check above, `samples` draws each.
VerificationReport run_verification(std::size_t samples, std::uint64_t seed);

}  // namespace qpa

#endif  // QPA_VERIFY_HPP
