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

#include "qpa/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "qpa/dynamics.hpp"
#include "qpa/lyapunov.hpp"
#include "qpa/qpa_map.hpp"
#include "qpa/sampling.hpp"
#include "qpa/state.hpp"

namespace qpa {
namespace {

// Stream ids; one per check so each sees an independent sequence.
enum Stream : std::uint64_t {
    kSimplexPreservation = 1,
    kSuccessProbability,
    kIdentityResiduals,
    kSymmetry,
    kTrappingUp,
    kBLarge,
    kTrappingDown,
    kBoundaryInvariance,
    kMonotonicity,
    kStrictMonotonicity,
    kReduction,
    kFlatEdge,
    kGNegativity,
    kFMaximum,
    kTrajectoryMonotonicity,
    kTrajectorySymmetry,
    kNonPurifiableTrajectories,
};

// Thresholds.
constexpr double kSumSlack = 1e-12;
constexpr double kResidualBound = 1e-13;
constexpr double kSymmetryBound = 1e-15;
constexpr double kBoundaryInvarianceBound = 1e-14;
constexpr double kDeltaFloor = -1e-15;
constexpr double kGStrict = 1e-12;
constexpr double kGFlat = 1e-14;
constexpr double kFlatDeltaBound = 1e-12;
constexpr double kEdgeDeltaBound = 1e-15;
constexpr double kOriginExclusion = 1e-6;
constexpr double kGZeroBound = 1e-15;
constexpr double kReferenceRoot = 0.205122;
constexpr double kReferenceRootTolerance = 1e-6;
constexpr double kCubicResidualBound = 1e-12;
constexpr double kTrajectorySymmetryBound = 1e-14;
constexpr std::size_t kTrajectoryIterCap = 200;

class Tally {
   public:
    Tally(std::string name, std::string meaning) {
        result_.name = std::move(name);
        result_.margin_meaning = std::move(meaning);
        result_.worst_margin = std::numeric_limits<double>::infinity();
    }

    void record(double margin, bool ok) {
        ++result_.samples;
        if (!ok) {
            ++result_.violations;
        }
        result_.worst_margin = std::min(result_.worst_margin, margin);
    }

    PropertyResult finish() {
        return std::move(result_);
    }

   private:
    PropertyResult result_;
};

double sign(double x) {
    return (x > 0.0) - (x < 0.0);
}

IterationOptions capped_options() {
    IterationOptions opts;
    opts.max_iters = kTrajectoryIterCap;
    return opts;
}

}  // namespace

bool VerificationReport::passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto &p) { return p.passed(); });
}

PropertyResult check_simplex_preservation(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kSimplexPreservation);
    Tally t("simplex_preservation", "min(min component, 1e-12 - |sum - 1|) of the renormalized output");
    for (std::size_t i = 0; i < samples; ++i) {
        const auto s = sampler.uniform_state();
        const auto out = qpa_step(s).output.coefficients();
        const double margin = std::min(out.minCoeff(), kSumSlack - std::abs(out.sum() - 1.0));
        t.record(margin, margin >= 0.0);
    }
    return t.finish();
}

PropertyResult check_success_probability_bound(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kSuccessProbability);
    Tally t("success_probability_bound", "min(p - 0.5, 1 - p)");
    for (std::size_t i = 0; i < samples; ++i) {
        const double p = success_probability(sampler.uniform_state());
        const double margin = std::min(p - 0.5, 1.0 - p);
        t.record(margin, margin >= 0.0);
    }
    return t.finish();
}

PropertyResult check_identity_residuals(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kIdentityResiduals);
    Tally t("identity_residuals", "1e-13 - max(|r_A|, |r_B|)");
    for (std::size_t i = 0; i < samples; ++i) {
        const auto [ra, rb] = identity_residuals(sampler.uniform_state());
        const double margin = kResidualBound - std::max(std::abs(ra), std::abs(rb));
        t.record(margin, margin >= 0.0);
    }
    return t.finish();
}

PropertyResult check_symmetry_commutation(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kSymmetry);
    Tally t("symmetry_commutation", "1e-15 - max(|step(swap s) - swap(step s)|, |p - p'|)");
    for (std::size_t i = 0; i < samples; ++i) {
        const auto s = sampler.uniform_state();
        const auto direct = qpa_step(s);
        const auto mirrored = qpa_step(swap_symmetry(s));
        const double diff = std::max(
            (mirrored.output.coefficients() - swap_symmetry(direct.output).coefficients()).cwiseAbs().maxCoeff(),
            std::abs(mirrored.p - direct.p));
        const double margin = kSymmetryBound - diff;
        t.record(margin, margin >= 0.0);
    }
    return t.finish();
}

PropertyResult check_region_trapping_up(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kTrappingUp);
    Tally t("region_trapping_up", "A - 0.5 for inputs with a > 0.5");
    for (std::size_t i = 0; i < samples; ++i) {
        const double margin = qpa_step(sampler.region_r_state()).output.a() - 0.5;
        t.record(margin, margin > 0.0);
    }
    return t.finish();
}

PropertyResult check_b_large_enters_region(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kBLarge);
    Tally t("b_large_enters_region", "A - 0.5 for inputs with b > 0.5");
    for (std::size_t i = 0; i < samples; ++i) {
        const double margin = qpa_step(sampler.large_component_state(BellIndex::PsiMinus)).output.a() - 0.5;
        t.record(margin, margin > 0.0);
    }
    return t.finish();
}

PropertyResult check_region_trapping_down(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kTrappingDown);
    Tally t("region_trapping_down", "0.5 - max(A, B, C, D) for inputs with every weight below 0.5");
    for (std::size_t i = 0; i < samples; ++i) {
        const double margin = 0.5 - qpa_step(sampler.non_purifiable_state()).output.coefficients().maxCoeff();
        t.record(margin, margin > 0.0);
    }
    return t.finish();
}

PropertyResult check_boundary_invariance(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kBoundaryInvariance);
    Tally t("boundary_invariance", "1e-14 - |A - 0.5| for inputs with a = 0.5");
    for (std::size_t i = 0; i < samples; ++i) {
        const double margin = kBoundaryInvarianceBound - std::abs(qpa_step(sampler.a_half_state()).output.a() - 0.5);
        t.record(margin, margin >= 0.0);
    }
    return t.finish();
}

PropertyResult check_monotonicity(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kMonotonicity);
    Tally t("monotonicity", "delta f where g < -1e-12, else delta f + 1e-15");
    for (std::size_t i = 0; i < samples; ++i) {
        const auto [df, g] = monotonicity_delta(sampler.region_r_state());
        if (g < -kGStrict) {
            t.record(df, df > 0.0);
        } else {
            t.record(df - kDeltaFloor, df >= kDeltaFloor);
        }
    }
    return t.finish();
}

PropertyResult check_strict_monotonicity(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kStrictMonotonicity);
    Tally t("strict_monotonicity", "delta f + 1e-15 away from c = d = 0 and from f = 1");
    for (std::size_t i = 0; i < samples; ++i) {
        const auto s = sampler.region_r_state();
        const bool off_edge = s.c() + s.d() > 1e-6 || std::abs(s.c() - s.d()) > 1e-6;
        if (!off_edge || f_value(s) > 1.0 - 1e-10) {
            continue;
        }
        const double df = monotonicity_delta(s).first;
        t.record(df - kDeltaFloor, df > kDeltaFloor);
    }
    return t.finish();
}

PropertyResult check_reduction_equivalence(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kReduction);
    Tally t("reduction_equivalence",
            "-sign(g) * delta f where |g| > 1e-12; 1e-12 - |delta f| where |g| <= 1e-14");
    for (std::size_t i = 0; i < samples; ++i) {
        const auto [df, g] = monotonicity_delta(sampler.region_r_state());
        if (std::abs(g) > kGStrict) {
            t.record(-sign(g) * df, sign(df) == -sign(g));
        } else if (std::abs(g) <= kGFlat) {
            const double margin = kFlatDeltaBound - std::abs(df);
            t.record(margin, margin >= 0.0);
        }
    }
    return t.finish();
}

PropertyResult check_flat_edge(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kFlatEdge);
    Tally t("flat_edge", "1e-15 - |delta f| for states {a, 1-a, 0, 0} with a > 0.5");
    for (std::size_t i = 0; i < samples; ++i) {
        const double a = 0.5 + 0.5 * sampler.uniform_open_closed();
        const double df = monotonicity_delta(make_state(a, 1.0 - a, 0.0, 0.0)).first;
        const double margin = kEdgeDeltaBound - std::abs(df);
        t.record(margin, margin >= 0.0);
    }
    return t.finish();
}

PropertyResult check_g_negativity(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kGNegativity);
    Tally t("g_negativity", "-g on {c, d >= 0, c + d < 0.5} minus a 1e-6 ball at the origin");
    for (std::size_t i = 0; i < samples;) {
        const auto [c, d] = sampler.triangle_point();
        if (std::hypot(c, d) < kOriginExclusion) {
            continue;
        }
        const double g = g_value(c, d);
        t.record(-g, g < 0.0);
        ++i;
    }
    return t.finish();
}

PropertyResult check_g_boundary(std::size_t samples) {
    Tally t("g_boundary_scan", "-g off the zero points; 1e-15 - |g| at c = d = 0 and c = d = 0.25");
    for (const auto &pt : g_boundary_scan<double>(std::max<std::size_t>(samples, 2))) {
        if (is_g_zero_point(pt.c, pt.d)) {
            const double margin = kGZeroBound - std::abs(pt.g);
            t.record(margin, margin >= 0.0);
        } else {
            t.record(-pt.g, pt.g < 0.0);
        }
    }
    return t.finish();
}

PropertyResult check_f_maximum(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kFMaximum);
    Tally t("f_maximum", "1 - f on {a in [0.5, 1], b in [0, 0.5], a + b <= 1}; 0 only at (1, 0)");
    t.record(1.0 - f_value(1.0, 0.0), f_value(1.0, 0.0) == 1.0);
    for (std::size_t i = 1; i < samples; ++i) {
        const auto [da, b] = sampler.triangle_point();
        const double a = 0.5 + da;
        const double f = f_value(a, b);
        const bool at_corner = a == 1.0 && b == 0.0;
        t.record(1.0 - f, f < 1.0 || (at_corner && f == 1.0));
    }
    return t.finish();
}

PropertyResult check_critical_cubic() {
    Tally t("critical_cubic", "1e-6 - |y0 - 0.205122|, with residual and uniqueness required");
    const auto r = solve_critical_cubic<double>(1e-12);
    const double margin = kReferenceRootTolerance - std::abs(r.y0 - kReferenceRoot);
    const bool ok = margin >= 0.0 && std::abs(r.residual) <= kCubicResidualBound && r.unique && r.y0 > 0.0 &&
                    r.y0 < 0.5 && r.g_min < 0.0;
    t.record(margin, ok);
    return t.finish();
}

PropertyResult check_critical_point_diagonal_minimum() {
    Tally t("critical_point_diagonal_minimum", "g(y0/2 + e, y0/2 + e) - g_min for e in {+-1e-3, +-1e-2}");
    const auto r = solve_critical_cubic<double>(1e-12);
    for (const double eps : {1e-3, 1e-2}) {
        for (const double s : {1.0, -1.0}) {
            const double g = g_value(r.y0 / 2 + s * eps, r.y0 / 2 + s * eps);
            t.record(g - r.g_min, g >= r.g_min);
        }
    }
    return t.finish();
}

PropertyResult check_trajectory_monotonicity(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kTrajectoryMonotonicity);
    Tally t("trajectory_monotonicity",
            "min over steps of delta f (g < -1e-12) or delta f + 1e-15, and of a - 0.5");
    const auto opts = capped_options();
    for (std::size_t i = 0; i < samples; ++i) {
        const auto traj = iterate(sampler.region_r_state(), opts);
        double margin = std::numeric_limits<double>::infinity();
        bool ok = true;
        for (std::size_t k = 0; k + 1 < traj.states.size(); ++k) {
            const auto &s = traj.states[k];
            const double df = traj.f_values[k + 1] - traj.f_values[k];
            if (g_value(s.c(), s.d()) < -kGStrict) {
                margin = std::min(margin, df);
                ok = ok && df > 0.0;
            } else {
                margin = std::min(margin, df - kDeltaFloor);
                ok = ok && df >= kDeltaFloor;
            }
        }
        for (const auto &s : traj.states) {
            margin = std::min(margin, s.a() - 0.5);
            ok = ok && s.a() > 0.5;
        }
        t.record(margin, ok);
    }
    return t.finish();
}

PropertyResult check_trajectory_symmetry(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kTrajectorySymmetry);
    Tally t("trajectory_symmetry", "1e-14 - max state-by-state |traj(swap s) - swap(traj s)|");
    const auto opts = capped_options();
    for (std::size_t i = 0; i < samples; ++i) {
        const auto s = sampler.uniform_state();
        const auto direct = iterate(s, opts);
        const auto mirrored = iterate(swap_symmetry(s), opts);
        double diff = 0.0;
        const std::size_t n = std::min(direct.states.size(), mirrored.states.size());
        for (std::size_t k = 0; k < n; ++k) {
            diff = std::max(diff, (mirrored.states[k].coefficients() - swap_symmetry(direct.states[k]).coefficients())
                                      .cwiseAbs()
                                      .maxCoeff());
        }
        const double margin = kTrajectorySymmetryBound - diff;
        t.record(margin, margin >= 0.0 && direct.states.size() == mirrored.states.size());
    }
    return t.finish();
}

PropertyResult check_non_purifiable_trajectories(std::uint64_t seed, std::size_t samples) {
    SimplexSampler sampler(seed, kNonPurifiableTrajectories);
    Tally t("non_purifiable_trajectories", "0.5 - largest weight seen along the trajectory");
    auto opts = capped_options();
    opts.record_full = false;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto traj = iterate(sampler.non_purifiable_state(), opts);
        const double margin = 0.5 - traj.peak.maxCoeff();
        t.record(margin, margin > 0.0);
    }
    return t.finish();
}

VerificationReport run_verification(std::size_t samples, std::uint64_t seed) {
    VerificationReport report;
    report.seed = seed;
    report.samples = samples;
    auto &p = report.properties;
    p.push_back(check_simplex_preservation(seed, samples));
    p.push_back(check_success_probability_bound(seed, samples));
    p.push_back(check_identity_residuals(seed, samples));
    p.push_back(check_symmetry_commutation(seed, samples));
    p.push_back(check_region_trapping_up(seed, samples));
    p.push_back(check_b_large_enters_region(seed, samples));
    p.push_back(check_region_trapping_down(seed, samples));
    p.push_back(check_boundary_invariance(seed, samples));
    p.push_back(check_monotonicity(seed, samples));
    p.push_back(check_strict_monotonicity(seed, samples));
    p.push_back(check_reduction_equivalence(seed, samples));
    p.push_back(check_flat_edge(seed, samples));
    p.push_back(check_g_negativity(seed, samples));
    p.push_back(check_g_boundary(samples));
    p.push_back(check_f_maximum(seed, samples));
    p.push_back(check_critical_cubic());
    p.push_back(check_critical_point_diagonal_minimum());
    p.push_back(check_trajectory_monotonicity(seed, samples));
    p.push_back(check_trajectory_symmetry(seed, samples));
    p.push_back(check_non_purifiable_trajectories(seed, samples));
    return report;
}

}  // namespace qpa
