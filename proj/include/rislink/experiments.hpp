#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rislink/optimizers.hpp"
#include "rislink/scenario.hpp"

namespace rislink {

/// Linearly spaced sweep axis, endpoints included. Requires points >= 2 and
/// min < max.
struct AxisSpec {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    int points = 0;
};

/// How the RIS-to-user distance axis is realized.
///
/// MoveUser slides the user along the great circle through RIS and user,
/// away from the RIS, and lets the direct distance co-vary as the geometry
/// dictates. HoldDirectDistance substitutes the axis value for d_RU while
/// keeping d_SU and d_SR at their base-scenario values.
enum class RisUserDistanceMode {
    MoveUser,
    HoldDirectDistance,
};

/// A fully evaluated sweep: one or two axis grids plus named value columns,
/// each stored row-major over the cell grid (axis 1 outermost).
struct SweepResult {
    std::string kind;
    std::vector<std::string> axis_names;
    std::vector<std::vector<double>> axes;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> values;  // one vector per column, rows() long
    nlohmann::json metadata;

    std::size_t rows() const {
        std::size_t n = 1;
        for (const auto& axis : axes) n *= axis.size();
        return n;
    }
};

std::vector<double> linspace(const AxisSpec& axis);

/// User position at chord distance `d_ru_m` from the RIS, moved along the
/// great circle from the RIS through the base user position. Preserves the
/// user's altitude. Throws when the distance is not achievable on the sphere
/// or the bearing is undefined.
GeodeticPoint user_position_at_distance(const Scenario& scenario, double d_ru_m);

/// Link budget with the RIS-to-user distance forced to `d_ru_m` under the
/// chosen mode. Exposed so individual sweep cells can be reproduced.
LinkBudget budget_at_ris_user_distance(const Scenario& scenario, double d_ru_m,
                                       RisUserDistanceMode mode);

/// Received power over d_RU x phase, with the closed-form optimal phase of
/// each d_RU column as an overlay.
SweepResult sweep_power_surface(const Scenario& scenario, const AxisSpec& d_ru_axis,
                                const AxisSpec& phase_axis, RisUserDistanceMode mode);

/// Optimally phased two-path power versus the RIS-free direct link. The
/// RIS-free trace is the base scenario's direct power, constant across the
/// axis by construction.
SweepResult sweep_ris_vs_direct(const Scenario& scenario, const AxisSpec& d_ru_axis,
                                RisUserDistanceMode mode);

/// The sinc attenuation factor over sigma, with the closed-form expected
/// power at the aligned phase alongside.
SweepResult sweep_sinc(const Scenario& scenario, const AxisSpec& sigma_axis);

/// Closed-form expected power over phase x sigma.
SweepResult sweep_expected_surface(const Scenario& scenario, const AxisSpec& phase_axis,
                                   const AxisSpec& sigma_axis);

/// Monte Carlo expected-power curves over phase, one per sigma in the set,
/// each annotated with its stochastic-optimizer optimum.
SweepResult sweep_expected_vs_phase(const Scenario& scenario,
                                    std::span<const double> sigmas,
                                    const AxisSpec& phase_axis, SampleMode mode);

/// Expected power at the stochastic optimum and at the penultimate optimizer
/// iterate, per sigma. Emits both the sample-average values the optimizer saw
/// and their closed-form counterparts at the same phases.
SweepResult sweep_optimal_vs_suboptimal(const Scenario& scenario,
                                        const AxisSpec& sigma_axis, SampleMode mode);

}  // namespace rislink
