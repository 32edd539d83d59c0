#include "rislink/experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "rislink/kernels.hpp"
#include "rislink/units.hpp"

namespace rislink {

namespace {

void validate_axis(const AxisSpec& axis) {
    if (axis.points < 2) {
        throw std::invalid_argument("axis '" + axis.name + "' needs at least 2 points");
    }
    if (!(axis.min < axis.max) || !std::isfinite(axis.min) || !std::isfinite(axis.max)) {
        throw std::invalid_argument("axis '" + axis.name + "' needs finite min < max");
    }
}

const char* mode_name(SampleMode mode) {
    return mode == SampleMode::Paper ? "paper" : "sampled";
}

const char* mode_name(RisUserDistanceMode mode) {
    return mode == RisUserDistanceMode::MoveUser ? "move_user" : "hold_direct_distance";
}

nlohmann::json base_metadata(const Scenario& scenario, const std::string& kind) {
    return nlohmann::json{{"kind", kind},
                          {"scenario", scenario_to_json(scenario)},
                          {"seed", scenario.mc.seed},
                          {"samples", static_cast<std::uint64_t>(scenario.mc.sample_count)}};
}

// Budgets along a d_RU axis, computed up front so nothing throws inside the
// parallel cell loops.
std::vector<LinkBudget> budgets_along_axis(const Scenario& scenario,
                                           const std::vector<double>& d_ru_values,
                                           RisUserDistanceMode mode) {
    std::vector<LinkBudget> budgets;
    budgets.reserve(d_ru_values.size());
    for (double d : d_ru_values) {
        budgets.push_back(budget_at_ris_user_distance(scenario, d, mode));
    }
    return budgets;
}

}  // namespace

std::vector<double> linspace(const AxisSpec& axis) {
    validate_axis(axis);
    std::vector<double> values(static_cast<std::size_t>(axis.points));
    const double span = axis.max - axis.min;
    const double denom = static_cast<double>(axis.points - 1);
    for (int i = 0; i < axis.points; ++i) {
        values[static_cast<std::size_t>(i)] = axis.min + span * static_cast<double>(i) / denom;
    }
    return values;
}

GeodeticPoint user_position_at_distance(const Scenario& scenario, double d_ru_m) {
    if (!(d_ru_m > 0.0) || !std::isfinite(d_ru_m)) {
        throw std::invalid_argument("d_ru must be positive and finite");
    }
    const GeodeticPoint ris = scenario.ris_point();
    const GeodeticPoint user = scenario.user_point();
    const double r_ris = scenario.earth_radius_m + ris.alt_m;
    const double r_user = scenario.earth_radius_m + user.alt_m;

    // Invert the chord length between the two spheres for the central angle.
    const double cos_gamma =
        (r_ris * r_ris + r_user * r_user - d_ru_m * d_ru_m) / (2.0 * r_ris * r_user);
    if (cos_gamma > 1.0 || cos_gamma < -1.0) {
        throw std::invalid_argument("d_ru not achievable for this geometry");
    }
    const double central_angle = std::acos(cos_gamma);
    const double bearing = great_circle_bearing(ris, user);
    GeodeticPoint moved = destination_point(ris, bearing, central_angle);
    moved.alt_m = user.alt_m;
    return moved;
}

LinkBudget budget_at_ris_user_distance(const Scenario& scenario, double d_ru_m,
                                       RisUserDistanceMode mode) {
    const double gamma_mag = scenario.aggregate_magnitude();
    if (mode == RisUserDistanceMode::HoldDirectDistance) {
        PropagationDistances d = scenario.distances();
        d.d_ru_m = d_ru_m;
        if (!(d_ru_m > 0.0) || !std::isfinite(d_ru_m)) {
            throw std::invalid_argument("d_ru must be positive and finite");
        }
        return build_link_budget(d, scenario.radio_config(), gamma_mag);
    }
    const GeodeticPoint moved_user = user_position_at_distance(scenario, d_ru_m);
    const PropagationDistances d = scenario_distances(
        scenario.satellite_point(), scenario.ris_point(), moved_user, scenario.earth());
    return build_link_budget(d, scenario.radio_config(), gamma_mag);
}

SweepResult sweep_power_surface(const Scenario& scenario, const AxisSpec& d_ru_axis,
                                const AxisSpec& phase_axis, RisUserDistanceMode mode) {
    validate_axis(d_ru_axis);
    validate_axis(phase_axis);

    SweepResult result;
    result.kind = "power_surface";
    result.axis_names = {d_ru_axis.name, phase_axis.name};
    result.axes = {linspace(d_ru_axis), linspace(phase_axis)};
    result.columns = {"power_w", "power_dbw", "optimal_phase_rad"};

    const std::vector<double>& d_values = result.axes[0];
    const std::vector<double>& phases = result.axes[1];
    const std::vector<LinkBudget> budgets = budgets_along_axis(scenario, d_values, mode);

    const std::size_t n_phase = phases.size();
    const std::size_t rows = result.rows();
    result.values.assign(result.columns.size(), std::vector<double>(rows));

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t row = 0; row < static_cast<std::ptrdiff_t>(rows); ++row) {
        const std::size_t i = static_cast<std::size_t>(row) / n_phase;
        const std::size_t j = static_cast<std::size_t>(row) % n_phase;
        const double power = received_power(budgets[i], phases[j]);
        result.values[0][static_cast<std::size_t>(row)] = power;
        result.values[1][static_cast<std::size_t>(row)] = linear_to_db(power);
        result.values[2][static_cast<std::size_t>(row)] = optimal_phase_ideal(budgets[i]);
    }

    result.metadata = base_metadata(scenario, result.kind);
    result.metadata["d_ru_mode"] = mode_name(mode);
    return result;
}

SweepResult sweep_ris_vs_direct(const Scenario& scenario, const AxisSpec& d_ru_axis,
                                RisUserDistanceMode mode) {
    validate_axis(d_ru_axis);

    SweepResult result;
    result.kind = "ris_vs_direct";
    result.axis_names = {d_ru_axis.name};
    result.axes = {linspace(d_ru_axis)};
    result.columns = {"without_ris_w", "without_ris_dbw", "with_ris_w", "with_ris_dbw"};

    const std::vector<double>& d_values = result.axes[0];
    const std::vector<LinkBudget> budgets = budgets_along_axis(scenario, d_values, mode);

    // The RIS-free reference is the base scenario's direct power; it has no
    // d_RU dependence at all.
    const LinkBudget base = scenario.link_budget();
    const double direct_w = base.amplitude_su * base.amplitude_su;
    const double direct_dbw = linear_to_db(direct_w);

    const std::size_t rows = result.rows();
    result.values.assign(result.columns.size(), std::vector<double>(rows));

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t row = 0; row < static_cast<std::ptrdiff_t>(rows); ++row) {
        const auto i = static_cast<std::size_t>(row);
        const double with_ris = received_power(budgets[i], optimal_phase_ideal(budgets[i]));
        result.values[0][i] = direct_w;
        result.values[1][i] = direct_dbw;
        result.values[2][i] = with_ris;
        result.values[3][i] = linear_to_db(with_ris);
    }

    result.metadata = base_metadata(scenario, result.kind);
    result.metadata["d_ru_mode"] = mode_name(mode);
    return result;
}

SweepResult sweep_sinc(const Scenario& scenario, const AxisSpec& sigma_axis) {
    validate_axis(sigma_axis);
    if (sigma_axis.min < 0.0) {
        throw std::invalid_argument("sigma axis must be non-negative");
    }

    SweepResult result;
    result.kind = "sinc";
    result.axis_names = {sigma_axis.name};
    result.axes = {linspace(sigma_axis)};
    result.columns = {"sinc", "expected_power_w", "expected_power_dbw"};

    const LinkBudget budget = scenario.link_budget();
    // Evaluated at the aligned phase (cos term exactly 1).
    const double aligned_phase = budget.phase_offset_rad;

    const std::vector<double>& sigmas = result.axes[0];
    const std::size_t rows = result.rows();
    result.values.assign(result.columns.size(), std::vector<double>(rows));

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t row = 0; row < static_cast<std::ptrdiff_t>(rows); ++row) {
        const auto i = static_cast<std::size_t>(row);
        const double expected = expected_power_closed_form(
            budget, aligned_phase, PhaseErrorModel{sigmas[i]});
        result.values[0][i] = sinc(sigmas[i]);
        result.values[1][i] = expected;
        result.values[2][i] = linear_to_db(expected);
    }

    result.metadata = base_metadata(scenario, result.kind);
    return result;
}

SweepResult sweep_expected_surface(const Scenario& scenario, const AxisSpec& phase_axis,
                                   const AxisSpec& sigma_axis) {
    validate_axis(phase_axis);
    validate_axis(sigma_axis);
    if (sigma_axis.min < 0.0) {
        throw std::invalid_argument("sigma axis must be non-negative");
    }

    SweepResult result;
    result.kind = "expected_surface";
    result.axis_names = {phase_axis.name, sigma_axis.name};
    result.axes = {linspace(phase_axis), linspace(sigma_axis)};
    result.columns = {"expected_power_w", "expected_power_dbw"};

    const LinkBudget budget = scenario.link_budget();
    const std::vector<double>& phases = result.axes[0];
    const std::vector<double>& sigmas = result.axes[1];
    const std::size_t n_sigma = sigmas.size();
    const std::size_t rows = result.rows();
    result.values.assign(result.columns.size(), std::vector<double>(rows));

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t row = 0; row < static_cast<std::ptrdiff_t>(rows); ++row) {
        const std::size_t i = static_cast<std::size_t>(row) / n_sigma;
        const std::size_t j = static_cast<std::size_t>(row) % n_sigma;
        const double expected =
            expected_power_closed_form(budget, phases[i], PhaseErrorModel{sigmas[j]});
        result.values[0][static_cast<std::size_t>(row)] = expected;
        result.values[1][static_cast<std::size_t>(row)] = linear_to_db(expected);
    }

    result.metadata = base_metadata(scenario, result.kind);
    return result;
}

SweepResult sweep_expected_vs_phase(const Scenario& scenario,
                                    std::span<const double> sigmas,
                                    const AxisSpec& phase_axis, SampleMode mode) {
    validate_axis(phase_axis);
    if (sigmas.empty()) {
        throw std::invalid_argument("sigma set must be non-empty");
    }
    for (double s : sigmas) {
        if (!(s >= 0.0) || !std::isfinite(s)) {
            throw std::invalid_argument("sigma values must be finite and >= 0");
        }
    }

    SweepResult result;
    result.kind = "expected_vs_phase";
    result.axis_names = {"sigma_rad", phase_axis.name};
    result.axes = {std::vector<double>(sigmas.begin(), sigmas.end()), linspace(phase_axis)};
    result.columns = {"expected_power_w", "expected_power_dbw", "optimal_phase_rad",
                      "optimal_power_w"};

    const LinkBudget budget = scenario.link_budget();
    const std::vector<double>& phases = result.axes[1];
    const std::size_t n_phase = phases.size();
    result.values.assign(result.columns.size(), std::vector<double>(result.rows()));

    for (std::size_t si = 0; si < result.axes[0].size(); ++si) {
        const PhaseErrorModel error{result.axes[0][si]};
        const std::vector<double> draws = draw_errors(error, scenario.mc);

#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n_phase); ++j) {
            const std::size_t row = si * n_phase + static_cast<std::size_t>(j);
            const double estimate = kernels::mean_sample_power(
                budget, phases[static_cast<std::size_t>(j)], draws, error, mode);
            result.values[0][row] = estimate;
            result.values[1][row] = linear_to_db(estimate);
        }

        const OptimizationResult opt =
            optimize_stochastic(budget, error, scenario.mc, scenario.bfgs, mode);
        for (std::size_t j = 0; j < n_phase; ++j) {
            result.values[2][si * n_phase + j] = opt.optimal_phase_rad;
            result.values[3][si * n_phase + j] = opt.objective_w;
        }
    }

    result.metadata = base_metadata(scenario, result.kind);
    result.metadata["mode"] = mode_name(mode);
    return result;
}

SweepResult sweep_optimal_vs_suboptimal(const Scenario& scenario,
                                        const AxisSpec& sigma_axis, SampleMode mode) {
    validate_axis(sigma_axis);
    if (sigma_axis.min < 0.0) {
        throw std::invalid_argument("sigma axis must be non-negative");
    }

    SweepResult result;
    result.kind = "optimal_vs_suboptimal";
    result.axis_names = {sigma_axis.name};
    result.axes = {linspace(sigma_axis)};
    result.columns = {"optimal_power_w",       "optimal_power_dbw",
                      "suboptimal_power_w",    "suboptimal_power_dbw",
                      "optimal_closed_form_w", "suboptimal_closed_form_w",
                      "optimal_phase_rad"};

    const LinkBudget budget = scenario.link_budget();
    const std::vector<double>& sigmas = result.axes[0];
    result.values.assign(result.columns.size(), std::vector<double>(result.rows()));

    // Each optimizer run already drives the parallel kernels; the sigma loop
    // stays serial.
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        const PhaseErrorModel error{sigmas[i]};
        const OptimizationResult opt =
            optimize_stochastic(budget, error, scenario.mc, scenario.bfgs, mode);

        // "Just before the optimum": the penultimate accepted iterate, or the
        // start itself when the run converged immediately.
        const IterateRecord& penultimate =
            opt.history.size() >= 2 ? opt.history[opt.history.size() - 2]
                                    : opt.history.front();

        result.values[0][i] = opt.objective_w;
        result.values[1][i] = linear_to_db(opt.objective_w);
        result.values[2][i] = penultimate.objective_w;
        result.values[3][i] = linear_to_db(penultimate.objective_w);
        result.values[4][i] =
            expected_power_closed_form(budget, opt.optimal_phase_rad, error);
        result.values[5][i] =
            expected_power_closed_form(budget, penultimate.phase_rad, error);
        result.values[6][i] = opt.optimal_phase_rad;
    }

    result.metadata = base_metadata(scenario, result.kind);
    result.metadata["mode"] = mode_name(mode);
    return result;
}

}  // namespace rislink
