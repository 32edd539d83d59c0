#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rislink/power_model.hpp"

namespace rislink {

/// Monte Carlo sampling configuration.
struct McConfig {
    std::size_t sample_count = 100000;
    std::uint64_t seed = 42;

    bool operator==(const McConfig&) const = default;
};

/// Quasi-Newton loop configuration. The Wolfe constants must satisfy
/// 0 < c1 < c2 < 1; the scalar Hessian seed must be positive.
struct BfgsConfig {
    double initial_phase_rad = 0.0;
    double initial_hessian = 1.0;
    double tolerance = 1e-8;
    int max_iterations = 200;
    double wolfe_c1 = 1e-4;
    double wolfe_c2 = 0.9;
    int multistart_count = 4;

    bool operator==(const BfgsConfig&) const = default;
};

/// One accepted iterate of the quasi-Newton loop, with the (un-normalized)
/// sample-average objective at that phase.
struct IterateRecord {
    double phase_rad = 0.0;
    double objective_w = 0.0;
};

struct OptimizationResult {
    double optimal_phase_rad = 0.0;  // wrapped into [0, 2*pi)
    double objective_w = 0.0;        // sample-average expected power at the optimum
    int iterations = 0;
    bool converged = false;
    double final_gradient_norm = 0.0;  // gradient of the normalized objective
    std::vector<IterateRecord> history;  // winning start, initial point included
};

/// Closed-form ideal optimum: the phase offset wrapped into [0, 2*pi).
/// Received power at the result attains (A_su + A_ru)^2.
double optimal_phase_ideal(const LinkBudget& budget);

/// The stationary family phase_offset + pi*n for n in [n_min, n_max]
/// (inclusive). Even n are maxima of received_power, odd n minima.
std::vector<double> stationary_phases(const LinkBudget& budget, int n_min, int n_max);

/// Draw sample_count i.i.d. uniform errors from U(-sigma, sigma) with a
/// deterministic 64-bit generator; identical seeds give identical sequences.
std::vector<double> draw_errors(const PhaseErrorModel& error, const McConfig& mc);

/// Sample-average estimate of the expected received power over a fresh
/// draw_errors sequence. Deterministic given the seed.
double estimate_expected_power(const LinkBudget& budget, double ris_phase_rad,
                               const PhaseErrorModel& error, const McConfig& mc,
                               SampleMode mode);

/// Exact derivative of the sample-average objective with respect to the RIS
/// phase, on a fixed error sample set.
double analytic_gradient(const LinkBudget& budget, double ris_phase_rad,
                         std::span<const double> errors,
                         const PhaseErrorModel& error, SampleMode mode);

/// Maximize the sample-average expected power over the RIS phase.
///
/// The error samples are drawn once per run and frozen (sample-average
/// approximation), making the objective smooth and deterministic. The loop is
/// a scalar BFGS on the negated, scale-normalized objective with a Wolfe line
/// search; multistart runs begin at equally spaced phases and the best final
/// objective wins. Non-convergence within max_iterations is reported via
/// `converged`, not an error.
OptimizationResult optimize_stochastic(const LinkBudget& budget,
                                       const PhaseErrorModel& error,
                                       const McConfig& mc, const BfgsConfig& bfgs,
                                       SampleMode mode);

}  // namespace rislink
