#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rislink/power_model.hpp"

namespace rislink::kernels {

// Fixed reduction block size. Parallel kernels sum each block serially and
// combine the block partials in index order, so the result is bitwise
// identical for any thread count (including 1). The *_serial variants are the
// straight-line reference implementations the tests and the benchmark compare
// against.
inline constexpr std::size_t kReductionBlock = 4096;

/// Mean of sample_power over a fixed error sequence — serial reference.
double mean_sample_power_serial(const LinkBudget& budget, double ris_phase_rad,
                                std::span<const double> errors,
                                const PhaseErrorModel& error, SampleMode mode);

/// Mean of sample_power over a fixed error sequence — blocked OpenMP kernel.
double mean_sample_power(const LinkBudget& budget, double ris_phase_rad,
                         std::span<const double> errors,
                         const PhaseErrorModel& error, SampleMode mode);

/// d/dphi of the sample mean — serial reference.
double mean_power_gradient_serial(const LinkBudget& budget, double ris_phase_rad,
                                  std::span<const double> errors,
                                  const PhaseErrorModel& error, SampleMode mode);

/// d/dphi of the sample mean — blocked OpenMP kernel.
double mean_power_gradient(const LinkBudget& budget, double ris_phase_rad,
                           std::span<const double> errors,
                           const PhaseErrorModel& error, SampleMode mode);

/// Per-sample mean and standard deviation in one pass (for standard-error
/// bounds on Monte Carlo estimates).
struct SampleStats {
    double mean = 0.0;
    double stddev = 0.0;
};
SampleStats sample_power_stats(const LinkBudget& budget, double ris_phase_rad,
                               std::span<const double> errors,
                               const PhaseErrorModel& error, SampleMode mode);

struct GridMaxResult {
    std::size_t index = 0;
    double argument = 0.0;
    double value = 0.0;
};

namespace detail {

inline double grid_point(double lo, double hi, std::size_t points, std::size_t i) {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points);
}

}  // namespace detail

/// Exhaustive maximum of f over `points` samples of [lo, hi), serial
/// reference. Ties resolve to the lowest index.
template <class F>
GridMaxResult grid_max_serial(F&& f, double lo, double hi, std::size_t points) {
    GridMaxResult best{0, detail::grid_point(lo, hi, points, 0), f(detail::grid_point(lo, hi, points, 0))};
    for (std::size_t i = 1; i < points; ++i) {
        const double arg = detail::grid_point(lo, hi, points, i);
        const double value = f(arg);
        if (value > best.value) {
            best = GridMaxResult{i, arg, value};
        }
    }
    return best;
}

/// Exhaustive maximum of f over `points` samples of [lo, hi), parallel over
/// fixed blocks. Block-local maxima are combined in index order, preserving
/// the lowest-index tie-break for any thread count.
template <class F>
GridMaxResult grid_max(F&& f, double lo, double hi, std::size_t points) {
    const std::size_t block_count = (points + kReductionBlock - 1) / kReductionBlock;
    std::vector<GridMaxResult> block_best(block_count);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(block_count); ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
        const std::size_t end = begin + kReductionBlock < points ? begin + kReductionBlock : points;
        GridMaxResult best{begin, detail::grid_point(lo, hi, points, begin),
                           f(detail::grid_point(lo, hi, points, begin))};
        for (std::size_t i = begin + 1; i < end; ++i) {
            const double arg = detail::grid_point(lo, hi, points, i);
            const double value = f(arg);
            if (value > best.value) {
                best = GridMaxResult{i, arg, value};
            }
        }
        block_best[static_cast<std::size_t>(b)] = best;
    }

    GridMaxResult best = block_best[0];
    for (std::size_t b = 1; b < block_count; ++b) {
        if (block_best[b].value > best.value) {
            best = block_best[b];
        }
    }
    return best;
}

}  // namespace rislink::kernels
