#pragma once

#include <cmath>

#include "rislink/link_budget.hpp"

namespace rislink {

/// Uniform phase-error model: errors are drawn from U(-sigma, sigma).
/// sigma = 0 means error-free.
struct PhaseErrorModel {
    double sigma_rad = 0.0;

    bool operator==(const PhaseErrorModel&) const = default;
};

/// How per-sample power treats the sinc attenuation factor.
///
/// Paper: the per-sample formula keeps the sinc(sigma) factor alongside the
/// sampled error, so the Monte Carlo mean tends to a doubly-attenuated cross
/// term (sinc^2). Sampled: the factor is dropped and the sample mean
/// converges to the closed-form expectation. Sampled is the default
/// everywhere a default applies.
enum class SampleMode {
    Sampled,
    Paper,
};

/// sin(x)/x with the removable singularity filled in; even in x.
/// Near zero a short Taylor series avoids cancellation noise.
inline double sinc(double x) {
    if (x == 0.0) return 1.0;
    if (std::abs(x) < 1e-8) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

namespace detail {

/// Precomputed pieces of the two-path power expression so that per-sample
/// evaluation is a single cos and fma. Shared by the scalar entry points and
/// the batched kernels, which keeps their arithmetic bitwise identical.
struct PowerTerms {
    double base = 0.0;    // amplitude_su^2 + amplitude_ru^2
    double cross = 0.0;   // 2 * amplitude_su * amplitude_ru * attenuation
    double offset = 0.0;  // ris_phase - phase_offset
};

inline double eval_power(const PowerTerms& t, double error_rad) {
    return t.base + t.cross * std::cos(t.offset + error_rad);
}

inline double eval_power_derivative(const PowerTerms& t, double error_rad) {
    return -t.cross * std::sin(t.offset + error_rad);
}

PowerTerms ideal_terms(const LinkBudget& budget, double ris_phase_rad);
PowerTerms expected_terms(const LinkBudget& budget, double ris_phase_rad,
                          const PhaseErrorModel& error);
PowerTerms sample_terms(const LinkBudget& budget, double ris_phase_rad,
                        const PhaseErrorModel& error, SampleMode mode);

}  // namespace detail

/// Instantaneous received power at RIS phase `ris_phase_rad`, watts.
/// Bounded by [(A_su - A_ru)^2, (A_su + A_ru)^2] and 2*pi-periodic.
double received_power(const LinkBudget& budget, double ris_phase_rad);

/// Expected received power under uniform phase error: the interference cross
/// term is attenuated by sinc(sigma).
double expected_power_closed_form(const LinkBudget& budget, double ris_phase_rad,
                                  const PhaseErrorModel& error);

/// Received power for one drawn phase error. See SampleMode for the two
/// readings of the per-sample formula.
double sample_power(const LinkBudget& budget, double ris_phase_rad, double error_rad,
                    const PhaseErrorModel& error, SampleMode mode);

}  // namespace rislink
