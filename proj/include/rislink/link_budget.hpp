#pragma once

#include <vector>

#include "rislink/geometry.hpp"

namespace rislink {

/// Radio-side scenario parameters. Gains are linear (not dBi); conversion
/// from dBi happens at the configuration boundary.
struct RadioConfig {
    double frequency_hz = 0.0;
    double tx_power_w = 0.0;
    double gain_tx = 1.0;
    double gain_rx = 1.0;
    double gain_ris_in = 1.0;   // aggregate incidence-side gain
    double gain_ris_out = 1.0;  // aggregate departure-side gain
    double excess_loss_direct_db = 0.0;  // ground-clutter excess on the direct path

    bool operator==(const RadioConfig&) const = default;
};

struct RisElement {
    double reflection_magnitude = 1.0;
    double phase_rad = 0.0;

    bool operator==(const RisElement&) const = default;
};

/// The RIS element set. With `passive` set, every element magnitude must lie
/// in [0, 1]; without it, magnitudes above 1 model active elements.
struct RisArray {
    std::vector<RisElement> elements;
    bool passive = true;

    bool operator==(const RisArray&) const = default;
};

/// Magnitude and phase of the complex element sum, with the phase expressed
/// in the e^{-j*phase} reflection convention and wrapped into [0, 2*pi).
struct AggregateReflection {
    double magnitude = 0.0;
    double phase_rad = 0.0;
};

/// Everything the two-path power model consumes: field amplitudes, unwrapped
/// electrical phases, and the distances/losses they came from.
struct LinkBudget {
    double amplitude_su = 0.0;  // direct-path field amplitude, sqrt(W)
    double amplitude_ru = 0.0;  // RIS-path field amplitude, sqrt(W)
    double phase_su_rad = 0.0;  // (2*pi/lambda) * d_su, unwrapped
    double phase_sr_rad = 0.0;
    double phase_ru_rad = 0.0;
    double phase_offset_rad = 0.0;  // phase_su - phase_sr - phase_ru, stored exactly
    double d_su_m = 0.0;
    double d_sr_m = 0.0;
    double d_ru_m = 0.0;
    double loss_su = 0.0;  // linear power losses; loss_su includes the excess term
    double loss_sr = 0.0;
    double loss_ru = 0.0;
};

/// c / f with c = 299792458 m/s exactly. Throws on f <= 0.
double wavelength(double frequency_hz);

/// Free-space power loss (4*pi*d/lambda)^2, linear. Throws on d or lambda <= 0.
double free_space_loss(double distance_m, double wavelength_m);

/// Validate a RadioConfig; throws std::invalid_argument naming the bad field.
void validate(const RadioConfig& radio);

/// Validate a RisArray against its invariants (non-empty, finite magnitudes,
/// passive bound when set).
void validate(const RisArray& ris);

/// Complex sum of the element reflections. Zero-magnitude sums report phase 0.
AggregateReflection aggregate_reflection(const RisArray& ris);

/// Assemble the link budget from distances, radio parameters, and the
/// aggregate RIS reflection magnitude.
LinkBudget build_link_budget(const PropagationDistances& distances,
                             const RadioConfig& radio,
                             double aggregate_magnitude);

}  // namespace rislink
