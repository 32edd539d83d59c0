#include "rislink/link_budget.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "rislink/units.hpp"

namespace rislink {

double wavelength(double frequency_hz) {
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz)) {
        throw std::invalid_argument("frequency must be positive and finite");
    }
    return kSpeedOfLightMps / frequency_hz;
}

double free_space_loss(double distance_m, double wavelength_m) {
    if (!(distance_m > 0.0) || !std::isfinite(distance_m)) {
        throw std::invalid_argument("distance must be positive and finite");
    }
    if (!(wavelength_m > 0.0) || !std::isfinite(wavelength_m)) {
        throw std::invalid_argument("wavelength must be positive and finite");
    }
    const double ratio = 4.0 * kPi * distance_m / wavelength_m;
    return ratio * ratio;
}

void validate(const RadioConfig& radio) {
    auto positive_finite = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!positive_finite(radio.frequency_hz))
        throw std::invalid_argument("radio.frequency_hz must be positive");
    if (!positive_finite(radio.tx_power_w))
        throw std::invalid_argument("radio.tx_power_w must be positive");
    if (!positive_finite(radio.gain_tx))
        throw std::invalid_argument("radio.gain_tx must be positive");
    if (!positive_finite(radio.gain_rx))
        throw std::invalid_argument("radio.gain_rx must be positive");
    if (!positive_finite(radio.gain_ris_in))
        throw std::invalid_argument("radio.gain_ris_in must be positive");
    if (!positive_finite(radio.gain_ris_out))
        throw std::invalid_argument("radio.gain_ris_out must be positive");
    if (radio.excess_loss_direct_db < 0.0 || !std::isfinite(radio.excess_loss_direct_db))
        throw std::invalid_argument("radio.excess_loss_direct_db must be >= 0");
}

void validate(const RisArray& ris) {
    if (ris.elements.empty()) {
        throw std::invalid_argument("ris.elements must be non-empty");
    }
    for (const RisElement& e : ris.elements) {
        if (!(e.reflection_magnitude >= 0.0) || !std::isfinite(e.reflection_magnitude)) {
            throw std::invalid_argument("ris element magnitude must be finite and >= 0");
        }
        if (!std::isfinite(e.phase_rad)) {
            throw std::invalid_argument("ris element phase must be finite");
        }
        if (ris.passive && e.reflection_magnitude > 1.0) {
            throw std::invalid_argument("passive ris element magnitude must be <= 1");
        }
    }
}

AggregateReflection aggregate_reflection(const RisArray& ris) {
    validate(ris);
    std::complex<double> sum{0.0, 0.0};
    for (const RisElement& e : ris.elements) {
        sum += std::complex<double>(e.reflection_magnitude * std::cos(e.phase_rad),
                                    -e.reflection_magnitude * std::sin(e.phase_rad));
    }
    AggregateReflection out;
    out.magnitude = std::abs(sum);
    // Sum convention is sum(gamma_n * e^{-j*phi_n}); report phase so the
    // aggregate reads |gamma| * e^{-j*phase}. A zero sum has no phase.
    out.phase_rad = out.magnitude == 0.0 ? 0.0 : wrap_two_pi(-std::arg(sum));
    return out;
}

LinkBudget build_link_budget(const PropagationDistances& distances,
                             const RadioConfig& radio,
                             double aggregate_magnitude) {
    validate(radio);
    if (!(aggregate_magnitude >= 0.0) || !std::isfinite(aggregate_magnitude)) {
        throw std::invalid_argument("aggregate reflection magnitude must be >= 0");
    }

    const double lambda = wavelength(radio.frequency_hz);

    LinkBudget b;
    b.d_su_m = distances.d_su_m;
    b.d_sr_m = distances.d_sr_m;
    b.d_ru_m = distances.d_ru_m;

    // Direct path carries the ground-clutter excess; the RIS legs are assumed
    // unobstructed and stay pure free-space.
    b.loss_su = free_space_loss(distances.d_su_m, lambda) *
                db_to_linear(radio.excess_loss_direct_db);
    b.loss_sr = free_space_loss(distances.d_sr_m, lambda);
    b.loss_ru = free_space_loss(distances.d_ru_m, lambda);

    // Transmit power enters the amplitudes once (as sqrt(P_t)); the power
    // expression downstream adds no further prefactor.
    b.amplitude_su =
        std::sqrt(radio.tx_power_w * radio.gain_tx * radio.gain_rx / b.loss_su);
    b.amplitude_ru = std::sqrt(radio.tx_power_w * radio.gain_tx * radio.gain_ris_in *
                               radio.gain_ris_out * radio.gain_rx /
                               (b.loss_sr * b.loss_ru)) *
                     aggregate_magnitude;

    const double wavenumber = kTwoPi / lambda;
    b.phase_su_rad = wavenumber * distances.d_su_m;
    b.phase_sr_rad = wavenumber * distances.d_sr_m;
    b.phase_ru_rad = wavenumber * distances.d_ru_m;
    b.phase_offset_rad = b.phase_su_rad - b.phase_sr_rad - b.phase_ru_rad;
    return b;
}

}  // namespace rislink
