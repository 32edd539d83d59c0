#include "rislink/power_model.hpp"

#include <stdexcept>

namespace rislink {

namespace detail {

namespace {

PowerTerms make_terms(const LinkBudget& budget, double ris_phase_rad,
                      double attenuation) {
    if (!std::isfinite(ris_phase_rad)) {
        throw std::invalid_argument("ris phase must be finite");
    }
    PowerTerms t;
    t.base = budget.amplitude_su * budget.amplitude_su +
             budget.amplitude_ru * budget.amplitude_ru;
    t.cross = 2.0 * budget.amplitude_su * budget.amplitude_ru * attenuation;
    t.offset = ris_phase_rad - budget.phase_offset_rad;
    return t;
}

}  // namespace

PowerTerms ideal_terms(const LinkBudget& budget, double ris_phase_rad) {
    return make_terms(budget, ris_phase_rad, 1.0);
}

PowerTerms expected_terms(const LinkBudget& budget, double ris_phase_rad,
                          const PhaseErrorModel& error) {
    return make_terms(budget, ris_phase_rad, sinc(error.sigma_rad));
}

PowerTerms sample_terms(const LinkBudget& budget, double ris_phase_rad,
                        const PhaseErrorModel& error, SampleMode mode) {
    switch (mode) {
        case SampleMode::Sampled:
            return make_terms(budget, ris_phase_rad, 1.0);
        case SampleMode::Paper:
            return make_terms(budget, ris_phase_rad, sinc(error.sigma_rad));
    }
    throw std::invalid_argument("unknown sample mode");
}

}  // namespace detail

double received_power(const LinkBudget& budget, double ris_phase_rad) {
    return detail::eval_power(detail::ideal_terms(budget, ris_phase_rad), 0.0);
}

double expected_power_closed_form(const LinkBudget& budget, double ris_phase_rad,
                                  const PhaseErrorModel& error) {
    return detail::eval_power(detail::expected_terms(budget, ris_phase_rad, error), 0.0);
}

double sample_power(const LinkBudget& budget, double ris_phase_rad, double error_rad,
                    const PhaseErrorModel& error, SampleMode mode) {
    if (!std::isfinite(error_rad)) {
        throw std::invalid_argument("phase error sample must be finite");
    }
    return detail::eval_power(detail::sample_terms(budget, ris_phase_rad, error, mode),
                              error_rad);
}

}  // namespace rislink
