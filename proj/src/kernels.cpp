#include "rislink/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace rislink::kernels {

namespace {

using rislink::detail::PowerTerms;

void require_samples(std::span<const double> errors) {
    if (errors.empty()) {
        throw std::invalid_argument("error sample list must be non-empty");
    }
}

// Blocked mean of eval(terms, errors[i]): each block sums serially, block
// partials combine in index order. Bitwise stable under any thread count.
template <class Eval>
double blocked_mean(const PowerTerms& terms, std::span<const double> errors, Eval eval) {
    const std::size_t n = errors.size();
    const std::size_t block_count = (n + kReductionBlock - 1) / kReductionBlock;
    std::vector<double> partial(block_count);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(block_count); ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
        const std::size_t end = begin + kReductionBlock < n ? begin + kReductionBlock : n;
        double sum = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            sum += eval(terms, errors[i]);
        }
        partial[static_cast<std::size_t>(b)] = sum;
    }

    double total = 0.0;
    for (double p : partial) total += p;
    return total / static_cast<double>(n);
}

template <class Eval>
double serial_mean(const PowerTerms& terms, std::span<const double> errors, Eval eval) {
    double sum = 0.0;
    for (double e : errors) sum += eval(terms, e);
    return sum / static_cast<double>(errors.size());
}

}  // namespace

double mean_sample_power_serial(const LinkBudget& budget, double ris_phase_rad,
                                std::span<const double> errors,
                                const PhaseErrorModel& error, SampleMode mode) {
    require_samples(errors);
    const PowerTerms terms = rislink::detail::sample_terms(budget, ris_phase_rad, error, mode);
    if (error.sigma_rad == 0.0) {
        // All draws are exactly zero; the mean is the single sample value.
        return rislink::detail::eval_power(terms, 0.0);
    }
    return serial_mean(terms, errors, rislink::detail::eval_power);
}

double mean_sample_power(const LinkBudget& budget, double ris_phase_rad,
                         std::span<const double> errors,
                         const PhaseErrorModel& error, SampleMode mode) {
    require_samples(errors);
    const PowerTerms terms = rislink::detail::sample_terms(budget, ris_phase_rad, error, mode);
    if (error.sigma_rad == 0.0) {
        return rislink::detail::eval_power(terms, 0.0);
    }
    return blocked_mean(terms, errors, rislink::detail::eval_power);
}

double mean_power_gradient_serial(const LinkBudget& budget, double ris_phase_rad,
                                  std::span<const double> errors,
                                  const PhaseErrorModel& error, SampleMode mode) {
    require_samples(errors);
    const PowerTerms terms = rislink::detail::sample_terms(budget, ris_phase_rad, error, mode);
    if (error.sigma_rad == 0.0) {
        return rislink::detail::eval_power_derivative(terms, 0.0);
    }
    return serial_mean(terms, errors, rislink::detail::eval_power_derivative);
}

double mean_power_gradient(const LinkBudget& budget, double ris_phase_rad,
                           std::span<const double> errors,
                           const PhaseErrorModel& error, SampleMode mode) {
    require_samples(errors);
    const PowerTerms terms = rislink::detail::sample_terms(budget, ris_phase_rad, error, mode);
    if (error.sigma_rad == 0.0) {
        return rislink::detail::eval_power_derivative(terms, 0.0);
    }
    return blocked_mean(terms, errors, rislink::detail::eval_power_derivative);
}

SampleStats sample_power_stats(const LinkBudget& budget, double ris_phase_rad,
                               std::span<const double> errors,
                               const PhaseErrorModel& error, SampleMode mode) {
    require_samples(errors);
    const PowerTerms terms = rislink::detail::sample_terms(budget, ris_phase_rad, error, mode);
    const double mean = error.sigma_rad == 0.0
                            ? rislink::detail::eval_power(terms, 0.0)
                            : blocked_mean(terms, errors, rislink::detail::eval_power);

    auto squared_residual = [mean](const PowerTerms& t, double e) {
        const double r = rislink::detail::eval_power(t, e) - mean;
        return r * r;
    };
    const double variance =
        error.sigma_rad == 0.0 ? 0.0 : blocked_mean(terms, errors, squared_residual);
    return SampleStats{mean, std::sqrt(variance)};
}

}  // namespace rislink::kernels
