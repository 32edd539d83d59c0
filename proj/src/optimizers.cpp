#include "rislink/optimizers.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rislink/kernels.hpp"
#include "rislink/rng.hpp"
#include "rislink/units.hpp"

namespace rislink {

namespace {

void validate(const McConfig& mc) {
    if (mc.sample_count < 1) {
        throw std::invalid_argument("mc.sample_count must be >= 1");
    }
}

void validate(const BfgsConfig& cfg) {
    if (!(cfg.tolerance > 0.0) || !std::isfinite(cfg.tolerance))
        throw std::invalid_argument("bfgs.tolerance must be positive");
    if (!(cfg.initial_hessian > 0.0) || !std::isfinite(cfg.initial_hessian))
        throw std::invalid_argument("bfgs.initial_hessian must be positive");
    if (cfg.max_iterations < 1)
        throw std::invalid_argument("bfgs.max_iterations must be >= 1");
    if (cfg.multistart_count < 1)
        throw std::invalid_argument("bfgs.multistart_count must be >= 1");
    if (!(cfg.wolfe_c1 > 0.0 && cfg.wolfe_c1 < cfg.wolfe_c2 && cfg.wolfe_c2 < 1.0))
        throw std::invalid_argument("bfgs wolfe constants must satisfy 0 < c1 < c2 < 1");
    if (!std::isfinite(cfg.initial_phase_rad))
        throw std::invalid_argument("bfgs.initial_phase_rad must be finite");
}

// Negated sample-average objective, normalized by amplitude_su^2 +
// amplitude_ru^2 so that values and gradients are O(1) regardless of the
// absolute power scale (satellite links sit many orders of magnitude below a
// watt). The convergence tolerance is interpreted on this normalized scale;
// reported objective values are un-normalized watts.
class SaaObjective {
public:
    SaaObjective(const LinkBudget& budget, std::span<const double> errors,
                 const PhaseErrorModel& error, SampleMode mode)
        : budget_(budget), errors_(errors), error_(error), mode_(mode),
          scale_(budget.amplitude_su * budget.amplitude_su +
                 budget.amplitude_ru * budget.amplitude_ru) {
        if (!(scale_ > 0.0)) {
            throw std::invalid_argument("link budget amplitudes must not both be zero");
        }
    }

    double power_w(double phase) const {
        return kernels::mean_sample_power(budget_, phase, errors_, error_, mode_);
    }
    double value(double phase) const { return -power_w(phase) / scale_; }
    double gradient(double phase) const {
        return -kernels::mean_power_gradient(budget_, phase, errors_, error_, mode_) /
               scale_;
    }
    double scale() const { return scale_; }

private:
    const LinkBudget& budget_;
    std::span<const double> errors_;
    PhaseErrorModel error_;
    SampleMode mode_;
    double scale_;
};

struct LineSearchPoint {
    double alpha = 0.0;
    double f = 0.0;
    double gradient = 0.0;  // full scalar gradient at x + alpha*d
    bool ok = false;
};

// Weak-Wolfe line search by bisection/expansion, starting from alpha = 1.
// dir_derivative = f'(x)*d must be negative on entry.
LineSearchPoint wolfe_line_search(const SaaObjective& obj, double x, double d,
                                  double f0, double dir_derivative, double c1,
                                  double c2) {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    double alpha = 1.0;
    LineSearchPoint armijo_fallback;

    for (int trial = 0; trial < 60; ++trial) {
        const double f = obj.value(x + alpha * d);
        if (!std::isfinite(f) || f > f0 + c1 * alpha * dir_derivative) {
            hi = alpha;
            alpha = 0.5 * (lo + hi);
            continue;
        }
        const double g = obj.gradient(x + alpha * d);
        if (g * d < c2 * dir_derivative) {
            // Sufficient decrease holds but curvature does not: step further.
            armijo_fallback = LineSearchPoint{alpha, f, g, true};
            lo = alpha;
            alpha = std::isinf(hi) ? 2.0 * alpha : 0.5 * (lo + hi);
            continue;
        }
        return LineSearchPoint{alpha, f, g, true};
    }
    return armijo_fallback;  // ok == false when not even Armijo was met
}

struct StartOutcome {
    double phase = 0.0;       // final iterate, unwrapped
    double power_w = 0.0;     // objective at the final iterate
    int iterations = 0;
    bool converged = false;
    double gradient_norm = 0.0;
    std::vector<IterateRecord> history;
};

StartOutcome run_single_start(const SaaObjective& obj, double start_phase,
                              const BfgsConfig& cfg) {
    StartOutcome out;
    double x = start_phase;
    double power = obj.power_w(x);
    double f = -power / obj.scale();
    double g = obj.gradient(x);
    double hessian = cfg.initial_hessian;

    out.history.push_back(IterateRecord{x, power});
    out.gradient_norm = std::abs(g);
    if (out.gradient_norm <= cfg.tolerance) {
        out.converged = true;
        out.phase = x;
        out.power_w = power;
        return out;
    }

    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        const double direction = -g / hessian;
        const double dir_derivative = g * direction;
        const LineSearchPoint step =
            wolfe_line_search(obj, x, direction, f, dir_derivative, cfg.wolfe_c1,
                              cfg.wolfe_c2);
        if (!step.ok) {
            break;  // no acceptable step; report the best iterate so far
        }

        const double x_next = x + step.alpha * direction;
        const double s = x_next - x;
        const double y = step.gradient - g;

        // Scalar specialization of the BFGS update (collapses to the secant
        // ratio), skipped when curvature information is unusable.
        const double ys = y * s;
        if (std::abs(ys) >= 1e-12 * std::abs(y) * std::abs(s) && ys > 0.0) {
            hessian = y / s;
        }

        const double f_next = step.f;
        const double power_next = obj.power_w(x_next);
        const bool objective_stalled =
            std::abs(f_next - f) <= cfg.tolerance * (1.0 + std::abs(f_next));

        x = x_next;
        f = f_next;
        power = power_next;
        g = step.gradient;
        out.iterations = iter;
        out.history.push_back(IterateRecord{x, power});

        if (std::abs(g) <= cfg.tolerance || objective_stalled) {
            out.converged = true;
            break;
        }
    }

    out.phase = x;
    out.power_w = power;
    out.gradient_norm = std::abs(g);
    return out;
}

}  // namespace

double optimal_phase_ideal(const LinkBudget& budget) {
    return wrap_two_pi(budget.phase_offset_rad);
}

std::vector<double> stationary_phases(const LinkBudget& budget, int n_min, int n_max) {
    if (n_min > n_max) {
        throw std::invalid_argument("stationary phase interval is empty");
    }
    std::vector<double> phases;
    phases.reserve(static_cast<std::size_t>(n_max - n_min) + 1);
    for (int n = n_min; n <= n_max; ++n) {
        phases.push_back(budget.phase_offset_rad + kPi * static_cast<double>(n));
    }
    return phases;
}

std::vector<double> draw_errors(const PhaseErrorModel& error, const McConfig& mc) {
    if (!(error.sigma_rad >= 0.0) || !std::isfinite(error.sigma_rad)) {
        throw std::invalid_argument("error.sigma_rad must be finite and >= 0");
    }
    validate(mc);
    SplitMix64 rng(mc.seed);
    std::vector<double> draws(mc.sample_count);
    for (double& d : draws) {
        d = error.sigma_rad * (2.0 * rng.uniform01() - 1.0);
    }
    return draws;
}

double estimate_expected_power(const LinkBudget& budget, double ris_phase_rad,
                               const PhaseErrorModel& error, const McConfig& mc,
                               SampleMode mode) {
    const std::vector<double> errors = draw_errors(error, mc);
    return kernels::mean_sample_power(budget, ris_phase_rad, errors, error, mode);
}

double analytic_gradient(const LinkBudget& budget, double ris_phase_rad,
                         std::span<const double> errors,
                         const PhaseErrorModel& error, SampleMode mode) {
    return kernels::mean_power_gradient(budget, ris_phase_rad, errors, error, mode);
}

OptimizationResult optimize_stochastic(const LinkBudget& budget,
                                       const PhaseErrorModel& error,
                                       const McConfig& mc, const BfgsConfig& cfg,
                                       SampleMode mode) {
    validate(mc);
    validate(cfg);
    if (!(error.sigma_rad >= 0.0) || !std::isfinite(error.sigma_rad)) {
        throw std::invalid_argument("error.sigma_rad must be finite and >= 0");
    }

    // One frozen sample set for the whole run: every start and every line
    // search evaluation sees the same deterministic objective.
    const std::vector<double> errors = draw_errors(error, mc);
    const SaaObjective objective(budget, errors, error, mode);

    StartOutcome best;
    bool have_best = false;
    for (int k = 0; k < cfg.multistart_count; ++k) {
        const double start = wrap_two_pi(
            cfg.initial_phase_rad +
            kTwoPi * static_cast<double>(k) / static_cast<double>(cfg.multistart_count));
        StartOutcome outcome = run_single_start(objective, start, cfg);
        if (!have_best || outcome.power_w > best.power_w) {
            best = std::move(outcome);
            have_best = true;
        }
    }

    OptimizationResult result;
    result.optimal_phase_rad = wrap_two_pi(best.phase);
    result.objective_w = best.power_w;
    result.iterations = best.iterations;
    result.converged = best.converged;
    result.final_gradient_norm = best.gradient_norm;
    result.history = std::move(best.history);
    return result;
}

}  // namespace rislink
