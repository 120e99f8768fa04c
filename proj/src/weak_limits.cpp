#include "deltabeta/weak_limits.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <future>
#include <limits>
#include <string>
#include <vector>

namespace deltabeta {

namespace {

void require_support(const TestFunction& phi) {
    if (!phi.contains_zero()) {
        throw SupportError("test function '" + phi.label + "' support [" +
                           std::to_string(phi.lo) + ", " + std::to_string(phi.hi) +
                           "] does not contain 0 in its interior");
    }
}

void check_positive(double v, const char* name) {
    require_finite(v, name);
    if (!(v > 0.0)) throw DomainError(std::string(name) + " must be positive");
}

double clip_lo(const TestFunction& phi) { return std::max(phi.lo, -kOuterCut); }
double clip_hi(const TestFunction& phi) { return std::min(phi.hi, kOuterCut); }

// Integral over the clipped support of an integrand peaked at 0 with the
// given width.
Complex integrate_peaked(const ComplexIntegrand& f, const TestFunction& phi, double width,
                         const QuadratureConfig& cfg,
                         double max_panel = std::numeric_limits<double>::infinity()) {
    const auto pts = peak_partition(clip_lo(phi), clip_hi(phi), width, max_panel);
    return integrate_adaptive(f, pts, cfg).value;
}

QuadratureConfig tightened(const QuadratureConfig& cfg, double factor) {
    QuadratureConfig inner = cfg;
    inner.abs_tol = cfg.abs_tol * factor;
    inner.rel_tol = cfg.rel_tol * factor;
    return inner;
}

Complex gamma_prefactor(double x, double y) {
    return std::exp(log_gamma({1.0, x}) + log_gamma({1.0, y}) - log_gamma({1.0, x + y}));
}

}  // namespace

ConvergenceRecord ConvergenceRecord::make(double reg_a, double reg_b, Complex action,
                                          Complex target) {
    ConvergenceRecord r;
    r.reg_a = reg_a;
    r.reg_b = reg_b;
    r.action = action;
    r.target = target;
    r.abs_err = std::abs(action - target);
    const double scale = std::abs(target);
    r.rel_err = scale > 0.0 ? r.abs_err / scale : r.abs_err;
    return r;
}

DistributionalResult theorem_distribution() {
    return {2.0 * kPi, 0.0, false, false, [](double, double) { return Complex(1.0, 0.0); }};
}

DistributionalResult shifted_distribution(int n, int k) {
    return {binomial(n, k) * 2.0 * kPi, 0.0, false, false,
            [](double, double) { return Complex(1.0, 0.0); }};
}

DistributionalResult offdiag_distribution() {
    return {kPi, kPi, true, true, gamma_prefactor};
}

double binomial(int n, int k) {
    if (n < 0 || k < 0) throw DomainError("binomial needs n, k >= 0");
    double out = 1.0;
    for (int i = 1; i <= std::min(n, k); ++i) {
        out = out * static_cast<double>(std::max(n, k) + i) / static_cast<double>(i);
    }
    return out;
}

double diag_outer_tail_mass(double eps) {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-300;
    cfg.rel_tol = 1e-6;
    auto f = [eps](double x) { return Complex(std::abs(beta_diag_regularized(eps, x)), 0.0); };
    return 2.0 * integrate_adaptive(f, kOuterCut, kMaxImaginaryCoordinate, cfg).value.real();
}

ConvergenceRecord action_theorem(double eps, const TestFunction& phi, const QuadratureConfig& cfg) {
    check_positive(eps, "eps");
    require_support(phi);
    auto f = [&](double x) { return phi(x) * beta_diag_regularized(eps, x); };
    const Complex action = integrate_peaked(f, phi, eps, cfg);
    return ConvergenceRecord::make(eps, eps, action, theorem_distribution().delta_x_coeff *
                                                         phi.value_at_zero);
}

ConvergenceRecord action_lemma(double eps, const SmoothFactorFn& fn, const TestFunction& phi,
                               const QuadratureConfig& cfg) {
    check_positive(eps, "eps");
    require_support(phi);
    auto f = [&](double x) { return phi(x) * fn(eps, x) * (eps / (eps * eps + x * x)); };
    const Complex action = integrate_peaked(f, phi, eps, cfg);
    const Complex target = kPi * fn(0.0, 0.0) * phi.value_at_zero;
    return ConvergenceRecord::make(eps, eps, action, target);
}

ConvergenceRecord action_truncated(double mu, const TestFunction& phi,
                                   const QuadratureConfig& cfg) {
    const TruncationParams trunc{mu, mu};
    trunc.validate();
    if (!(mu > 0.0)) throw DomainError("truncation mu must be positive");
    require_support(phi);
    const double cut = trunc.beta_cut();
    // Substituting xi = ln((1 - t) / t) turns the t-integral into the
    // integral of exp(-i xi x) over [-alpha_cut, beta_cut].
    auto f = [&](double x) { return phi(x) * truncated_fourier(-x, trunc.alpha_cut(), cut); };
    const Complex action = integrate_peaked(f, phi, 1.0 / cut, cfg, kPi / cut);
    return ConvergenceRecord::make(mu, mu, action, 2.0 * kPi * phi.value_at_zero);
}

bool errors_decreasing(std::span<const ConvergenceRecord> records, double noise_floor) {
    for (std::size_t i = 1; i < records.size(); ++i) {
        const double cur = records[i].rel_err;
        if (cur <= noise_floor) continue;
        if (!(cur < records[i - 1].rel_err)) return false;
    }
    return true;
}

SweepResult sweep(const PointEvaluator& op, std::span<const double> schedule,
                  const SweepOptions& opts) {
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (!(schedule[i] > 0.0) || !std::isfinite(schedule[i])) {
            throw ConfigError("schedule values must be positive and finite");
        }
        if (i > 0 && !(schedule[i] < schedule[i - 1])) {
            throw ConfigError("schedule must be strictly decreasing");
        }
    }

    auto evaluate_point = [&op](double reg) {
        try {
            return op(reg);
        } catch (const std::exception& e) {
            ConvergenceRecord r;
            r.reg_a = reg;
            r.reg_b = reg;
            r.failure = e.what();
            if (const auto* q = dynamic_cast<const QuadratureError*>(&e)) r.action = q->estimate();
            return r;
        }
    };

    SweepResult out;
    if (opts.parallel && schedule.size() > 1) {
        std::vector<std::future<ConvergenceRecord>> pending;
        pending.reserve(schedule.size());
        for (double reg : schedule) {
            pending.push_back(std::async(std::launch::async, evaluate_point, reg));
        }
        for (auto& p : pending) out.records.push_back(p.get());
    } else {
        for (double reg : schedule) out.records.push_back(evaluate_point(reg));
    }

    out.all_evaluated = std::all_of(out.records.begin(), out.records.end(),
                                    [](const ConvergenceRecord& r) { return r.ok(); });
    if (out.records.size() >= 2) {
        out.monotone = out.all_evaluated && errors_decreasing(out.records, opts.noise_floor);
    }
    out.final_within_tolerance = !out.records.empty() && out.records.back().ok() &&
                                 out.records.back().rel_err < opts.final_tolerance;
    return out;
}

Corollary2Result verify_corollary2(std::span<const double> eps_schedule,
                                   std::span<const double> mu_schedule, const TestFunction& phi,
                                   const QuadratureConfig& cfg, const SweepOptions& opts) {
    require_support(phi);
    Corollary2Result out;
    out.route_eps = sweep([&](double eps) { return action_theorem(eps, phi, cfg); },
                          eps_schedule, opts);
    out.route_trunc = sweep([&](double mu) { return action_truncated(mu, phi, cfg); },
                            mu_schedule, opts);
    if (!out.route_eps.records.empty() && !out.route_trunc.records.empty()) {
        const Complex a = out.route_eps.records.back().action;
        const Complex b = out.route_trunc.records.back().action;
        const double scale = 2.0 * kPi * std::abs(phi.value_at_zero);
        out.route_gap = scale > 0.0 ? std::abs(a - b) / scale : std::abs(a - b);
    }
    return out;
}

Corollary3Result verify_corollary3(double eps, int n, int k, const TestFunction& phi,
                                   const QuadratureConfig& cfg) {
    check_positive(eps, "eps");
    if (eps >= 0.5) throw DomainError("shifted-family check needs eps < 1/2");
    if (n < 0 || k < 0) throw DomainError("shift indices n, k must be >= 0");
    require_support(phi);

    Corollary3Result out;
    auto f = [&](double x) { return phi(x) * beta_shifted_regularized(eps, x, n, k); };
    const Complex action = integrate_peaked(f, phi, eps, cfg);
    out.record = ConvergenceRecord::make(eps, eps, action,
                                         shifted_distribution(n, k).delta_x_coeff *
                                             phi.value_at_zero);

    // B(e + ix - n, e - ix - k) against B(e - ix - k, e + ix - n), the latter
    // being the same family at (-x, k, n).
    for (int i = -40; i <= 40; ++i) {
        const double x = 0.125 * i;
        const Complex lhs = beta_shifted_regularized(eps, x, n, k);
        const Complex rhs = beta_shifted_regularized(eps, -x, k, n);
        out.swap_max_rel_diff = std::max(out.swap_max_rel_diff, std::abs(lhs - rhs) / std::abs(lhs));
    }
    out.swap_symmetric = out.swap_max_rel_diff < 1e-12;
    return out;
}

ConvergenceRecord verify_sokhotski(double alpha, const TestFunction& phi,
                                   const QuadratureConfig& cfg) {
    check_positive(alpha, "alpha");
    require_support(phi);
    auto f = [&](double x) { return phi(x) * Complex(x, alpha) / (x * x + alpha * alpha); };
    const Complex action = integrate_peaked(f, phi, alpha, cfg);
    const double pv = integrate_pv(phi, clip_lo(phi), clip_hi(phi), cfg);
    return ConvergenceRecord::make(alpha, alpha, action, Complex(pv, kPi * phi.value_at_zero));
}

ConvergenceRecord verify_offdiag_limit(double a, double b, const TestFunction& g,
                                       const TestFunction& h, const QuadratureConfig& cfg) {
    check_positive(a, "a");
    check_positive(b, "b");
    require_support(g);
    require_support(h);
    const QuadratureConfig inner = tightened(cfg, 0.1);

    // Left side: tensor-product quadrature, x inside, y outside.
    auto row = [&](double y) {
        auto fx = [&](double x) { return g(x) * beta_offdiag_regularized(a, b, x, y); };
        return h(y) * integrate_peaked(fx, g, a, inner);
    };
    const Complex action = integrate_peaked(row, h, b, cfg);

    // Right side.
    const DistributionalResult dist = offdiag_distribution();
    auto masked = [](double x, double y) { return std::abs(x + y) >= kDiagonalBand; };

    const double g_mass = integrate_real([&](double x) { return g(x); }, clip_lo(g), clip_hi(g), cfg);
    const double h_mass = integrate_real([&](double y) { return h(y); }, clip_lo(h), clip_hi(h), cfg);
    Complex target = dist.delta_x_coeff * g.value_at_zero * h_mass +
                     dist.delta_y_coeff * h.value_at_zero * g_mass;

    // PV in x for each y, then the y integral; the band edges x = -y +- w
    // are kinks of the masked numerator.
    auto pv_x = [&](double y) {
        auto num = [&](double x) {
            return masked(x, y) ? g(x) * dist.prefactor(x, y) : Complex(0.0, 0.0);
        };
        const std::array<double, 2> breaks = {-y - kDiagonalBand, -y + kDiagonalBand};
        return h(y) * principal_value(num, clip_lo(g), clip_hi(g), inner, breaks);
    };
    auto pv_y = [&](double x) {
        auto num = [&](double y) {
            return masked(x, y) ? h(y) * dist.prefactor(x, y) : Complex(0.0, 0.0);
        };
        const std::array<double, 2> breaks = {-x - kDiagonalBand, -x + kDiagonalBand};
        return g(x) * principal_value(num, clip_lo(h), clip_hi(h), inner, breaks);
    };
    const Complex minus_i(0.0, -1.0);
    if (dist.pv_x_present) target += minus_i * integrate_peaked(pv_x, h, kDiagonalBand, cfg);
    if (dist.pv_y_present) target += minus_i * integrate_peaked(pv_y, g, kDiagonalBand, cfg);

    return ConvergenceRecord::make(a, b, action, target);
}

ConvergenceRecord verify_diag_limit(double a, double b, const TestFunction& phi,
                                    const QuadratureConfig& cfg) {
    check_positive(a, "a");
    check_positive(b, "b");
    require_support(phi);
    auto f = [&](double x) { return phi(x) * beta_offdiag_regularized(a, b, x, -x); };
    const Complex action = integrate_peaked(f, phi, std::min(a, b), cfg);
    return ConvergenceRecord::make(a, b, action, 2.0 * kPi * phi.value_at_zero);
}

}  // namespace deltabeta
