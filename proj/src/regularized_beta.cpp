#include "deltabeta/regularized_beta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace deltabeta {

namespace {

void check_coordinate(double v, const char* name) {
    require_finite(v, name);
    if (std::abs(v) > kMaxImaginaryCoordinate) {
        throw DomainError(std::string(name) + " outside [-50, 50]; the beta value underflows");
    }
}

void check_eps(double eps, const char* name) {
    require_finite(eps, name);
    if (eps <= 0.0) throw DomainError(std::string(name) + " must be positive");
    if (eps < kDefaultPoleRadius) {
        throw PoleError(std::string(name) + " is inside the pole radius of G(2 eps)");
    }
}

}  // namespace

void BetaArgs::validate() const {
    require_finite(a, "a");
    require_finite(b, "b");
    require_finite(x, "x");
    require_finite(y, "y");
    if (a < 0.0 || b < 0.0) throw DomainError("regularization offsets a, b must be >= 0");
    if (n < 0 || k < 0) throw DomainError("shift indices n, k must be >= 0");
}

Complex beta(Complex alpha, Complex beta_arg, double pole_radius) {
    require_finite(alpha, "alpha");
    require_finite(beta_arg, "beta");
    const Complex sum = alpha + beta_arg;
    check_pole(sum, pole_radius);
    return std::exp(log_gamma(alpha, pole_radius) + log_gamma(beta_arg, pole_radius) -
                    log_gamma(sum, pole_radius));
}

Complex beta_diag_regularized(double eps, double x) {
    check_eps(eps, "eps");
    check_coordinate(x, "x");
    return std::exp(log_gamma({eps, x}) + log_gamma({eps, -x}) - log_gamma({2.0 * eps, 0.0}));
}

Complex smooth_factor(double eps, double x) {
    require_finite(eps, "eps");
    check_coordinate(x, "x");
    if (eps <= -0.5) throw DomainError("smooth factor needs eps > -1/2");
    return 2.0 * std::exp(log_gamma({1.0 + eps, x}) + log_gamma({1.0 + eps, -x}) -
                          log_gamma({1.0 + 2.0 * eps, 0.0}));
}

SmoothFactorDerivatives smooth_factor_derivatives(double eps, double x) {
    const Complex f = smooth_factor(eps, x);
    const Complex z(1.0 + eps, x);
    const double two_eps = 1.0 + 2.0 * eps;
    const double drift = digamma(z).real() - digamma({two_eps, 0.0}).real();
    const double curvature = trigamma(z).real() - 2.0 * trigamma({two_eps, 0.0}).real();
    return {f, 2.0 * f * drift, 2.0 * f * (2.0 * drift * drift + curvature)};
}

double smooth_factor_curvature_bound() {
    static const double bound = [] {
        constexpr double h = 1e-3;
        double worst = 0.0;
        for (int j = 1; j <= 20; ++j) {
            const double eps = 0.005 * j;
            for (int i = -50; i <= 50; ++i) {
                const double x = 0.1 * i;
                const Complex second =
                    (smooth_factor(eps + h, x) - 2.0 * smooth_factor(eps, x) +
                     smooth_factor(eps - h, x)) / (h * h);
                worst = std::max(worst, std::abs(second));
            }
        }
        return worst;
    }();
    return bound;
}

FactorizedBeta factorize_diag(double eps, double x) {
    check_eps(eps, "eps");
    check_coordinate(x, "x");
    FactorizedBeta out;
    out.smooth_factor = smooth_factor(eps, x);
    out.lorentz_factor = eps / (eps * eps + x * x);
    out.second_derivative_bound = smooth_factor_curvature_bound();
    return out;
}

Complex beta_shifted_regularized(double eps, double x, int n, int k) {
    check_eps(eps, "eps");
    check_coordinate(x, "x");
    if (eps >= 0.5) throw DomainError("shifted beta needs eps < 1/2");
    if (n < 0 || k < 0) throw DomainError("shift indices n, k must be >= 0");

    const double nk = static_cast<double>(n + k);
    const Complex log_ratio = log_gamma({1.0 + nk - 2.0 * eps, 0.0}) +
                              log_gamma({1.0 - eps, -x}) + log_gamma({1.0 - eps, x}) -
                              log_gamma({1.0 + n - eps, -x}) - log_gamma({1.0 + k - eps, x}) -
                              log_gamma({1.0 - 2.0 * eps, 0.0});
    return std::exp(log_ratio) * beta_diag_regularized(eps, x);
}

Complex offdiag_pole_part(double a, double b, double x, double y) {
    const Complex alpha(a, x);
    const Complex beta_arg(b, y);
    return (alpha + beta_arg) / (alpha * beta_arg);
}

Complex beta_offdiag_regularized(double a, double b, double x, double y) {
    check_eps(a, "a");
    check_eps(b, "b");
    check_coordinate(x, "x");
    check_coordinate(y, "y");
    const Complex smooth = std::exp(log_gamma({1.0 + a, x}) + log_gamma({1.0 + b, y}) -
                                    log_gamma({1.0 + a + b, x + y}));
    return smooth * offdiag_pole_part(a, b, x, y);
}

Complex evaluate(const BetaArgs& args) {
    args.validate();
    if (args.a == args.b && args.y == -args.x && args.a > 0.0 && args.a < 0.5) {
        return beta_shifted_regularized(args.a, args.x, args.n, args.k);
    }
    if (args.n == 0 && args.k == 0 && args.a > 0.0 && args.b > 0.0) {
        return beta_offdiag_regularized(args.a, args.b, args.x, args.y);
    }
    return beta(args.first(), args.second());
}

}  // namespace deltabeta
