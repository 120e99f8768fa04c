#pragma once

// Euler beta function on and near the critical lines Re = 0.
//
// Every gamma quotient is evaluated as exp of a sum of log-gammas: |G(e + ix)|
// decays like exp(-pi |x| / 2), so direct quotients underflow long before the
// beta value itself does.

#include "deltabeta/errors.hpp"
#include "deltabeta/special_functions.hpp"

namespace deltabeta {

/// Largest |x| (and |y|) accepted by the regularized families.
inline constexpr double kMaxImaginaryCoordinate = 50.0;

/// The argument pair (a + ix - n, b + iy - k).
struct BetaArgs {
    double a = 0.0;
    double b = 0.0;
    double x = 0.0;
    double y = 0.0;
    int n = 0;
    int k = 0;

    [[nodiscard]] Complex first() const { return {a - n, x}; }
    [[nodiscard]] Complex second() const { return {b - k, y}; }

    /// Throws DomainError unless a, b >= 0 and n, k >= 0 and all finite.
    void validate() const;
};

/// f(e, x) * e / (e^2 + x^2) split of B(e + ix, e - ix).
struct FactorizedBeta {
    Complex smooth_factor;           // 2 G(1+e+ix) G(1+e-ix) / G(1+2e)
    double lorentz_factor = 0.0;     // e / (e^2 + x^2)
    double second_derivative_bound = 0.0;

    [[nodiscard]] Complex product() const { return smooth_factor * lorentz_factor; }
};

/// Value and first two e-derivatives of the smooth factor.
struct SmoothFactorDerivatives {
    Complex value;
    Complex d_eps;
    Complex d2_eps;
};

/// G(alpha) G(beta) / G(alpha + beta).
[[nodiscard]] Complex beta(Complex alpha, Complex beta_arg,
                           double pole_radius = kDefaultPoleRadius);

/// B(eps + ix, eps - ix); real up to rounding.
[[nodiscard]] Complex beta_diag_regularized(double eps, double x);

/// 2 G(1+eps+ix) G(1+eps-ix) / G(1+2 eps). Defined for eps > -1/2, which lets
/// finite differences straddle eps = 0.
[[nodiscard]] Complex smooth_factor(double eps, double x);

/// Closed forms through digamma and trigamma:
///   f'  = 2 f [Re psi(1+e+ix) - psi(1+2e)]
///   f'' = 2 f {2 [Re psi(1+e+ix) - psi(1+2e)]^2 + Re psi'(1+e+ix) - 2 psi'(1+2e)}
[[nodiscard]] SmoothFactorDerivatives smooth_factor_derivatives(double eps, double x);

[[nodiscard]] FactorizedBeta factorize_diag(double eps, double x);

/// Largest |d^2 f / d e^2| seen on a grid over e in (0, 0.1], |x| <= 5, from
/// central second differences. Computed once per process.
[[nodiscard]] double smooth_factor_curvature_bound();

/// B(eps + ix - n, eps - ix - k), through the reflection identity
///   B(a - n, b - k) = B(a, b) G(1+n+k-a-b) G(1-a) G(1-b)
///                     / [G(1+n-a) G(1+k-b) G(1-a-b)]
/// so no gamma is ever evaluated next to a pole. Requires 0 < eps < 1/2.
[[nodiscard]] Complex beta_shifted_regularized(double eps, double x, int n, int k);

/// B(a + ix, b + iy) as G(1+a+ix) G(1+b+iy) / G(1+a+b+i(x+y)) times
/// offdiag_pole_part(a, b, x, y).
[[nodiscard]] Complex beta_offdiag_regularized(double a, double b, double x, double y);

/// (a + b + i(x + y)) / ((a + ix)(b + iy)), the singular factor of the
/// off-diagonal beta.
[[nodiscard]] Complex offdiag_pole_part(double a, double b, double x, double y);

/// Evaluates B(args.first(), args.second()) by the best route available:
/// the shifted family when the pair is conjugate-diagonal, the off-diagonal
/// factorization when n = k = 0 and a, b > 0, and the plain gamma quotient
/// otherwise.
[[nodiscard]] Complex evaluate(const BetaArgs& args);

}  // namespace deltabeta
