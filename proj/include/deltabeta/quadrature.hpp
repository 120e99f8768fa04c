#pragma once

// Adaptive Gauss-Kronrod integration, Cauchy principal values, and the
// xi-line form of the beta integrand.
//
// The substitution t = (1 - tanh(xi/2)) / 2, i.e. xi = ln((1 - t) / t), maps
//   t^(a+ix-1) (1-t)^(b+iy-1) dt
// onto
//   exp[xi (b - a + i(y - x)) / 2] [2 cosh(xi/2)]^(-(a+b) - i(x+y)) dxi,
// which is smooth and decays like exp(-a xi) / exp(-b |xi|) on the two ends.
// This is the only route used for the beta integrand near the critical lines.

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "deltabeta/errors.hpp"
#include "deltabeta/test_functions.hpp"

namespace deltabeta {

using ComplexIntegrand = std::function<Complex(double)>;
using RealIntegrand = std::function<double(double)>;

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 200000;
    double pv_excision = 1e-3;  // initial symmetric excision radius

    /// Throws ConfigError on out-of-range fields.
    void validate() const;
};

struct QuadratureResult {
    Complex value;
    double error = 0.0;
    int subdivisions = 0;
};

/// Globally adaptive G7-K15 with bisection of the worst subinterval.
/// Throws QuadratureError (carrying the best estimate) once
/// cfg.max_subdivisions is exhausted.
[[nodiscard]] QuadratureResult integrate_adaptive(const ComplexIntegrand& f, double lo, double hi,
                                                  const QuadratureConfig& cfg);

/// Same, over the partition given by `points` (sorted, at least two). Use it
/// to place known peaks and kinks on subinterval endpoints.
[[nodiscard]] QuadratureResult integrate_adaptive(const ComplexIntegrand& f,
                                                  std::span<const double> points,
                                                  const QuadratureConfig& cfg);

/// Partition of [lo, hi] with nodes at 0 (when inside) and at +-scale,
/// +-10 scale, +-100 scale, ...; with a finite `max_panel`, also uniform
/// nodes no further apart than that. Suits integrands peaked at the origin
/// with width `scale`.
[[nodiscard]] std::vector<double> peak_partition(
    double lo, double hi, double scale,
    double max_panel = std::numeric_limits<double>::infinity());

[[nodiscard]] double integrate_real(const RealIntegrand& f, double lo, double hi,
                                    const QuadratureConfig& cfg);

/// PV of the integral of numerator(x) / x over [lo, hi], lo < 0 < hi.
///
/// With c = min(-lo, hi) the symmetric part is folded into
/// (N(x) - N(-x)) / x on (delta, c]; the excised piece [0, delta] gets a
/// single Kronrod-rule correction, and delta is halved until successive
/// values agree within cfg.abs_tol. `breaks` lists extra kink locations of
/// the numerator.
[[nodiscard]] Complex principal_value(const ComplexIntegrand& numerator, double lo, double hi,
                                      const QuadratureConfig& cfg,
                                      std::span<const double> breaks = {});

/// PV of the integral of phi(x) / x over [lo, hi].
[[nodiscard]] double integrate_pv(const TestFunction& phi, double lo, double hi,
                                  const QuadratureConfig& cfg);

/// Endpoint cuts of the t-integral: integrate over [mu, 1 - lam]. A zero cut
/// means the endpoint is not truncated.
struct TruncationParams {
    double mu = 0.0;
    double lam = 0.0;

    /// Cuts expressed on the xi-line: t in [mu, 1 - lam] maps to
    /// xi in [-alpha_cut, beta_cut].
    [[nodiscard]] static TruncationParams from_cuts(double alpha_cut, double beta_cut);
    [[nodiscard]] static TruncationParams none() { return {}; }

    /// ln((1 - lam) / lam); +infinity when lam = 0.
    [[nodiscard]] double alpha_cut() const;
    /// ln((1 - mu) / mu); +infinity when mu = 0.
    [[nodiscard]] double beta_cut() const;

    void validate() const;
};

struct IntegrandSpec {
    enum class Kind { beta_critical, truncated_fourier, cosh_representation, generic };

    Kind kind = Kind::cosh_representation;
    double a = 0.0;
    double b = 0.0;
    double x = 0.0;
    double y = 0.0;
    TruncationParams trunc;

    void validate() const;
};

/// The integrand named by `spec`: the raw t-form for beta_critical, the
/// xi-line cosh form for cosh_representation, exp(i xi x) for
/// truncated_fourier. Throws DomainError for generic (no closed form).
[[nodiscard]] ComplexIntegrand make_integrand(const IntegrandSpec& spec);

/// Integral over t in [mu, 1 - lam] of t^(a+ix-1) (1-t)^(b+iy-1), evaluated
/// on the xi-line. An untruncated end needs a positive offset there (a for
/// t -> 0, b for t -> 1); otherwise DomainError.
[[nodiscard]] Complex beta_integral_direct(double a, double b, double x, double y,
                                           const TruncationParams& trunc,
                                           const QuadratureConfig& cfg);

/// Closed form of the integral of exp(i xi x) over [-alpha_cut, beta_cut];
/// alpha_cut + beta_cut at x = 0.
[[nodiscard]] Complex truncated_fourier(double x, double alpha_cut, double beta_cut);

}  // namespace deltabeta
