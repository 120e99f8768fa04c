#pragma once

// Complex gamma, log-gamma, digamma and trigamma.
//
// Log-gamma uses the Lanczos approximation (g = 7, nine coefficients) on
// Re z >= 1/2, the recurrence ln G(z) = ln G(z + 1) - ln z on 0 < Re z < 1/2
// so the result stays on the principal branch across the right half plane,
// and the reflection formula on Re z <= 0. Digamma and trigamma shift the
// argument up to |z| >= 16 and sum the Bernoulli asymptotic series.

#include "deltabeta/errors.hpp"

namespace deltabeta {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Arguments closer than this to 0, -1, -2, ... raise PoleError.
inline constexpr double kDefaultPoleRadius = 1e-8;

struct Constants {
    static constexpr double euler_gamma = kEulerGamma;
};

/// Throws PoleError if z is within `pole_radius` of a nonpositive integer.
void check_pole(Complex z, double pole_radius = kDefaultPoleRadius);

[[nodiscard]] Complex gamma(Complex z, double pole_radius = kDefaultPoleRadius);

/// Principal-branch log-gamma, continuous on Re z > 0. On Re z <= 0 the
/// imaginary part is determined only modulo 2*pi.
[[nodiscard]] Complex log_gamma(Complex z, double pole_radius = kDefaultPoleRadius);

[[nodiscard]] Complex digamma(Complex z, double pole_radius = kDefaultPoleRadius);

[[nodiscard]] Complex trigamma(Complex z, double pole_radius = kDefaultPoleRadius);

}  // namespace deltabeta
