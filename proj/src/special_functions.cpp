#include "deltabeta/special_functions.hpp"

#include <array>
#include <cmath>
#include <string>

namespace deltabeta {

namespace {

constexpr double kLanczosG = 7.0;

// Godfrey's coefficient set for g = 7, n = 9.
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

// Below this modulus the digamma/trigamma arguments are shifted upward.
constexpr double kAsymptoticRadius = 16.0;

// sin(pi*x) with the argument reduced modulo 2 so integers give exact zeros.
double sin_pi_real(double x) {
    double r = std::fmod(x, 2.0);
    if (r < 0.0) r += 2.0;
    if (r == 0.0 || r == 1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == 1.5) return -1.0;
    return std::sin(kPi * r);
}

double cos_pi_real(double x) { return sin_pi_real(x + 0.5); }

Complex sin_pi(Complex z) {
    const double y = kPi * z.imag();
    return {sin_pi_real(z.real()) * std::cosh(y), cos_pi_real(z.real()) * std::sinh(y)};
}

Complex cos_pi(Complex z) {
    const double y = kPi * z.imag();
    return {cos_pi_real(z.real()) * std::cosh(y), -sin_pi_real(z.real()) * std::sinh(y)};
}

// cot(pi z); the exponential form avoids cosh/sinh overflow far from the axis.
Complex cot_pi(Complex z) {
    if (std::abs(z.imag()) <= 1.0) return cos_pi(z) / sin_pi(z);
    const bool upper = z.imag() > 0.0;
    const Complex w = upper ? z : std::conj(z);
    const Complex e = std::exp(Complex(0.0, 2.0 * kPi) * w);  // |e| < 1
    const Complex c = Complex(0.0, 1.0) * (e + 1.0) / (e - 1.0);
    return upper ? c : std::conj(c);
}

// log(sin(pi z)) up to a multiple of 2*pi*i.
Complex log_sin_pi(Complex z) {
    if (std::abs(z.imag()) <= 20.0) return std::log(sin_pi(z));
    const bool upper = z.imag() > 0.0;
    const Complex w = upper ? z : std::conj(z);
    // sin(pi w) = (e^{-i pi w} / (-2i)) (1 - e^{2 i pi w})
    const Complex i_pi(0.0, kPi);
    const Complex val = -i_pi * w + std::log(1.0 - std::exp(2.0 * i_pi * w)) -
                        std::log(Complex(0.0, -2.0));
    return upper ? val : std::conj(val);
}

Complex lanczos_log_gamma(Complex z) {
    const Complex w = z - 1.0;
    Complex sum = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        sum += kLanczosCoeffs[i] / (w + static_cast<double>(i));
    }
    const Complex t = w + kLanczosG + 0.5;
    return kHalfLog2Pi + (w + 0.5) * std::log(t) - t + std::log(sum);
}

Complex digamma_asymptotic(Complex z) {
    // B_{2k} / (2k)
    static constexpr std::array<double, 8> c = {
        1.0 / 12.0,   -1.0 / 120.0,       1.0 / 252.0, -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,  -3617.0 / 8160.0,
    };
    const Complex inv2 = 1.0 / (z * z);
    Complex term = inv2;
    Complex series = 0.0;
    for (double ck : c) {
        series += ck * term;
        term *= inv2;
    }
    return std::log(z) - 0.5 / z - series;
}

Complex trigamma_asymptotic(Complex z) {
    // B_{2k}
    static constexpr std::array<double, 7> b = {
        1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,
    };
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex term = inv2 * inv;
    Complex series = 0.0;
    for (double bk : b) {
        series += bk * term;
        term *= inv2;
    }
    return inv + 0.5 * inv2 + series;
}

}  // namespace

void check_pole(Complex z, double pole_radius) {
    require_finite(z, "argument");
    if (z.real() > 0.5) return;
    const double n = std::round(z.real());
    if (n <= 0.0 && std::abs(z - Complex(n, 0.0)) < pole_radius) {
        throw PoleError("argument within " + std::to_string(pole_radius) +
                        " of the gamma pole at " + std::to_string(static_cast<long long>(n)));
    }
}

Complex log_gamma(Complex z, double pole_radius) {
    check_pole(z, pole_radius);
    if (z.real() >= 0.5) return lanczos_log_gamma(z);
    if (z.real() > 0.0) return lanczos_log_gamma(z + 1.0) - std::log(z);
    return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

Complex gamma(Complex z, double pole_radius) {
    check_pole(z, pole_radius);
    if (z.real() > 0.0) return std::exp(log_gamma(z, pole_radius));
    // Reflection: G(z) = pi / (sin(pi z) G(1 - z)).
    return kPi / (sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)));
}

Complex digamma(Complex z, double pole_radius) {
    check_pole(z, pole_radius);
    if (z.real() < 0.5) {
        return digamma(1.0 - z, pole_radius) - kPi * cot_pi(z);
    }
    Complex shift = 0.0;
    while (std::abs(z) < kAsymptoticRadius) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    return digamma_asymptotic(z) + shift;
}

Complex trigamma(Complex z, double pole_radius) {
    check_pole(z, pole_radius);
    if (z.real() < 0.5) {
        const Complex s = sin_pi(z);
        return kPi * kPi / (s * s) - trigamma(1.0 - z, pole_radius);
    }
    Complex shift = 0.0;
    while (std::abs(z) < kAsymptoticRadius) {
        shift += 1.0 / (z * z);
        z += 1.0;
    }
    return trigamma_asymptotic(z) + shift;
}

}  // namespace deltabeta
