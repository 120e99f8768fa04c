#include "deltabeta/gamma_suite.hpp"

#include <algorithm>
#include <cmath>

#include "deltabeta/special_functions.hpp"

namespace deltabeta {

namespace {

// 20 x 10 grid: Re z in [re_lo, re_hi], Im z in [-10, 10].
std::vector<Complex> grid(double re_lo, double re_hi) {
    std::vector<Complex> pts;
    pts.reserve(200);
    for (int i = 0; i < 20; ++i) {
        const double re = re_lo + (re_hi - re_lo) * i / 19.0;
        for (int j = 0; j < 10; ++j) pts.emplace_back(re, -10.0 + 20.0 * j / 9.0);
    }
    return pts;
}

}  // namespace

std::vector<PropertyCheck> run_gamma_suite() {
    const auto right = grid(0.1, 5.0);
    // Offset by 0.037 so no point sits on an integer real part.
    const auto both = grid(-4.963, 4.963);
    constexpr double h = 1e-5;

    PropertyCheck recurrence{"gamma_recurrence", 0.0, 1e-10, 0};
    PropertyCheck reflection{"gamma_reflection", 0.0, 1e-10, 0};
    PropertyCheck conjugate{"gamma_conjugate_symmetry", 0.0, 1e-10, 0};
    PropertyCheck digamma_fd{"digamma_central_difference", 0.0, 1e-6, 0};
    PropertyCheck trigamma_fd{"trigamma_central_difference", 0.0, 1e-6, 0};

    auto record = [](PropertyCheck& c, double err) {
        c.measured = std::max(c.measured, std::isfinite(err) ? err : HUGE_VAL);
        ++c.points;
    };

    for (const Complex z : right) {
        const Complex next = gamma(z + 1.0);
        record(recurrence, std::abs(next - z * gamma(z)) / std::abs(next));

        const Complex fd_psi = (log_gamma(z + h) - log_gamma(z - h)) / (2.0 * h);
        record(digamma_fd, std::abs(digamma(z) - fd_psi));
        const Complex fd_tri = (digamma(z + h) - digamma(z - h)) / (2.0 * h);
        record(trigamma_fd, std::abs(trigamma(z) - fd_tri));
    }
    for (const Complex z : both) {
        const Complex g = gamma(z);
        const Complex s = std::sin(kPi * z);
        record(reflection, std::abs(g * gamma(1.0 - z) * s / kPi - 1.0));
        record(conjugate, std::abs(gamma(std::conj(z)) - std::conj(g)) / std::abs(g));
    }
    return {recurrence, reflection, conjugate, digamma_fd, trigamma_fd};
}

}  // namespace deltabeta
