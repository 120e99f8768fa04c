#include "deltabeta/delta_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "deltabeta/special_functions.hpp"

namespace deltabeta {

namespace {

void check_positive(double v, const char* name) {
    require_finite(v, name);
    if (!(v > 0.0)) throw DomainError(std::string(name) + " must be positive");
}

}  // namespace

Kernel::Kernel(std::string name, Profile profile, double scale, double normalization,
               TailBound tail_bound)
    : name_(std::move(name)),
      profile_(std::move(profile)),
      scale_(scale),
      normalization_(normalization),
      tail_bound_(std::move(tail_bound)) {
    check_positive(scale_, "kernel scale");
    if (!profile_) throw DomainError("kernel profile must be callable");
}

std::optional<double> Kernel::tail_bound(double t) const {
    if (!tail_bound_) return std::nullopt;
    return tail_bound_(t);
}

Kernel lorentz_kernel(double eps) {
    check_positive(eps, "eps");
    return Kernel(
        "lorentz", [](double u) { return 1.0 / (kPi * (1.0 + u * u)); }, eps, 1.0,
        [](double t) { return 2.0 / (kPi * t); });
}

Kernel dirichlet_kernel(double omega) {
    check_positive(omega, "omega");
    auto sinc_profile = [](double u) {
        if (std::abs(u) < 1e-8) return (1.0 - u * u / 6.0) / kPi;
        return std::sin(u) / (kPi * u);
    };
    return Kernel("dirichlet", sinc_profile, 1.0 / omega, 1.0);
}

double kernel_action(const Kernel& kern, const TestFunction& phi, const QuadratureConfig& cfg) {
    if (!(phi.lo < phi.hi)) throw DomainError("test function support is empty");
    const double panel = kern.absolutely_integrable()
                             ? std::numeric_limits<double>::infinity()
                             : 2.0 * kPi * kern.scale();
    const auto pts = peak_partition(phi.lo, phi.hi, kern.scale(), panel);
    auto integrand = [&](double x) { return Complex(phi(x) * kern.evaluate(x), 0.0); };
    return integrate_adaptive(integrand, pts, cfg).value.real();
}

double measure_normalization(const Kernel& kern, double tail_tol, const QuadratureConfig& cfg) {
    check_positive(tail_tol, "tail_tol");
    if (!kern.absolutely_integrable()) {
        throw DomainError("kernel '" + kern.name() +
                          "' is not absolutely integrable; check it through its action instead");
    }
    double t = 1.0;
    while (*kern.tail_bound(t) >= tail_tol) {
        t *= 2.0;
        if (!std::isfinite(t)) throw DomainError("tail bound never drops below tolerance");
    }
    const auto pts = peak_partition(-t, t, 1.0, std::numeric_limits<double>::infinity());
    auto integrand = [&](double u) { return Complex(kern.profile(u), 0.0); };
    return integrate_adaptive(integrand, pts, cfg).value.real();
}

}  // namespace deltabeta
