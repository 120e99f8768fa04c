#pragma once

// Delta-approximating families w(x) = eta(x / scale) / scale with unit
// integral eta: the Lorentzian 1 / (pi (1 + u^2)) and the Dirichlet
// sin(u) / (pi u), the latter parameterized by frequency omega = 1 / scale.

#include <functional>
#include <optional>
#include <string>

#include "deltabeta/quadrature.hpp"
#include "deltabeta/test_functions.hpp"

namespace deltabeta {

class Kernel {
public:
    using Profile = std::function<double(double)>;
    using TailBound = std::function<double(double)>;

    /// `tail_bound(T)` bounds the integral of |eta| over |u| > T; leave empty
    /// when eta is not absolutely integrable.
    Kernel(std::string name, Profile profile, double scale, double normalization = 1.0,
           TailBound tail_bound = {});

    /// w(x) = eta(x / scale) / scale.
    [[nodiscard]] double evaluate(double x) const { return profile_(x / scale_) / scale_; }
    [[nodiscard]] double profile(double u) const { return profile_(u); }

    [[nodiscard]] double scale() const noexcept { return scale_; }
    [[nodiscard]] double normalization() const noexcept { return normalization_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] bool absolutely_integrable() const noexcept { return bool(tail_bound_); }
    [[nodiscard]] std::optional<double> tail_bound(double t) const;

private:
    std::string name_;
    Profile profile_;
    double scale_;
    double normalization_;
    TailBound tail_bound_;
};

[[nodiscard]] Kernel lorentz_kernel(double eps);

/// sin(omega x) / (pi x), omega / pi at x = 0.
[[nodiscard]] Kernel dirichlet_kernel(double omega);

/// Integral of phi(x) w(x) over phi's support, split at 0 where the kernel
/// peaks.
[[nodiscard]] double kernel_action(const Kernel& kern, const TestFunction& phi,
                                   const QuadratureConfig& cfg = {});

/// Integral of eta over [-T, T], with T chosen from the analytic tail bound
/// so the truncated mass is below `tail_tol`. Throws DomainError for kernels
/// that are not absolutely integrable.
[[nodiscard]] double measure_normalization(const Kernel& kern, double tail_tol,
                                           const QuadratureConfig& cfg = {});

}  // namespace deltabeta
