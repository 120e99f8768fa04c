#pragma once

// Weak-limit checks of the beta function at the boundary of its convergence
// region. Each operation integrates a regularized beta against a test
// function and compares the result with the distribution it should tend to:
//
//   B(e + ix, e - ix)              -> 2 pi delta(x)
//   B(e + ix - n, e - ix - k)      -> (n + k)! / (n! k!) 2 pi delta(x)
//   B(a + ix, b - ix)              -> 2 pi delta(x), a and b independent
//   B(a + ix, b + iy)              -> pi [delta(x) + delta(y)]
//                                     - i P(x, y) [PV(1/x) + PV(1/y)]
//   1 / (x - i a)                  -> i pi delta(x) + PV(1/x)
//
// with P(x, y) = G(1 + ix) G(1 + iy) / G(1 + i(x + y)).

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deltabeta/quadrature.hpp"
#include "deltabeta/regularized_beta.hpp"
#include "deltabeta/test_functions.hpp"

namespace deltabeta {

/// Outer x-integrals are clipped to |x| <= this; see diag_outer_tail_mass.
inline constexpr double kOuterCut = 40.0;

/// Width of the band |x + y| < w excised from the principal-value side of the
/// two-variable identity.
inline constexpr double kDiagonalBand = 1e-3;

struct ConvergenceRecord {
    double reg_a = 0.0;  // e, alpha, mu, ... depending on the check
    double reg_b = 0.0;
    Complex action;
    Complex target;
    double abs_err = 0.0;
    double rel_err = 0.0;  // abs_err / |target|, or abs_err when the target is 0
    std::optional<std::string> failure;

    [[nodiscard]] static ConvergenceRecord make(double reg_a, double reg_b, Complex action,
                                                Complex target);
    [[nodiscard]] bool ok() const { return !failure.has_value(); }
};

/// Coefficients of a limiting distribution c_x delta(x) + c_y delta(y)
/// - i prefactor(x, y) [PV(1/x) + PV(1/y)].
struct DistributionalResult {
    double delta_x_coeff = 0.0;
    double delta_y_coeff = 0.0;
    bool pv_x_present = false;
    bool pv_y_present = false;
    std::function<Complex(double, double)> prefactor;
};

[[nodiscard]] DistributionalResult theorem_distribution();
[[nodiscard]] DistributionalResult shifted_distribution(int n, int k);
[[nodiscard]] DistributionalResult offdiag_distribution();

/// (n + k)! / (n! k!)
[[nodiscard]] double binomial(int n, int k);

/// Twice the integral of |B(e + ix, e - ix)| over 40 <= x <= 50: the mass
/// dropped by clipping the outer integral.
[[nodiscard]] double diag_outer_tail_mass(double eps);

/// Integral of phi(x) B(eps + ix, eps - ix); target 2 pi phi(0).
/// Throws SupportError unless 0 lies inside phi's support.
[[nodiscard]] ConvergenceRecord action_theorem(double eps, const TestFunction& phi,
                                               const QuadratureConfig& cfg = {});

using SmoothFactorFn = std::function<Complex(double eps, double x)>;

/// Integral of phi(x) f(eps, x) eps / (eps^2 + x^2); target pi f(0, 0) phi(0).
[[nodiscard]] ConvergenceRecord action_lemma(double eps, const SmoothFactorFn& f,
                                             const TestFunction& phi,
                                             const QuadratureConfig& cfg = {});

/// Integral of phi(x) times the t-integral over [mu, 1 - mu] of
/// t^(ix-1) (1-t)^(-ix-1), whose closed form is a truncated Fourier
/// integral. Target 2 pi phi(0).
[[nodiscard]] ConvergenceRecord action_truncated(double mu, const TestFunction& phi,
                                                 const QuadratureConfig& cfg = {});

struct SweepOptions {
    double final_tolerance = 1e-2;
    /// Errors at or below this count as converged when checking monotonicity.
    double noise_floor = 0.0;
    bool parallel = true;
};

struct SweepResult {
    std::vector<ConvergenceRecord> records;
    std::optional<bool> monotone;  // only with two or more records
    bool final_within_tolerance = false;
    bool all_evaluated = true;

    [[nodiscard]] bool passed() const {
        return all_evaluated && final_within_tolerance && monotone.value_or(true);
    }
};

using PointEvaluator = std::function<ConvergenceRecord(double reg)>;

/// One record per schedule value, in schedule order. Exceptions at a point
/// are captured in that record's `failure` without aborting the sweep.
/// Throws ConfigError unless the schedule is positive and strictly
/// decreasing.
[[nodiscard]] SweepResult sweep(const PointEvaluator& op, std::span<const double> schedule,
                                const SweepOptions& opts = {});

/// Monotonicity of rel_err along records, treating errors below
/// `noise_floor` as converged.
[[nodiscard]] bool errors_decreasing(std::span<const ConvergenceRecord> records,
                                     double noise_floor = 0.0);

struct Corollary2Result {
    SweepResult route_eps;    // limit outside: regularized beta, e -> 0
    SweepResult route_trunc;  // limit inside: truncated t-integral, mu = lam -> 0
    double route_gap = 0.0;   // |finest A - finest B| / |2 pi phi(0)| (absolute if 0)
};

[[nodiscard]] Corollary2Result verify_corollary2(std::span<const double> eps_schedule,
                                                 std::span<const double> mu_schedule,
                                                 const TestFunction& phi,
                                                 const QuadratureConfig& cfg = {},
                                                 const SweepOptions& opts = {});

struct Corollary3Result {
    ConvergenceRecord record;
    double swap_max_rel_diff = 0.0;
    bool swap_symmetric = false;
};

/// Action of B(eps + ix - n, eps - ix - k); target (n+k)!/(n!k!) 2 pi phi(0).
/// Also compares B(e + ix - n, e - ix - k) with B(e - ix - k, e + ix - n)
/// pointwise on |x| <= 5.
[[nodiscard]] Corollary3Result verify_corollary3(double eps, int n, int k,
                                                 const TestFunction& phi,
                                                 const QuadratureConfig& cfg = {});

/// Integral of phi(x) / (x - i alpha) against i pi phi(0) + PV of phi(x)/x.
[[nodiscard]] ConvergenceRecord verify_sokhotski(double alpha, const TestFunction& phi,
                                                 const QuadratureConfig& cfg = {});

/// Double integral of g(x) h(y) B(a + ix, b + iy) against the assembled
/// limit: pi [g(0) int h + h(0) int g] minus i times the prefactored
/// principal values, with the band |x + y| < kDiagonalBand removed from the
/// principal-value side.
[[nodiscard]] ConvergenceRecord verify_offdiag_limit(double a, double b, const TestFunction& g,
                                                     const TestFunction& h,
                                                     const QuadratureConfig& cfg = {});

/// Integral of phi(x) B(a + ix, b - ix); target 2 pi phi(0).
[[nodiscard]] ConvergenceRecord verify_diag_limit(double a, double b, const TestFunction& phi,
                                                  const QuadratureConfig& cfg = {});

}  // namespace deltabeta
