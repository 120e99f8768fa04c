#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "deltabeta/errors.hpp"
#include "deltabeta/quadrature.hpp"
#include "deltabeta/regularized_beta.hpp"
#include "deltabeta/special_functions.hpp"
#include "deltabeta/test_functions.hpp"
#include "support.hpp"

using namespace deltabeta;
using deltabeta::testing::rel_diff;

TEST_CASE("adaptive quadrature on elementary integrals") {
    const QuadratureConfig cfg;
    auto sine = [](double x) { return Complex(std::sin(x), 0.0); };
    CHECK(std::abs(integrate_adaptive(sine, 0.0, kPi, cfg).value - 2.0) < 1e-12);

    auto wave = [](double x) { return std::exp(Complex(0.0, 3.0 * x)); };
    const Complex want = (std::exp(Complex(0.0, 6.0)) - 1.0) / Complex(0.0, 3.0);
    CHECK(std::abs(integrate_adaptive(wave, 0.0, 2.0, cfg).value - want) < 1e-12);

    // Integrable endpoint singularity.
    auto root = [](double x) { return Complex(1.0 / std::sqrt(x), 0.0); };
    const auto r = integrate_adaptive(root, 0.0, 1.0, cfg);
    CHECK(std::abs(r.value - 2.0) < 1e-8);
    CHECK(r.subdivisions > 0);

    CHECK(std::abs(integrate_real([](double x) { return x * x; }, -1.0, 2.0, cfg) - 3.0) < 1e-13);
}

TEST_CASE("reported error bounds the true error") {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-6;
    cfg.rel_tol = 1e-6;
    auto lorentz = [](double x) { return Complex(1e-3 / (1e-6 + x * x), 0.0); };
    const auto r = integrate_adaptive(lorentz, -1.0, 1.0, cfg);
    const double exact = 2.0 * std::atan(1e3);
    CHECK(std::abs(r.value - exact) <= std::max(r.error, 1e-12));
    CHECK(r.error <= 1e-6 * exact);
}

TEST_CASE("breakpoints are honoured") {
    const QuadratureConfig cfg;
    auto kink = [](double x) { return Complex(std::abs(x - 0.3), 0.0); };
    const std::array<double, 3> pts = {-1.0, 0.3, 1.0};
    const auto r = integrate_adaptive(kink, pts, cfg);
    CHECK(std::abs(r.value - (1.3 * 1.3 + 0.7 * 0.7) / 2.0) < 1e-14);
    CHECK(r.subdivisions == 0);
}

TEST_CASE("subdivision budget raises QuadratureError with the estimate") {
    QuadratureConfig cfg;
    cfg.max_subdivisions = 5;
    auto nasty = [](double x) { return Complex(std::sin(1.0 / (x + 1e-3)), 0.0); };
    try {
        (void)integrate_adaptive(nasty, 0.0, 1.0, cfg);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::isfinite(e.estimate().real()));
        CHECK(e.error_bound() > 0.0);
    }
}

TEST_CASE("config validation") {
    QuadratureConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.abs_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = {};
    cfg.max_subdivisions = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = {};
    cfg.pv_excision = -1.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("peak partition") {
    const auto pts = peak_partition(-8.0, 8.0, 1e-3);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(pts.front() == -8.0);
    CHECK(pts.back() == 8.0);
    CHECK(std::find(pts.begin(), pts.end(), 0.0) != pts.end());
    CHECK(std::find(pts.begin(), pts.end(), 1e-3) != pts.end());
    CHECK(std::find(pts.begin(), pts.end(), -1e-3) != pts.end());

    const auto panels = peak_partition(0.0, 10.0, 1.0, 0.5);
    for (std::size_t i = 1; i < panels.size(); ++i) CHECK(panels[i] - panels[i - 1] <= 0.5 + 1e-12);
}

TEST_CASE("principal values") {
    const QuadratureConfig cfg;
    auto one = [](double) { return Complex(1.0, 0.0); };
    CHECK(std::abs(principal_value(one, -1.0, 2.0, cfg) - std::log(2.0)) < 1e-10);
    CHECK(std::abs(principal_value(one, -3.0, 0.5, cfg) - std::log(0.5 / 3.0)) < 1e-10);

    // Even test functions have zero principal value.
    const TestFunction g = registry_function("gaussian");
    CHECK(std::abs(integrate_pv(g, g.lo, g.hi, cfg)) < 1e-10);

    // phi(x) = x: the principal value is the plain integral of 1.
    const TestFunction id = identity_function(-2.0, 3.0);
    CHECK(std::abs(integrate_pv(id, id.lo, id.hi, cfg) - 5.0) < 1e-10);

    // PV of exp(x) / x over [-1, 1] = 2 Shi(1).
    auto ex = [](double x) { return Complex(std::exp(x), 0.0); };
    CHECK(std::abs(principal_value(ex, -1.0, 1.0, cfg) - 2.0 * 1.0572508753757285146) < 1e-10);

    CHECK_THROWS_AS((void)principal_value(one, 0.5, 2.0, cfg), DomainError);
}

TEST_CASE("truncation parameters map to xi-line cuts") {
    const TruncationParams t{1e-3, 1e-2};
    CHECK(std::abs(t.beta_cut() - std::log((1 - 1e-3) / 1e-3)) < 1e-13);
    CHECK(std::abs(t.alpha_cut() - std::log((1 - 1e-2) / 1e-2)) < 1e-13);
    const auto back = TruncationParams::from_cuts(t.alpha_cut(), t.beta_cut());
    CHECK(std::abs(back.mu - t.mu) < 1e-16);
    CHECK(std::abs(back.lam - t.lam) < 1e-16);
    CHECK(std::isinf(TruncationParams::none().alpha_cut()));
    CHECK_THROWS_AS((TruncationParams{0.6, 0.5}.validate()), DomainError);
    CHECK_THROWS_AS((TruncationParams{-0.1, 0.0}.validate()), DomainError);
}

TEST_CASE("truncated t-integral equals the closed-form Fourier integral") {
    const QuadratureConfig cfg;
    for (double mu : {1e-1, 1e-3}) {
        for (double lam : {1e-2, 1e-4}) {
            const TruncationParams t{mu, lam};
            for (double x : {-3.0, -0.5, 0.0, 0.25, 2.0}) {
                const Complex direct = beta_integral_direct(0.0, 0.0, x, -x, t, cfg);
                const Complex closed = truncated_fourier(-x, t.alpha_cut(), t.beta_cut());
                CHECK(std::abs(direct - closed) < 1e-9);
            }
        }
    }
    CHECK(truncated_fourier(0.0, 2.0, 3.0) == Complex(5.0, 0.0));
    CHECK(std::abs(truncated_fourier(1e-12, 2.0, 3.0) - 5.0) < 1e-10);
}

TEST_CASE("direct beta integral matches the gamma route") {
    const QuadratureConfig cfg;
    for (double x : {-1.5, 0.0, 0.7}) {
        for (double y : {-0.7, 0.3, 2.0}) {
            const Complex direct = beta_integral_direct(0.05, 0.05, x, y, TruncationParams::none(), cfg);
            CHECK(rel_diff(direct, beta({0.05, x}, {0.05, y})) < 1e-8);
        }
    }
    CHECK_THROWS_AS(
        (void)beta_integral_direct(0.0, 0.1, 1.0, 1.0, TruncationParams::none(), cfg),
        DomainError);
    CHECK_THROWS_AS(
        (void)beta_integral_direct(0.1, 0.0, 1.0, 1.0, TruncationParams::none(), cfg),
        DomainError);
}

TEST_CASE("integrand factory") {
    IntegrandSpec spec;
    spec.kind = IntegrandSpec::Kind::beta_critical;
    spec.a = 1.0;
    spec.b = 2.0;
    const auto f = make_integrand(spec);
    CHECK(std::abs(f(0.5) - 0.5) < 1e-15);

    spec.kind = IntegrandSpec::Kind::truncated_fourier;
    spec.x = 2.0;
    CHECK(std::abs(make_integrand(spec)(0.25) - std::exp(Complex(0.0, 0.5))) < 1e-15);

    spec.kind = IntegrandSpec::Kind::generic;
    CHECK_THROWS_AS((void)make_integrand(spec), DomainError);

    spec.kind = IntegrandSpec::Kind::cosh_representation;
    spec.a = -0.1;
    CHECK_THROWS_AS(spec.validate(), DomainError);
}
