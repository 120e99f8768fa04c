#include <doctest.h>

#include <array>
#include <cmath>

#include "deltabeta/errors.hpp"
#include "deltabeta/gamma_suite.hpp"
#include "deltabeta/special_functions.hpp"
#include "support.hpp"

using namespace deltabeta;
using deltabeta::testing::rel_diff;

namespace {

// Reference values computed with mpmath at 30 digits.
struct Oracle {
    Complex z;
    Complex gamma;
    Complex psi;
    Complex psi1;
};

const std::array<Oracle, 5> kOracles = {{
    {{0.3, 2.5},
     {0.035831884984150130037, -0.020264814365175002704},
     {0.91274828839561796343, 1.6517469215951299914},
     {-0.033192606640100103455, -0.40290329124853227016}},
    {{-2.5, 1.5},
     {0.0034121395642391490286, -0.024053490434664735984},
     {1.2124201004669807554, 2.6803467438096721586},
     {-0.26304399064174424134, -0.13121096131661390067}},
    {{7.25, -3.5},
     {413.38648914857977482, -252.49453307381923277},
     {2.0290185126452162247, -0.4777654375676230368},
     {0.11673027798264127603, 0.060353492200036215142}},
    {{0.05, -30.0},
     {-1.1106619649939981015e-21, -1.4878728390275741981e-21},
     {3.401263594962718517, -1.5857965907508375367},
     {-0.00050002640006780403747, 0.033328918473160287265}},
    {{-0.7, 0.0}, {-4.2736699824108433611, 0.0}, {-2.0739527936287037831, 0.0},
     {14.286180872638339627, 0.0}},
}};

}  // namespace

TEST_CASE("gamma, digamma and trigamma match reference values") {
    for (const auto& o : kOracles) {
        CAPTURE(o.z);
        CHECK(rel_diff(gamma(o.z), o.gamma) < 1e-12);
        CHECK(rel_diff(digamma(o.z), o.psi) < 1e-12);
        CHECK(rel_diff(trigamma(o.z), o.psi1) < 1e-11);
    }
}

TEST_CASE("log_gamma stays on the principal branch") {
    CHECK(rel_diff(log_gamma({0.3, 2.5}), {-3.1901582064283988131, -0.5147052958740417364}) <
          1e-13);
    CHECK(rel_diff(log_gamma({7.25, -3.5}), {6.1829078550545152662, -6.8315047532739026883}) <
          1e-13);
    CHECK(rel_diff(log_gamma({0.05, -30.0}), {-47.73548613355410623, -71.327076895747930882}) <
          1e-13);

    // Continuity across Re z = 1/2, where the evaluation route switches.
    for (double y : {-40.0, -3.0, 0.7, 25.0}) {
        const Complex left = log_gamma({0.5 - 1e-9, y});
        const Complex right = log_gamma({0.5 + 1e-9, y});
        CHECK(std::abs(left - right) < 1e-7);
    }
}

TEST_CASE("small integers and half integers") {
    CHECK(std::abs(gamma({1.0, 0.0}) - 1.0) < 1e-14);
    CHECK(std::abs(gamma({5.0, 0.0}) - 24.0) < 1e-12);
    CHECK(std::abs(gamma({0.5, 0.0}) - std::sqrt(kPi)) < 1e-14);
    CHECK(std::abs(digamma({1.0, 0.0}) + kEulerGamma) < 1e-14);
    CHECK(std::abs(digamma({1.0, 0.0}) + Constants::euler_gamma) < 1e-14);
    CHECK(std::abs(trigamma({1.0, 0.0}) - kPi * kPi / 6.0) < 1e-13);
}

TEST_CASE("|gamma(ix)|^2 = pi / (x sinh(pi x))") {
    for (double x : {0.1, 1.0, 4.0, 12.0}) {
        const double want = kPi / (x * std::sinh(kPi * x));
        CHECK(std::abs(std::norm(gamma({0.0, x})) - want) / want < 1e-12);
    }
}

TEST_CASE("poles raise PoleError") {
    CHECK_THROWS_AS((void)gamma({0.0, 0.0}), PoleError);
    CHECK_THROWS_AS((void)gamma({-3.0, 5e-9}), PoleError);
    CHECK_THROWS_AS((void)digamma({-1.0, 0.0}), PoleError);
    CHECK_THROWS_AS((void)trigamma({-2.0, 0.0}), PoleError);
    CHECK_NOTHROW((void)gamma({-3.0, 1e-6}));
    CHECK_THROWS_AS((void)gamma({-3.0, 1e-6}, 1e-5), PoleError);
    CHECK_THROWS_AS(check_pole({-7.0, 0.0}), PoleError);
}

TEST_CASE("gamma identity suite passes") {
    const auto checks = run_gamma_suite();
    REQUIRE(checks.size() == 5);
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CHECK(c.points == 200);
        CHECK(c.passed());
    }
}
