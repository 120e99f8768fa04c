// Acceptance run: one PASS/FAIL line per criterion, each with its wall time.
// Usage: acceptance [path-to-deltabeta-cli]; without the path the CLI
// determinism criterion compares two in-process runs instead.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "deltabeta/gamma_suite.hpp"
#include "deltabeta/quadrature.hpp"
#include "deltabeta/regularized_beta.hpp"
#include "deltabeta/run.hpp"
#include "deltabeta/special_functions.hpp"
#include "deltabeta/test_functions.hpp"
#include "deltabeta/weak_limits.hpp"

using namespace deltabeta;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// Drops the trailing separator left by the per-function loops.
std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == ';')) s.pop_back();
    return s;
}

std::vector<TestFunction> registry() {
    std::vector<TestFunction> out;
    for (const auto& label : registry_labels()) out.push_back(registry_function(label));
    return out;
}

SweepOptions options(double tolerance) {
    SweepOptions o;
    o.final_tolerance = tolerance;
    o.noise_floor = 1e-8;
    return o;
}

constexpr std::array<double, 3> kEps = {1e-1, 1e-2, 1e-3};

Outcome gamma_identities() {
    Outcome o{true, ""};
    for (const auto& c : run_gamma_suite()) {
        o.passed = o.passed && c.passed();
        o.detail += c.name + "=" + num(c.measured) + " ";
    }
    return o;
}

Outcome factorization() {
    double worst = 0.0;
    for (double eps : kEps) {
        for (int i = 0; i < 50; ++i) {
            const double x = -5.0 + 10.0 * (i + 0.5) / 50.0;
            const Complex b = beta_diag_regularized(eps, x);
            worst = std::max(worst, std::abs(factorize_diag(eps, x).product() - b) / std::abs(b));
        }
    }

    const double h = 1e-5;
    auto central = [h](double eps, double x) {
        return (smooth_factor(eps + h, x) - smooth_factor(eps - h, x)) / (2.0 * h);
    };
    const double f00 = std::abs(smooth_factor(0.0, 0.0) - 2.0);
    const double d00 = std::abs(central(0.0, 0.0));

    double route_gap = 0.0;
    for (double eps : {0.0, 1e-3, 1e-2, 1e-1}) {
        for (double x : {0.0, 0.3, 1.0, 2.5}) {
            route_gap = std::max(route_gap,
                                 std::abs(smooth_factor_derivatives(eps, x).d_eps - central(eps, x)));
        }
    }
    return {worst < 1e-12 && f00 < 1e-6 && d00 < 1e-6 && route_gap < 1e-8,
            "max rel diff " + num(worst) + ", |f(0,0)-2| " + num(f00) + ", |f'(0,0)| " +
                num(d00) + ", digamma route vs differences " + num(route_gap)};
}

Outcome theorem() {
    Outcome o{true, ""};
    for (const auto& phi : registry()) {
        const auto s = sweep([&](double e) { return action_theorem(e, phi); }, kEps, options(1e-2));
        const bool strict = s.all_evaluated && errors_decreasing(s.records);
        o.passed = o.passed && s.final_within_tolerance && strict;
        o.detail += phi.label + " " + num(s.records.back().rel_err) + (strict ? "" : " (not decreasing)") + "; ";
    }
    return o;
}

Outcome corollary2() {
    const std::array<double, 3> mu = {1e-2, 1e-4, 1e-6};
    Outcome o{true, ""};
    for (const auto& phi : registry()) {
        const auto r = verify_corollary2(kEps, mu, phi, {}, options(2e-2));
        const bool ok = r.route_eps.final_within_tolerance &&
                        r.route_trunc.final_within_tolerance && r.route_gap < 2e-2;
        o.passed = o.passed && ok;
        o.detail += phi.label + " gap " + num(r.route_gap) + "; ";
    }
    return o;
}

Outcome corollary3() {
    const std::array<std::pair<int, int>, 4> pairs = {{{0, 1}, {1, 0}, {1, 1}, {2, 1}}};
    const double eps = 1e-3;
    Outcome o{true, ""};
    for (const auto& phi : registry()) {
        const Complex base = verify_corollary3(eps, 0, 0, phi).record.action;
        double worst = 0.0;
        double swap = 0.0;
        bool pointwise = true;
        for (auto [n, k] : pairs) {
            const auto nk = verify_corollary3(eps, n, k, phi);
            const auto kn = verify_corollary3(eps, k, n, reflected(phi));
            const double want = binomial(n, k);
            worst = std::max(worst, std::abs(nk.record.action / base - want) / want);
            swap = std::max(swap, std::abs(nk.record.action - kn.record.action) /
                                      std::abs(nk.record.action));
            pointwise = pointwise && nk.swap_symmetric;
        }
        o.passed = o.passed && worst < 2e-2 && swap < 1e-10 && pointwise;
        o.detail += phi.label + " ratio " + num(worst) + " swap " + num(swap) + "; ";
    }
    return o;
}

Outcome sokhotski() {
    const double alpha = 1e-4;
    const auto g = verify_sokhotski(alpha, registry_function("gaussian"));
    const double im_err = std::abs(g.action.imag() - kPi);
    const double even_pv = std::abs(g.action.real());
    const auto id = verify_sokhotski(alpha, identity_function(-2.0, 3.0));
    const double odd_pv = std::abs(id.action.real() - 5.0);
    const double odd_target = std::abs(id.target.real() - 5.0);
    return {im_err < 1e-3 && even_pv < 1e-3 && odd_pv < 1e-3 && odd_target < 1e-3,
            "|Im - pi phi(0)| " + num(im_err) + ", even PV " + num(even_pv) +
                ", PV for phi(x)=x off by " + num(odd_pv)};
}

Outcome diagonal() {
    const double eps = 1e-4;
    const std::array<std::pair<double, double>, 3> paths = {
        {{eps, eps}, {10 * eps, eps}, {eps, 10 * eps}}};
    double worst = 0.0;
    for (const auto& phi : registry()) {
        for (auto [a, b] : paths) worst = std::max(worst, verify_diag_limit(a, b, phi).rel_err);
    }
    return {worst < 2e-2, "worst rel err " + num(worst)};
}

Outcome offdiagonal() {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-8;
    cfg.rel_tol = 1e-7;
    const TestFunction g = registry_function("gaussian");
    const auto r = verify_offdiag_limit(1e-3, 1e-3, g, g, cfg);
    return {r.ok() && r.rel_err < 5e-2, "rel err " + num(r.rel_err)};
}

Outcome change_of_variables() {
    const QuadratureConfig cfg;
    double worst_trunc = 0.0;
    for (double mu : {1e-1, 1e-2, 1e-4}) {
        for (double lam : {1e-1, 1e-3, 1e-5}) {
            const TruncationParams t{mu, lam};
            for (double x : {-4.0, -1.0, -0.2, 0.0, 0.5, 3.0}) {
                const Complex direct = beta_integral_direct(0.0, 0.0, x, -x, t, cfg);
                worst_trunc = std::max(
                    worst_trunc, std::abs(direct - truncated_fourier(-x, t.alpha_cut(), t.beta_cut())));
            }
        }
    }
    double worst_beta = 0.0;
    for (double x : {-2.0, -0.5, 0.0, 1.0}) {
        for (double y : {-1.0, 0.0, 0.4, 2.0}) {
            const Complex direct = beta_integral_direct(0.05, 0.05, x, y, TruncationParams::none(), cfg);
            const Complex gamma_route = beta({0.05, x}, {0.05, y});
            worst_beta = std::max(worst_beta, std::abs(direct - gamma_route) / std::abs(gamma_route));
        }
    }
    return {worst_trunc < 1e-9 && worst_beta < 1e-8,
            "truncated vs Fourier " + num(worst_trunc) + ", direct vs gamma " + num(worst_beta)};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Outcome cli_determinism(const std::string& cli) {
    if (cli.empty()) {
        RunSpec spec;
        const std::string first = to_csv(execute(spec).rows);
        const auto report = execute(spec);
        return {report.passed() && first == to_csv(report.rows), "in-process runs compared"};
    }
    const auto dir = std::filesystem::temp_directory_path() / "deltabeta_acceptance";
    std::filesystem::create_directories(dir);
    std::array<std::string, 2> tables;
    std::array<int, 2> codes{};
    for (int i = 0; i < 2; ++i) {
        const auto table = dir / ("all_" + std::to_string(i) + ".csv");
        const std::string cmd = "\"" + cli + "\" all --out \"" + table.string() + "\" > \"" +
                                (dir / "summary.txt").string() + "\"";
        codes[i] = std::system(cmd.c_str());
        tables[i] = slurp(table);
    }
    const bool same = !tables[0].empty() && tables[0] == tables[1];
    return {codes[0] == 0 && codes[1] == 0 && same,
            "exit codes " + std::to_string(codes[0]) + "/" + std::to_string(codes[1]) +
                (same ? ", tables identical" : ", tables differ")};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    struct Criterion {
        const char* name;
        double limit_s;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria = {
        {"gamma identity suite", 5, gamma_identities},
        {"factorization exactness", 5, factorization},
        {"delta limit of B(e+ix, e-ix)", 60, theorem},
        {"limit order: regularized vs truncated", 60, corollary2},
        {"shifted weights (n+k)!/(n!k!)", 120, corollary3},
        {"Sokhotski formula", 10, sokhotski},
        {"diagonal two-variable limit", 60, diagonal},
        {"off-diagonal two-variable limit", 600, offdiagonal},
        {"change of variables", 30, change_of_variables},
        {"CLI determinism", 1e9, [&cli] { return cli_determinism(cli); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        o.detail = trimmed(o.detail);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_s;
        const bool pass = o.passed && in_time;
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << c.name << ": "
                  << o.detail << " (" << num(secs) << " s" << (in_time ? "" : ", over time limit")
                  << ")\n";
    }
    std::cout << (failed == 0 ? "PASS" : "FAIL") << " acceptance: "
              << criteria.size() - static_cast<std::size_t>(failed) << '/' << criteria.size()
              << " criteria\n";
    return failed == 0 ? 0 : 1;
}
