#include "deltabeta/run.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "deltabeta/gamma_suite.hpp"
#include "deltabeta/regularized_beta.hpp"
#include "deltabeta/test_functions.hpp"
#include "deltabeta/weak_limits.hpp"

namespace deltabeta {

namespace {

// Rows whose error is below this count as converged in monotonicity checks.
constexpr double kNoiseFloor = 1e-8;

constexpr std::array<std::pair<int, int>, 4> kShiftPairs = {{{0, 1}, {1, 0}, {1, 1}, {2, 1}}};

// Shortest text that reads back to the same double.
std::string fmt(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string describe(const ConvergenceRecord& r) {
    if (r.failure) return "error: " + *r.failure;
    return "rel_err=" + fmt(r.rel_err);
}

class Runner {
public:
    explicit Runner(const RunSpec& spec) : spec_(spec) {}

    RunReport run() {
        switch (spec_.command) {
            case Command::gamma_suite: gamma_suite(); break;
            case Command::theorem: theorem(); break;
            case Command::lemma: lemma(); break;
            case Command::cor2: cor2(); break;
            case Command::cor3: cor3({{spec_.n, spec_.k}}); break;
            case Command::sokhotski: sokhotski(); break;
            case Command::offdiag: offdiag(); break;
            case Command::diag: diag(); break;
            case Command::all:
                gamma_suite();
                theorem();
                lemma();
                cor2();
                cor3({kShiftPairs.begin(), kShiftPairs.end()});
                sokhotski();
                diag();
                offdiag();
                break;
        }
        return std::move(report_);
    }

private:
    [[nodiscard]] std::vector<double> schedule(const std::vector<double>& fallback) const {
        if (spec_.command == Command::all || spec_.schedule.empty()) return fallback;
        return spec_.schedule;
    }

    [[nodiscard]] QuadratureConfig config(const QuadratureConfig& fallback) const {
        return spec_.tolerances.value_or(fallback);
    }

    [[nodiscard]] std::vector<TestFunction> phis(bool registry_default = true) const {
        if (!spec_.phi_label.empty()) return {registry_function(spec_.phi_label)};
        if (!registry_default) return {registry_function("gaussian")};
        std::vector<TestFunction> out;
        for (const auto& label : registry_labels()) out.push_back(registry_function(label));
        return out;
    }

    void add_row(std::string_view command, const std::string& phi, const ConvergenceRecord& r,
                 int n, int k, bool pass) {
        Row row;
        row.command = command;
        row.phi = phi;
        row.reg_value_a = r.reg_a;
        row.reg_value_b = r.reg_b;
        row.n = n;
        row.k = k;
        row.action_re = r.action.real();
        row.action_im = r.action.imag();
        row.target = r.target.real();
        row.target_im = r.target.imag();
        row.abs_err = r.ok() ? r.abs_err : std::nan("");
        row.rel_err = r.ok() ? r.rel_err : std::nan("");
        row.pass = pass && r.ok();
        report_.rows.push_back(std::move(row));
    }

    // A row passes when its step of the sweep decreases the error (or is
    // already below the noise floor); the finest row must also meet the
    // final tolerance.
    void add_sweep_rows(std::string_view command, const std::string& phi, const SweepResult& s,
                        double tolerance, int n = 0, int k = 0) {
        for (std::size_t i = 0; i < s.records.size(); ++i) {
            const auto& r = s.records[i];
            bool pass = i == 0 || r.rel_err <= kNoiseFloor || r.rel_err < s.records[i - 1].rel_err;
            if (i + 1 == s.records.size()) pass = pass && r.rel_err < tolerance;
            add_row(command, phi, r, n, k, pass);
        }
    }

    void assert_that(std::string name, bool passed, std::string detail) {
        report_.assertions.push_back({std::move(name), passed, std::move(detail)});
    }

    void assert_sweep(const std::string& name, const SweepResult& s, double tolerance) {
        std::string detail = s.records.empty() ? "no points" : describe(s.records.back());
        detail += " (tolerance " + fmt(tolerance) + ")";
        if (s.monotone) detail += *s.monotone ? ", decreasing" : ", NOT decreasing";
        assert_that(name, s.passed(), detail);
    }

    SweepOptions sweep_options(double tolerance) const {
        SweepOptions o;
        o.final_tolerance = tolerance;
        o.noise_floor = kNoiseFloor;
        return o;
    }

    void gamma_suite() {
        for (const auto& check : run_gamma_suite()) {
            ConvergenceRecord r = ConvergenceRecord::make(0.0, 0.0, check.measured, 0.0);
            add_row("gamma-suite", check.name, r, 0, 0, check.passed());
            assert_that("gamma-suite/" + check.name, check.passed(),
                        "max error " + fmt(check.measured) + " over " +
                            std::to_string(check.points) + " points (tolerance " +
                            fmt(check.tolerance) + ")");
        }
    }

    void theorem() {
        constexpr double tol = 1e-2;
        const auto sched = schedule({1e-1, 1e-2, 1e-3});
        const auto cfg = config({});
        for (const auto& phi : phis()) {
            const auto s = sweep([&](double e) { return action_theorem(e, phi, cfg); }, sched,
                                 sweep_options(tol));
            add_sweep_rows("theorem", phi.label, s, tol);
            assert_sweep("theorem/" + phi.label, s, tol);
        }
    }

    void lemma() {
        constexpr double tol = 1e-2;
        const auto sched = schedule({1e-1, 1e-2, 1e-3});
        const auto cfg = config({});
        for (const auto& phi : phis()) {
            const auto s = sweep(
                [&](double e) { return action_lemma(e, smooth_factor, phi, cfg); }, sched,
                sweep_options(tol));
            add_sweep_rows("lemma", phi.label, s, tol);
            assert_sweep("lemma/" + phi.label, s, tol);
            if (s.records.empty() || !s.records.back().ok()) continue;
            const auto& finest = s.records.back();
            try {
                const auto direct = action_theorem(finest.reg_a, phi, cfg);
                const double gap = std::abs(finest.action - direct.action) / std::abs(direct.action);
                assert_that("lemma/" + phi.label + "/matches_theorem", gap < 1e-10,
                            "relative gap " + fmt(gap) + " (tolerance 1e-10)");
            } catch (const Error& e) {
                assert_that("lemma/" + phi.label + "/matches_theorem", false, e.what());
            }
        }
    }

    void cor2() {
        constexpr double tol = 2e-2;
        const auto eps_sched = schedule({1e-1, 1e-2, 1e-3});
        const std::vector<double> mu_sched = {1e-2, 1e-4, 1e-6};
        const auto cfg = config({});
        for (const auto& phi : phis()) {
            const auto res = verify_corollary2(eps_sched, mu_sched, phi, cfg, sweep_options(tol));
            add_sweep_rows("cor2:eps", phi.label, res.route_eps, tol);
            add_sweep_rows("cor2:trunc", phi.label, res.route_trunc, tol);
            assert_sweep("cor2/" + phi.label + "/eps_route", res.route_eps, tol);
            const auto& trunc = res.route_trunc;
            const bool trunc_ok = trunc.all_evaluated && trunc.final_within_tolerance;
            assert_that("cor2/" + phi.label + "/trunc_route", trunc_ok,
                        trunc.records.empty() ? "no points" : describe(trunc.records.back()));
            const bool both = res.route_eps.all_evaluated && trunc.all_evaluated;
            assert_that("cor2/" + phi.label + "/route_agreement", both && res.route_gap < tol,
                        "gap " + fmt(res.route_gap) + " (tolerance " + fmt(tol) + ")");
        }
    }

    void cor3(const std::vector<std::pair<int, int>>& pairs) {
        constexpr double tol = 2e-2;
        const auto sched = schedule({1e-1, 1e-2, 1e-3});
        const auto cfg = config({});
        for (const auto& phi : phis()) {
            // Reference (0, 0) action at the finest regularization.
            std::optional<Complex> reference;
            try {
                reference = verify_corollary3(sched.back(), 0, 0, phi, cfg).record.action;
            } catch (const Error&) {
            }
            for (const auto& [n, k] : pairs) {
                bool symmetric = true;
                double worst_swap = 0.0;
                const auto s = sweep(
                    [&, n = n, k = k](double e) {
                        const auto res = verify_corollary3(e, n, k, phi, cfg);
                        return res.record;
                    },
                    sched, sweep_options(tol));
                try {
                    const auto swap = verify_corollary3(sched.back(), n, k, phi, cfg);
                    symmetric = swap.swap_symmetric;
                    worst_swap = swap.swap_max_rel_diff;
                } catch (const Error&) {
                    symmetric = false;
                }
                const std::string name =
                    "cor3/" + phi.label + "/n" + std::to_string(n) + "k" + std::to_string(k);
                add_sweep_rows("cor3", phi.label, s, tol, n, k);
                assert_sweep(name, s, tol);
                assert_that(name + "/swap_symmetry", symmetric,
                            "max relative difference " + fmt(worst_swap));
                if (phi.value_at_zero != 0.0 && !s.records.empty() && s.records.back().ok() &&
                    reference) {
                    const double ratio = std::abs(s.records.back().action / *reference);
                    const double want = binomial(n, k);
                    const double err = std::abs(ratio - want) / want;
                    assert_that(name + "/ratio", err < tol,
                                "ratio " + fmt(ratio) + " vs " + fmt(want));
                }
            }
        }
    }

    void sokhotski() {
        constexpr double tol = 1e-3;
        const auto sched = schedule({1e-2, 1e-3, 1e-4});
        const auto cfg = config({});
        for (const auto& phi : phis()) {
            const auto s = sweep([&](double a) { return verify_sokhotski(a, phi, cfg); }, sched,
                                 sweep_options(tol));
            add_sweep_rows("sokhotski", phi.label, s, tol);
            assert_sweep("sokhotski/" + phi.label, s, tol);
        }
    }

    void diag() {
        constexpr double tol = 2e-2;
        const auto sched = schedule({1e-4});
        const auto cfg = config({});
        for (const auto& phi : phis()) {
            for (double eps : sched) {
                const std::array<std::pair<double, double>, 3> grid = {
                    {{eps, eps}, {10 * eps, eps}, {eps, 10 * eps}}};
                std::vector<ConvergenceRecord> recs;
                for (const auto& [a, b] : grid) {
                    ConvergenceRecord r;
                    try {
                        r = verify_diag_limit(a, b, phi, cfg);
                    } catch (const Error& e) {
                        r.reg_a = a;
                        r.reg_b = b;
                        r.failure = e.what();
                    }
                    add_row("diag", phi.label, r, 0, 0, r.ok() && r.rel_err < tol);
                    recs.push_back(r);
                }
                const bool all_ok = std::all_of(recs.begin(), recs.end(), [](const auto& r) {
                    return r.ok() && r.rel_err < tol;
                });
                double spread = 0.0;
                for (const auto& r1 : recs) {
                    for (const auto& r2 : recs) {
                        spread = std::max(spread, std::abs(r1.action - r2.action));
                    }
                }
                const double scale = std::abs(recs.front().target);
                if (scale > 0.0) spread /= scale;
                double worst = 0.0;
                for (const auto& r : recs) worst = std::max(worst, r.ok() ? r.rel_err : HUGE_VAL);
                const std::string name = "diag/" + phi.label + "/eps=" + fmt(eps);
                assert_that(name, all_ok, "worst rel_err " + fmt(worst) + " (tolerance 2e-2)");
                assert_that(name + "/path_independence", all_ok && spread < 2 * tol,
                            "spread " + fmt(spread) + " (tolerance 4e-2)");
            }
        }
    }

    void offdiag() {
        constexpr double tol = 5e-2;
        const auto sched = schedule({1e-3});
        QuadratureConfig loose;
        loose.abs_tol = 1e-8;
        loose.rel_tol = 1e-7;
        const auto cfg = config(loose);
        for (const auto& phi : phis(false)) {
            const auto s = sweep([&](double e) { return verify_offdiag_limit(e, e, phi, phi, cfg); },
                                 sched, sweep_options(tol));
            add_sweep_rows("offdiag", phi.label, s, tol);
            assert_sweep("offdiag/" + phi.label, s, tol);
        }
    }

    const RunSpec& spec_;
    RunReport report_;
};

}  // namespace

Command parse_command(std::string_view name) {
    static constexpr std::array<std::pair<std::string_view, Command>, 9> table = {{
        {"gamma-suite", Command::gamma_suite},
        {"theorem", Command::theorem},
        {"lemma", Command::lemma},
        {"cor2", Command::cor2},
        {"cor3", Command::cor3},
        {"sokhotski", Command::sokhotski},
        {"offdiag", Command::offdiag},
        {"diag", Command::diag},
        {"all", Command::all},
    }};
    for (const auto& [key, value] : table) {
        if (key == name) return value;
    }
    throw ConfigError("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command c) {
    switch (c) {
        case Command::gamma_suite: return "gamma-suite";
        case Command::theorem: return "theorem";
        case Command::lemma: return "lemma";
        case Command::cor2: return "cor2";
        case Command::cor3: return "cor3";
        case Command::sokhotski: return "sokhotski";
        case Command::offdiag: return "offdiag";
        case Command::diag: return "diag";
        case Command::all: return "all";
    }
    return "unknown";
}

void RunSpec::validate() const {
    if (!phi_label.empty()) {
        const auto& labels = registry_labels();
        if (std::find(labels.begin(), labels.end(), phi_label) == labels.end()) {
            throw ConfigError("unknown test function '" + phi_label + "'");
        }
    }
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (!(schedule[i] > 0.0) || !std::isfinite(schedule[i])) {
            throw ConfigError("schedule values must be positive");
        }
        if (i > 0 && !(schedule[i] < schedule[i - 1])) {
            throw ConfigError("schedule must be strictly decreasing");
        }
    }
    if (n < 0 || k < 0) throw ConfigError("--n and --k must be >= 0");
    if (command == Command::cor3 && !schedule.empty() && schedule.front() >= 0.5) {
        throw ConfigError("cor3 schedule values must be below 1/2");
    }
    if (tolerances) tolerances->validate();
}

bool RunReport::passed() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const Assertion& a) { return a.passed; });
}

RunReport execute(const RunSpec& spec) {
    spec.validate();
    return Runner(spec).run();
}

std::string to_csv(const std::vector<Row>& rows) {
    std::ostringstream os;
    os << "command,phi,reg_value_a,reg_value_b,n,k,action_re,action_im,target,target_im,"
          "abs_err,rel_err,pass\n";
    for (const auto& r : rows) {
        os << r.command << ',' << r.phi << ',' << fmt(r.reg_value_a) << ','
           << fmt(r.reg_value_b) << ',' << r.n << ',' << r.k << ',' << fmt(r.action_re) << ','
           << fmt(r.action_im) << ',' << fmt(r.target) << ',' << fmt(r.target_im) << ','
           << fmt(r.abs_err) << ',' << fmt(r.rel_err) << ',' << (r.pass ? "true" : "false")
           << '\n';
    }
    return os.str();
}

std::string to_json(const std::vector<Row>& rows) {
    auto number = [](double v) -> nlohmann::ordered_json {
        if (!std::isfinite(v)) return nullptr;
        return v;
    };
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json obj;
        obj["command"] = r.command;
        obj["phi"] = r.phi;
        obj["reg_value_a"] = number(r.reg_value_a);
        obj["reg_value_b"] = number(r.reg_value_b);
        obj["n"] = r.n;
        obj["k"] = r.k;
        obj["action_re"] = number(r.action_re);
        obj["action_im"] = number(r.action_im);
        obj["target"] = number(r.target);
        obj["target_im"] = number(r.target_im);
        obj["abs_err"] = number(r.abs_err);
        obj["rel_err"] = number(r.rel_err);
        obj["pass"] = r.pass;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    RunReport report;
    try {
        report = execute(spec);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "configuration error: " << e.what() << '\n';
        return 2;
    }

    const std::string table =
        spec.output_format == OutputFormat::json ? to_json(report.rows) : to_csv(report.rows);
    if (spec.output_path.empty()) {
        out << table;
    } else {
        std::ofstream file(spec.output_path, std::ios::binary);
        if (!file) {
            err << "cannot open output file '" << spec.output_path << "'\n";
            return 2;
        }
        file << table;
    }

    for (const auto& a : report.assertions) {
        out << (a.passed ? "PASS " : "FAIL ") << a.name << ": " << a.detail << '\n';
    }
    const auto failed = std::count_if(report.assertions.begin(), report.assertions.end(),
                                      [](const Assertion& a) { return !a.passed; });
    out << (failed == 0 ? "PASS" : "FAIL") << ' ' << command_name(spec.command) << ": "
        << report.assertions.size() - static_cast<std::size_t>(failed) << '/'
        << report.assertions.size() << " assertions passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace deltabeta
