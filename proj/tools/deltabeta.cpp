// deltabeta: run the weak-limit verification suites and write convergence
// tables.
//
//   deltabeta <command> [--phi LABEL] [--schedule v1,v2,...] [--n N] [--k K]
//             [--format csv|json] [--out PATH]
//             [--abs-tol T] [--rel-tol T] [--max-subdiv M]
//
// Exit status: 0 all assertions pass, 1 an assertion failed, 2 bad arguments.

#include <CLI11.hpp>

#include <iostream>

#include "deltabeta/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Weak-limit verification of the Euler beta function on its critical lines"};

    std::string command;
    deltabeta::RunSpec spec;
    std::string format = "csv";
    std::optional<double> abs_tol;
    std::optional<double> rel_tol;
    std::optional<int> max_subdiv;

    app.add_option("command", command,
                   "gamma-suite | theorem | lemma | cor2 | cor3 | sokhotski | offdiag | diag | all")
        ->required();
    app.add_option("--phi", spec.phi_label,
                   "Test function: gaussian, bump, shifted_gaussian, windowed_cubic");
    app.add_option("--schedule", spec.schedule, "Regularization values, strictly decreasing")
        ->delimiter(',');
    app.add_option("--n", spec.n, "First shift index (cor3)");
    app.add_option("--k", spec.k, "Second shift index (cor3)");
    app.add_option("--format", format, "Table format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", spec.output_path, "Write the table here instead of stdout");
    app.add_option("--abs-tol", abs_tol, "Quadrature absolute tolerance");
    app.add_option("--rel-tol", rel_tol, "Quadrature relative tolerance");
    app.add_option("--max-subdiv", max_subdiv, "Quadrature subdivision budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        spec.command = deltabeta::parse_command(command);
    } catch (const deltabeta::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    }
    spec.output_format =
        format == "json" ? deltabeta::OutputFormat::json : deltabeta::OutputFormat::csv;
    if (abs_tol || rel_tol || max_subdiv) {
        deltabeta::QuadratureConfig cfg;
        if (abs_tol) cfg.abs_tol = *abs_tol;
        if (rel_tol) cfg.rel_tol = *rel_tol;
        if (max_subdiv) cfg.max_subdivisions = *max_subdiv;
        spec.tolerances = cfg;
    }
    return deltabeta::run(spec, std::cout, std::cerr);
}
