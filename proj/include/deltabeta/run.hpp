#pragma once

// Verification runs behind the command-line tool: each command evaluates one
// identity over a regularization schedule, produces table rows, and a list of
// pass/fail assertions.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deltabeta/quadrature.hpp"

namespace deltabeta {

enum class Command { gamma_suite, theorem, lemma, cor2, cor3, sokhotski, offdiag, diag, all };
enum class OutputFormat { csv, json };

[[nodiscard]] Command parse_command(std::string_view name);
[[nodiscard]] std::string_view command_name(Command c);

struct RunSpec {
    Command command = Command::all;
    std::string phi_label;          // empty: the command's default set
    std::vector<double> schedule;   // empty: the command's default schedule
    int n = 1;
    int k = 1;
    OutputFormat output_format = OutputFormat::csv;
    std::string output_path;        // empty: table goes to the summary stream
    std::optional<QuadratureConfig> tolerances;

    /// Throws ConfigError on an unknown label or a malformed schedule.
    void validate() const;
};

/// One table row. `target` and `target_im` are the real and imaginary parts
/// of the limit value.
struct Row {
    std::string command;
    std::string phi;
    double reg_value_a = 0.0;
    double reg_value_b = 0.0;
    int n = 0;
    int k = 0;
    double action_re = 0.0;
    double action_im = 0.0;
    double target = 0.0;
    double target_im = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
};

struct Assertion {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct RunReport {
    std::vector<Row> rows;
    std::vector<Assertion> assertions;

    [[nodiscard]] bool passed() const;
};

/// Runs the command. Configuration problems throw ConfigError; numerical
/// failures end up as failed rows and assertions.
[[nodiscard]] RunReport execute(const RunSpec& spec);

/// Header plus one line per row; floats in shortest round-trip form.
[[nodiscard]] std::string to_csv(const std::vector<Row>& rows);
/// Array of objects keyed like the CSV columns.
[[nodiscard]] std::string to_json(const std::vector<Row>& rows);

/// Executes, writes the table, prints one PASS/FAIL line per assertion.
/// Returns 0 when every assertion passes, 1 otherwise, 2 on configuration
/// errors.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace deltabeta
