#pragma once

#include <string>
#include <vector>

namespace deltabeta {

struct PropertyCheck {
    std::string name;
    double measured = 0.0;   // worst error over the grid
    double tolerance = 0.0;
    int points = 0;

    [[nodiscard]] bool passed() const { return measured < tolerance; }
};

/// Recurrence, reflection and conjugate symmetry of gamma on a 200-point
/// complex grid (relative errors, tolerance 1e-10), and digamma / trigamma
/// against central differences of log_gamma / digamma (h = 1e-5,
/// tolerance 1e-6).
[[nodiscard]] std::vector<PropertyCheck> run_gamma_suite();

}  // namespace deltabeta
