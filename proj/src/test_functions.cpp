#include "deltabeta/test_functions.hpp"

#include <cmath>

#include "deltabeta/errors.hpp"

namespace deltabeta {

const std::vector<std::string>& registry_labels() {
    static const std::vector<std::string> labels = {
        "gaussian", "bump", "shifted_gaussian", "windowed_cubic"};
    return labels;
}

TestFunction gaussian_function(double lo, double hi) {
    return {[](double x) { return std::exp(-x * x); }, lo, hi, 1.0, "gaussian"};
}

TestFunction registry_function(std::string_view label) {
    if (label == "gaussian") return gaussian_function(-8.0, 8.0);
    if (label == "bump") {
        return {[](double x) {
                    const double s = 1.0 - x * x;
                    return s <= 0.0 ? 0.0 : std::exp(-x * x / s);
                },
                -1.0, 1.0, 1.0, "bump"};
    }
    if (label == "shifted_gaussian") {
        return {[](double x) { return std::exp(-(x - 2.0) * (x - 2.0)); }, -6.0, 6.0,
                std::exp(-4.0), "shifted_gaussian"};
    }
    if (label == "windowed_cubic") {
        return {[](double x) {
                    const double w = 1.0 + x * x;
                    return (1.0 + x * (0.5 + x * (-0.3 + 0.2 * x))) / (w * w * w);
                },
                -40.0, 40.0, 1.0, "windowed_cubic"};
    }
    throw ConfigError("unknown test function '" + std::string(label) + "'");
}

TestFunction constant_function(double c, double lo, double hi) {
    return {[c](double) { return c; }, lo, hi, c, "constant"};
}

TestFunction identity_function(double lo, double hi) {
    return {[](double x) { return x; }, lo, hi, 0.0, "identity"};
}

TestFunction reflected(const TestFunction& phi) {
    auto f = phi.evaluate;
    return {[f](double x) { return f(-x); }, -phi.hi, -phi.lo, phi.value_at_zero,
            phi.label + "_reflected"};
}

}  // namespace deltabeta
