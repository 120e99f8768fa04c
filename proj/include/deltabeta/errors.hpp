#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace deltabeta {

using Complex = std::complex<double>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument lies within the pole radius of a nonpositive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Test-function support does not contain the point the distribution samples.
class SupportError : public Error {
public:
    using Error::Error;
};

/// Invalid run configuration (unknown label, malformed schedule, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Adaptive integration ran out of subdivisions. Carries the best estimate
/// reached so the caller can still report it.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, Complex estimate, double error_bound)
        : Error(what), estimate_(estimate), error_bound_(error_bound) {}

    [[nodiscard]] Complex estimate() const noexcept { return estimate_; }
    [[nodiscard]] double error_bound() const noexcept { return error_bound_; }

private:
    Complex estimate_;
    double error_bound_;
};

inline void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(name) + " must be finite");
    }
}

inline void require_finite(Complex z, const char* name) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError(std::string(name) + " must be finite");
    }
}

}  // namespace deltabeta
