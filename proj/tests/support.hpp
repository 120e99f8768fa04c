#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace deltabeta::testing {

inline double rel_diff(std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace deltabeta::testing
