#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace gupnl {

// Default hybrid tolerances: |a - b| <= atol + rtol * max(|a|, |b|).
inline constexpr double kAtol = 1e-12;
inline constexpr double kRtol = 1e-9;

inline bool close(double a, double b, double rtol = kRtol, double atol = kAtol) {
    return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
}

inline bool close(std::complex<double> a, std::complex<double> b,
                  double rtol = kRtol, double atol = kAtol) {
    return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
}

}  // namespace gupnl
