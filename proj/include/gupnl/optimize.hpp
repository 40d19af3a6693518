#pragma once

#include <cmath>

namespace gupnl {

// Golden-section minimization of a unimodal function on [lo, hi].
// Stops when the bracket width falls below rel_tol * |mid| + abs_floor.
template <typename F>
double minimize_golden(F&& f, double lo, double hi, double rel_tol = 1e-10,
                       int max_iter = 400) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < max_iter && (b - a) > rel_tol * (std::abs(a) + std::abs(b)); ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace gupnl
