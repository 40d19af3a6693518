#include "gupnl/uncertainty.hpp"

#include <cmath>

#include "gupnl/errors.hpp"
#include "gupnl/optimize.hpp"

namespace gupnl {

double uncertainty_product(double delta_p, const GupParams& params) {
    if (!std::isfinite(delta_p) || delta_p <= 0.0)
        throw domain_error("uncertainty_product: delta_p must be finite and positive");
    return 0.5 * params.hbar * (1.0 / delta_p + 3.0 * params.beta * delta_p);
}

double minimal_length(const GupParams& params) {
    return std::sqrt(3.0 * params.beta) * params.hbar;
}

double minimal_length_numeric(const GupParams& params) {
    // Wide fixed bracket; the product is unimodal on (0, inf) and the
    // minimizer 1/sqrt(3 beta) sits far inside for any sane beta.
    const double dp = minimize_golden(
        [&](double x) { return uncertainty_product(x, params); }, 1e-12, 1e12);
    return uncertainty_product(dp, params);
}

}  // namespace gupnl
