#pragma once

#include "gupnl/params.hpp"

namespace gupnl {

// Position uncertainty saturating dx dP = (hbar/2)(1 + 3 beta dP^2),
// i.e.  dx = (hbar/2)(1/dP + 3 beta dP).
double uncertainty_product(double delta_p, const GupParams& params);

// sqrt(3 beta) hbar, the minimum of uncertainty_product over dP.
double minimal_length(const GupParams& params);

// The same minimum located numerically by golden-section search; kept as the
// independent route against the closed form.
double minimal_length_numeric(const GupParams& params);

}  // namespace gupnl
