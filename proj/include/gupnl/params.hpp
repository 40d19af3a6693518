#pragma once

#include <cmath>

#include "gupnl/errors.hpp"

namespace gupnl {

// Deformation parameter set. beta carries units of momentum^-2; hbar defaults
// to 1 (dimensionless internal units). beta0 is the Planck-unit counterpart
// with l_p = 1, fixed by  dx_min = sqrt(3 beta) hbar = sqrt(beta0) l_p.
struct GupParams {
    double beta;
    double hbar;
    double beta0;

    explicit GupParams(double beta_, double hbar_ = 1.0)
        : beta(beta_), hbar(hbar_), beta0(3.0 * beta_ * hbar_ * hbar_) {
        if (!std::isfinite(beta) || beta <= 0.0)
            throw domain_error("GupParams: beta must be finite and positive");
        if (!std::isfinite(hbar) || hbar <= 0.0)
            throw domain_error("GupParams: hbar must be finite and positive");
    }
};

}  // namespace gupnl
