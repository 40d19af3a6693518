#pragma once

#include <array>
#include <complex>

#include "gupnl/params.hpp"
#include "gupnl/roots.hpp"

namespace gupnl {

// Expansion coefficients over the three-root basis, sum |c_k|^2 = 1 once
// validated.
struct CoefficientVector {
    std::array<std::complex<double>, 3> values;
};

struct NormalizationResult {
    CoefficientVector coeffs;
    double scale;  // multiplier that was applied to the input
};

// A generalized-momentum eigenstate in position space: the root triple, the
// expansion coefficients, and the parameter set (hbar lives in params).
struct EigenfunctionSpec {
    RootTriple roots;
    CoefficientVector coeffs;
    GupParams params;
};

// exp(i p x / hbar) / sqrt(2 pi hbar). Complex p gives modulus
// exp(-Im(p) x / hbar); exponents beyond +-700 raise range_error instead of
// silently producing inf/0.
std::complex<double> plane_wave(double x, std::complex<double> p, double hbar);

// (1/sqrt(2 pi hbar)) sum_k c_k exp(i P_k x / hbar).
std::complex<double> eigenfunction(double x, const EigenfunctionSpec& spec);

enum class ResidualMode { analytic, finite_difference };

// |-i hbar psi' + i beta hbar^3 psi''' - P psi| at x. Analytic mode
// differentiates each plane-wave term exactly; finite_difference uses
// second-order central stencils of step h.
double ode_residual(const EigenfunctionSpec& spec, double P, double x,
                    ResidualMode mode, double h = 1e-3);

struct CombTerm {
    std::complex<double> contribution;
    double imag_offset;  // Im(P_k), nonzero for the conjugate-pair branches
};

struct CombValue {
    std::complex<double> amplitude;
    std::array<CombTerm, 3> terms;
};

// Gaussian-regularized delta comb sum_k c_k g(p_query - Re(P_k); width) with
// g a unit-mass Gaussian; each term records the imaginary offset of its root.
CombValue momentum_comb(double p_query, const EigenfunctionSpec& spec, double width);

// Identity-resolution weight 1/(1 + beta P^2); integrates to pi/sqrt(beta).
double measure_weight(double P, const GupParams& params);

// Rescales to sum |c_k|^2 = 1 and reports the applied factor. Inputs already
// normalized pass through untouched, so the operation is exactly idempotent.
NormalizationResult validate_coefficients(const CoefficientVector& coeffs);

}  // namespace gupnl
