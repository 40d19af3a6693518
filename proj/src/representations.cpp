#include "gupnl/representations.hpp"

#include <cmath>
#include <numbers>

#include "gupnl/errors.hpp"

namespace gupnl {

std::complex<double> plane_wave(double x, std::complex<double> p, double hbar) {
    if (!std::isfinite(x) || !std::isfinite(p.real()) || !std::isfinite(p.imag()))
        throw domain_error("plane_wave: non-finite input");
    if (!std::isfinite(hbar) || hbar <= 0.0)
        throw domain_error("plane_wave: hbar must be finite and positive");
    const double growth = p.imag() * x / hbar;  // modulus is exp(-growth)
    if (std::abs(growth) > 700.0)
        throw range_error("plane_wave: |Im(p) x / hbar| exceeds 700, amplitude out of double range");
    const std::complex<double> exponent(-growth, p.real() * x / hbar);
    return std::exp(exponent) / std::sqrt(2.0 * std::numbers::pi * hbar);
}

std::complex<double> eigenfunction(double x, const EigenfunctionSpec& spec) {
    const auto roots = roots_array(spec.roots);
    std::complex<double> acc = 0.0;
    for (int k = 0; k < 3; ++k) {
        // Zero-weight terms contribute nothing and must not trip the
        // overflow guard of their plane wave.
        if (spec.coeffs.values[k] == 0.0) continue;
        acc += spec.coeffs.values[k] * plane_wave(x, roots[k], spec.params.hbar);
    }
    return acc;
}

double ode_residual(const EigenfunctionSpec& spec, double P, double x,
                    ResidualMode mode, double h) {
    const double hbar = spec.params.hbar;
    const double beta = spec.params.beta;

    if (mode == ResidualMode::analytic) {
        // The operator -i hbar d_x (1 - beta hbar^2 d_x^2) acts on each
        // plane-wave term as multiplication by P_k + beta P_k^3.
        const auto roots = roots_array(spec.roots);
        std::complex<double> applied = 0.0, psi = 0.0;
        for (int k = 0; k < 3; ++k) {
            if (spec.coeffs.values[k] == 0.0) continue;
            const std::complex<double> term =
                spec.coeffs.values[k] * plane_wave(x, roots[k], hbar);
            psi += term;
            applied += (roots[k] + beta * roots[k] * roots[k] * roots[k]) * term;
        }
        return std::abs(applied - P * psi);
    }

    if (!std::isfinite(h) || h <= 0.0)
        throw domain_error("ode_residual: finite-difference step must be positive");
    // Second-order central stencils for psi' and psi'''.
    const std::complex<double> m2 = eigenfunction(x - 2.0 * h, spec);
    const std::complex<double> m1 = eigenfunction(x - h, spec);
    const std::complex<double> p0 = eigenfunction(x, spec);
    const std::complex<double> p1 = eigenfunction(x + h, spec);
    const std::complex<double> p2 = eigenfunction(x + 2.0 * h, spec);
    const std::complex<double> d1 = (p1 - m1) / (2.0 * h);
    const std::complex<double> d3 = (p2 - 2.0 * p1 + 2.0 * m1 - m2) / (2.0 * h * h * h);
    const std::complex<double> i_unit(0.0, 1.0);
    return std::abs(-i_unit * hbar * d1 + i_unit * beta * hbar * hbar * hbar * d3 -
                    P * p0);
}

CombValue momentum_comb(double p_query, const EigenfunctionSpec& spec, double width) {
    if (!std::isfinite(width) || width <= 0.0)
        throw domain_error("momentum_comb: width must be finite and positive");
    const auto roots = roots_array(spec.roots);
    const double norm = 1.0 / (width * std::sqrt(2.0 * std::numbers::pi));
    CombValue out{};
    for (int k = 0; k < 3; ++k) {
        const double u = (p_query - roots[k].real()) / width;
        const double g = norm * std::exp(-0.5 * u * u);
        out.terms[k] = CombTerm{spec.coeffs.values[k] * g, roots[k].imag()};
        out.amplitude += out.terms[k].contribution;
    }
    return out;
}

double measure_weight(double P, const GupParams& params) {
    if (!std::isfinite(P)) throw domain_error("measure_weight: P must be finite");
    return 1.0 / (1.0 + params.beta * P * P);
}

NormalizationResult validate_coefficients(const CoefficientVector& coeffs) {
    double norm2 = 0.0;
    for (const auto& c : coeffs.values) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw domain_error("validate_coefficients: non-finite coefficient");
        norm2 += std::norm(c);
    }
    if (norm2 == 0.0)
        throw domain_error("validate_coefficients: all-zero coefficient vector");
    const double s = std::sqrt(norm2);
    // Already-normalized input passes through untouched; this makes repeated
    // application bit-stable.
    if (std::abs(s - 1.0) <= 1e-14) return {coeffs, 1.0};
    CoefficientVector out;
    for (int k = 0; k < 3; ++k) out.values[k] = coeffs.values[k] / s;
    return {out, 1.0 / s};
}

}  // namespace gupnl
