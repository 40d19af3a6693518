#include "gupnl/roots.hpp"

#include <algorithm>
#include <cmath>

#include "gupnl/errors.hpp"

namespace gupnl {

const char* to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::closed_form: return "closed_form";
        case SolveMethod::oracle: return "oracle";
        case SolveMethod::series: return "series";
    }
    return "unknown";
}

namespace {

void check_input(double P) {
    if (!std::isfinite(P)) throw domain_error("roots: P must be finite");
}

// Canonical triple from the real root and the pair's imaginary part. The
// cubic has no quadratic term, so Re of the pair is -real_root/2 exactly.
RootTriple assemble(double p1, double b, double P, SolveMethod method) {
    const double re = -0.5 * p1;
    return RootTriple{p1, {re, b}, {re, -b}, P, method};
}

// P = 0 factors as p (beta p^2 + 1): roots are 0 and +-i/sqrt(beta). Handled
// outside both generic paths to avoid 0/0 in the reconstruction formulas.
RootTriple exact_zero_triple(double beta, SolveMethod method) {
    const double b = 1.0 / std::sqrt(beta);
    return RootTriple{0.0, {0.0, b}, {0.0, -b}, 0.0, method};
}

double cubic(double beta, double P, double p) { return beta * p * p * p + p - P; }

// Series p1 = P - beta P^3 + 3 beta^2 P^5 plus two Newton steps; accurate to
// machine precision for beta P^2 below the switch threshold, where the closed
// form loses digits to cancellation.
double series_real_root(double P, double beta) {
    const double t = beta * P * P;
    double p = P * (1.0 - t * (1.0 - 3.0 * t));
    for (int i = 0; i < 2; ++i) {
        p -= cubic(beta, P, p) / (3.0 * beta * p * p + 1.0);
    }
    return p;
}

// Imaginary part of the conjugate pair from the real root, via the product
// and pairwise-sum relations: b^2 = 1/beta + 3 p1^2 / 4. Always positive.
double pair_imag_from_real(double p1, double beta) {
    return std::sqrt(1.0 / beta + 0.75 * p1 * p1);
}

}  // namespace

RootTriple cardano_roots(double P, const GupParams& params) {
    check_input(P);
    const double beta = params.beta;
    if (P == 0.0) return exact_zero_triple(beta, SolveMethod::closed_form);

    if (beta * P * P < kSeriesSwitchThreshold) {
        const double p1 = series_real_root(P, beta);
        return assemble(p1, pair_imag_from_real(p1, beta), P, SolveMethod::series);
    }

    // Depressed cubic p^3 + p/beta - P/beta. Cardano gives the real root as
    // u - v with u^3 = (P + sqrt(P^2 + c)) / (2 beta), c = 4/(27 beta), and
    // v = 1/(3 beta u); the pair's imaginary part is (sqrt(3)/2)(u + v).
    // For P < 0 the sum inside u^3 is rationalized so it never cancels, and
    // u - v itself is evaluated as the equivalent quotient
    //     (u^3 - v^3) / (u^2 + uv + v^2) = (P/beta) / ((u+v)^2 - 1/(3 beta)),
    // which stays at a few ulp for all beta P^2 instead of losing
    // eps / sqrt(beta P^2) digits to cancellation.
    // The pair's imaginary part is reconstructed from p1 rather than taken
    // as (sqrt(3)/2)(u + v): the two agree analytically, but the pairwise
    // Vieta sum cancels b^2 - 3 p1^2/4 down to 1/beta, and only the
    // reconstruction keeps that residual at a few ulp when beta p1^2 is huge.
    const double c = 4.0 / (27.0 * beta);
    const double s = P > 0.0 ? P + std::sqrt(P * P + c)
                             : c / (std::sqrt(P * P + c) - P);
    const double u = std::cbrt(s / (2.0 * beta));
    const double v = 1.0 / (3.0 * beta * u);
    const double w = u + v;
    const double p1 = (P / beta) / (w * w - 1.0 / (3.0 * beta));
    return assemble(p1, pair_imag_from_real(p1, beta), P, SolveMethod::closed_form);
}

namespace {

// Newton refinement of the real root; the cubic is strictly increasing, so
// the iteration is tame from any reasonable seed.
double polish_real(double beta, double P, double p) {
    for (int i = 0; i < 60; ++i) {
        const double step = cubic(beta, P, p) / (3.0 * beta * p * p + 1.0);
        p -= step;
        if (std::abs(step) <= 1e-15 * std::abs(p)) break;
    }
    return p;
}

std::complex<double> polish_complex(double beta, double P, std::complex<double> z) {
    for (int i = 0; i < 30; ++i) {
        const std::complex<double> f = (beta * z * z + 1.0) * z - P;
        const std::complex<double> df = 3.0 * beta * z * z + 1.0;
        const std::complex<double> step = f / df;
        z -= step;
        if (std::abs(step) <= 1e-15 * std::abs(z)) break;
    }
    return z;
}

}  // namespace

RootTriple oracle_roots(double P, const GupParams& params) {
    check_input(P);
    const double beta = params.beta;
    if (P == 0.0) return exact_zero_triple(beta, SolveMethod::oracle);

    // Scale by the Fujiwara bound of p^3 + p/beta - P/beta so the working
    // roots are O(1); the scaled coefficients then satisfy |a| <= 1/4,
    // |d| <= 1/8 and the iteration is well conditioned everywhere.
    const double radius =
        2.0 * std::max(std::sqrt(1.0 / beta), std::cbrt(std::abs(P) / beta));
    const double a = 1.0 / (beta * radius * radius);
    const double d = -P / (beta * radius * radius * radius);
    const auto f = [&](std::complex<double> q) { return (q * q + a) * q + d; };

    // Durand-Kerner with simultaneous (Jacobi) updates from conjugate-
    // symmetric starts: the first iterate stays exactly real and the other
    // two stay exact conjugates, which fixes the classification for free.
    std::array<std::complex<double>, 3> z = {{{0.7, 0.0}, {-0.35, 0.8}, {-0.35, -0.8}}};
    bool settled = false;
    for (int it = 0; it < 200 && !settled; ++it) {
        std::array<std::complex<double>, 3> delta;
        for (int i = 0; i < 3; ++i) {
            std::complex<double> den = 1.0;
            for (int j = 0; j < 3; ++j)
                if (j != i) den *= z[i] - z[j];
            delta[i] = f(z[i]) / den;
        }
        double step = 0.0;
        for (int i = 0; i < 3; ++i) {
            z[i] -= delta[i];
            step = std::max(step, std::abs(delta[i]));
        }
        settled = step <= 1e-15;
    }
    if (!settled) {
        double worst = 0.0;
        for (const auto& zi : z) worst = std::max(worst, std::abs(f(zi)));
        throw numeric_error("oracle_roots: Durand-Kerner did not settle", worst);
    }

    const double p1 = polish_real(beta, P, radius * z[0].real());
    const std::complex<double> pc =
        polish_complex(beta, P, radius * (z[1].imag() > 0.0 ? z[1] : z[2]));

    // The pair's real part must reproduce -p1/2 (no quadratic term); treat a
    // disagreement as non-convergence rather than returning a bad triple.
    const double re_gap = std::abs(pc.real() + 0.5 * p1);
    if (re_gap > 1e-7 * std::max(1.0, std::abs(pc)))
        throw numeric_error("oracle_roots: pair real part inconsistent", re_gap);

    return assemble(p1, std::abs(pc.imag()), P, SolveMethod::oracle);
}

std::complex<double> forward_map(std::complex<double> p, const GupParams& params) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
        throw domain_error("forward_map: p must be finite");
    return p * (1.0 + params.beta * p * p);
}

RootTriple negate_spectrum(const RootTriple& roots) {
    // -conj_neg carries the positive imaginary part after negation.
    return RootTriple{-roots.real_root, -roots.conj_neg, -roots.conj_pos,
                      -roots.source_p, roots.method};
}

double root_sum_identity(const RootTriple& roots) {
    const std::complex<double> a(roots.real_root, 0.0);
    const std::complex<double> b = roots.conj_pos;
    const std::complex<double> c = roots.conj_neg;
    return std::max({std::abs((b + c) + a), std::abs((a + c) + b), std::abs((a + b) + c)});
}

double dispersion(double P, double mass) {
    if (!std::isfinite(mass) || mass <= 0.0)
        throw domain_error("dispersion: mass must be finite and positive");
    if (!std::isfinite(P)) throw domain_error("dispersion: P must be finite");
    return P * P / (2.0 * mass);
}

}  // namespace gupnl
