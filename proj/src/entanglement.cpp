#include "gupnl/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

#include "gupnl/errors.hpp"
#include "gupnl/tolerance.hpp"

namespace gupnl {

namespace {

double shannon_nats(std::span<const double> probs) {
    double s = 0.0;
    for (double p : probs)
        if (p > 0.0) s -= p * std::log(p);
    return s;
}

}  // namespace

TwoParticleState build_entangled_state(double P, const CoefficientVector& alpha,
                                       const CoefficientVector& gamma,
                                       const GupParams& params) {
    if (!std::isfinite(P)) throw domain_error("build_entangled_state: P must be finite");
    const CoefficientVector a = validate_coefficients(alpha).coeffs;
    const CoefficientVector g = validate_coefficients(gamma).coeffs;

    std::array<std::complex<double>, 3> diag;
    double norm2 = 0.0;
    for (int i = 0; i < 3; ++i) {
        diag[i] = a.values[i] * g.values[i];
        norm2 += std::norm(diag[i]);
    }
    if (norm2 == 0.0)
        throw domain_error(
            "build_entangled_state: every alpha_i gamma_i vanishes, no such state exists");
    const double n = std::sqrt(norm2);
    for (auto& c : diag) c /= n;

    return TwoParticleState{cardano_roots(P, params), a, g, diag, n, params};
}

SchmidtData schmidt(const TwoParticleState& state) {
    std::array<double, 3> lambdas;
    for (int i = 0; i < 3; ++i) lambdas[i] = std::norm(state.c[i]);
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    const double nats = shannon_nats(lambdas);
    return SchmidtData{lambdas, nats, nats / std::numbers::ln2};
}

SchmidtData bell_benchmark() {
    const std::array<double, 3> lambdas = {0.5, 0.5, 0.0};
    const double nats = shannon_nats(lambdas);
    return SchmidtData{lambdas, nats, nats / std::numbers::ln2};
}

CorrelationReport correlation_structure(const TwoParticleState& state) {
    double norm2 = 0.0;
    for (const auto& c : state.c) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw invariant_error("correlation_structure: non-finite amplitude");
        norm2 += std::norm(c);
    }
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw invariant_error("correlation_structure: state is not normalized");

    const auto roots = roots_array(state.roots);
    const double P = state.roots.source_p;

    CorrelationReport report{};
    report.partner_forward_residual = 0.0;
    report.branch_momentum_conserved = true;
    std::array<double, 3> probs;
    for (int i = 0; i < 3; ++i) {
        const std::complex<double> out1 = roots[i];
        const std::complex<double> out2 = -roots[i];
        probs[i] = std::norm(state.c[i]);
        report.branches[i] = BranchCorrelation{i + 1, out1, out2, probs[i]};
        // Particle 2 is supported on the negated triple, the spectrum of -P.
        const std::complex<double> fwd = forward_map(out2, state.params);
        report.partner_forward_residual = std::max(
            report.partner_forward_residual, std::abs(fwd - (-P)));
        if (out1 + out2 != std::complex<double>(0.0, 0.0))
            report.branch_momentum_conserved = false;
    }
    if (report.partner_forward_residual > kAtol + kRtol * std::max(1.0, std::abs(P)))
        throw invariant_error(
            "correlation_structure: partner support does not solve the negated cubic");

    // Diagonal support: outcome 2 is a deterministic function of outcome 1,
    // so the conditional entropy vanishes and the mutual information equals
    // the marginal entropy.
    report.conditional_entropy_nats = 0.0;
    report.mutual_information_nats = shannon_nats(probs);
    return report;
}

}  // namespace gupnl
