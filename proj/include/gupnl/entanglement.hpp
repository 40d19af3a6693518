#pragma once

#include <array>
#include <complex>

#include "gupnl/representations.hpp"
#include "gupnl/roots.hpp"

namespace gupnl {

// Two-particle zero-total-momentum state: diagonal amplitudes
// c_i = alpha_i gamma_i / N on the correlated basis |P_i, -P_i>.
struct TwoParticleState {
    RootTriple roots;                       // triple for the shared P
    CoefficientVector alpha;
    CoefficientVector gamma;
    std::array<std::complex<double>, 3> c;  // normalized diagonal amplitudes
    double norm_constant;                   // N = sqrt(sum |alpha_i gamma_i|^2)
    GupParams params;
};

struct SchmidtData {
    std::array<double, 3> lambdas;  // descending, sum to 1
    double entropy_nats;
    double entropy_bits;
};

struct BranchCorrelation {
    int branch;  // 1-based
    std::complex<double> outcome_1;
    std::complex<double> outcome_2;  // always -outcome_1
    double probability;
};

struct CorrelationReport {
    std::array<BranchCorrelation, 3> branches;
    double partner_forward_residual;  // max_i |(-P_i)(1 + beta P_i^2) + P|
    double conditional_entropy_nats;  // H(outcome_2 | outcome_1), 0 for diagonal support
    double mutual_information_nats;   // equals the Shannon entropy of |c_i|^2
    bool branch_momentum_conserved;   // p_1 + p_2 = 0 on every branch
};

// Solves the cubic for P, forms c_i proportional to alpha_i gamma_i, and
// normalizes. All-zero diagonal products reject with domain_error: no state
// exists for such coefficients.
TwoParticleState build_entangled_state(double P, const CoefficientVector& alpha,
                                       const CoefficientVector& gamma,
                                       const GupParams& params);

// Schmidt coefficients lambda_i = |c_i|^2 of the diagonal state, with the
// von Neumann entropy in nats and bits (0 ln 0 := 0).
SchmidtData schmidt(const TwoParticleState& state);

// The two-qubit Bell-pair benchmark: lambda = (1/2, 1/2), entropy ln 2 = 1 bit.
SchmidtData bell_benchmark();

// Verifies the perfect-correlation structure of the state and reports the
// branch table, conditional entropy, and mutual information. Throws
// invariant_error if the state fails its construction invariants.
CorrelationReport correlation_structure(const TwoParticleState& state);

}  // namespace gupnl
