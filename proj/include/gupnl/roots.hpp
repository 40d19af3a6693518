#pragma once

#include <array>
#include <complex>

#include "gupnl/params.hpp"

namespace gupnl {

enum class SolveMethod { closed_form, oracle, series };

const char* to_string(SolveMethod m);

// Below this value of beta*P^2 the closed form cancels catastrophically and
// cardano_roots switches to the series + Newton path.
inline constexpr double kSeriesSwitchThreshold = 1e-8;

// The three solutions of beta p^3 + p - P = 0 for real P and beta > 0:
// exactly one real root plus a conjugate pair with Re = -real_root/2.
// Canonical order: (real root, Im > 0 member, Im < 0 member).
struct RootTriple {
    double real_root;
    std::complex<double> conj_pos;  // imaginary part > 0
    std::complex<double> conj_neg;  // conj(conj_pos)
    double source_p;                // the generalized momentum P
    SolveMethod method;
};

inline std::array<std::complex<double>, 3> roots_array(const RootTriple& r) {
    return {std::complex<double>(r.real_root, 0.0), r.conj_pos, r.conj_neg};
}

// Closed-form (Cardano) solution of the generalized-momentum cubic. Falls back
// to a series + Newton path below kSeriesSwitchThreshold; P = 0 is exact.
RootTriple cardano_roots(double P, const GupParams& params);

// Durand-Kerner iteration with Newton polishing, independent of the closed
// form. Throws numeric_error if the iteration fails to settle.
RootTriple oracle_roots(double P, const GupParams& params);

// P = p (1 + beta p^2); strictly increasing for real p.
std::complex<double> forward_map(std::complex<double> p, const GupParams& params);

// Root triple of -source_p: every root negated, canonical order restored.
RootTriple negate_spectrum(const RootTriple& roots);

// max over the three association orders of |P_k + P_l + P_m|; the cubic has
// no quadratic term, so the sum vanishes for a valid triple.
double root_sum_identity(const RootTriple& roots);

// Kinetic energy P^2 / (2 mass) of the generalized momentum; static value only.
double dispersion(double P, double mass);

}  // namespace gupnl
