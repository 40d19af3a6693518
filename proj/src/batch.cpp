#include "gupnl/batch.hpp"

#include <cstdint>

#include "gupnl/errors.hpp"
#include "gupnl/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gupnl {

int batch_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<RootTriple> solve_grid(std::span<const double> momenta,
                                   const GupParams& params, ExecutionPolicy policy) {
    std::vector<RootTriple> out(momenta.size());
    const std::int64_t n = static_cast<std::int64_t>(momenta.size());
    if (policy == ExecutionPolicy::openmp) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) out[i] = cardano_roots(momenta[i], params);
    } else {
        for (std::int64_t i = 0; i < n; ++i) out[i] = cardano_roots(momenta[i], params);
    }
    return out;
}

std::vector<MeasurementRecord> sample_records(const TwoParticleState& state,
                                              std::uint64_t n, std::uint64_t seed,
                                              ExecutionPolicy policy) {
    if (n == 0) throw domain_error("sample_records: n must be at least 1");
    std::vector<MeasurementRecord> out(n);
    const auto cum = born_cumulative(state);
    const auto roots = roots_array(state.roots);
    const std::int64_t count = static_cast<std::int64_t>(n);
    const auto fill = [&](std::int64_t i) {
        const double u = uniform01(seed, static_cast<std::uint64_t>(i));
        const int k = u < cum[0] ? 0 : (u < cum[1] ? 1 : 2);
        out[i] = MeasurementRecord{k + 1, roots[k], -roots[k],
                                   static_cast<std::uint64_t>(i)};
    };
    if (policy == ExecutionPolicy::openmp) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) fill(i);
    } else {
        for (std::int64_t i = 0; i < count; ++i) fill(i);
    }
    return out;
}

SampleSummary sample_counts(const TwoParticleState& state, std::uint64_t n,
                            std::uint64_t seed, ExecutionPolicy policy) {
    if (n == 0) throw domain_error("sample_counts: n must be at least 1");
    const auto cum = born_cumulative(state);
    const std::int64_t count = static_cast<std::int64_t>(n);
    std::uint64_t c0 = 0, c1 = 0, c2 = 0;
    if (policy == ExecutionPolicy::openmp) {
#pragma omp parallel for schedule(static) reduction(+ : c0, c1, c2)
        for (std::int64_t i = 0; i < count; ++i) {
            const double u = uniform01(seed, static_cast<std::uint64_t>(i));
            if (u < cum[0])
                ++c0;
            else if (u < cum[1])
                ++c1;
            else
                ++c2;
        }
    } else {
        for (std::int64_t i = 0; i < count; ++i) {
            const double u = uniform01(seed, static_cast<std::uint64_t>(i));
            if (u < cum[0])
                ++c0;
            else if (u < cum[1])
                ++c1;
            else
                ++c2;
        }
    }
    // Integer counts determine everything downstream, so both policies agree
    // bit for bit.
    return summarize_counts(state, {c0, c1, c2}, n, seed);
}

}  // namespace gupnl
