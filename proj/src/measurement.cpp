#include "gupnl/measurement.hpp"

#include <cmath>
#include <cstdio>

#include "gupnl/errors.hpp"
#include "gupnl/rng.hpp"

namespace gupnl {

std::array<double, 2> born_cumulative(const TwoParticleState& state) {
    const double l1 = std::norm(state.c[0]);
    const double l2 = std::norm(state.c[1]);
    return {l1, l1 + l2};
}

namespace {

int draw_branch(const std::array<double, 2>& cum, double u) {
    if (u < cum[0]) return 0;
    if (u < cum[1]) return 1;
    return 2;
}

}  // namespace

MeasurementRecord draw_record(const TwoParticleState& state, std::uint64_t seed,
                              std::uint64_t ordinal) {
    const auto cum = born_cumulative(state);
    const int k = draw_branch(cum, uniform01(seed, ordinal));
    const auto roots = roots_array(state.roots);
    return MeasurementRecord{k + 1, roots[k], -roots[k], ordinal};
}

SampleSummary summarize_counts(const TwoParticleState& state,
                               const std::array<std::uint64_t, 3>& counts,
                               std::uint64_t n, std::uint64_t seed) {
    SampleSummary s{};
    s.counts = counts;
    s.seed = seed;
    s.n = n;
    s.small_sample_warning = false;
    double chi = 0.0;
    for (int i = 0; i < 3; ++i) {
        s.expected_probs[i] = std::norm(state.c[i]);
        s.empirical_freqs[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
        const double expected = s.expected_probs[i] * static_cast<double>(n);
        if (s.expected_probs[i] > 0.0) {
            const double diff = static_cast<double>(counts[i]) - expected;
            chi += diff * diff / expected;
            if (expected < 5.0) s.small_sample_warning = true;
        }
    }
    s.chi_square = chi;
    return s;
}

SampleResult sample(const TwoParticleState& state, std::uint64_t n, std::uint64_t seed) {
    if (n == 0) throw domain_error("sample: n must be at least 1");
    SampleResult out;
    out.records.reserve(n);
    std::array<std::uint64_t, 3> counts{};
    const auto cum = born_cumulative(state);
    const auto roots = roots_array(state.roots);
    for (std::uint64_t i = 0; i < n; ++i) {
        const int k = draw_branch(cum, uniform01(seed, i));
        ++counts[k];
        out.records.push_back(MeasurementRecord{k + 1, roots[k], -roots[k], i});
    }
    out.summary = summarize_counts(state, counts, n, seed);
    return out;
}

SampleSummary sample_stream(const TwoParticleState& state, std::uint64_t n,
                            std::uint64_t seed,
                            const std::function<void(const MeasurementRecord&)>& sink) {
    if (n == 0) throw domain_error("sample: n must be at least 1");
    std::array<std::uint64_t, 3> counts{};
    const auto cum = born_cumulative(state);
    const auto roots = roots_array(state.roots);
    for (std::uint64_t i = 0; i < n; ++i) {
        const int k = draw_branch(cum, uniform01(seed, i));
        ++counts[k];
        sink(MeasurementRecord{k + 1, roots[k], -roots[k], i});
    }
    return summarize_counts(state, counts, n, seed);
}

BasisContrast p_basis_vs_P_basis(const TwoParticleState& state) {
    BasisContrast out{};
    const double P = state.roots.source_p;
    out.generalized_momentum = P;
    out.single_outcome = {P, -P};
    out.single_basis_entropy_nats = 0.0;
    double nats = 0.0;
    for (int i = 0; i < 3; ++i) {
        out.born_probs[i] = std::norm(state.c[i]);
        if (out.born_probs[i] > 0.0) nats -= out.born_probs[i] * std::log(out.born_probs[i]);
    }
    out.born_entropy_nats = nats;
    return out;
}

CorrelationCheck verify_correlation(std::span<const MeasurementRecord> records) {
    if (records.empty()) throw domain_error("verify_correlation: empty record stream");
    for (const auto& rec : records) {
        if (rec.outcome_2 != -rec.outcome_1) return {false, rec};
    }
    return {true, std::nullopt};
}

namespace {

std::string fmt_double(double v, int precision) {
    if (v == 0.0) v = 0.0;  // canonicalize -0
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

}  // namespace

std::string record_jsonl(const MeasurementRecord& rec, int precision, bool real_only) {
    std::string s = "{\"draw\":" + std::to_string(rec.draw_ordinal) +
                    ",\"branch\":" + std::to_string(rec.branch_index);
    if (real_only) {
        s += ",\"outcome1\":" + fmt_double(rec.outcome_1.real(), precision);
        s += ",\"outcome2\":" + fmt_double(rec.outcome_2.real(), precision);
    } else {
        s += ",\"outcome1\":{\"re\":" + fmt_double(rec.outcome_1.real(), precision) +
             ",\"im\":" + fmt_double(rec.outcome_1.imag(), precision) + "}";
        s += ",\"outcome2\":{\"re\":" + fmt_double(rec.outcome_2.real(), precision) +
             ",\"im\":" + fmt_double(rec.outcome_2.imag(), precision) + "}";
    }
    s += "}";
    return s;
}

std::string record_csv_header(bool real_only) {
    return real_only ? "draw,branch,outcome1,outcome2"
                     : "draw,branch,outcome1_re,outcome1_im,outcome2_re,outcome2_im";
}

std::string record_csv_row(const MeasurementRecord& rec, int precision, bool real_only) {
    std::string s = std::to_string(rec.draw_ordinal) + "," +
                    std::to_string(rec.branch_index) + ",";
    if (real_only) {
        s += fmt_double(rec.outcome_1.real(), precision) + "," +
             fmt_double(rec.outcome_2.real(), precision);
    } else {
        s += fmt_double(rec.outcome_1.real(), precision) + "," +
             fmt_double(rec.outcome_1.imag(), precision) + "," +
             fmt_double(rec.outcome_2.real(), precision) + "," +
             fmt_double(rec.outcome_2.imag(), precision);
    }
    return s;
}

}  // namespace gupnl
