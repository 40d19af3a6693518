#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gupnl/entanglement.hpp"

namespace gupnl {

struct MeasurementRecord {
    int branch_index;                 // 1, 2 or 3
    std::complex<double> outcome_1;   // P_i of the state's triple
    std::complex<double> outcome_2;   // exactly -outcome_1
    std::uint64_t draw_ordinal;
};

struct SampleSummary {
    std::array<std::uint64_t, 3> counts;
    std::array<double, 3> empirical_freqs;
    std::array<double, 3> expected_probs;  // |c_i|^2
    double chi_square;                     // Pearson, branches with p_i > 0
    std::uint64_t seed;
    std::uint64_t n;
    bool small_sample_warning;  // some expected count n * p_i < 5
};

struct SampleResult {
    std::vector<MeasurementRecord> records;
    SampleSummary summary;
};

// Cumulative Born weights of the state, in branch order. Shared by the serial
// and parallel samplers so both draw identically.
std::array<double, 2> born_cumulative(const TwoParticleState& state);

// The single draw: record number `ordinal` of the stream defined by
// (state, seed). Pure function; everything else composes from it.
MeasurementRecord draw_record(const TwoParticleState& state, std::uint64_t seed,
                              std::uint64_t ordinal);

// Summary assembly from raw branch counts; shared by all sampler variants.
SampleSummary summarize_counts(const TwoParticleState& state,
                               const std::array<std::uint64_t, 3>& counts,
                               std::uint64_t n, std::uint64_t seed);

// n Born-rule draws with the counter-based generator; identical
// (state, n, seed) gives bit-identical output. n = 0 raises domain_error.
SampleResult sample(const TwoParticleState& state, std::uint64_t n, std::uint64_t seed);

// Streaming variant: feeds each record to sink and returns only the summary.
SampleSummary sample_stream(const TwoParticleState& state, std::uint64_t n,
                            std::uint64_t seed,
                            const std::function<void(const MeasurementRecord&)>& sink);

struct BasisContrast {
    double generalized_momentum;           // the shared P
    std::array<double, 2> single_outcome;  // (P, -P), probability 1
    double single_basis_entropy_nats;      // 0
    std::array<double, 3> born_probs;      // |c_i|^2
    double born_entropy_nats;
};

// Contrast between measuring in the generalized-momentum basis (one
// deterministic outcome pair) and in the canonical-momentum basis (three
// outcomes with Born weights).
BasisContrast p_basis_vs_P_basis(const TwoParticleState& state);

struct CorrelationCheck {
    bool ok;
    std::optional<MeasurementRecord> counterexample;  // first violating record
};

// True iff every record satisfies outcome_2 == -outcome_1 exactly.
// Empty input raises domain_error.
CorrelationCheck verify_correlation(std::span<const MeasurementRecord> records);

// Wire formats for the record stream. Deterministic byte-for-byte at fixed
// precision; real_only projects outcomes onto their real parts.
std::string record_jsonl(const MeasurementRecord& rec, int precision = 12,
                         bool real_only = false);
std::string record_csv_header(bool real_only = false);
std::string record_csv_row(const MeasurementRecord& rec, int precision = 12,
                           bool real_only = false);

}  // namespace gupnl
