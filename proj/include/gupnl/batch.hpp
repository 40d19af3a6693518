#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gupnl/measurement.hpp"
#include "gupnl/roots.hpp"

namespace gupnl {

// serial is the reference implementation; openmp partitions the same
// element-wise pure computations across threads and produces bit-identical
// output (falls back to serial when built without OpenMP).
enum class ExecutionPolicy { serial, openmp };

int batch_threads();  // worker count the openmp policy would use

// Closed-form root triples for a vector of generalized momenta.
std::vector<RootTriple> solve_grid(std::span<const double> momenta,
                                   const GupParams& params,
                                   ExecutionPolicy policy = ExecutionPolicy::serial);

// Full record stream, one entry per draw ordinal.
std::vector<MeasurementRecord> sample_records(const TwoParticleState& state,
                                              std::uint64_t n, std::uint64_t seed,
                                              ExecutionPolicy policy);

// Counts-only sampling; the reduction is associative so thread partitioning
// cannot change the result.
SampleSummary sample_counts(const TwoParticleState& state, std::uint64_t n,
                            std::uint64_t seed, ExecutionPolicy policy);

}  // namespace gupnl
