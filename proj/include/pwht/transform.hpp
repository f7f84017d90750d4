#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pwht/matrix.hpp"

namespace pwht {

/// A 1D transform-domain signal. Every transform below requires the
/// length to be 2^n for some n >= 1 and all values to be finite.
using SignalVector = std::vector<double>;

enum class TransformOrder { Natural, Sequency };

enum class MeasurementKind { Exact, Shots };

/// Simulated measurement backend for the hybrid transform. Exact yields
/// the analytic outcome distribution of the transformed state; Shots
/// yields empirical frequencies from `shot_count` independent draws of a
/// generator seeded with `seed` (deterministic per seed).
struct MeasurementModel {
    MeasurementKind kind = MeasurementKind::Exact;
    std::uint64_t shot_count = 0;  // Shots only, must be positive
    std::uint64_t seed = 0;        // Shots only

    static MeasurementModel exact() { return {}; }
    static MeasurementModel shots(std::uint64_t count, std::uint64_t seed);

    /// Derive an independent, reproducible generator stream, so that
    /// batched transforms stay deterministic even when parallelized.
    MeasurementModel reseeded(std::uint64_t stream) const;
};

struct HybridConfig {
    /// Positive shift constant. Affects only intermediate scaling; the
    /// Exact-model result is independent of its value.
    double epsilon = 1.0;
    MeasurementModel model = MeasurementModel::exact();
};

/// Returns n for size = 2^n (n >= 1); throws std::invalid_argument otherwise.
unsigned log2_exact(std::size_t size);

/// In-place fast Walsh-Hadamard transform in natural (Hadamard) order,
/// normalized by 1/sqrt(N). The operation is an involution.
void fwht_natural_inplace(std::span<double> values);
SignalVector fwht_natural(SignalVector values);

/// Natural-order row index p such that row j of the sequency-ordered
/// transform matrix equals row p of the natural-order matrix. Bijection
/// on [0, 2^bits) fixing 0 (bit-reversed Gray code).
std::size_t sequency_to_natural_index(std::size_t j, unsigned bits);

/// Walsh-Hadamard transform in sequency order (involution, 1/sqrt(N)).
SignalVector wht_sequency(SignalVector values);

/// Outcome probabilities (Exact) or empirical frequencies (Shots) of
/// measuring all qubits after applying the Hadamard transform to `state`.
/// `state` must have unit Euclidean norm within 1e-9.
std::vector<double> simulate_measurement(std::span<const double> state,
                                         const MeasurementModel& model);

/// Hybrid transform: shifts the first component so every natural-order
/// coefficient of the shifted vector is strictly positive, recovers the
/// magnitudes from measurement probabilities, removes the shift, and
/// reorders into sequency order. With the Exact model the result equals
/// wht_sequency(input) up to roundoff.
SignalVector hybrid_wht(std::span<const double> input, const HybridConfig& cfg = {});

/// 2D sequency-ordered transform: hybrid transform of every column, then
/// of every row. Both dimensions must be powers of two. An involution
/// under the Exact model, so the same call serves as the inverse.
Matrix wht2d(Matrix values, const HybridConfig& cfg = {});

}  // namespace pwht
