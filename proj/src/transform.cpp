#include "pwht/transform.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace pwht {

namespace {

constexpr double kNormTolerance = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

MeasurementModel MeasurementModel::shots(std::uint64_t count, std::uint64_t seed) {
    if (count == 0)
        throw std::invalid_argument("shot count must be positive");
    return {MeasurementKind::Shots, count, seed};
}

MeasurementModel MeasurementModel::reseeded(std::uint64_t stream) const {
    MeasurementModel derived = *this;
    derived.seed = splitmix64(seed ^ splitmix64(stream));
    return derived;
}

unsigned log2_exact(std::size_t size) {
    if (size < 2 || (size & (size - 1)) != 0)
        throw std::invalid_argument("length must be a power of two >= 2");
    unsigned bits = 0;
    while ((std::size_t{1} << bits) < size) ++bits;
    return bits;
}

void fwht_natural_inplace(std::span<double> values) {
    const std::size_t n = values.size();
    log2_exact(n);
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t base = 0; base < n; base += half << 1) {
            for (std::size_t i = base; i < base + half; ++i) {
                const double x = values[i];
                const double y = values[i + half];
                values[i] = x + y;
                values[i + half] = x - y;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (double& v : values) v *= scale;
}

SignalVector fwht_natural(SignalVector values) {
    fwht_natural_inplace(values);
    return values;
}

std::size_t sequency_to_natural_index(std::size_t j, unsigned bits) {
    // p_{bits-1-r} = j_r xor j_{r+1}; the bit-reversed Gray code of j.
    std::size_t p = 0;
    for (unsigned r = 0; r < bits; ++r) {
        const std::size_t bit = ((j >> r) ^ (j >> (r + 1))) & 1u;
        p |= bit << (bits - 1 - r);
    }
    return p;
}

SignalVector wht_sequency(SignalVector values) {
    const unsigned bits = log2_exact(values.size());
    fwht_natural_inplace(values);
    SignalVector out(values.size());
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = values[sequency_to_natural_index(j, bits)];
    return out;
}

std::vector<double> simulate_measurement(std::span<const double> state,
                                         const MeasurementModel& model) {
    double norm2 = 0.0;
    for (double a : state) norm2 += a * a;
    if (std::abs(std::sqrt(norm2) - 1.0) > kNormTolerance)
        throw std::invalid_argument("measurement requires a unit-norm state");

    std::vector<double> amplitudes(state.begin(), state.end());
    fwht_natural_inplace(amplitudes);

    std::vector<double> probs(amplitudes.size());
    for (std::size_t k = 0; k < probs.size(); ++k)
        probs[k] = amplitudes[k] * amplitudes[k];
    if (model.kind == MeasurementKind::Exact)
        return probs;
    if (model.shot_count == 0)
        throw std::invalid_argument("shot count must be positive");

    // Multinomial sampling via sequential binomial splitting.
    std::mt19937_64 rng(splitmix64(model.seed));
    std::vector<double> freq(probs.size(), 0.0);
    std::uint64_t remaining = model.shot_count;
    double mass = 1.0;
    for (std::size_t k = 0; k < probs.size() && remaining > 0; ++k) {
        std::uint64_t hits = remaining;
        if (k + 1 < probs.size()) {
            const double p = mass > 0.0 ? std::clamp(probs[k] / mass, 0.0, 1.0) : 1.0;
            std::binomial_distribution<std::uint64_t> draw(remaining, p);
            hits = draw(rng);
        }
        freq[k] = static_cast<double>(hits) / static_cast<double>(model.shot_count);
        remaining -= hits;
        mass -= probs[k];
    }
    return freq;
}

SignalVector hybrid_wht(std::span<const double> input, const HybridConfig& cfg) {
    const unsigned bits = log2_exact(input.size());
    if (!(cfg.epsilon > 0.0))
        throw std::invalid_argument("epsilon must be positive");

    double abs_sum = 0.0;
    for (double a : input) abs_sum += std::abs(a);
    // Shifting the first component by more than the total variation makes
    // every natural-order coefficient of the shifted vector >= eps/sqrt(N),
    // so the square root of a measured probability is unambiguous.
    const double shifted0 = cfg.epsilon + abs_sum;

    double norm2 = shifted0 * shifted0;
    for (std::size_t k = 1; k < input.size(); ++k) norm2 += input[k] * input[k];
    const double scale = std::sqrt(norm2);

    std::vector<double> state(input.size());
    state[0] = shifted0 / scale;
    for (std::size_t k = 1; k < input.size(); ++k) state[k] = input[k] / scale;

    const std::vector<double> probs = simulate_measurement(state, cfg.model);

    const double offset = (shifted0 - input[0]) / std::sqrt(static_cast<double>(input.size()));
    SignalVector out(input.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const std::size_t k = sequency_to_natural_index(j, bits);
        out[j] = scale * std::sqrt(probs[k]) - offset;
    }
    return out;
}

Matrix wht2d(Matrix values, const HybridConfig& cfg) {
    log2_exact(values.rows());
    log2_exact(values.cols());

    const bool shots = cfg.model.kind == MeasurementKind::Shots;
    HybridConfig local = cfg;

    std::vector<double> column(values.rows());
    for (std::size_t j = 0; j < values.cols(); ++j) {
        for (std::size_t i = 0; i < values.rows(); ++i) column[i] = values(i, j);
        if (shots) local.model = cfg.model.reseeded(j);
        const SignalVector transformed = hybrid_wht(column, local);
        for (std::size_t i = 0; i < values.rows(); ++i) values(i, j) = transformed[i];
    }
    for (std::size_t i = 0; i < values.rows(); ++i) {
        if (shots) local.model = cfg.model.reseeded(values.cols() + i);
        const std::span<const double> row{values.data() + i * values.cols(), values.cols()};
        const SignalVector transformed = hybrid_wht(row, local);
        std::copy(transformed.begin(), transformed.end(), values.data() + i * values.cols());
    }
    return values;
}

}  // namespace pwht
