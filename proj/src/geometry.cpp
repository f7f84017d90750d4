#include "pwht/geometry.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pwht {

namespace {

bool is_pow2_at_least_2(std::size_t v) { return v >= 2 && std::has_single_bit(v); }

int parity_sign(std::size_t masked) {
    return (std::popcount(masked) & 1) ? -1 : 1;
}

}  // namespace

double measure_exponent(MeasureKind measure) {
    return measure == MeasureKind::UniformArea ? 0.5 : 1.0;
}

void validate_grid(const PolarGrid& grid) {
    if (!is_pow2_at_least_2(grid.ring_count) || !is_pow2_at_least_2(grid.sector_count))
        throw std::invalid_argument("ring and sector counts must be powers of two >= 2");
    if (!(grid.r_max > 0.0))
        throw std::invalid_argument("r_max must be positive");
}

double ring_radius(const PolarGrid& grid, std::size_t ring) {
    if (ring >= grid.ring_count)
        throw std::invalid_argument("ring index out of range");
    const double f = measure_exponent(grid.measure);
    return std::pow(static_cast<double>(1 + ring) / static_cast<double>(grid.ring_count), f) *
           grid.r_max;
}

double sector_angle(const PolarGrid& grid, std::size_t sector) {
    if (sector >= grid.sector_count)
        throw std::invalid_argument("sector index out of range");
    return 2.0 * std::numbers::pi * static_cast<double>(1 + sector) /
           static_cast<double>(grid.sector_count);
}

std::optional<SectorIndex> locate_sector(const PolarGrid& grid, double r, double theta) {
    if (r < 0.0)
        throw std::invalid_argument("radius must be nonnegative");
    if (theta < 0.0 || theta >= 2.0 * std::numbers::pi)
        throw std::invalid_argument("theta must lie in [0, 2*pi)");

    const double f = measure_exponent(grid.measure);
    const double scaled = std::pow(r / grid.r_max, 1.0 / f) *
                          static_cast<double>(grid.ring_count);
    if (!(scaled < static_cast<double>(grid.ring_count)))
        return std::nullopt;
    const auto ring = static_cast<std::size_t>(scaled);

    auto sector = static_cast<std::size_t>(theta / (2.0 * std::numbers::pi) *
                                           static_cast<double>(grid.sector_count));
    if (sector >= grid.sector_count) sector = grid.sector_count - 1;  // roundoff at theta -> 2*pi
    return SectorIndex{ring, sector};
}

PolarPoint sector_centroid(const PolarGrid& grid, SectorIndex s) {
    if (s.ring >= grid.ring_count || s.sector >= grid.sector_count)
        throw std::invalid_argument("sector index out of range");
    const double f = measure_exponent(grid.measure);
    const double n1 = static_cast<double>(grid.ring_count);
    const double inner = std::pow(static_cast<double>(s.ring) / n1, f);
    const double outer = std::pow(static_cast<double>(s.ring + 1) / n1, f);
    const double theta = std::numbers::pi * static_cast<double>(1 + 2 * s.sector) /
                         static_cast<double>(grid.sector_count);
    return {0.5 * grid.r_max * (inner + outer), theta};
}

int basis_value(const PolarGrid& grid, std::size_t j, std::size_t p,
                double r, double theta, TransformOrder order) {
    if (j >= grid.ring_count || p >= grid.sector_count)
        throw std::invalid_argument("basis index out of range");
    const auto located = locate_sector(grid, r, theta);
    if (!located)
        throw std::invalid_argument("point lies outside the open disk");

    std::size_t jj = j;
    std::size_t pp = p;
    if (order == TransformOrder::Sequency) {
        jj = sequency_to_natural_index(j, log2_exact(grid.ring_count));
        pp = sequency_to_natural_index(p, log2_exact(grid.sector_count));
    }
    return parity_sign(jj & located->ring) * parity_sign(pp & located->sector);
}

CartesianImage render_basis(const PolarGrid& grid, std::size_t j, std::size_t p,
                            TransformOrder order, std::size_t size) {
    validate_grid(grid);
    if (size < 2)
        throw std::invalid_argument("size must be at least 2");
    if (j >= grid.ring_count || p >= grid.sector_count)
        throw std::invalid_argument("basis index out of range");

    CartesianImage img(size, size, 255.0);
    const double radius_px = static_cast<double>(size / 2);
    const double center = static_cast<double>(size / 2);
    for (std::size_t row = 0; row < size; ++row) {
        const double y = static_cast<double>(row) - center;
        for (std::size_t col = 0; col < size; ++col) {
            const double x = static_cast<double>(col) - center;
            const double rp = std::hypot(x, y);
            if (rp >= radius_px) continue;
            double theta = std::atan2(y, x);
            if (theta < 0.0) theta += 2.0 * std::numbers::pi;
            const double r = rp / radius_px * grid.r_max;
            img(row, col) = basis_value(grid, j, p, r, theta, order) > 0 ? 255.0 : 0.0;
        }
    }
    return img;
}

}  // namespace pwht
