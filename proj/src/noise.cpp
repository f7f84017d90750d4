#include "pwht/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pwht {

namespace {

// Ascending power series, adequate up to the asymptotic cutover.
double bessel_j1_series(double x) {
    const double half = x / 2.0;
    double term = half;
    double sum = term;
    for (int m = 1; m <= 60; ++m) {
        term *= -(half * half) / (static_cast<double>(m) * static_cast<double>(m + 1));
        sum += term;
        if (std::abs(term) < 1e-22) break;
    }
    return sum;
}

// Hankel expansion J1(x) ~ sqrt(2/(pi x)) (P cos(chi) - Q sin(chi)),
// chi = x - 3*pi/4, truncated at the smallest term.
double bessel_j1_asymptotic(double x) {
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;  // a_m / x^m, rolling
    double prev = 1.0;
    for (int m = 1; m <= 60; ++m) {
        const double odd = static_cast<double>(2 * m - 1);
        term *= (4.0 - odd * odd) / (8.0 * static_cast<double>(m) * x);
        if (std::abs(term) >= prev) break;
        prev = std::abs(term);
        const int sign = ((m / 2) & 1) ? -1 : 1;
        if (m % 2 == 0)
            p += sign * term;
        else
            q += sign * term;
    }
    const double chi = x - 3.0 * std::numbers::pi / 4.0;
    return std::sqrt(2.0 / (std::numbers::pi * x)) *
           (p * std::cos(chi) - q * std::sin(chi));
}

void check_band_geometry(std::size_t period, std::size_t dimension, double amplitude) {
    if (period < 2 || period % 2 != 0)
        throw std::invalid_argument("band period must be an even integer >= 2");
    if (dimension % period != 0)
        throw std::invalid_argument("band period must divide the grid dimension");
    if (amplitude < 0.0)
        throw std::invalid_argument("band amplitude must be nonnegative");
}

}  // namespace

PolarImage gen_banding_polar(const PolarGrid& grid, const NoiseSpec& spec) {
    validate_grid(grid);
    Matrix values(grid.ring_count, grid.sector_count);

    if (const auto* circular = std::get_if<CircularBands>(&spec)) {
        check_band_geometry(circular->period, grid.ring_count, circular->amplitude);
        const std::size_t block = circular->period / 2;
        for (std::size_t k = 0; k < grid.ring_count; ++k) {
            if ((k / block) % 2 != 0) continue;
            for (std::size_t q = 0; q < grid.sector_count; ++q)
                values(k, q) = circular->amplitude;
        }
    } else if (const auto* azimuthal = std::get_if<AzimuthalBands>(&spec)) {
        check_band_geometry(azimuthal->period, grid.sector_count, azimuthal->amplitude);
        const std::size_t block = azimuthal->period / 2;
        for (std::size_t q = 0; q < grid.sector_count; ++q) {
            if ((q / block) % 2 != 0) continue;
            for (std::size_t k = 0; k < grid.ring_count; ++k)
                values(k, q) = azimuthal->amplitude;
        }
    } else {
        throw std::invalid_argument("banding generator requires a band spec");
    }
    return {grid, std::move(values)};
}

double bessel_j1(double x) {
    if (!(std::abs(x) < 1e4))
        throw std::invalid_argument("bessel_j1 argument out of supported range");
    const double ax = std::abs(x);
    const double value = ax <= 12.0 ? bessel_j1_series(ax) : bessel_j1_asymptotic(ax);
    return x < 0.0 ? -value : value;  // J1 is odd
}

double airy_intensity(double x, double peak) {
    if (x < 0.0)
        throw std::invalid_argument("x must be nonnegative");
    if (x == 0.0) return peak;
    const double ratio = 2.0 * bessel_j1(x) / x;
    return peak * ratio * ratio;
}

CartesianImage render_airy(std::size_t size, double ka, double peak, double enhance) {
    if (size < 2)
        throw std::invalid_argument("size must be at least 2");
    if (!(ka > 0.0))
        throw std::invalid_argument("ka must be positive");
    if (!(enhance >= 1.0))
        throw std::invalid_argument("enhance must be >= 1");

    CartesianImage img(size, size, 0.0);
    if (peak == 0.0) return img;

    const double radius_px = static_cast<double>(size / 2);
    const double center = static_cast<double>(size / 2);
    for (std::size_t row = 0; row < size; ++row) {
        const double y = static_cast<double>(row) - center;
        for (std::size_t col = 0; col < size; ++col) {
            const double x = static_cast<double>(col) - center;
            // fixed screen distance: sin(theta) proportional to pixel radius
            const double arg = ka * std::hypot(x, y) / radius_px;
            const double relative = airy_intensity(arg, 1.0);
            img(row, col) = 255.0 * std::pow(relative, 1.0 / enhance);
        }
    }
    return img;
}

CartesianImage add_noise(const CartesianImage& img, const CartesianImage& noise, bool clamp) {
    if (!img.same_shape(noise))
        throw std::invalid_argument("image dimensions differ");
    CartesianImage out = img;
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        double v = out.data()[idx] + noise.data()[idx];
        if (clamp) v = std::clamp(v, 0.0, 255.0);
        out.data()[idx] = v;
    }
    return out;
}

}  // namespace pwht
