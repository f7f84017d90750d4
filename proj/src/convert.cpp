#include "pwht/convert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pwht {

std::pair<long, long> recenter(long i, long j, std::size_t rows, std::size_t cols) {
    return {i - static_cast<long>(rows / 2), j - static_cast<long>(cols / 2)};
}

PolarImage cartesian_to_polar(const CartesianImage& img, std::size_t ring_count,
                              std::size_t sector_count, MeasureKind measure) {
    if (img.rows() < 2 || img.cols() < 2)
        throw std::invalid_argument("image must be at least 2x2");
    const double r_max = static_cast<double>(std::min(img.rows(), img.cols()) / 2);

    PolarGrid grid{ring_count, sector_count, r_max, measure};
    validate_grid(grid);

    Matrix sums(ring_count, sector_count);
    Matrix counts(ring_count, sector_count);
    for (std::size_t i = 0; i < img.rows(); ++i) {
        const double y = static_cast<double>(i) - static_cast<double>(img.rows() / 2);
        for (std::size_t j = 0; j < img.cols(); ++j) {
            const double x = static_cast<double>(j) - static_cast<double>(img.cols() / 2);
            const double r = std::hypot(x, y);
            if (r >= r_max) continue;
            double theta = std::atan2(y, x);
            if (theta < 0.0) theta += 2.0 * std::numbers::pi;
            const auto s = locate_sector(grid, r, theta);
            if (!s) continue;
            sums(s->ring, s->sector) += img(i, j);
            counts(s->ring, s->sector) += 1.0;
        }
    }

    Matrix values(ring_count, sector_count);
    for (std::size_t k = 0; k < ring_count; ++k) {
        for (std::size_t q = 0; q < sector_count; ++q) {
            if (counts(k, q) > 0.0) {
                values(k, q) = sums(k, q) / counts(k, q);
                continue;
            }
            // Empty sector: average the four lattice pixels around the
            // Cartesian position of the sector centroid.
            const PolarPoint c = sector_centroid(grid, {k, q});
            const double row_pos = c.r * std::sin(c.theta) + static_cast<double>(img.rows() / 2);
            const double col_pos = c.r * std::cos(c.theta) + static_cast<double>(img.cols() / 2);
            const long r0 = static_cast<long>(std::floor(row_pos));
            const long c0 = static_cast<long>(std::floor(col_pos));
            double sum = 0.0;
            int used = 0;
            for (long rr : {r0, r0 + 1}) {
                for (long cc : {c0, c0 + 1}) {
                    if (rr < 0 || cc < 0 || rr >= static_cast<long>(img.rows()) ||
                        cc >= static_cast<long>(img.cols()))
                        continue;
                    sum += img(static_cast<std::size_t>(rr), static_cast<std::size_t>(cc));
                    ++used;
                }
            }
            values(k, q) = used > 0 ? sum / used : 0.0;
        }
    }
    return {grid, std::move(values)};
}

CartesianImage polar_to_cartesian(const PolarImage& pimg, std::size_t rows, std::size_t cols) {
    validate_grid(pimg.grid);
    if (pimg.values.rows() != pimg.grid.ring_count ||
        pimg.values.cols() != pimg.grid.sector_count)
        throw std::invalid_argument("polar matrix does not match its grid");
    if (rows < 2 || cols < 2)
        throw std::invalid_argument("output image must be at least 2x2");
    const double r_max = static_cast<double>(std::min(rows, cols) / 2);
    if (r_max != pimg.grid.r_max)
        throw std::invalid_argument("output dimensions imply a different r_max than the grid");

    CartesianImage out(rows, cols, 255.0);
    for (std::size_t i = 0; i < rows; ++i) {
        const double y = static_cast<double>(i) - static_cast<double>(rows / 2);
        for (std::size_t j = 0; j < cols; ++j) {
            const double x = static_cast<double>(j) - static_cast<double>(cols / 2);
            const double r = std::hypot(x, y);
            if (r >= r_max) continue;
            double theta = std::atan2(y, x);
            if (theta < 0.0) theta += 2.0 * std::numbers::pi;
            const auto s = locate_sector(pimg.grid, r, theta);
            if (!s) continue;
            out(i, j) = pimg.values(s->ring, s->sector);
        }
    }
    return out;
}

}  // namespace pwht
