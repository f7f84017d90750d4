#pragma once

#include <cstddef>
#include <utility>

#include "pwht/geometry.hpp"
#include "pwht/matrix.hpp"

namespace pwht {

/// Polar representation of an image: entry (k, q) is the intensity of
/// sector (k, q) of the grid.
struct PolarImage {
    PolarGrid grid;
    Matrix values;
};

/// Image-center offsets: (i - floor(rows/2), j - floor(cols/2)).
std::pair<long, long> recenter(long i, long j, std::size_t rows, std::size_t cols);

/// Sector-averaging resample of a Cartesian image onto a polar grid with
/// r_max = floor(min(rows, cols) / 2). Nonempty sectors receive the mean
/// of their pixels (real-valued); empty sectors receive the mean of the
/// four lattice pixels surrounding their centroid (out-of-bounds
/// neighbors dropped). Pixels at or beyond r_max are ignored.
PolarImage cartesian_to_polar(const CartesianImage& img, std::size_t ring_count,
                              std::size_t sector_count, MeasureKind measure);

/// Paints every in-disk pixel with the intensity of its sector; the
/// background is 255 (white). The output dimensions must imply the same
/// r_max the polar image was built with.
CartesianImage polar_to_cartesian(const PolarImage& pimg, std::size_t rows, std::size_t cols);

}  // namespace pwht
