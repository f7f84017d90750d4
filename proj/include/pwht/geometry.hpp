#pragma once

#include <cstddef>
#include <optional>

#include "pwht/matrix.hpp"
#include "pwht/transform.hpp"

namespace pwht {

/// Ring spacing law for the disk discretization. UniformArea picks ring
/// radii so that all annular regions have equal area (exponent 1/2);
/// UniformRadial spaces them equally along the radius (exponent 1).
enum class MeasureKind { UniformArea, UniformRadial };

double measure_exponent(MeasureKind measure);

/// Discretization of the open disk r < r_max into ring_count concentric
/// rings times sector_count angular sectors.
struct PolarGrid {
    std::size_t ring_count = 2;    // power of two >= 2
    std::size_t sector_count = 2;  // power of two >= 2
    double r_max = 1.0;            // disk radius, pixels
    MeasureKind measure = MeasureKind::UniformArea;
};

/// Throws std::invalid_argument when the grid violates its invariants.
void validate_grid(const PolarGrid& grid);

struct SectorIndex {
    std::size_t ring = 0;    // radial index k in [0, ring_count)
    std::size_t sector = 0;  // angular index q in [0, sector_count)

    bool operator==(const SectorIndex&) const = default;
};

/// Outer radius of ring k: ((1 + k) / ring_count)^f * r_max.
double ring_radius(const PolarGrid& grid, std::size_t ring);

/// Upper angle of sector q: 2*pi*(1 + q) / sector_count.
double sector_angle(const PolarGrid& grid, std::size_t sector);

/// Sector containing (r, theta), or nullopt when the point lies outside
/// the open disk (r >= r_max). Sectors are half-open in both coordinates.
/// Requires r >= 0 and theta in [0, 2*pi).
std::optional<SectorIndex> locate_sector(const PolarGrid& grid, double r, double theta);

struct PolarPoint {
    double r = 0.0;
    double theta = 0.0;
};

/// Mid-ring radius and mid-sector angle of the sector, both real-valued.
PolarPoint sector_centroid(const PolarGrid& grid, SectorIndex s);

/// Value (+1 or -1) of basis function (j, p) at an in-disk point. The
/// functions are constant on every sector.
int basis_value(const PolarGrid& grid, std::size_t j, std::size_t p,
                double r, double theta, TransformOrder order);

/// size x size raster of basis function (j, p): in-disk pixels are 255
/// where the function is +1 and 0 where it is -1; background is 255.
CartesianImage render_basis(const PolarGrid& grid, std::size_t j, std::size_t p,
                            TransformOrder order, std::size_t size);

}  // namespace pwht
