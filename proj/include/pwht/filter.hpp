#pragma once

#include <cstddef>

#include "pwht/convert.hpp"
#include "pwht/matrix.hpp"
#include "pwht/transform.hpp"

namespace pwht {

struct FilterRequest {
    std::size_t ring_count = 256;
    std::size_t sector_count = 512;
    MeasureKind measure = MeasureKind::UniformArea;
    bool remove_circular = false;   // cflag: zero column 0 below the DC entry
    bool remove_azimuthal = false;  // aflag: zero row 0 right of the DC entry
    HybridConfig hybrid{};
};

/// Notch filter on a 2D sequency spectrum. The (0,0) entry is always
/// preserved; all other entries outside the selected row/column are
/// untouched.
Matrix suppress_spectrum(Matrix spectrum, bool remove_circular, bool remove_azimuthal);

/// Banding-noise removal: polar conversion, 2D sequency transform,
/// spectrum suppression, inverse transform (the same involution), and
/// Cartesian reconstruction at the input dimensions. Output pixels are
/// clamped to [0, 255].
CartesianImage remove_banding(const CartesianImage& img, const FilterRequest& req);

struct SpectrumReport {
    Matrix spectrum;                // 2D sequency transform of the polar representation
    double dc = 0.0;                // (0,0) coefficient
    double off_dc_energy = 0.0;     // squared sum over all entries but (0,0)
    double column0_fraction = 0.0;  // share of off-DC energy in column 0
    double row0_fraction = 0.0;     // share of off-DC energy in row 0
};

/// Diagnostic view of the transform-domain intermediate, for deciding
/// which suppression flags to apply.
SpectrumReport spectrum_report(const CartesianImage& img, const FilterRequest& req);

}  // namespace pwht
