#pragma once

#include <cstddef>
#include <variant>

#include "pwht/convert.hpp"
#include "pwht/matrix.hpp"

namespace pwht {

/// Periodic bands along the radial index: rings alternate in blocks of
/// period/2 between `amplitude` and 0, starting with `amplitude` at k=0.
struct CircularBands {
    std::size_t period = 2;  // even, divides the ring count
    double amplitude = 0.0;  // >= 0
    MeasureKind measure = MeasureKind::UniformArea;
};

/// Same alternation along the angular index.
struct AzimuthalBands {
    std::size_t period = 2;  // even, divides the sector count
    double amplitude = 0.0;  // >= 0
};

/// Diffraction-ring intensity profile peak * (2 J1(x)/x)^2.
struct AiryPattern {
    double peak = 255.0;  // I0
    double ka = 0.0;      // wave number times aperture radius, > 0
};

using NoiseSpec = std::variant<CircularBands, AzimuthalBands, AiryPattern>;

/// Polar-domain band matrix for a CircularBands or AzimuthalBands spec.
PolarImage gen_banding_polar(const PolarGrid& grid, const NoiseSpec& spec);

/// Bessel function of the first kind, order one. Power series for small
/// arguments, large-argument asymptotic expansion beyond; absolute error
/// below 1e-10 on [0, 100]. Requires |x| < 1e4.
double bessel_j1(double x);

/// peak * (2 J1(x)/x)^2 with the removable singularity at x = 0
/// evaluating to peak. Requires x >= 0.
double airy_intensity(double x, double peak);

/// Radially symmetric diffraction-pattern raster: pixel value is
/// 255 * (I(x)/peak)^(1/enhance) with x = ka * (pixel radius / disk
/// radius). enhance >= 1 brightens the outer rings; peak = 0 gives a
/// black image.
CartesianImage render_airy(std::size_t size, double ka, double peak, double enhance = 1.0);

/// Pixelwise sum; clipped to [0, 255] when clamp is set.
CartesianImage add_noise(const CartesianImage& img, const CartesianImage& noise, bool clamp);

}  // namespace pwht
