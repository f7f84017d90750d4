#pragma once

#include <cstddef>
#include <string>

#include "pwht/matrix.hpp"

namespace pwht {

/// Mask selecting the open disk r < floor(min(rows, cols)/2) around the
/// image center (1 inside, 0 outside), matching the polar conversions.
Matrix disk_mask(std::size_t rows, std::size_t cols);

/// Mean squared pixel difference over the mask (full frame when null).
double mse(const CartesianImage& a, const CartesianImage& b, const Matrix* mask = nullptr);

/// 10*log10(peak^2 / mse), in dB; +infinity for identical images.
double psnr(const CartesianImage& a, const CartesianImage& b, double peak = 255.0,
            const Matrix* mask = nullptr);

/// Mean local structural similarity with the standard parameters:
/// 11x11 Gaussian window (sigma 1.5), C1 = (0.01*255)^2, C2 = (0.03*255)^2,
/// averaged over window positions fully inside the frame. Requires both
/// dimensions >= 11.
double ssim(const CartesianImage& a, const CartesianImage& b);

struct QualityReport {
    double mse = 0.0;
    double psnr = 0.0;  // +infinity encodes "identical"
    double ssim = 1.0;
    double peak = 255.0;
};

QualityReport compare_images(const CartesianImage& a, const CartesianImage& b,
                             double peak = 255.0, const Matrix* mask = nullptr);

/// Flat key=value record, one field per line; infinite psnr is written
/// as "identical".
std::string format_report(const QualityReport& report);

}  // namespace pwht
