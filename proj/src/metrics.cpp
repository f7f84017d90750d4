#include "pwht/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pwht {

namespace {

constexpr int kWindowSize = 11;
constexpr int kWindowRadius = kWindowSize / 2;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

std::array<double, kWindowSize> gaussian_window() {
    std::array<double, kWindowSize> window{};
    const double sigma = 1.5;
    double total = 0.0;
    for (int t = -kWindowRadius; t <= kWindowRadius; ++t) {
        window[t + kWindowRadius] = std::exp(-0.5 * t * t / (sigma * sigma));
        total += window[t + kWindowRadius];
    }
    for (double& w : window) w /= total;
    return window;
}

// Separable Gaussian filter, valid region only: output is
// (rows - 10) x (cols - 10), window centers fully inside the frame.
Matrix filter_valid(const Matrix& src) {
    static const std::array<double, kWindowSize> window = gaussian_window();
    Matrix horizontal(src.rows(), src.cols() - 2 * kWindowRadius);
    for (std::size_t i = 0; i < src.rows(); ++i) {
        for (std::size_t j = 0; j < horizontal.cols(); ++j) {
            double acc = 0.0;
            for (int t = 0; t < kWindowSize; ++t) acc += window[t] * src(i, j + t);
            horizontal(i, j) = acc;
        }
    }
    Matrix out(src.rows() - 2 * kWindowRadius, horizontal.cols());
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
            double acc = 0.0;
            for (int t = 0; t < kWindowSize; ++t) acc += window[t] * horizontal(i + t, j);
            out(i, j) = acc;
        }
    }
    return out;
}

}  // namespace

Matrix disk_mask(std::size_t rows, std::size_t cols) {
    const double r_max = static_cast<double>(std::min(rows, cols) / 2);
    Matrix mask(rows, cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        const double y = static_cast<double>(i) - static_cast<double>(rows / 2);
        for (std::size_t j = 0; j < cols; ++j) {
            const double x = static_cast<double>(j) - static_cast<double>(cols / 2);
            if (std::hypot(x, y) < r_max) mask(i, j) = 1.0;
        }
    }
    return mask;
}

double mse(const CartesianImage& a, const CartesianImage& b, const Matrix* mask) {
    if (!a.same_shape(b))
        throw std::invalid_argument("image dimensions differ");
    if (mask && !mask->same_shape(a))
        throw std::invalid_argument("mask dimensions differ from the images");

    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
        if (mask && mask->data()[idx] == 0.0) continue;
        const double d = a.data()[idx] - b.data()[idx];
        sum += d * d;
        ++count;
    }
    if (count == 0)
        throw std::invalid_argument("mask selects no pixels");
    return sum / static_cast<double>(count);
}

double psnr(const CartesianImage& a, const CartesianImage& b, double peak, const Matrix* mask) {
    if (!(peak > 0.0))
        throw std::invalid_argument("peak must be positive");
    const double err = mse(a, b, mask);
    if (err == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / err);
}

double ssim(const CartesianImage& a, const CartesianImage& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("image dimensions differ");
    if (a.rows() < kWindowSize || a.cols() < kWindowSize)
        throw std::invalid_argument("images must be at least 11x11");

    Matrix aa(a.rows(), a.cols());
    Matrix bb(a.rows(), a.cols());
    Matrix ab(a.rows(), a.cols());
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
        aa.data()[idx] = a.data()[idx] * a.data()[idx];
        bb.data()[idx] = b.data()[idx] * b.data()[idx];
        ab.data()[idx] = a.data()[idx] * b.data()[idx];
    }

    const Matrix mu_a = filter_valid(a);
    const Matrix mu_b = filter_valid(b);
    const Matrix raw_aa = filter_valid(aa);
    const Matrix raw_bb = filter_valid(bb);
    const Matrix raw_ab = filter_valid(ab);

    double total = 0.0;
    for (std::size_t idx = 0; idx < mu_a.size(); ++idx) {
        const double ma = mu_a.data()[idx];
        const double mb = mu_b.data()[idx];
        const double var_a = raw_aa.data()[idx] - ma * ma;
        const double var_b = raw_bb.data()[idx] - mb * mb;
        const double cov = raw_ab.data()[idx] - ma * mb;
        total += ((2.0 * ma * mb + kC1) * (2.0 * cov + kC2)) /
                 ((ma * ma + mb * mb + kC1) * (var_a + var_b + kC2));
    }
    return total / static_cast<double>(mu_a.size());
}

QualityReport compare_images(const CartesianImage& a, const CartesianImage& b,
                             double peak, const Matrix* mask) {
    QualityReport report;
    report.peak = peak;
    report.mse = mse(a, b, mask);
    report.psnr = psnr(a, b, peak, mask);
    report.ssim = ssim(a, b);
    return report;
}

std::string format_report(const QualityReport& report) {
    std::ostringstream out;
    out.precision(10);
    out << "mse=" << report.mse << '\n';
    if (std::isinf(report.psnr))
        out << "psnr=identical\n";
    else
        out << "psnr=" << report.psnr << '\n';
    out << "ssim=" << report.ssim << '\n';
    out << "peak=" << report.peak << '\n';
    return out.str();
}

}  // namespace pwht
