#include "pwht/filter.hpp"

#include <algorithm>
#include <utility>

namespace pwht {

Matrix suppress_spectrum(Matrix spectrum, bool remove_circular, bool remove_azimuthal) {
    if (remove_circular)
        for (std::size_t i = 1; i < spectrum.rows(); ++i) spectrum(i, 0) = 0.0;
    if (remove_azimuthal)
        for (std::size_t j = 1; j < spectrum.cols(); ++j) spectrum(0, j) = 0.0;
    return spectrum;
}

CartesianImage remove_banding(const CartesianImage& img, const FilterRequest& req) {
    PolarImage polar = cartesian_to_polar(img, req.ring_count, req.sector_count, req.measure);
    Matrix spectrum = wht2d(std::move(polar.values), req.hybrid);
    spectrum = suppress_spectrum(std::move(spectrum), req.remove_circular, req.remove_azimuthal);
    // The sequency transform is a symmetric orthogonal involution, so the
    // forward call doubles as the inverse.
    polar.values = wht2d(std::move(spectrum), req.hybrid);

    CartesianImage out = polar_to_cartesian(polar, img.rows(), img.cols());
    for (double& v : out.values()) v = std::clamp(v, 0.0, 255.0);
    return out;
}

SpectrumReport spectrum_report(const CartesianImage& img, const FilterRequest& req) {
    PolarImage polar = cartesian_to_polar(img, req.ring_count, req.sector_count, req.measure);

    SpectrumReport report;
    report.spectrum = wht2d(std::move(polar.values), req.hybrid);
    report.dc = report.spectrum(0, 0);

    double total = 0.0;
    double column0 = 0.0;
    double row0 = 0.0;
    for (std::size_t i = 0; i < report.spectrum.rows(); ++i) {
        for (std::size_t j = 0; j < report.spectrum.cols(); ++j) {
            if (i == 0 && j == 0) continue;
            const double energy = report.spectrum(i, j) * report.spectrum(i, j);
            total += energy;
            if (j == 0) column0 += energy;
            if (i == 0) row0 += energy;
        }
    }
    report.off_dc_energy = total;
    report.column0_fraction = total > 0.0 ? column0 / total : 0.0;
    report.row0_fraction = total > 0.0 ? row0 / total : 0.0;
    return report;
}

}  // namespace pwht
