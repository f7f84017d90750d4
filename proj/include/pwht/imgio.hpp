#pragma once

#include <filesystem>

#include "pwht/convert.hpp"
#include "pwht/matrix.hpp"

namespace pwht {

enum class PgmFormat { P2, P5 };  // ASCII / binary

/// Reads a PGM image (P2 or P5, maxval 255). Throws std::runtime_error
/// on malformed headers, unsupported maxval, or truncated payloads.
CartesianImage read_pgm(const std::filesystem::path& path);

/// Writes a PGM image with maxval 255. Pixel values are quantized by
/// round-half-up and clamped to [0, 255]. Output bytes are fully
/// determined by the image content.
void write_pgm(const CartesianImage& img, const std::filesystem::path& path,
               PgmFormat format = PgmFormat::P5);

/// Polar-matrix file: line "PWP1", then a header line
/// "<rings> <sectors> <1/2|1/1> <r_max>", then rings*sectors row-major
/// IEEE-754 doubles, little-endian. Lossless round trip of values and
/// grid metadata.
PolarImage read_polar(const std::filesystem::path& path);
void write_polar(const PolarImage& pimg, const std::filesystem::path& path);

}  // namespace pwht
