#include "pwht/imgio.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pwht {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

// Skips PGM whitespace and '#' comment lines, then reads one decimal field.
long read_header_value(std::istream& in) {
    for (;;) {
        const int c = in.peek();
        if (c == EOF) return -1;
        if (std::isspace(c)) {
            in.get();
            continue;
        }
        if (c == '#') {
            std::string comment;
            std::getline(in, comment);
            continue;
        }
        break;
    }
    long value = -1;
    in >> value;
    return in ? value : -1;
}

int quantize_pixel(double v) {
    const double rounded = std::floor(v + 0.5);  // round half up
    return static_cast<int>(std::clamp(rounded, 0.0, 255.0));
}

void put_double_le(std::ostream& out, double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    std::array<char, 8> bytes;
    for (int i = 0; i < 8; ++i)
        bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
    out.write(bytes.data(), bytes.size());
}

double get_double_le(const char* bytes) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i)
        bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i])) << (8 * i);
    return std::bit_cast<double>(bits);
}

}  // namespace

CartesianImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open file");

    std::array<char, 2> magic{};
    in.read(magic.data(), 2);
    if (!in || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5'))
        fail(path, "not a P2/P5 PGM file");
    const bool binary = magic[1] == '5';

    const long width = read_header_value(in);
    const long height = read_header_value(in);
    const long maxval = read_header_value(in);
    if (width <= 0 || height <= 0 || maxval <= 0)
        fail(path, "malformed PGM header");
    if (maxval != 255)
        fail(path, "unsupported maxval (must be 255)");

    CartesianImage img(static_cast<std::size_t>(height), static_cast<std::size_t>(width));
    if (binary) {
        in.get();  // single whitespace byte after maxval
        std::string payload(img.size(), '\0');
        in.read(payload.data(), static_cast<std::streamsize>(payload.size()));
        if (static_cast<std::size_t>(in.gcount()) != payload.size())
            fail(path, "truncated pixel payload");
        for (std::size_t idx = 0; idx < img.size(); ++idx)
            img.data()[idx] = static_cast<double>(static_cast<unsigned char>(payload[idx]));
    } else {
        for (std::size_t idx = 0; idx < img.size(); ++idx) {
            const long value = read_header_value(in);
            if (value < 0 || value > maxval)
                fail(path, "truncated or invalid pixel data");
            img.data()[idx] = static_cast<double>(value);
        }
    }
    return img;
}

void write_pgm(const CartesianImage& img, const std::filesystem::path& path, PgmFormat format) {
    if (img.rows() == 0 || img.cols() == 0)
        throw std::invalid_argument("cannot write an empty image");

    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open file for writing");

    out << (format == PgmFormat::P5 ? "P5" : "P2") << '\n'
        << img.cols() << ' ' << img.rows() << '\n'
        << "255\n";
    if (format == PgmFormat::P5) {
        std::string payload(img.size(), '\0');
        for (std::size_t idx = 0; idx < img.size(); ++idx)
            payload[idx] = static_cast<char>(quantize_pixel(img.data()[idx]));
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    } else {
        for (std::size_t i = 0; i < img.rows(); ++i) {
            for (std::size_t j = 0; j < img.cols(); ++j) {
                if (j != 0) out << ' ';
                out << quantize_pixel(img(i, j));
            }
            out << '\n';
        }
    }
    if (!out) fail(path, "write failed");
}

PolarImage read_polar(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open file");

    std::string magic;
    if (!std::getline(in, magic) || magic != "PWP1")
        fail(path, "bad magic (expected PWP1)");

    std::string header;
    if (!std::getline(in, header))
        fail(path, "missing header line");
    std::istringstream fields(header);
    long rings = 0;
    long sectors = 0;
    std::string measure_token;
    double r_max = 0.0;
    if (!(fields >> rings >> sectors >> measure_token >> r_max))
        fail(path, "malformed header line");
    if (rings <= 0 || sectors <= 0)
        fail(path, "dimensions must be positive");

    MeasureKind measure;
    if (measure_token == "1/2")
        measure = MeasureKind::UniformArea;
    else if (measure_token == "1/1")
        measure = MeasureKind::UniformRadial;
    else
        fail(path, "unknown measure exponent '" + measure_token + "'");

    PolarImage pimg;
    pimg.grid = PolarGrid{static_cast<std::size_t>(rings), static_cast<std::size_t>(sectors),
                          r_max, measure};
    try {
        validate_grid(pimg.grid);
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }

    pimg.values = Matrix(pimg.grid.ring_count, pimg.grid.sector_count);
    std::string payload(pimg.values.size() * 8, '\0');
    in.read(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (static_cast<std::size_t>(in.gcount()) != payload.size())
        fail(path, "payload length mismatch");
    if (in.peek() != EOF)
        fail(path, "payload length mismatch (trailing bytes)");
    for (std::size_t idx = 0; idx < pimg.values.size(); ++idx)
        pimg.values.data()[idx] = get_double_le(payload.data() + 8 * idx);
    return pimg;
}

void write_polar(const PolarImage& pimg, const std::filesystem::path& path) {
    validate_grid(pimg.grid);
    if (pimg.values.rows() != pimg.grid.ring_count ||
        pimg.values.cols() != pimg.grid.sector_count)
        throw std::invalid_argument("polar matrix does not match its grid");

    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open file for writing");

    char r_max_text[64];
    std::snprintf(r_max_text, sizeof r_max_text, "%.17g", pimg.grid.r_max);
    out << "PWP1\n"
        << pimg.grid.ring_count << ' ' << pimg.grid.sector_count << ' '
        << (pimg.grid.measure == MeasureKind::UniformArea ? "1/2" : "1/1") << ' '
        << r_max_text << '\n';
    for (std::size_t idx = 0; idx < pimg.values.size(); ++idx)
        put_double_le(out, pimg.values.data()[idx]);
    if (!out) fail(path, "write failed");
}

}  // namespace pwht
