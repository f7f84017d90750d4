#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "oracles.hpp"
#include "pwht/imgio.hpp"

using namespace pwht;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("pwht_imgio_" + name);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void spit(const fs::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST_CASE("a 1x1 binary PGM has the exact expected bytes") {
    const fs::path path = temp_file("one.pgm");
    write_pgm(CartesianImage(1, 1, 128.0), path, PgmFormat::P5);
    CHECK(slurp(path) == std::string("P5\n1 1\n255\n\x80", 12));
}

TEST_CASE("pixel quantization rounds half up and clamps") {
    const fs::path path = temp_file("rounding.pgm");
    CartesianImage img(1, 5, 0.0);
    img(0, 0) = 127.5;
    img(0, 1) = 127.49;
    img(0, 2) = -3.0;
    img(0, 3) = 300.0;
    img(0, 4) = 254.5;
    write_pgm(img, path, PgmFormat::P5);
    const CartesianImage back = read_pgm(path);
    CHECK(back(0, 0) == 128.0);
    CHECK(back(0, 1) == 127.0);
    CHECK(back(0, 2) == 0.0);
    CHECK(back(0, 3) == 255.0);
    CHECK(back(0, 4) == 255.0);
}

TEST_CASE("write-read-write is byte stable") {
    std::mt19937_64 rng(123);
    const CartesianImage img = oracle::random_matrix(rng, 16, 16, -10.0, 270.0);
    for (PgmFormat format : {PgmFormat::P5, PgmFormat::P2}) {
        const fs::path first = temp_file("rt1.pgm");
        const fs::path second = temp_file("rt2.pgm");
        write_pgm(img, first, format);
        const CartesianImage decoded = read_pgm(first);
        write_pgm(decoded, second, format);
        CHECK(slurp(first) == slurp(second));
    }
}

TEST_CASE("P2 and P5 decode to the same image") {
    std::mt19937_64 rng(9);
    const CartesianImage img = oracle::random_matrix(rng, 7, 11, 0.0, 255.0);
    const fs::path ascii = temp_file("fmt.p2.pgm");
    const fs::path binary = temp_file("fmt.p5.pgm");
    write_pgm(img, ascii, PgmFormat::P2);
    write_pgm(img, binary, PgmFormat::P5);
    CHECK(oracle::max_abs_diff(read_pgm(ascii), read_pgm(binary)) == 0.0);
}

TEST_CASE("PGM headers may contain comments") {
    const fs::path path = temp_file("comment.pgm");
    spit(path, "P2\n# a comment\n2 1\n# another\n255\n12 34\n");
    const CartesianImage img = read_pgm(path);
    CHECK(img.rows() == 1);
    CHECK(img.cols() == 2);
    CHECK(img(0, 0) == 12.0);
    CHECK(img(0, 1) == 34.0);
}

TEST_CASE("PGM error cases") {
    const fs::path path = temp_file("bad.pgm");

    spit(path, "P6\n1 1\n255\nx");
    CHECK_THROWS_AS(read_pgm(path), std::runtime_error);

    spit(path, "P5\n1 1\n65535\n\x01\x02");
    CHECK_THROWS_AS(read_pgm(path), std::runtime_error);

    spit(path, "P5\n4 4\n255\nshort");
    CHECK_THROWS_AS(read_pgm(path), std::runtime_error);

    spit(path, "P2\n2 2\n255\n1 2 3\n");
    CHECK_THROWS_AS(read_pgm(path), std::runtime_error);

    spit(path, "P5\nnonsense\n");
    CHECK_THROWS_AS(read_pgm(path), std::runtime_error);

    CHECK_THROWS_AS(read_pgm(temp_file("does_not_exist.pgm")), std::runtime_error);
}

TEST_CASE("polar files round trip bit-exactly") {
    std::mt19937_64 rng(321);
    PolarImage pimg;
    pimg.grid = PolarGrid{2, 2, 128.0, MeasureKind::UniformRadial};
    pimg.values = oracle::random_matrix(rng, 2, 2, -1e6, 1e6);
    pimg.values(0, 0) = 0.1 + 0.2;  // not exactly representable as decimal

    const fs::path path = temp_file("roundtrip.pwp");
    write_polar(pimg, path);
    const PolarImage back = read_polar(path);

    CHECK(back.grid.ring_count == 2);
    CHECK(back.grid.sector_count == 2);
    CHECK(back.grid.r_max == 128.0);
    CHECK(back.grid.measure == MeasureKind::UniformRadial);
    for (std::size_t idx = 0; idx < 4; ++idx)
        CHECK(back.values.data()[idx] == pimg.values.data()[idx]);
}

TEST_CASE("fractional r_max survives the header round trip") {
    PolarImage pimg;
    pimg.grid = PolarGrid{4, 8, 1.0 / 3.0, MeasureKind::UniformArea};
    pimg.values = Matrix(4, 8, 0.5);
    const fs::path path = temp_file("frac.pwp");
    write_polar(pimg, path);
    CHECK(read_polar(path).grid.r_max == pimg.grid.r_max);
}

TEST_CASE("the measure token selects the ring spacing law") {
    for (MeasureKind m : {MeasureKind::UniformArea, MeasureKind::UniformRadial}) {
        PolarImage pimg;
        pimg.grid = PolarGrid{2, 2, 4.0, m};
        pimg.values = Matrix(2, 2, 1.0);
        const fs::path path = temp_file("measure.pwp");
        write_polar(pimg, path);
        CHECK(read_polar(path).grid.measure == m);
        const std::string bytes = slurp(path);
        CHECK(bytes.find(m == MeasureKind::UniformArea ? " 1/2 " : " 1/1 ") != std::string::npos);
    }
}

TEST_CASE("polar file error cases") {
    const fs::path path = temp_file("bad.pwp");

    spit(path, "PWP2\n2 2 1/2 4\n");
    CHECK_THROWS_AS(read_polar(path), std::runtime_error);

    spit(path, "PWP1\n2 2 2/3 4\n");
    CHECK_THROWS_AS(read_polar(path), std::runtime_error);

    spit(path, "PWP1\n3 2 1/2 4\n");  // not a power of two
    CHECK_THROWS_AS(read_polar(path), std::runtime_error);

    spit(path, std::string("PWP1\n2 2 1/2 4\n") + std::string(17, '\0'));  // short payload
    CHECK_THROWS_AS(read_polar(path), std::runtime_error);

    spit(path, std::string("PWP1\n2 2 1/2 4\n") + std::string(40, '\0'));  // long payload
    CHECK_THROWS_AS(read_polar(path), std::runtime_error);

    PolarImage mismatched;
    mismatched.grid = PolarGrid{4, 4, 2.0, MeasureKind::UniformArea};
    mismatched.values = Matrix(2, 2, 0.0);
    CHECK_THROWS_AS(write_polar(mismatched, path), std::invalid_argument);
}

TEST_CASE("payload is little-endian IEEE doubles") {
    PolarImage pimg;
    pimg.grid = PolarGrid{2, 2, 4.0, MeasureKind::UniformArea};
    pimg.values = Matrix(2, 2, 0.0);
    pimg.values(0, 0) = 1.0;  // 0x3FF0000000000000
    const fs::path path = temp_file("endian.pwp");
    write_polar(pimg, path);
    const std::string bytes = slurp(path);
    const std::string header = "PWP1\n2 2 1/2 4\n";
    REQUIRE(bytes.size() == header.size() + 32);
    CHECK(bytes.compare(0, header.size(), header) == 0);
    const char* payload = bytes.data() + header.size();
    for (int i = 0; i < 6; ++i) CHECK(payload[i] == '\0');
    CHECK(static_cast<unsigned char>(payload[6]) == 0xf0);
    CHECK(static_cast<unsigned char>(payload[7]) == 0x3f);
}
