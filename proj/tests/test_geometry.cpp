#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "pwht/geometry.hpp"

using namespace pwht;

namespace {

constexpr double kPi = std::numbers::pi;

const PolarGrid kRadial22{2, 2, 1.0, MeasureKind::UniformRadial};
const PolarGrid kArea22{2, 2, 1.0, MeasureKind::UniformArea};

}  // namespace

TEST_CASE("measure exponents") {
    CHECK(measure_exponent(MeasureKind::UniformArea) == 0.5);
    CHECK(measure_exponent(MeasureKind::UniformRadial) == 1.0);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(validate_grid(PolarGrid{3, 4, 1.0, MeasureKind::UniformArea}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_grid(PolarGrid{4, 1, 1.0, MeasureKind::UniformArea}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_grid(PolarGrid{4, 4, 0.0, MeasureKind::UniformArea}),
                    std::invalid_argument);
}

TEST_CASE("ring radii, uniform radial") {
    const PolarGrid grid{4, 4, 1.0, MeasureKind::UniformRadial};
    const double expected[4] = {0.25, 0.5, 0.75, 1.0};
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(ring_radius(grid, k) == doctest::Approx(expected[k]).epsilon(1e-14));
}

TEST_CASE("ring radii, uniform area") {
    const PolarGrid grid{4, 4, 1.0, MeasureKind::UniformArea};
    const double expected[4] = {0.5, std::sqrt(0.5), std::sqrt(0.75), 1.0};
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(ring_radius(grid, k) == doctest::Approx(expected[k]).epsilon(1e-12));
    CHECK(ring_radius(grid, 1) == doctest::Approx(0.70711).epsilon(1e-5));
    CHECK(ring_radius(grid, 2) == doctest::Approx(0.86603).epsilon(1e-5));

    // equal annular areas
    double prev = 0.0;
    const double first = kPi * ring_radius(grid, 0) * ring_radius(grid, 0);
    for (std::size_t k = 0; k < 4; ++k) {
        const double r = ring_radius(grid, k);
        CHECK(kPi * (r * r - prev * prev) == doctest::Approx(first).epsilon(1e-9));
        prev = r;
    }
}

TEST_CASE("outermost ring always reaches r_max") {
    for (MeasureKind m : {MeasureKind::UniformArea, MeasureKind::UniformRadial}) {
        const PolarGrid grid{16, 8, 37.5, m};
        CHECK(ring_radius(grid, 15) == doctest::Approx(37.5).epsilon(1e-14));
    }
    CHECK_THROWS_AS(ring_radius(kArea22, 2), std::invalid_argument);
}

TEST_CASE("sector angles") {
    const PolarGrid grid{4, 4, 1.0, MeasureKind::UniformArea};
    CHECK(sector_angle(grid, 3) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK(sector_angle(grid, 0) == doctest::Approx(kPi / 2.0).epsilon(1e-14));

    const PolarGrid fine{4, 512, 1.0, MeasureKind::UniformArea};
    CHECK(sector_angle(fine, 255) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK_THROWS_AS(sector_angle(grid, 4), std::invalid_argument);
}

TEST_CASE("sector lookup") {
    const auto inner = locate_sector(kRadial22, 0.4, 0.1);
    REQUIRE(inner.has_value());
    CHECK(*inner == SectorIndex{0, 0});

    const auto outer = locate_sector(kArea22, 0.8, 4.0);
    REQUIRE(outer.has_value());
    CHECK(*outer == SectorIndex{1, 1});

    CHECK_FALSE(locate_sector(kRadial22, 1.0, 0.0).has_value());
    CHECK_FALSE(locate_sector(kRadial22, 2.5, 3.0).has_value());

    CHECK_THROWS_AS(locate_sector(kRadial22, -0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(locate_sector(kRadial22, 0.5, 2.0 * kPi), std::invalid_argument);
    CHECK_THROWS_AS(locate_sector(kRadial22, 0.5, -0.5), std::invalid_argument);
}

TEST_CASE("sector centroids") {
    const PolarPoint first = sector_centroid(kRadial22, {0, 0});
    CHECK(first.r == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(first.theta == doctest::Approx(kPi / 2.0).epsilon(1e-14));

    const PolarGrid area44{4, 4, 1.0, MeasureKind::UniformArea};
    const PolarPoint rim = sector_centroid(area44, {3, 0});
    CHECK(rim.r == doctest::Approx((std::sqrt(0.75) + 1.0) / 2.0).epsilon(1e-12));
    CHECK(rim.r == doctest::Approx(0.93301).epsilon(1e-5));
    CHECK(rim.theta == doctest::Approx(kPi / 4.0).epsilon(1e-14));

    const PolarGrid fine{2, 1024, 1.0, MeasureKind::UniformRadial};
    CHECK(sector_centroid(fine, {0, 0}).theta == doctest::Approx(kPi / 1024.0).epsilon(1e-12));
}

TEST_CASE("centroids locate back to their own sector") {
    for (MeasureKind m : {MeasureKind::UniformArea, MeasureKind::UniformRadial}) {
        const PolarGrid grid{8, 16, 3.0, m};
        for (std::size_t k = 0; k < 8; ++k) {
            for (std::size_t q = 0; q < 16; ++q) {
                const PolarPoint c = sector_centroid(grid, {k, q});
                const auto located = locate_sector(grid, c.r, c.theta);
                REQUIRE(located.has_value());
                CHECK(*located == SectorIndex{k, q});
            }
        }
    }
}

TEST_CASE("lookup just inside the sector boundaries") {
    const double nudge = 1e-9;
    for (MeasureKind m : {MeasureKind::UniformArea, MeasureKind::UniformRadial}) {
        const PolarGrid grid{8, 8, 2.0, m};
        for (std::size_t k = 0; k < 8; ++k) {
            for (std::size_t q = 0; q < 8; ++q) {
                const auto located = locate_sector(grid, ring_radius(grid, k) - nudge,
                                                   sector_angle(grid, q) - nudge);
                REQUIRE(located.has_value());
                CHECK(*located == SectorIndex{k, q});
            }
        }
    }
}

TEST_CASE("basis values") {
    CHECK(basis_value(kRadial22, 0, 0, 0.9, 5.0, TransformOrder::Natural) == 1);
    CHECK(basis_value(kRadial22, 0, 0, 0.1, 0.3, TransformOrder::Sequency) == 1);

    // point in S(1, 0): (-1)^(1*1 + 0*0) = -1
    CHECK(basis_value(kRadial22, 1, 0, 0.75, 1.0, TransformOrder::Natural) == -1);

    // sequency order, point in S(0, 0): zero exponent
    const PolarGrid area44{4, 4, 1.0, MeasureKind::UniformArea};
    CHECK(basis_value(area44, 1, 1, 0.2, 0.5, TransformOrder::Sequency) == 1);

    CHECK_THROWS_AS(basis_value(kRadial22, 1, 0, 1.5, 0.0, TransformOrder::Natural),
                    std::invalid_argument);
    CHECK_THROWS_AS(basis_value(kRadial22, 2, 0, 0.5, 0.0, TransformOrder::Natural),
                    std::invalid_argument);
}

TEST_CASE("basis values are constant on each sector") {
    const PolarGrid grid{4, 8, 2.0, MeasureKind::UniformArea};
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> radial(0.0, 1.0);
    std::uniform_real_distribution<double> angular(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double r = radial(rng) * 1.999;
        const double theta = angular(rng) * 2.0 * kPi * 0.9999;
        const auto s = locate_sector(grid, r, theta);
        REQUIRE(s.has_value());
        const PolarPoint c = sector_centroid(grid, *s);
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t p = 0; p < 8; ++p)
                CHECK(basis_value(grid, j, p, r, theta, TransformOrder::Natural) ==
                      basis_value(grid, j, p, c.r, c.theta, TransformOrder::Natural));
    }
}

TEST_CASE("sector-sampled basis functions are orthogonal") {
    for (MeasureKind m : {MeasureKind::UniformArea, MeasureKind::UniformRadial}) {
        for (TransformOrder order : {TransformOrder::Natural, TransformOrder::Sequency}) {
            const PolarGrid grid{4, 4, 1.0, m};
            // one sample per sector, at the centroid
            std::vector<std::vector<int>> sampled;
            for (std::size_t j = 0; j < 4; ++j) {
                for (std::size_t p = 0; p < 4; ++p) {
                    std::vector<int> samples;
                    for (std::size_t k = 0; k < 4; ++k) {
                        for (std::size_t q = 0; q < 4; ++q) {
                            const PolarPoint c = sector_centroid(grid, {k, q});
                            samples.push_back(basis_value(grid, j, p, c.r, c.theta, order));
                        }
                    }
                    sampled.push_back(std::move(samples));
                }
            }
            for (std::size_t a = 0; a < sampled.size(); ++a) {
                for (std::size_t b = 0; b < sampled.size(); ++b) {
                    int dot = 0;
                    for (std::size_t idx = 0; idx < sampled[a].size(); ++idx)
                        dot += sampled[a][idx] * sampled[b][idx];
                    CHECK(dot == (a == b ? 16 : 0));
                }
            }
        }
    }
}

TEST_CASE("every in-disk raster point falls in exactly the sector that bounds it") {
    const PolarGrid grid{8, 16, 64.0, MeasureKind::UniformArea};
    std::size_t inside = 0;
    for (int iy = -64; iy <= 64; ++iy) {
        for (int ix = -64; ix <= 64; ++ix) {
            const double r = std::hypot(ix, iy);
            double theta = std::atan2(double(iy), double(ix));
            if (theta < 0.0) theta += 2.0 * kPi;
            const auto s = locate_sector(grid, r, theta);
            if (r >= 64.0) {
                CHECK_FALSE(s.has_value());
                continue;
            }
            REQUIRE(s.has_value());
            ++inside;
            const double r_lo = s->ring == 0 ? 0.0 : ring_radius(grid, s->ring - 1);
            const double t_lo = s->sector == 0 ? 0.0 : sector_angle(grid, s->sector - 1);
            CHECK(r >= r_lo);
            CHECK(r < ring_radius(grid, s->ring));
            CHECK(theta >= t_lo - 1e-12);
            CHECK(theta < sector_angle(grid, s->sector));
        }
    }
    CHECK(inside > 12000);  // roughly pi * 64^2
}

TEST_CASE("uniform area measure balances per-ring pixel counts") {
    const PolarGrid grid{16, 16, 256.0, MeasureKind::UniformArea};
    std::vector<std::size_t> counts(16, 0);
    for (int iy = -256; iy < 256; ++iy) {
        for (int ix = -256; ix < 256; ++ix) {
            const double r = std::hypot(ix, iy);
            if (r >= 256.0) continue;
            double theta = std::atan2(double(iy), double(ix));
            if (theta < 0.0) theta += 2.0 * kPi;
            const auto s = locate_sector(grid, r, theta);
            REQUIRE(s.has_value());
            ++counts[s->ring];
        }
    }
    double mean = 0.0;
    for (std::size_t k = 2; k < 16; ++k) mean += double(counts[k]);
    mean /= 14.0;
    for (std::size_t k = 2; k < 16; ++k)
        CHECK(std::abs(double(counts[k]) - mean) / mean < 0.05);
}

TEST_CASE("rendering the constant basis paints a uniform disk") {
    const CartesianImage img = render_basis(kArea22, 0, 0, TransformOrder::Natural, 64);
    for (std::size_t i = 0; i < 64; ++i)
        for (std::size_t j = 0; j < 64; ++j)
            CHECK(img(i, j) == 255.0);
}

TEST_CASE("rendering (0,1) on a 2x2 radial grid splits the disk at theta = pi") {
    const std::size_t size = 128;
    const CartesianImage img = render_basis(kRadial22, 0, 1, TransformOrder::Natural, size);
    const long center = static_cast<long>(size / 2);
    for (long i = 0; i < static_cast<long>(size); ++i) {
        for (long j = 0; j < static_cast<long>(size); ++j) {
            const long y = i - center;
            const long x = j - center;
            if (std::hypot(double(x), double(y)) >= double(center)) {
                CHECK(img(i, j) == 255.0);
                continue;
            }
            // theta in [0, pi) -> sector 0 -> +1 -> 255; [pi, 2 pi) -> -1 -> 0
            const bool first_half = y > 0 || (y == 0 && x >= 0);
            CHECK(img(i, j) == (first_half ? 255.0 : 0.0));
        }
    }
}

TEST_CASE("rendering a radial sequency basis flips once between rings 1 and 2") {
    const PolarGrid grid{4, 4, 1.0, MeasureKind::UniformArea};
    const std::size_t size = 128;
    const CartesianImage img = render_basis(grid, 1, 0, TransformOrder::Sequency, size);
    const double radius_px = double(size / 2);
    const double flip_px = ring_radius(grid, 1) * radius_px;  // sign pattern 1,1,-1,-1
    const long center = static_cast<long>(size / 2);
    for (long i = 0; i < static_cast<long>(size); ++i) {
        for (long j = 0; j < static_cast<long>(size); ++j) {
            const double rp = std::hypot(double(j - center), double(i - center));
            if (rp >= radius_px) {
                CHECK(img(i, j) == 255.0);
                continue;
            }
            CHECK(img(i, j) == (rp < flip_px ? 255.0 : 0.0));
        }
    }
}

TEST_CASE("render size validation") {
    CHECK_THROWS_AS(render_basis(kArea22, 0, 0, TransformOrder::Natural, 1),
                    std::invalid_argument);
}
