#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ceas/apertures.hpp"
#include "test_helpers.hpp"

using namespace ceas;
using Catch::Approx;

namespace {

// Independent point-in-triangle scan over every pixel center; same
// inclusive-edge convention, no bounding box, own orientation handling.
long raster_count_oracle(const GridSpec& g, Vertex2 a, Vertex2 b, Vertex2 c) {
    auto cross = [](Vertex2 p, Vertex2 q, double x, double y) {
        return (q.x - p.x) * (y - p.y) - (q.y - p.y) * (x - p.x);
    };
    const double orient = cross(a, b, c.x, c.y);
    long count = 0;
    for (int iy = 0; iy < g.n_y; ++iy)
        for (int ix = 0; ix < g.n_x; ++ix) {
            const double x = g.coord_x(ix), y = g.coord_y(iy);
            const double e1 = cross(a, b, x, y) * orient;
            const double e2 = cross(b, c, x, y) * orient;
            const double e3 = cross(c, a, x, y) * orient;
            if (e1 >= 0.0 && e2 >= 0.0 && e3 >= 0.0) ++count;
        }
    return count;
}

long ones_count(const ComplexField& f) {
    long n = 0;
    for (const cdouble& v : f.data)
        if (v == cdouble{1.0, 0.0}) ++n;
    return n;
}

} // namespace

TEST_CASE("rect_aperture places the documented sample sets") {
    GridSpec g1 = make_grid(1024, 1, 1e-6);
    ComplexField row = rect_aperture(g1, 758, 1);
    REQUIRE(ones_count(row) == 758);
    REQUIRE(row.at(132, 0) == cdouble{});          // (1024-758)/2 = 133 first index
    REQUIRE(row.at(133, 0) == cdouble{1.0, 0.0});
    REQUIRE(row.at(890, 0) == cdouble{1.0, 0.0});  // last one at 133+758-1
    REQUIRE(row.at(891, 0) == cdouble{});

    GridSpec g4 = make_grid(4, 4, 1.0);
    ComplexField r = rect_aperture(g4, 2, 2);
    for (int iy = 0; iy < 4; ++iy)
        for (int ix = 0; ix < 4; ++ix)
            REQUIRE(r.at(ix, iy) == ((ix == 1 || ix == 2) && (iy == 1 || iy == 2) ? cdouble{1.0, 0.0}
                                                                                  : cdouble{}));

    ComplexField full = rect_aperture(g4, 4, 4);
    REQUIRE(ones_count(full) == 16);

    REQUIRE(field_energy(rect_aperture(make_grid(64, 64, 1.0), 10, 7)) == Approx(70.0));
    REQUIRE_THROWS_AS(rect_aperture(g4, 5, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(rect_aperture(g4, 0, 2), std::invalid_argument);
}

TEST_CASE("triangle_aperture matches the brute-force raster oracle") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> coord(-30.0, 30.0);
    GridSpec g = make_grid(64, 64, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        Vertex2 a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
        const double area2 = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
        if (area2 == 0.0) continue;
        ComplexField f = triangle_aperture(g, a, b, c);
        REQUIRE(ones_count(f) == raster_count_oracle(g, a, b, c));
        REQUIRE(field_is_finite(f));
    }
}

TEST_CASE("triangle_aperture reproduces the reference scene raster") {
    GridSpec g = make_grid(1024, 1024, 1e-6);
    ComplexField f = triangle_aperture(g, {0.05e-3, 0.15e-3}, {0.1e-3, 0.05e-3}, {0.2e-3, 0.1e-3});
    const long count = ones_count(f);
    REQUIRE(count == raster_count_oracle(g, {0.05e-3, 0.15e-3}, {0.1e-3, 0.05e-3}, {0.2e-3, 0.1e-3}));
    REQUIRE(count == 6270);
    // raster area within 2 * perimeter * pitch of the analytic area
    const double area = 6.25e-9; // |cross|/2 for these vertices
    const double perim = (std::hypot(0.05e-3, -0.1e-3) + std::hypot(0.1e-3, 0.05e-3) +
                          std::hypot(-0.15e-3, 0.05e-3));
    REQUIRE(std::abs(count * g.pitch * g.pitch - area) <= 2.0 * perim * g.pitch);
}

TEST_CASE("triangle_aperture covering the whole grid gives all ones") {
    GridSpec g = make_grid(16, 16, 1.0);
    ComplexField f = triangle_aperture(g, {-100.0, -100.0}, {100.0, -100.0}, {0.0, 100.0});
    REQUIRE(ones_count(f) == 256);
}

TEST_CASE("triangle_aperture rejects collinear vertices") {
    GridSpec g = make_grid(16, 16, 1.0);
    REQUIRE_THROWS_AS(triangle_aperture(g, {0, 0}, {1, 1}, {2, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(triangle_aperture(g, {0, 0}, {0, 0}, {1, 2}), std::invalid_argument);
}

TEST_CASE("raster area tracks the analytic area for random triangles") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> coord(-28.0, 28.0);
    GridSpec g = make_grid(64, 64, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        Vertex2 a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
        const double area2 = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
        if (std::abs(area2) < 25.0) continue; // skip slivers
        ComplexField f = triangle_aperture(g, a, b, c);
        const double analytic = 0.5 * std::abs(area2);
        const double perim = std::hypot(b.x - a.x, b.y - a.y) + std::hypot(c.x - b.x, c.y - b.y) +
                             std::hypot(a.x - c.x, a.y - c.y);
        REQUIRE(std::abs(ones_count(f) * g.pitch * g.pitch - analytic) <= 2.0 * perim * g.pitch);
    }
}
