#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "ceas/field.hpp"

namespace ceas {

/// Centered rectangle of amplitude 1. For odd (n - width) the extra zero
/// sample goes on the high-index side.
inline ComplexField rect_aperture(const GridSpec& grid, int width_x, int width_y) {
    if (width_x < 1 || width_x > grid.n_x || width_y < 1 || width_y > grid.n_y)
        throw std::invalid_argument("rect_aperture: width must be in [1, n] per axis");
    ComplexField out(grid);
    const int lo_x = (grid.n_x - width_x) / 2;
    const int lo_y = (grid.n_y - width_y) / 2;
    for (int iy = lo_y; iy < lo_y + width_y; ++iy)
        for (int ix = lo_x; ix < lo_x + width_x; ++ix)
            out.at(ix, iy) = 1.0;
    return out;
}

/// Vertex of a planar aperture outline, meters.
struct Vertex2 {
    double x = 0.0;
    double y = 0.0;
};

/// Rasterize a filled triangle: a sample is 1 iff its pixel center lies
/// inside or on the boundary of the triangle (edges inclusive).
inline ComplexField triangle_aperture(const GridSpec& grid, Vertex2 v1, Vertex2 v2, Vertex2 v3) {
    const double twice_area = (v2.x - v1.x) * (v3.y - v1.y) - (v3.x - v1.x) * (v2.y - v1.y);
    if (twice_area == 0.0)
        throw std::invalid_argument("triangle_aperture: vertices are collinear");

    const double x_lo = grid.coord_x(0);
    const double y_lo = grid.coord_y(0);

    // Orient counter-clockwise so all edge functions are >= 0 inside.
    if (twice_area < 0.0) std::swap(v2, v3);

    auto edge = [](const Vertex2& a, const Vertex2& b, double px, double py) {
        return (b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x);
    };

    ComplexField out(grid);
    // Limit the scan to the bounding box of the triangle.
    const double min_x = std::min({v1.x, v2.x, v3.x}), max_x = std::max({v1.x, v2.x, v3.x});
    const double min_y = std::min({v1.y, v2.y, v3.y}), max_y = std::max({v1.y, v2.y, v3.y});
    const int ix0 = std::max(0, static_cast<int>(std::floor((min_x - x_lo) / grid.pitch)));
    const int ix1 = std::min(grid.n_x - 1, static_cast<int>(std::ceil((max_x - x_lo) / grid.pitch)));
    const int iy0 = std::max(0, static_cast<int>(std::floor((min_y - y_lo) / grid.pitch)));
    const int iy1 = std::min(grid.n_y - 1, static_cast<int>(std::ceil((max_y - y_lo) / grid.pitch)));

    for (int iy = iy0; iy <= iy1; ++iy) {
        const double py = grid.coord_y(iy);
        for (int ix = ix0; ix <= ix1; ++ix) {
            const double px = grid.coord_x(ix);
            if (edge(v1, v2, px, py) >= 0.0 && edge(v2, v3, px, py) >= 0.0 && edge(v3, v1, px, py) >= 0.0)
                out.at(ix, iy) = 1.0;
        }
    }
    return out;
}

} // namespace ceas
