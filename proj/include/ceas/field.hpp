#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ceas/grid.hpp"

namespace ceas {

using cdouble = std::complex<double>;

/// Complex amplitude samples on a GridSpec, row-major (y outer, x inner).
struct ComplexField {
    GridSpec grid;
    std::vector<cdouble> data;

    ComplexField() = default;
    explicit ComplexField(const GridSpec& g) : grid(g), data(g.sample_count()) {}
    ComplexField(const GridSpec& g, std::vector<cdouble> d) : grid(g), data(std::move(d)) {
        if (data.size() != grid.sample_count())
            throw std::invalid_argument("ComplexField: data length does not match grid");
    }

    cdouble& at(int ix, int iy) { return data[static_cast<std::size_t>(iy) * grid.n_x + ix]; }
    const cdouble& at(int ix, int iy) const { return data[static_cast<std::size_t>(iy) * grid.n_x + ix]; }
};

/// Sum of |u|^2 over all samples (compensated summation).
inline double field_energy(const ComplexField& f) {
    double sum = 0.0, c = 0.0;
    for (const cdouble& v : f.data) {
        double term = std::norm(v);
        double y = term - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

inline bool field_is_finite(const ComplexField& f) {
    return std::all_of(f.data.begin(), f.data.end(),
                       [](const cdouble& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

namespace detail {
// Padded size per axis: doubled, except size-1 axes (1D mode) stay 1.
inline int padded_size(int n) { return n == 1 ? 1 : 2 * n; }
// Offset of the source window inside the padded window: [n/2, 3n/2).
inline int pad_offset(int n) { return n == 1 ? 0 : n / 2; }
} // namespace detail

/// Double the window per axis and pad with zeros; the source occupies
/// indices [n/2, 3n/2) of the padded window. Axes of size 1 are left alone
/// so 1D fields stay one-dimensional.
inline ComplexField zero_pad(const ComplexField& f) {
    const GridSpec& g = f.grid;
    GridSpec pg = make_grid(detail::padded_size(g.n_x), detail::padded_size(g.n_y), g.pitch);
    ComplexField out(pg);
    const int ox = detail::pad_offset(g.n_x);
    const int oy = detail::pad_offset(g.n_y);
    for (int iy = 0; iy < g.n_y; ++iy) {
        const cdouble* src = &f.data[static_cast<std::size_t>(iy) * g.n_x];
        cdouble* dst = &out.data[static_cast<std::size_t>(iy + oy) * pg.n_x + ox];
        std::copy(src, src + g.n_x, dst);
    }
    return out;
}

/// Extract the centered n_x-by-n_y region, using the same centering
/// convention as zero_pad, so crop_center(zero_pad(u)) == u exactly.
inline ComplexField crop_center(const ComplexField& f, int n_x, int n_y) {
    const GridSpec& g = f.grid;
    if (n_x < 1 || n_y < 1 || n_x > g.n_x || n_y > g.n_y)
        throw std::invalid_argument("crop_center: requested size exceeds field size");
    // Inverse of pad_offset: a 2N window maps back to [N/2, 3N/2). For odd
    // size differences the extra excluded sample sits on the high-index side,
    // the same rule rect_aperture uses.
    const int ox = (g.n_x - n_x) / 2;
    const int oy = (g.n_y - n_y) / 2;
    GridSpec cg = make_grid(n_x, n_y, g.pitch);
    ComplexField out(cg);
    for (int iy = 0; iy < n_y; ++iy) {
        const cdouble* src = &f.data[static_cast<std::size_t>(iy + oy) * g.n_x + ox];
        std::copy(src, src + n_x, &out.data[static_cast<std::size_t>(iy) * n_x]);
    }
    return out;
}

} // namespace ceas
