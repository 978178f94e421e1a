#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ceas/errors.hpp"
#include "ceas/fft.hpp"
#include "ceas/field.hpp"
#include "ceas/optics.hpp"

namespace ceas {

/// Work guard for the direct-summation oracle (kernel evaluations).
struct OracleBudget {
    std::uint64_t max_work = std::uint64_t{1} << 31;
};

namespace detail {

/// First Rayleigh-Sommerfeld solution kernel for plane-to-plane propagation,
/// including the near-field 1/r term:
///   h(dx,dy) = (z/2pi) * (1/r - i*k) * exp(i*k*r) / r^2,  r = |(dx,dy,z)|
inline cdouble rs_kernel_2d(double dx, double dy, double z, double k) {
    const double r2 = dx * dx + dy * dy + z * z;
    const double r = std::sqrt(r2);
    const double phase = k * r;
    const cdouble e{std::cos(phase), std::sin(phase)};
    const cdouble near{1.0 / r, -k};
    return (z / (2.0 * std::numbers::pi)) * near * e / r2;
}

/// Line-aperture analogue of the first RS solution (2D space):
///   h(dx) = (i*k*z/(2r)) * H1^(1)(k*r),  r = sqrt(dx^2 + z^2)
inline cdouble rs_kernel_1d(double dx, double z, double k) {
    const double r = std::sqrt(dx * dx + z * z);
    const double kr = k * r;
    const cdouble hankel1{std::cyl_bessel_j(1.0, kr), std::cyl_neumann(1.0, kr)};
    return cdouble{0.0, k * z / (2.0 * r)} * hankel1;
}

struct KahanComplex {
    double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0;
    void add(const cdouble& v) {
        double y = v.real() - cre;
        double t = re + y;
        cre = (t - re) - y;
        re = t;
        y = v.imag() - cim;
        t = im + y;
        cim = (t - im) - y;
        im = t;
    }
    cdouble value() const { return {re, im}; }
};

} // namespace detail

/// Ground-truth field by direct quadrature of the Rayleigh-Sommerfeld
/// integral (midpoint rule, pixel-center samples). Zero-valued source
/// samples are skipped; the work guard counts actual kernel evaluations.
inline ComplexField rs_direct(const ComplexField& field, const OpticalConfig& cfg,
                              OracleBudget budget = {}) {
    validate_config(cfg);
    if (!(field.grid == cfg.grid)) throw std::invalid_argument("rs_direct: field grid does not match config");
    if (cfg.distance == 0.0) throw std::invalid_argument("rs_direct: singular kernel at z = 0");

    const GridSpec& g = field.grid;
    struct Source {
        double x, y;
        cdouble v;
    };
    std::vector<Source> sources;
    sources.reserve(field.data.size());
    for (int iy = 0; iy < g.n_y; ++iy)
        for (int ix = 0; ix < g.n_x; ++ix) {
            const cdouble v = field.at(ix, iy);
            if (v != cdouble{}) sources.push_back({g.coord_x(ix), g.coord_y(iy), v});
        }

    const std::uint64_t work = static_cast<std::uint64_t>(sources.size()) * g.sample_count();
    if (work > budget.max_work)
        throw resource_limit_error("rs_direct: " + std::to_string(work) +
                                   " kernel evaluations exceed the budget");

    const double k = cfg.wavenumber();
    const double z = cfg.distance;
    const bool one_d = g.n_y == 1;
    const double weight = one_d ? g.pitch : g.pitch * g.pitch;

    ComplexField out(g);
    const std::int64_t n_total = static_cast<std::int64_t>(g.sample_count());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t t = 0; t < n_total; ++t) {
        const int ix = static_cast<int>(t % g.n_x);
        const int iy = static_cast<int>(t / g.n_x);
        const double px = g.coord_x(ix);
        const double py = g.coord_y(iy);
        detail::KahanComplex sum;
        if (one_d) {
            for (const Source& s : sources) sum.add(s.v * detail::rs_kernel_1d(px - s.x, z, k));
        } else {
            for (const Source& s : sources)
                sum.add(s.v * detail::rs_kernel_2d(px - s.x, py - s.y, z, k));
        }
        out.data[static_cast<std::size_t>(t)] = sum.value() * weight;
    }
    return out;
}

/// Convolution-based propagation (three Fourier transforms): zero-pad,
/// sample the RS impulse response on the padded grid, and convolve.
/// Linear convolution within the source window is exact because the
/// padding covers every displacement the kernel can reach.
inline ComplexField propagate_conv(const ComplexField& field, const OpticalConfig& cfg) {
    validate_config(cfg);
    if (!(field.grid == cfg.grid))
        throw std::invalid_argument("propagate_conv: field grid does not match config");
    if (cfg.distance == 0.0) throw std::invalid_argument("propagate_conv: singular kernel at z = 0");

    ComplexField padded = zero_pad(field);
    const GridSpec& pg = padded.grid;
    const double k = cfg.wavenumber();
    const double z = cfg.distance;
    const bool one_d = pg.n_y == 1;
    const double weight = one_d ? pg.pitch : pg.pitch * pg.pitch;

    // Kernel sampled directly in DC-at-zero layout: index i maps to the
    // displacement i (i < n/2) or i - n (otherwise).
    auto wrap = [](int i, int n) { return i < (n + 1) / 2 ? i : i - n; };
    std::vector<cdouble> kernel(pg.sample_count());
    for (int iy = 0; iy < pg.n_y; ++iy) {
        const double dy = wrap(iy, pg.n_y) * pg.pitch;
        for (int ix = 0; ix < pg.n_x; ++ix) {
            const double dx = wrap(ix, pg.n_x) * pg.pitch;
            kernel[static_cast<std::size_t>(iy) * pg.n_x + ix] =
                (one_d ? detail::rs_kernel_1d(dx, z, k) : detail::rs_kernel_2d(dx, dy, z, k)) * weight;
        }
    }

    detail::raw_2d(padded.data, pg.n_x, pg.n_y, -1);
    detail::raw_2d(kernel, pg.n_x, pg.n_y, -1);
    for (std::size_t i = 0; i < padded.data.size(); ++i) padded.data[i] *= kernel[i];
    detail::raw_2d(padded.data, pg.n_x, pg.n_y, +1);
    const double scale = 1.0 / static_cast<double>(pg.sample_count());
    for (cdouble& v : padded.data) v *= scale;

    return crop_center(padded, field.grid.n_x, field.grid.n_y);
}

} // namespace ceas
