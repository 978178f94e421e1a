#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ceas/bands.hpp"
#include "ceas/fft.hpp"
#include "ceas/field.hpp"
#include "ceas/methods.hpp"
#include "ceas/nufft.hpp"
#include "ceas/optics.hpp"
#include "ceas/spectrum.hpp"

namespace ceas {

/// A resolved sampling strategy for one (method, z) pair: frequency band
/// half-width, per-axis sample count and interval of the frequency lattice.
struct PropagationPlan {
    Method method = Method::as;
    double f_boundary = 0.0; ///< half-width of the valid band [cycles/m]
    int n_freq = 0;          ///< frequency samples per axis
    double f_interval = 0.0; ///< frequency lattice step [cycles/m]
    std::optional<double> eta;
    std::optional<CeReference> reference_mode;
};

namespace detail {

inline void require_square_or_1d(const GridSpec& g, const char* who) {
    if (g.n_y != 1 && g.n_y != g.n_x)
        throw std::invalid_argument(std::string(who) + ": grid must be square or one-dimensional");
}

} // namespace detail

/// Resolve the sampling strategy of a non-CE method:
///   as       -> (f_max, 2N, df)
///   bl       -> (f_BL,  2N, df)        H zeroed beyond f_BL
///   adaptive -> (f_BL,  N_BL, df)
///   be       -> (f_BE,  2N, f_BE/N)
inline PropagationPlan make_plan(Method method, const OpticalConfig& cfg) {
    validate_config(cfg);
    detail::require_square_or_1d(cfg.grid, "make_plan");
    const int n = cfg.grid.n_x;
    const int padded = detail::padded_size(n);
    const double df = 1.0 / (padded * cfg.grid.pitch);
    switch (method) {
    case Method::as:
        return {Method::as, cfg.grid.f_max(), padded, df, {}, {}};
    case Method::bl:
        return {Method::bl, boundary_bl(cfg), padded, df, {}, {}};
    case Method::adaptive:
        return {Method::adaptive, boundary_bl(cfg), samples_bl(cfg), df, {}, {}};
    case Method::be: {
        const double f_be = boundary_be(cfg);
        return {Method::be, f_be, padded, f_be / n, {}, {}};
    }
    case Method::ce:
        throw std::invalid_argument("make_plan: the CE method needs make_plan_ce (eta and source spectrum)");
    }
    throw std::invalid_argument("make_plan: unknown method");
}

/// Resolve the controllable-energy strategy for a given source: run the
/// boundary search on the padded energy profile (square frequency bands in
/// 2D) and derive (N_CE, 2*f_CE/N_CE).
inline PropagationPlan make_plan_ce(const OpticalConfig& cfg, const ComplexField& source, double eta,
                                    CeReference reference_mode = CeReference::band_extended) {
    validate_config(cfg);
    detail::require_square_or_1d(cfg.grid, "make_plan_ce");
    if (!(source.grid == cfg.grid))
        throw std::invalid_argument("make_plan_ce: source grid does not match config");
    const SpectrumProfile profile = padded_energy_profile(source);
    double f_ce = search_fce(profile, cfg, eta, reference_mode);
    f_ce = std::max(f_ce, profile.f_interval); // at least one lattice bin
    const int n_ce = samples_ce(cfg, f_ce);
    return {Method::ce, f_ce, n_ce, 2.0 * f_ce / n_ce, eta, reference_mode};
}

namespace detail {

inline std::vector<double> freq_lattice(int n, double step) {
    std::vector<double> f(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) f[m] = (m - n / 2) * step;
    return f;
}

/// Multiply a row-major (ny x nx) spectrum by H sampled on the lattice,
/// zeroing everything beyond the band boundary per axis.
inline void apply_transfer(std::vector<cdouble>& spec, const OpticalConfig& cfg,
                           const std::vector<double>& fx, const std::vector<double>& fy,
                           double f_boundary) {
    const double bound = f_boundary * (1.0 + 1e-12);
    for (std::size_t iy = 0; iy < fy.size(); ++iy) {
        const double fyv = fy[iy];
        const bool kill_row = std::abs(fyv) > bound;
        cdouble* row = &spec[iy * fx.size()];
        for (std::size_t ix = 0; ix < fx.size(); ++ix) {
            if (kill_row || std::abs(fx[ix]) > bound)
                row[ix] = 0.0;
            else
                row[ix] *= transfer_function(cfg, fx[ix], fyv);
        }
    }
}

inline ComplexField propagate_padded_fft(const ComplexField& u0, const OpticalConfig& cfg,
                                         const PropagationPlan& plan) {
    ComplexField padded = zero_pad(u0);
    if (plan.n_freq != padded.grid.n_x)
        throw std::invalid_argument("propagate: plan sample count does not match the padded grid");
    ComplexField spec = fft_uniform(padded, FftDirection::forward);
    const std::vector<double> fx =
        freq_lattice(padded.grid.n_x, 1.0 / (padded.grid.n_x * padded.grid.pitch));
    const std::vector<double> fy =
        padded.grid.n_y == 1 ? std::vector<double>{0.0}
                             : freq_lattice(padded.grid.n_y, 1.0 / (padded.grid.n_y * padded.grid.pitch));
    apply_transfer(spec.data, cfg, fx, fy, plan.f_boundary);
    ComplexField out = fft_uniform(spec, FftDirection::inverse);
    return crop_center(out, u0.grid.n_x, u0.grid.n_y);
}

inline ComplexField propagate_nufft(const ComplexField& u0, const OpticalConfig& cfg,
                                    const PropagationPlan& plan, TransformAccuracy acc) {
    const GridSpec& g = u0.grid;
    const int n = plan.n_freq;
    const double step = plan.f_interval;
    if (!(step > 0.0) || std::abs(0.5 * n * step - plan.f_boundary) > step * (1.0 + 1e-9))
        throw std::invalid_argument("propagate: plan frequency lattice is inconsistent with its boundary");

    NonuniformPoints xs, ys, fpts;
    xs.coords.resize(g.n_x);
    for (int i = 0; i < g.n_x; ++i) xs.coords[i] = g.coord_x(i);
    fpts.coords = freq_lattice(n, step);
    const bool two_d = g.n_y > 1;
    if (two_d) {
        ys.coords.resize(g.n_y);
        for (int j = 0; j < g.n_y; ++j) ys.coords[j] = g.coord_y(j);
    }

    const std::size_t nn = static_cast<std::size_t>(n);
    // forward: uniform spatial rows -> plan lattice
    Nufft3Plan fwd_x(xs, fpts, -1, acc);
    std::vector<cdouble> spec(static_cast<std::size_t>(g.n_y) * nn);
    for (int iy = 0; iy < g.n_y; ++iy)
        fwd_x.execute(std::span<const cdouble>(&u0.data[static_cast<std::size_t>(iy) * g.n_x],
                                               static_cast<std::size_t>(g.n_x)),
                      std::span<cdouble>(&spec[static_cast<std::size_t>(iy) * nn], nn));
    if (two_d) {
        Nufft3Plan fwd_y(ys, fpts, -1, acc);
        std::vector<cdouble> t;
        transpose(spec, t, static_cast<std::size_t>(g.n_y), nn); // -> [mx][iy]
        std::vector<cdouble> st(nn * nn);                        // [mx][my]
        for (std::size_t mx = 0; mx < nn; ++mx)
            fwd_y.execute(std::span<const cdouble>(&t[mx * g.n_y], static_cast<std::size_t>(g.n_y)),
                          std::span<cdouble>(&st[mx * nn], nn));
        transpose(st, spec, nn, nn); // -> [my][mx]
    }

    const std::vector<double> fy = two_d ? fpts.coords : std::vector<double>{0.0};
    apply_transfer(spec, cfg, fpts.coords, fy, plan.f_boundary);

    // inverse: plan lattice -> uniform spatial window, with the frequency
    // quadrature weight per axis and the spatial step fixing normalization
    Nufft3Plan inv_x(fpts, xs, +1, acc);
    const std::size_t rows = two_d ? nn : 1;
    std::vector<cdouble> back(rows * static_cast<std::size_t>(g.n_x));
    for (std::size_t r = 0; r < rows; ++r)
        inv_x.execute(std::span<const cdouble>(&spec[r * nn], nn),
                      std::span<cdouble>(&back[r * static_cast<std::size_t>(g.n_x)],
                                         static_cast<std::size_t>(g.n_x)));
    ComplexField out(g);
    if (two_d) {
        Nufft3Plan inv_y(fpts, ys, +1, acc);
        std::vector<cdouble> t;
        transpose(back, t, nn, static_cast<std::size_t>(g.n_x)); // -> [ix][my]
        std::vector<cdouble> ot(static_cast<std::size_t>(g.n_x) * static_cast<std::size_t>(g.n_y));
        for (int ix = 0; ix < g.n_x; ++ix)
            inv_y.execute(std::span<const cdouble>(&t[static_cast<std::size_t>(ix) * nn], nn),
                          std::span<cdouble>(&ot[static_cast<std::size_t>(ix) * g.n_y],
                                             static_cast<std::size_t>(g.n_y)));
        transpose(ot, out.data, static_cast<std::size_t>(g.n_x), static_cast<std::size_t>(g.n_y));
    } else {
        out.data = std::move(back);
    }
    const int d = two_d ? 2 : 1;
    const double w = std::pow(step * g.pitch, d);
    for (cdouble& v : out.data) v *= w;
    return out;
}

} // namespace detail

/// Propagate the unpadded source window to the same-size target window at
/// the configured distance, using the strategy resolved in the plan.
inline ComplexField propagate(const ComplexField& u0, const OpticalConfig& cfg,
                              const PropagationPlan& plan, TransformAccuracy acc = {}) {
    validate_config(cfg);
    validate_accuracy(acc);
    if (!(u0.grid == cfg.grid))
        throw std::invalid_argument("propagate: field grid does not match config");
    detail::require_square_or_1d(cfg.grid, "propagate");
    if (plan.n_freq < 1 || !(plan.f_boundary > 0.0))
        throw std::invalid_argument("propagate: invalid plan");
    if (plan.method == Method::as || plan.method == Method::bl)
        return detail::propagate_padded_fft(u0, cfg, plan);
    return detail::propagate_nufft(u0, cfg, plan, acc);
}

} // namespace ceas
