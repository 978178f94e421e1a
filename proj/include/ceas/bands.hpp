#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ceas/optics.hpp"

namespace ceas {

namespace detail {

// Ceiling with a small absolute/relative slack so values that are integers
// up to floating-point noise do not round up one sample.
inline long long ceil_tol(double x) {
    return static_cast<long long>(std::ceil(x - std::max(1e-9, std::abs(x) * 1e-12)));
}

// Frequency-domain sample counts are kept even so the band is a symmetric
// centered lattice.
inline int even_count(double x, int floor_at = 1) {
    long long n = std::max<long long>(ceil_tol(x), floor_at);
    if (n % 2 != 0) ++n;
    return static_cast<int>(n);
}

} // namespace detail

/// Alias-free frequency boundary at the native padded-grid interval:
/// f_BL = N*pitch/(|z|*lambda), clamped to f_max below the critical distance.
inline double boundary_bl(const OpticalConfig& cfg) {
    validate_config(cfg);
    if (cfg.distance == 0.0) throw std::invalid_argument("boundary_bl: distance must be nonzero");
    const double f = cfg.grid.n_x * cfg.grid.pitch / (std::abs(cfg.distance) * cfg.wavelength);
    return std::min(f, cfg.grid.f_max());
}

/// Valid frequency samples at the native interval:
/// N_BL = ceil(4*(N*pitch)^2/(|z|*lambda)), even, capped at 2N.
inline int samples_bl(const OpticalConfig& cfg) {
    validate_config(cfg);
    if (cfg.distance == 0.0) throw std::invalid_argument("samples_bl: distance must be nonzero");
    const double w = cfg.grid.n_x * cfg.grid.pitch;
    const double raw = 4.0 * w * w / (std::abs(cfg.distance) * cfg.wavelength);
    return std::min(detail::even_count(raw), 2 * cfg.grid.n_x);
}

/// Band-extended boundary f_BE = sqrt(N/(2*lambda*|z|)), clamped to f_max
/// below the critical distance. Back-propagation uses |z|.
inline double boundary_be(const OpticalConfig& cfg) {
    validate_config(cfg);
    if (cfg.distance == 0.0) throw std::invalid_argument("boundary_be: distance must be nonzero");
    const double f = std::sqrt(cfg.grid.n_x / (2.0 * cfg.wavelength * std::abs(cfg.distance)));
    return std::min(f, cfg.grid.f_max());
}

/// Sample count required to keep the transfer function alias-free on a
/// band of half-width f_ce: N_CE = ceil(4*lambda*|z|*f_ce^2), even, >= 2.
inline int samples_ce(const OpticalConfig& cfg, double f_ce) {
    validate_config(cfg);
    if (!(f_ce > 0.0) || f_ce > cfg.grid.f_max() * (1.0 + 1e-12))
        throw std::invalid_argument("samples_ce: f_ce must be in (0, f_max]");
    const double raw = 4.0 * cfg.wavelength * std::abs(cfg.distance) * f_ce * f_ce;
    return detail::even_count(raw);
}

} // namespace ceas
