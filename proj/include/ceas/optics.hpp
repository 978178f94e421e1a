#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "ceas/grid.hpp"

namespace ceas {

/// Wavelength, signed propagation distance (negative = back-propagation)
/// and the source window geometry.
struct OpticalConfig {
    double wavelength = 0.0; ///< lambda [m]
    double distance = 0.0;   ///< z [m], signed
    GridSpec grid;

    double wavenumber() const { return 2.0 * std::numbers::pi / wavelength; }
};

inline void validate_config(const OpticalConfig& cfg) {
    if (!(cfg.wavelength > 0.0)) throw std::invalid_argument("OpticalConfig: wavelength must be positive");
    if (cfg.grid.n_x < 1 || cfg.grid.n_y < 1 || !(cfg.grid.pitch > 0.0))
        throw std::invalid_argument("OpticalConfig: invalid grid");
}

/// Angular-spectrum transfer function
///   H(fx,fy) = exp(i*k*z*sqrt(1 - (lambda*fx)^2 - (lambda*fy)^2)),
/// zero on the evanescent band (lambda^2*(fx^2+fy^2) > 1). |H| = 1 on the
/// propagating band; z is signed.
inline std::complex<double> transfer_function(const OpticalConfig& cfg, double f_x, double f_y) {
    const double lx = cfg.wavelength * f_x;
    const double ly = cfg.wavelength * f_y;
    const double w2 = 1.0 - lx * lx - ly * ly;
    if (w2 < 0.0) return {0.0, 0.0};
    const double phase = cfg.wavenumber() * cfg.distance * std::sqrt(w2);
    return {std::cos(phase), std::sin(phase)};
}

/// z_c = 2*N*pitch^2/lambda with N the per-axis sample count of the
/// unpadded window; the sampled transfer function aliases beyond it.
inline double critical_distance(const GridSpec& grid, double wavelength) {
    if (grid.n_x < 1 || !(grid.pitch > 0.0)) throw std::invalid_argument("critical_distance: invalid grid");
    if (!(wavelength > 0.0)) throw std::invalid_argument("critical_distance: wavelength must be positive");
    return 2.0 * grid.n_x * grid.pitch * grid.pitch / wavelength;
}

} // namespace ceas
