#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "ceas/bands.hpp"
#include "ceas/fft.hpp"
#include "ceas/methods.hpp"
#include "ceas/optics.hpp"

namespace ceas {

/// Discrete energy profile of an angular spectrum over nested frequency
/// bands [0, j*df]: per-band density S and the running energy E(j*df),
/// non-decreasing and closing to the Parseval energy. 1D spectra use the
/// one-sided convention (DC once, interior bins doubled, Nyquist once);
/// 2D spectra accumulate over concentric square bands.
struct SpectrumProfile {
    std::vector<double> freqs;
    std::vector<double> density;
    std::vector<double> cumulative;
    double f_interval = 0.0;

    double total() const { return cumulative.empty() ? 0.0 : cumulative.back(); }
};

namespace detail {

inline SpectrumProfile profile_from_centered_density(std::span<const double> dens, double f_interval) {
    if (dens.empty() || !(f_interval > 0.0))
        throw std::invalid_argument("energy_profile: empty spectrum or bad interval");
    const int n = static_cast<int>(dens.size());
    const int c = n / 2;
    const bool has_nyquist = n % 2 == 0 && n > 1;
    const int bins = has_nyquist ? c + 1 : c + (n % 2);
    SpectrumProfile p;
    p.f_interval = f_interval;
    p.freqs.resize(bins == 0 ? 1 : bins);
    p.density.resize(p.freqs.size());
    p.cumulative.resize(p.freqs.size());
    double sum = 0.0, comp = 0.0;
    for (std::size_t j = 0; j < p.freqs.size(); ++j) {
        p.freqs[j] = static_cast<double>(j) * f_interval;
        double s;
        double w;
        if (has_nyquist && static_cast<int>(j) == c) {
            s = dens[0]; // the -f_max bin, attributed once to +f_max
            w = 1.0;
        } else {
            s = dens[static_cast<std::size_t>(c + static_cast<int>(j))];
            w = j == 0 ? 1.0 : 2.0;
        }
        p.density[j] = s;
        const double term = w * s * f_interval;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        p.cumulative[j] = sum;
    }
    return p;
}

/// Physically normalized spectrum of the zero-padded source:
/// A = pitch^d * centered bare DFT, on the padded lattice.
struct PaddedSpectrum {
    int n_x = 0, n_y = 0;
    double f_interval = 0.0; ///< 1/(padded_n_x * pitch)
    std::vector<cdouble> data;
};

inline PaddedSpectrum padded_physical_spectrum(const ComplexField& u0) {
    ComplexField padded = zero_pad(u0);
    detail::centered_2d(padded.data, padded.grid.n_x, padded.grid.n_y, -1);
    const int d = std::max(1, (u0.grid.n_x > 1 ? 1 : 0) + (u0.grid.n_y > 1 ? 1 : 0));
    const double scale = std::pow(u0.grid.pitch, d);
    for (cdouble& v : padded.data) v *= scale;
    const int n_axis = std::max(padded.grid.n_x, padded.grid.n_y);
    return PaddedSpectrum{padded.grid.n_x, padded.grid.n_y, 1.0 / (n_axis * u0.grid.pitch),
                          std::move(padded.data)};
}

/// Cumulative energy over concentric square frequency bands
/// max(|fx|,|fy|) <= j*df, the 2D counterpart of the one-sided 1D profile.
/// Every bin is counted exactly once, so the cumulative closes to the full
/// Parseval sum for any source.
inline SpectrumProfile square_band_profile(const PaddedSpectrum& sp) {
    const int cx = sp.n_x / 2, cy = sp.n_y / 2;
    const int bins = std::max(cx, cy) + 1;
    std::vector<double> ring(static_cast<std::size_t>(bins), 0.0);
    for (int iy = 0; iy < sp.n_y; ++iy) {
        const int my = std::abs(iy - cy);
        for (int ix = 0; ix < sp.n_x; ++ix) {
            const int j = std::min(std::max(std::abs(ix - cx), my), bins - 1);
            ring[static_cast<std::size_t>(j)] += std::norm(sp.data[static_cast<std::size_t>(iy) * sp.n_x + ix]);
        }
    }
    SpectrumProfile p;
    p.f_interval = sp.f_interval;
    p.freqs.resize(ring.size());
    p.density.resize(ring.size());
    p.cumulative.resize(ring.size());
    const double df2 = sp.f_interval * sp.f_interval;
    double sum = 0.0, comp = 0.0;
    for (std::size_t j = 0; j < ring.size(); ++j) {
        p.freqs[j] = static_cast<double>(j) * sp.f_interval;
        p.density[j] = ring[j] * sp.f_interval;
        const double term = ring[j] * df2;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        p.cumulative[j] = sum;
    }
    return p;
}

} // namespace detail

/// Energy profile of a centered one-dimensional spectrum (physical
/// normalization, DC at index n/2).
inline SpectrumProfile energy_profile(std::span<const cdouble> spectrum, double f_interval) {
    std::vector<double> dens(spectrum.size());
    for (std::size_t i = 0; i < dens.size(); ++i) dens[i] = std::norm(spectrum[i]);
    return detail::profile_from_centered_density(dens, f_interval);
}

/// Energy profile of the zero-padded source spectrum: one-sided for 1D
/// windows, concentric square bands for 2D windows. Its cumulative curve
/// drives the controllable-energy boundary search.
inline SpectrumProfile padded_energy_profile(const ComplexField& u0) {
    detail::PaddedSpectrum sp = detail::padded_physical_spectrum(u0);
    if (sp.n_x == 1 || sp.n_y == 1) {
        std::vector<double> dens(sp.data.size());
        for (std::size_t i = 0; i < dens.size(); ++i) dens[i] = std::norm(sp.data[i]);
        return detail::profile_from_centered_density(dens, sp.f_interval);
    }
    return detail::square_band_profile(sp);
}

/// Smallest lattice frequency j*df whose enclosed energy reaches the
/// requested fraction of the reference band energy. The scan starts at
/// f_BL for the band-extended reference and at zero for the band-limited
/// variant, which may compress the band below f_BL. Never exceeds f_max.
inline double search_fce(const SpectrumProfile& profile, const OpticalConfig& cfg, double eta,
                         CeReference reference_mode) {
    if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("search_fce: eta must be in [0, 1]");
    if (profile.cumulative.empty() || !(profile.total() > 0.0))
        throw std::invalid_argument("search_fce: empty or zero-energy spectrum");
    const double df = profile.f_interval;
    const long long last = static_cast<long long>(profile.cumulative.size()) - 1;
    auto bin_of = [&](double f) {
        return std::clamp(detail::ceil_tol(f / df), 0ll, last);
    };
    const long long j_bl = bin_of(boundary_bl(cfg));
    const long long j_ref = reference_mode == CeReference::band_extended ? bin_of(boundary_be(cfg)) : j_bl;
    const double e_ref = profile.cumulative[static_cast<std::size_t>(j_ref)];
    long long j = reference_mode == CeReference::band_extended ? j_bl : 0;
    while (j < last && profile.cumulative[static_cast<std::size_t>(j)] < eta * e_ref) ++j;
    return static_cast<double>(j) * df;
}

} // namespace ceas
