#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "ceas/dft.hpp"
#include "ceas/errors.hpp"
#include "ceas/fft.hpp"

namespace ceas {

/// Type-3 nonuniform FFT between arbitrary spatial points and arbitrary
/// frequency points, out[m] = sum_j c[j] * exp(sign * i*2*pi * x[j]*f[m]).
///
/// Structure: Gaussian-kernel spreading of the sources onto an oversampled
/// uniform grid (oversampling 2 on both the spatial and spectral side), an
/// FFT of that grid, and Gaussian interpolation onto the targets, with the
/// two kernels deconvolved analytically. Kernel widths follow from the
/// requested tolerance:
///
///   eps' = eps/4 per stage, L = (8/7) * (ln(1/eps') + 3)
///   spread half-width   w_x = ceil(sqrt(2)*L/pi) + 1   grid points
///   interp half-width   w_f = ceil(4*L/(3*pi)) + 1     grid points
///
/// Plans are immutable; execute() is const and allocates its own scratch,
/// so concurrent execution of one plan from several threads is safe.
class Nufft3Plan {
public:
    Nufft3Plan(const NonuniformPoints& sources, const NonuniformPoints& targets, int sign,
               TransformAccuracy acc = {})
        : sign_(sign), m_(sources.coords.size()), k_(targets.coords.size()) {
        validate_accuracy(acc);
        if (sign != 1 && sign != -1) throw std::invalid_argument("Nufft3Plan: sign must be +1 or -1");
        for (double v : sources.coords)
            if (!std::isfinite(v)) throw std::invalid_argument("Nufft3Plan: non-finite source coordinate");
        for (double v : targets.coords)
            if (!std::isfinite(v)) throw std::invalid_argument("Nufft3Plan: non-finite target coordinate");
        if (m_ == 0 || k_ == 0) {
            mode_ = Mode::empty;
            return;
        }

        auto [src_lo, src_hi] = std::minmax_element(sources.coords.begin(), sources.coords.end());
        auto [tgt_lo, tgt_hi] = std::minmax_element(targets.coords.begin(), targets.coords.end());
        x_center_ = 0.5 * (*src_lo + *src_hi);
        f_center_ = 0.5 * (*tgt_lo + *tgt_hi);
        const double x_half = 0.5 * (*src_hi - *src_lo);
        const double f_half = 0.5 * (*tgt_hi - *tgt_lo);

        // Degenerate extents have exact closed forms; small problems go
        // through exact direct summation.
        if (x_half == 0.0 || f_half == 0.0 || static_cast<double>(m_) * static_cast<double>(k_) <= 32768.0) {
            mode_ = Mode::direct;
            all_sources_equal_ = x_half == 0.0;
            all_targets_equal_ = f_half == 0.0;
            src_x_ = sources.coords;
            tgt_f_ = targets.coords;
            return;
        }

        mode_ = Mode::fast;
        const double eps_stage = std::clamp(acc.epsilon / 4.0, 1e-13, 2.5e-2);
        const double big_l = (8.0 / 7.0) * (std::log(1.0 / eps_stage) + 3.0);
        w_x_ = static_cast<int>(std::ceil(std::numbers::sqrt2 * big_l / std::numbers::pi)) + 1;
        w_f_ = static_cast<int>(std::ceil(4.0 * big_l / (3.0 * std::numbers::pi))) + 1;

        // Solve for the fine grid: 1/(2h) = 2*(F + w_f*d_eta), n*h = 2*(2X + 2*w_x*h).
        const std::size_t n_min = detail::next_pow2(static_cast<std::size_t>(4 * (w_x_ + w_f_) + 32));
        double d_eta = 0.0;
        for (int pass = 0; pass < 4; ++pass) {
            h_ = 1.0 / (4.0 * (f_half + w_f_ * d_eta));
            const double length = 2.0 * (2.0 * x_half + 2.0 * w_x_ * h_);
            std::size_t n = detail::next_pow2(static_cast<std::size_t>(std::ceil(length / h_)));
            n_ = std::max(n, n_min);
            if (n_ > (std::size_t{1} << 24))
                throw resource_limit_error("Nufft3Plan: extent*bandwidth product too large");
            d_eta = 1.0 / (static_cast<double>(n_) * h_);
        }
        d_eta_ = d_eta;

        const double beta_tau = 2.0 * big_l * h_ * h_;                 // spectrum decay of the space kernel
        const double alpha_x = std::numbers::pi * std::numbers::pi / (2.0 * big_l * h_ * h_);
        const double rho = (w_f_ * d_eta_) * (w_f_ * d_eta_) / (4.0 * big_l);
        const double alpha_f = 1.0 / (4.0 * rho);
        const double four_pi2_rho = 4.0 * std::numbers::pi * std::numbers::pi * rho;
        // h*d_eta / (sqrt(4*pi*rho)*sqrt(4*pi*tau)) with tau = beta_tau/(4*pi^2)
        const double scale = h_ * d_eta_ / (2.0 * std::sqrt(rho * beta_tau));
        fft_ = std::make_shared<detail::Dft1d>(n_);

        const double two_pi = 2.0 * std::numbers::pi;
        const int half_n = static_cast<int>(n_) / 2;

        // Per-source spreading rows and centering phases.
        src_center_.resize(m_);
        src_kernel_.resize(m_ * static_cast<std::size_t>(2 * w_x_ + 1));
        src_phase_.resize(m_);
        for (std::size_t j = 0; j < m_; ++j) {
            const double xp = sources.coords[j] - x_center_;
            const int l0 = static_cast<int>(std::lround(xp / h_)) + half_n;
            src_center_[j] = l0;
            double* row = &src_kernel_[j * static_cast<std::size_t>(2 * w_x_ + 1)];
            for (int t = -w_x_; t <= w_x_; ++t) {
                const double d = (l0 + t - half_n) * h_ - xp;
                row[t + w_x_] = std::exp(-alpha_x * d * d);
            }
            const double a = sign_ * two_pi * xp * f_center_;
            src_phase_[j] = {std::cos(a), std::sin(a)};
        }

        // Fine-grid premultiplier: deconvolution of the interpolation kernel.
        premult_.resize(n_);
        for (std::size_t l = 0; l < n_; ++l) {
            const double xi = (static_cast<int>(l) - half_n) * h_;
            premult_[l] = std::exp(four_pi2_rho * xi * xi);
        }

        // Per-target interpolation rows, deconvolution and centering phases.
        tgt_center_.resize(k_);
        tgt_kernel_.resize(k_ * static_cast<std::size_t>(2 * w_f_ + 1));
        tgt_factor_.resize(k_);
        for (std::size_t t = 0; t < k_; ++t) {
            const double fp = targets.coords[t] - f_center_;
            const int p0 = static_cast<int>(std::lround(fp / d_eta_)) + half_n;
            tgt_center_[t] = p0;
            double* row = &tgt_kernel_[t * static_cast<std::size_t>(2 * w_f_ + 1)];
            for (int s = -w_f_; s <= w_f_; ++s) {
                const double d = (p0 + s - half_n) * d_eta_ - fp;
                row[s + w_f_] = std::exp(-alpha_f * d * d);
            }
            const double a = sign_ * two_pi * x_center_ * targets.coords[t];
            tgt_factor_[t] = scale * std::exp(beta_tau * fp * fp) * cdouble{std::cos(a), std::sin(a)};
        }
    }

    std::size_t source_count() const { return m_; }
    std::size_t target_count() const { return k_; }

    void execute(std::span<const cdouble> strengths, std::span<cdouble> out) const {
        if (strengths.size() != m_ || out.size() != k_)
            throw std::invalid_argument("Nufft3Plan::execute: size mismatch");
        if (mode_ == Mode::empty) {
            std::fill(out.begin(), out.end(), cdouble{});
            return;
        }
        if (mode_ == Mode::direct) {
            const double two_pi = 2.0 * std::numbers::pi * sign_;
            if (all_sources_equal_) {
                cdouble total = 0.0;
                for (std::size_t j = 0; j < m_; ++j) total += strengths[j];
                for (std::size_t t = 0; t < k_; ++t) {
                    const double a = two_pi * x_center_ * tgt_f_[t];
                    out[t] = total * cdouble{std::cos(a), std::sin(a)};
                }
            } else if (all_targets_equal_) {
                cdouble sum = 0.0;
                for (std::size_t j = 0; j < m_; ++j) {
                    const double a = two_pi * src_x_[j] * tgt_f_[0];
                    sum += strengths[j] * cdouble{std::cos(a), std::sin(a)};
                }
                std::fill(out.begin(), out.end(), sum);
            } else {
                for (std::size_t t = 0; t < k_; ++t) {
                    cdouble sum = 0.0;
                    for (std::size_t j = 0; j < m_; ++j) {
                        const double a = two_pi * src_x_[j] * tgt_f_[t];
                        sum += strengths[j] * cdouble{std::cos(a), std::sin(a)};
                    }
                    out[t] = sum;
                }
            }
            return;
        }

        std::vector<cdouble> fine(n_, cdouble{});
        for (std::size_t j = 0; j < m_; ++j) {
            const cdouble c = strengths[j] * src_phase_[j];
            const double* row = &src_kernel_[j * static_cast<std::size_t>(2 * w_x_ + 1)];
            cdouble* dst = &fine[static_cast<std::size_t>(src_center_[j] - w_x_)];
            for (int t = 0; t <= 2 * w_x_; ++t) dst[t] += c * row[t];
        }
        for (std::size_t l = 0; l < n_; ++l) fine[l] *= premult_[l];

        std::vector<cdouble> scratch;
        detail::centered_line(*fft_, fine.data(), sign_, scratch);

        for (std::size_t t = 0; t < k_; ++t) {
            const double* row = &tgt_kernel_[t * static_cast<std::size_t>(2 * w_f_ + 1)];
            const cdouble* src = &fine[static_cast<std::size_t>(tgt_center_[t] - w_f_)];
            cdouble acc = 0.0;
            for (int s = 0; s <= 2 * w_f_; ++s) acc += src[s] * row[s];
            out[t] = acc * tgt_factor_[t];
        }
    }

    std::vector<cdouble> execute(const std::vector<cdouble>& strengths) const {
        std::vector<cdouble> out(k_);
        execute(std::span<const cdouble>(strengths), std::span<cdouble>(out));
        return out;
    }

private:
    enum class Mode { empty, direct, fast };

    int sign_ = -1;
    std::size_t m_ = 0, k_ = 0;
    Mode mode_ = Mode::empty;

    // direct path
    bool all_sources_equal_ = false, all_targets_equal_ = false;
    std::vector<double> src_x_, tgt_f_;

    // fast path
    double x_center_ = 0.0, f_center_ = 0.0;
    double h_ = 0.0, d_eta_ = 0.0;
    std::size_t n_ = 0;
    int w_x_ = 0, w_f_ = 0;
    std::shared_ptr<detail::Dft1d> fft_;
    std::vector<int> src_center_, tgt_center_;
    std::vector<double> src_kernel_, tgt_kernel_, premult_;
    std::vector<cdouble> src_phase_, tgt_factor_;
};

/// out[m] = sum_j strengths[j] * exp(-i*2*pi*x[j]*f[m]), within acc.epsilon
/// relative of the direct sum.
inline std::vector<cdouble> nufft3_forward(const NonuniformPoints& sources,
                                           const std::vector<cdouble>& strengths,
                                           const NonuniformPoints& targets, TransformAccuracy acc = {}) {
    return Nufft3Plan(sources, targets, -1, acc).execute(strengths);
}

/// out[i] = sum_m quad_weight[m] * spectrum[m] * exp(+i*2*pi*f[m]*x[i]).
/// The weight carries the frequency-quadrature step so the call approximates
/// the inverse Fourier integral.
inline std::vector<cdouble> nufft3_inverse(const NonuniformPoints& freqs,
                                           const std::vector<cdouble>& spectrum,
                                           const NonuniformPoints& targets,
                                           const std::vector<double>& quad_weight,
                                           TransformAccuracy acc = {}) {
    if (quad_weight.size() != spectrum.size())
        throw std::invalid_argument("nufft3_inverse: weight/spectrum length mismatch");
    std::vector<cdouble> weighted(spectrum.size());
    for (std::size_t i = 0; i < spectrum.size(); ++i) weighted[i] = spectrum[i] * quad_weight[i];
    return Nufft3Plan(freqs, targets, +1, acc).execute(weighted);
}

inline std::vector<cdouble> nufft3_inverse(const NonuniformPoints& freqs,
                                           const std::vector<cdouble>& spectrum,
                                           const NonuniformPoints& targets, double quad_weight,
                                           TransformAccuracy acc = {}) {
    return nufft3_inverse(freqs, spectrum, targets,
                          std::vector<double>(spectrum.size(), quad_weight), acc);
}

} // namespace ceas
