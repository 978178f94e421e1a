#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ceas/field.hpp"

namespace ceas {

enum class FftDirection { forward, inverse };

namespace detail {

/// Iterative radix-2 complex FFT with a cached twiddle table. Sizes are
/// powers of two; sign -1 is the forward transform. No normalization.
class Radix2Fft {
public:
    explicit Radix2Fft(std::size_t n) : n_(n) {
        if (n == 0 || (n & (n - 1)) != 0)
            throw std::invalid_argument("Radix2Fft: size must be a power of two");
        twiddles_.resize(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k) {
            double a = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            twiddles_[k] = {std::cos(a), std::sin(a)};
        }
    }

    std::size_t size() const { return n_; }

    void run(cdouble* data, int sign) const {
        const std::size_t n = n_;
        if (n == 1) return;
        // bit-reversal permutation
        for (std::size_t i = 1, j = 0; i < n; ++i) {
            std::size_t bit = n >> 1;
            for (; j & bit; bit >>= 1) j ^= bit;
            j ^= bit;
            if (i < j) std::swap(data[i], data[j]);
        }
        for (std::size_t len = 2; len <= n; len <<= 1) {
            const std::size_t step = n / len;
            for (std::size_t i = 0; i < n; i += len) {
                for (std::size_t k = 0; k < len / 2; ++k) {
                    cdouble w = twiddles_[k * step];
                    if (sign > 0) w = std::conj(w);
                    cdouble u = data[i + k];
                    cdouble v = data[i + k + len / 2] * w;
                    data[i + k] = u + v;
                    data[i + k + len / 2] = u - v;
                }
            }
        }
    }

private:
    std::size_t n_;
    std::vector<cdouble> twiddles_;
};

inline std::size_t next_pow2(std::size_t n) { return std::bit_ceil(n); }

/// Unnormalized DFT of arbitrary length; power-of-two sizes go straight to
/// radix-2, others through Bluestein's chirp-z reduction.
class Dft1d {
public:
    explicit Dft1d(std::size_t n)
        : n_(n), pow2_(n != 0 && (n & (n - 1)) == 0), fft_(pow2_ ? n : next_pow2(2 * n - 1)) {
        if (n == 0) throw std::invalid_argument("Dft1d: size must be positive");
        if (pow2_) return;
        const std::size_t m = fft_.size();
        chirp_.resize(n_);
        bhat_fwd_.assign(m, cdouble{});
        // chirp_[j] = exp(-i*pi*j^2/n); reduce j^2 mod 2n so the angle stays small
        for (std::size_t j = 0; j < n_; ++j) {
            std::uint64_t q = (static_cast<std::uint64_t>(j) * j) % (2 * n_);
            double a = -std::numbers::pi * static_cast<double>(q) / static_cast<double>(n_);
            chirp_[j] = {std::cos(a), std::sin(a)};
        }
        for (std::size_t j = 0; j < n_; ++j) {
            cdouble b = std::conj(chirp_[j]);
            bhat_fwd_[j] = b;
            if (j != 0) bhat_fwd_[m - j] = b;
        }
        fft_.run(bhat_fwd_.data(), -1);
    }

    std::size_t size() const { return n_; }

    void run(cdouble* data, int sign) const {
        if (pow2_) {
            fft_.run(data, sign);
            return;
        }
        const std::size_t m = fft_.size();
        std::vector<cdouble> a(m, cdouble{});
        for (std::size_t j = 0; j < n_; ++j)
            a[j] = data[j] * (sign < 0 ? chirp_[j] : std::conj(chirp_[j]));
        fft_.run(a.data(), -1);
        if (sign < 0) {
            for (std::size_t j = 0; j < m; ++j) a[j] *= bhat_fwd_[j];
        } else {
            for (std::size_t j = 0; j < m; ++j) a[j] *= std::conj(bhat_fwd_[j]);
        }
        fft_.run(a.data(), +1);
        const double inv_m = 1.0 / static_cast<double>(m);
        for (std::size_t k = 0; k < n_; ++k) {
            cdouble c = a[k] * inv_m;
            data[k] = c * (sign < 0 ? chirp_[k] : std::conj(chirp_[k]));
        }
    }

private:
    std::size_t n_;
    bool pow2_;
    Radix2Fft fft_;
    std::vector<cdouble> chirp_;
    std::vector<cdouble> bhat_fwd_; // FFT of the Bluestein kernel (forward sign)
};

inline void fftshift(cdouble* data, std::size_t n, std::vector<cdouble>& scratch) {
    const std::size_t c = n / 2;
    if (c == 0) return;
    scratch.assign(data, data + n);
    // output(i) = input((i - c) mod n): DC moves to the center
    for (std::size_t i = 0; i < n; ++i) data[i] = scratch[(i + n - c) % n];
}

inline void ifftshift(cdouble* data, std::size_t n, std::vector<cdouble>& scratch) {
    const std::size_t c = n / 2;
    if (c == 0) return;
    scratch.assign(data, data + n);
    for (std::size_t i = 0; i < n; ++i) data[i] = scratch[(i + c) % n];
}

/// Centered unnormalized DFT along one contiguous line:
///   out[m] = sum_j in[j] * exp(sign * 2*pi*i * (j - n/2)(m - n/2) / n)
inline void centered_line(const Dft1d& plan, cdouble* data, int sign, std::vector<cdouble>& scratch) {
    ifftshift(data, plan.size(), scratch);
    plan.run(data, sign);
    fftshift(data, plan.size(), scratch);
}

inline void transpose(const std::vector<cdouble>& in, std::vector<cdouble>& out, std::size_t rows,
                      std::size_t cols) {
    out.resize(in.size());
    constexpr std::size_t block = 32;
    for (std::size_t r0 = 0; r0 < rows; r0 += block)
        for (std::size_t c0 = 0; c0 < cols; c0 += block)
            for (std::size_t r = r0; r < std::min(rows, r0 + block); ++r)
                for (std::size_t c = c0; c < std::min(cols, c0 + block); ++c)
                    out[c * rows + r] = in[r * cols + c];
}

/// Unnormalized 2D DFT of row-major data, DC at index 0 (both domains).
inline void raw_2d(std::vector<cdouble>& data, int n_x, int n_y, int sign) {
    if (n_x > 1) {
        Dft1d plan(static_cast<std::size_t>(n_x));
        for (int iy = 0; iy < n_y; ++iy)
            plan.run(data.data() + static_cast<std::size_t>(iy) * n_x, sign);
    }
    if (n_y > 1) {
        std::vector<cdouble> t;
        transpose(data, t, static_cast<std::size_t>(n_y), static_cast<std::size_t>(n_x));
        Dft1d plan(static_cast<std::size_t>(n_y));
        for (int ix = 0; ix < n_x; ++ix)
            plan.run(t.data() + static_cast<std::size_t>(ix) * n_y, sign);
        transpose(t, data, static_cast<std::size_t>(n_x), static_cast<std::size_t>(n_y));
    }
}

/// Centered unnormalized 2D DFT of row-major data (n_y rows of n_x).
inline void centered_2d(std::vector<cdouble>& data, int n_x, int n_y, int sign) {
    std::vector<cdouble> scratch;
    if (n_x > 1) {
        Dft1d plan(static_cast<std::size_t>(n_x));
        for (int iy = 0; iy < n_y; ++iy)
            centered_line(plan, data.data() + static_cast<std::size_t>(iy) * n_x, sign, scratch);
    }
    if (n_y > 1) {
        std::vector<cdouble> t;
        transpose(data, t, static_cast<std::size_t>(n_y), static_cast<std::size_t>(n_x));
        Dft1d plan(static_cast<std::size_t>(n_y));
        for (int ix = 0; ix < n_x; ++ix)
            centered_line(plan, t.data() + static_cast<std::size_t>(ix) * n_y, sign, scratch);
        transpose(t, data, static_cast<std::size_t>(n_x), static_cast<std::size_t>(n_y));
    }
}

} // namespace detail

/// Unitary discrete Fourier transform with the DC bin at the grid center
/// (both domains), so that fft_uniform(fft_uniform(u, forward), inverse) == u.
inline ComplexField fft_uniform(const ComplexField& field, FftDirection direction) {
    ComplexField out = field;
    const int sign = direction == FftDirection::forward ? -1 : +1;
    detail::centered_2d(out.data, out.grid.n_x, out.grid.n_y, sign);
    const double scale = 1.0 / std::sqrt(static_cast<double>(field.grid.sample_count()));
    for (cdouble& v : out.data) v *= scale;
    return out;
}

} // namespace ceas
