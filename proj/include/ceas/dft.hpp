#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ceas/errors.hpp"
#include "ceas/field.hpp"

namespace ceas {

/// One axis worth of nonuniform sample locations (meters in space,
/// cycles/m in frequency).
struct NonuniformPoints {
    std::vector<double> coords;
};

/// Requested relative tolerance for the fast nonuniform transforms.
struct TransformAccuracy {
    double epsilon = 1e-9;
};

inline void validate_accuracy(const TransformAccuracy& acc) {
    if (!(acc.epsilon > 0.0) || !(acc.epsilon < 1e-1))
        throw std::invalid_argument("TransformAccuracy: epsilon must be in (0, 1e-1)");
}

/// Direct-summation nonuniform DFT, the O(M*K) reference for the NUFFT:
///   out[m] = sum_j strengths[j] * exp(sign * i * 2*pi * x[j] * f[m])
/// Summation is plain left-to-right in f64 so results are reproducible.
/// Work above 2^26 kernel evaluations is refused.
inline std::vector<cdouble> dft_direct(const NonuniformPoints& sources,
                                       const std::vector<cdouble>& strengths,
                                       const NonuniformPoints& targets, int sign) {
    if (sources.coords.size() != strengths.size())
        throw std::invalid_argument("dft_direct: sources and strengths length mismatch");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("dft_direct: sign must be +1 or -1");
    const std::size_t m = sources.coords.size();
    const std::size_t k = targets.coords.size();
    if (m != 0 && k > (std::size_t{1} << 26) / m)
        throw resource_limit_error("dft_direct: M*K exceeds 2^26 kernel evaluations");

    const double two_pi = 2.0 * std::numbers::pi * sign;
    std::vector<cdouble> out(k);
    for (std::size_t t = 0; t < k; ++t) {
        const double f = targets.coords[t];
        cdouble sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double a = two_pi * sources.coords[j] * f;
            sum += strengths[j] * cdouble{std::cos(a), std::sin(a)};
        }
        out[t] = sum;
    }
    return out;
}

} // namespace ceas
