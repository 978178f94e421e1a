#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ceas/field.hpp"
#include "ceas/methods.hpp"
#include "ceas/propagate.hpp"

namespace ceas {

/// SNR values are capped here (exact matches, phase-only differences).
inline constexpr double snr_cap_db = 300.0;

/// Amplitude-domain signal-to-noise ratio over the shared window:
///   10*log10( sum |a_ref|^2 / sum (|a_ref| - |a_test|)^2 )
/// with a the modulus per sample. Exact amplitude matches return the cap.
inline double snr(const ComplexField& reference, const ComplexField& test) {
    if (!(reference.grid == test.grid)) throw std::invalid_argument("snr: grid mismatch");
    double sig = 0.0, sig_c = 0.0, noise = 0.0, noise_c = 0.0;
    for (std::size_t i = 0; i < reference.data.size(); ++i) {
        const double a_ref = std::abs(reference.data[i]);
        const double diff = a_ref - std::abs(test.data[i]);
        double y = a_ref * a_ref - sig_c;
        double t = sig + y;
        sig_c = (t - sig) - y;
        sig = t;
        y = diff * diff - noise_c;
        t = noise + y;
        noise_c = (t - noise) - y;
        noise = t;
    }
    if (!(sig > 0.0)) throw std::invalid_argument("snr: reference field has zero energy");
    if (noise == 0.0) return snr_cap_db;
    return std::min(10.0 * std::log10(sig / noise), snr_cap_db);
}

/// Relative difference between the spatial and spectral energy sums,
/// |sum|u|^2 dx^d - sum S(f) df^d| / sum|u|^2 dx^d, using the unitary FFT.
/// The physical factors cancel, so this is the plain unitarity residual.
inline double parseval_residual(const ComplexField& field) {
    const double spatial = field_energy(field);
    if (spatial == 0.0) return 0.0;
    const double spectral = field_energy(fft_uniform(field, FftDirection::forward));
    return std::abs(spatial - spectral) / spatial;
}

/// One scenario row: distance, method, optional eta, measured SNR (when a
/// reference was evaluated), plan metadata and median wall-clock seconds.
struct EvaluationReport {
    double z = 0.0;
    Method method = Method::as;
    std::optional<double> eta;
    std::optional<double> snr_db;
    int n_freq_axis = 0;
    double f_boundary = 0.0;
    double elapsed_s = 0.0;
};

/// Propagate `repeats` times and report the median wall-clock time along
/// with the plan metadata. The plan is prebuilt, so only the propagation
/// itself is timed. The last propagated field is returned through `out`
/// when non-null.
inline EvaluationReport benchmark(const ComplexField& field, const OpticalConfig& cfg,
                                  const PropagationPlan& plan, int repeats,
                                  TransformAccuracy acc = {}, ComplexField* out = nullptr) {
    if (repeats < 1) throw std::invalid_argument("benchmark: repeats must be >= 1");
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(repeats));
    ComplexField result;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        result = propagate(field, cfg, plan, acc);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    const double median = times.size() % 2 == 1
                              ? times[times.size() / 2]
                              : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);
    if (out) *out = std::move(result);
    EvaluationReport rep;
    rep.z = cfg.distance;
    rep.method = plan.method;
    rep.eta = plan.eta;
    rep.n_freq_axis = plan.n_freq;
    rep.f_boundary = plan.f_boundary;
    rep.elapsed_s = median;
    return rep;
}

} // namespace ceas
