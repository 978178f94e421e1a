#pragma once

#include <stdexcept>
#include <string>

namespace ceas {

/// The implemented angular-spectrum propagators.
enum class Method {
    as,       ///< plain AS: padded FFT, full band
    bl,       ///< band-limited: padded FFT, transfer function zeroed beyond f_BL
    adaptive, ///< adaptive-sampling: NUFFT on N_BL samples at the native interval
    be,       ///< band-extended: NUFFT on 2N samples up to f_BE
    ce        ///< controllable-energy: NUFFT on N_CE samples up to f_CE
};

/// Reference band for the controllable-energy search criterion.
enum class CeReference {
    band_extended, ///< energy fraction of E(f_BE)
    band_limited   ///< energy fraction of E(f_BL); may compress below f_BL
};

inline const char* method_name(Method m) {
    switch (m) {
    case Method::as: return "as";
    case Method::bl: return "bl";
    case Method::adaptive: return "adaptive";
    case Method::be: return "be";
    case Method::ce: return "ce";
    }
    return "?";
}

inline Method method_from_name(const std::string& s) {
    if (s == "as") return Method::as;
    if (s == "bl") return Method::bl;
    if (s == "adaptive") return Method::adaptive;
    if (s == "be") return Method::be;
    if (s == "ce") return Method::ce;
    throw std::invalid_argument("method: unknown name '" + s + "' (use as|bl|adaptive|be|ce)");
}

} // namespace ceas
