#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "ceas/errors.hpp"
#include "ceas/field.hpp"

namespace ceas {

namespace detail {

inline void put_u32_le(std::string& buf, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void put_f64_le(std::string& buf, double v) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

inline std::uint32_t get_u32_le(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

inline double get_f64_le(const unsigned char* p) {
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) bits = (bits << 8) | p[i];
    return std::bit_cast<double>(bits);
}

} // namespace detail

/// CEAF complex-field file: magic "CEAF", u32 version=1, u32 n_x, u32 n_y,
/// f64 pitch_m, then n_x*n_y (re, im) f64 pairs; little-endian, row-major.
inline void write_ceaf(const ComplexField& field, const std::filesystem::path& path) {
    std::string buf;
    buf.reserve(20 + field.data.size() * 16);
    buf.append("CEAF");
    detail::put_u32_le(buf, 1);
    detail::put_u32_le(buf, static_cast<std::uint32_t>(field.grid.n_x));
    detail::put_u32_le(buf, static_cast<std::uint32_t>(field.grid.n_y));
    detail::put_f64_le(buf, field.grid.pitch);
    for (const cdouble& v : field.data) {
        detail::put_f64_le(buf, v.real());
        detail::put_f64_le(buf, v.imag());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(buf.data(), static_cast<std::streamsize>(buf.size())))
        throw io_error("write_ceaf: cannot write " + path.string());
}

inline ComplexField read_ceaf(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("read_ceaf: cannot open " + path.string());
    std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (buf.size() < 24 || std::memcmp(buf.data(), "CEAF", 4) != 0)
        throw io_error("read_ceaf: not a CEAF file: " + path.string());
    const std::uint32_t version = detail::get_u32_le(&buf[4]);
    if (version != 1) throw io_error("read_ceaf: unsupported version " + std::to_string(version));
    const std::uint32_t n_x = detail::get_u32_le(&buf[8]);
    const std::uint32_t n_y = detail::get_u32_le(&buf[12]);
    const double pitch = detail::get_f64_le(&buf[16]);
    if (n_x < 1 || n_y < 1 || !(pitch > 0.0)) throw io_error("read_ceaf: invalid header");
    const std::size_t count = static_cast<std::size_t>(n_x) * n_y;
    if (buf.size() != 24 + count * 16) throw io_error("read_ceaf: truncated payload");
    ComplexField field(make_grid(static_cast<int>(n_x), static_cast<int>(n_y), pitch));
    for (std::size_t i = 0; i < count; ++i)
        field.data[i] = {detail::get_f64_le(&buf[24 + i * 16]), detail::get_f64_le(&buf[24 + i * 16 + 8])};
    if (!field_is_finite(field)) throw io_error("read_ceaf: non-finite samples in " + path.string());
    return field;
}

/// 8-bit binary PGM of the amplitude, linear min-max normalization.
inline void write_amplitude_pgm(const ComplexField& field, const std::filesystem::path& path) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    std::vector<double> amp(field.data.size());
    for (std::size_t i = 0; i < amp.size(); ++i) {
        amp[i] = std::abs(field.data[i]);
        lo = std::min(lo, amp[i]);
        hi = std::max(hi, amp[i]);
    }
    std::string buf = "P5\n" + std::to_string(field.grid.n_x) + " " + std::to_string(field.grid.n_y) +
                      "\n255\n";
    const double span = hi - lo;
    for (double a : amp) {
        const int v = span > 0.0 ? static_cast<int>(std::lround(255.0 * (a - lo) / span)) : 0;
        buf.push_back(static_cast<char>(std::clamp(v, 0, 255)));
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(buf.data(), static_cast<std::streamsize>(buf.size())))
        throw io_error("write_amplitude_pgm: cannot write " + path.string());
}

/// CEAF dump plus an amplitude preview image next to it (suffix .pgm).
inline void dump_field(const ComplexField& field, const std::filesystem::path& path) {
    write_ceaf(field, path);
    std::filesystem::path pgm = path;
    pgm.replace_extension(".pgm");
    write_amplitude_pgm(field, pgm);
}

} // namespace ceas
