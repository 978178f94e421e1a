#pragma once

#include <stdexcept>
#include <string>

namespace ceas {

/// Uniform sampling geometry of a source/target window.
///
/// Square pixels: the pitch applies to both axes. A one-dimensional
/// window is modeled as n_y == 1.
struct GridSpec {
    int n_x = 0;        ///< samples along x
    int n_y = 0;        ///< samples along y
    double pitch = 0.0; ///< spatial sampling interval [m]

    double extent_x() const { return n_x * pitch; }
    double extent_y() const { return n_y * pitch; }

    /// Maximum recordable frequency per axis, 1/(2*pitch) [cycles/m].
    double f_max() const { return 0.5 / pitch; }

    std::size_t sample_count() const { return static_cast<std::size_t>(n_x) * static_cast<std::size_t>(n_y); }

    /// Centered sample coordinate along x for column index i: (i - n_x/2) * pitch.
    double coord_x(int i) const { return (i - n_x / 2) * pitch; }
    double coord_y(int j) const { return (j - n_y / 2) * pitch; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

inline GridSpec make_grid(int n_x, int n_y, double pitch) {
    if (n_x < 1 || n_y < 1)
        throw std::invalid_argument("make_grid: sample counts must be >= 1, got " +
                                    std::to_string(n_x) + "x" + std::to_string(n_y));
    if (!(pitch > 0.0))
        throw std::invalid_argument("make_grid: pitch must be positive");
    return GridSpec{n_x, n_y, pitch};
}

} // namespace ceas
