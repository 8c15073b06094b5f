#ifndef ALDP_WINDOWING_HPP
#define ALDP_WINDOWING_HPP

#include <cstdint>
#include <vector>

#include "aldp/descriptors.hpp"
#include "aldp/image.hpp"

namespace aldp {

/// Non-overlapping tiling of an image into square windows. Stride equals the
/// window side; trailing remainder pixels are dropped.
struct WindowGrid {
    int window = 0;
    int grid_rows = 0;
    int grid_cols = 0;

    int total() const { return grid_rows * grid_cols; }
};

/// grid_rows = floor(rows / window), grid_cols = floor(cols / window).
/// Throws std::invalid_argument when window < 3 (no 3x3 neighborhood) or
/// window > min(rows, cols).
WindowGrid make_grid(const GrayImage& img, int window);

/// Copies the window*window sub-image whose top-left corner is (x0, y0).
GrayImage crop(const GrayImage& img, int x0, int y0, int rows, int cols);

/// One histogram per window in row-major window order. Each window is
/// extracted as an independent image with its own clamp borders, so results
/// do not depend on neighboring windows. Bin width is 56 for Ldp/Aldp and
/// 256 for Lbp.
std::vector<std::vector<std::uint64_t>> windowed_features(const GrayImage& img,
                                                          int window,
                                                          Descriptor descriptor);

} // namespace aldp

#endif // ALDP_WINDOWING_HPP
