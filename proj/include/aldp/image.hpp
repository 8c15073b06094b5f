#ifndef ALDP_IMAGE_HPP
#define ALDP_IMAGE_HPP

#include <cstdint>
#include <vector>

namespace aldp {

/// How out-of-range neighborhood samples are resolved. Clamp replicates the
/// nearest edge pixel, so every pixel of an image has a full 3x3 neighborhood
/// and histograms over all pixels sum to rows*cols.
enum class BorderPolicy { Clamp };

/**
 * @brief Immutable 8-bit grayscale image, row-major.
 *
 * Coordinates are (x, y) = (row, col). pixel(x, y) lives at index
 * x * cols + y. The image is never mutated after construction and is safe
 * to share across threads.
 */
class GrayImage {
public:
    /// Zero-filled image. Throws std::invalid_argument unless rows, cols >= 1.
    GrayImage(int rows, int cols);

    /// Takes ownership of `pixels` (row-major, rows*cols entries).
    GrayImage(int rows, int cols, std::vector<std::uint8_t> pixels);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t pixel_count() const { return pixels_.size(); }

    /// Unchecked access; (x, y) must be in bounds.
    std::uint8_t at(int x, int y) const {
        return pixels_[static_cast<std::size_t>(x) * static_cast<std::size_t>(cols_) +
                       static_cast<std::size_t>(y)];
    }

    /// Total access: out-of-range coordinates are clamped to the nearest
    /// valid index. Equals at(x, y) for in-bounds coordinates.
    std::uint8_t sample(int x, int y, BorderPolicy policy = BorderPolicy::Clamp) const;

    const std::vector<std::uint8_t>& pixels() const { return pixels_; }

    bool operator==(const GrayImage& other) const = default;

private:
    int rows_;
    int cols_;
    std::vector<std::uint8_t> pixels_;
};

// Synthetic images for tests and benchmarks. All are deterministic for a
// given argument tuple; dimensions must be at least 3x3.

/// Every pixel equal to `value`.
GrayImage make_constant(int rows, int cols, std::uint8_t value);

/// Affine ramp anchored at the origin: pixel(x, y) = min(x + y, 255).
GrayImage make_gradient(int rows, int cols);

/// Checkerboard of `cell`-sized squares, pixel(0, 0) = 255. Requires cell >= 1.
GrayImage make_checker(int rows, int cols, int cell);

/// Reproducible noise: std::mt19937 seeded with `seed`, each pixel is the
/// low eight bits of the next engine output, row-major. The engine's output
/// sequence is fixed by the standard, so corpora are identical across
/// platforms and runs.
GrayImage make_random(int rows, int cols, std::uint32_t seed);

} // namespace aldp

#endif // ALDP_IMAGE_HPP
