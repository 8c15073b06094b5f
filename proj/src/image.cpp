#include "aldp/image.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace aldp {

namespace {

void check_dims(int rows, int cols, int minimum) {
    if (rows < minimum || cols < minimum) {
        throw std::invalid_argument("image dimensions must be at least " +
                                    std::to_string(minimum) + "x" + std::to_string(minimum) +
                                    ", got " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    }
}

} // namespace

GrayImage::GrayImage(int rows, int cols) : rows_(rows), cols_(cols) {
    check_dims(rows, cols, 1);
    pixels_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

GrayImage::GrayImage(int rows, int cols, std::vector<std::uint8_t> pixels)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)) {
    check_dims(rows, cols, 1);
    if (pixels_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw std::invalid_argument("pixel buffer size does not match dimensions");
    }
}

std::uint8_t GrayImage::sample(int x, int y, BorderPolicy) const {
    const int cx = std::clamp(x, 0, rows_ - 1);
    const int cy = std::clamp(y, 0, cols_ - 1);
    return at(cx, cy);
}

GrayImage make_constant(int rows, int cols, std::uint8_t value) {
    check_dims(rows, cols, 3);
    return {rows, cols,
            std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, value)};
}

GrayImage make_gradient(int rows, int cols) {
    check_dims(rows, cols, 3);
    std::vector<std::uint8_t> px(static_cast<std::size_t>(rows) * cols);
    for (int x = 0; x < rows; ++x) {
        for (int y = 0; y < cols; ++y) {
            px[static_cast<std::size_t>(x) * cols + y] =
                static_cast<std::uint8_t>(std::min(x + y, 255));
        }
    }
    return {rows, cols, std::move(px)};
}

GrayImage make_checker(int rows, int cols, int cell) {
    check_dims(rows, cols, 3);
    if (cell < 1) {
        throw std::invalid_argument("checker cell must be >= 1");
    }
    std::vector<std::uint8_t> px(static_cast<std::size_t>(rows) * cols);
    for (int x = 0; x < rows; ++x) {
        for (int y = 0; y < cols; ++y) {
            px[static_cast<std::size_t>(x) * cols + y] =
                ((x / cell + y / cell) % 2 == 0) ? 255 : 0;
        }
    }
    return {rows, cols, std::move(px)};
}

GrayImage make_random(int rows, int cols, std::uint32_t seed) {
    check_dims(rows, cols, 3);
    std::mt19937 rng(seed);
    std::vector<std::uint8_t> px(static_cast<std::size_t>(rows) * cols);
    for (auto& p : px) {
        p = static_cast<std::uint8_t>(rng() & 0xFFu);
    }
    return {rows, cols, std::move(px)};
}

} // namespace aldp
