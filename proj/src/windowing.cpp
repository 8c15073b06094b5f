#include "aldp/windowing.hpp"

#include <stdexcept>
#include <string>

namespace aldp {

WindowGrid make_grid(const GrayImage& img, int window) {
    if (window < 3) {
        throw std::invalid_argument("window side must be >= 3, got " +
                                    std::to_string(window));
    }
    if (window > img.rows() || window > img.cols()) {
        throw std::invalid_argument("window side " + std::to_string(window) +
                                    " exceeds image " + std::to_string(img.rows()) + "x" +
                                    std::to_string(img.cols()));
    }
    return WindowGrid{window, img.rows() / window, img.cols() / window};
}

GrayImage crop(const GrayImage& img, int x0, int y0, int rows, int cols) {
    if (x0 < 0 || y0 < 0 || rows < 1 || cols < 1 || x0 + rows > img.rows() ||
        y0 + cols > img.cols()) {
        throw std::out_of_range("crop region outside image");
    }
    std::vector<std::uint8_t> px(static_cast<std::size_t>(rows) * cols);
    for (int x = 0; x < rows; ++x) {
        for (int y = 0; y < cols; ++y) {
            px[static_cast<std::size_t>(x) * cols + y] = img.at(x0 + x, y0 + y);
        }
    }
    return {rows, cols, std::move(px)};
}

std::vector<std::vector<std::uint64_t>> windowed_features(const GrayImage& img, int window,
                                                          Descriptor descriptor) {
    const WindowGrid grid = make_grid(img, window);
    std::vector<std::vector<std::uint64_t>> features;
    features.reserve(static_cast<std::size_t>(grid.total()));
    for (int wr = 0; wr < grid.grid_rows; ++wr) {
        for (int wc = 0; wc < grid.grid_cols; ++wc) {
            const GrayImage tile = crop(img, wr * window, wc * window, window, window);
            switch (descriptor) {
            case Descriptor::Lbp: {
                const LbpHistogram h = lbp_histogram(tile);
                features.emplace_back(h.bins.begin(), h.bins.end());
                break;
            }
            case Descriptor::Ldp: {
                const LdpHistogram h = ldp_histogram(tile, 3, ResponsePath::Naive);
                features.emplace_back(h.bins.begin(), h.bins.end());
                break;
            }
            case Descriptor::Aldp: {
                const LdpHistogram h = ldp_histogram(tile, 3, ResponsePath::Accelerated);
                features.emplace_back(h.bins.begin(), h.bins.end());
                break;
            }
            }
        }
    }
    return features;
}

} // namespace aldp
