#ifndef ALDP_VERIFY_HPP
#define ALDP_VERIFY_HPP

#include <cstdint>
#include <optional>

#include "aldp/image.hpp"

namespace aldp {

/// Test hook: adds `delta` to column term `term_index` at one pixel of one
/// image before reconstruction, so the sweep's failure path can be exercised
/// end to end.
struct FaultInjection {
    int image_index = 0;
    int x = 0;
    int y = 0;
    int term_index = 0;
    int delta = 1;
};

struct Mismatch {
    int image_index = 0;
    int x = 0;
    int y = 0;
    int direction = 0;
    int naive_value = 0;
    int accelerated_value = 0;
};

struct VerifyResult {
    std::uint64_t images_checked = 0;
    std::uint64_t pixels_checked = 0;
    std::optional<Mismatch> mismatch;

    bool ok() const { return !mismatch.has_value(); }
};

/// Compares the naive and accelerated response vectors at every pixel and
/// direction of `images` seeded random images with sides in [3, 64] (sizes
/// and per-image seeds derive from `seed`). Stops at the first mismatch,
/// reporting the lowest-index one even when `threads` > 1. `images` < 1 is
/// clamped to 1.
VerifyResult verify_equivalence(int images, std::uint32_t seed,
                                std::optional<FaultInjection> fault = std::nullopt,
                                int threads = 1);

/// Same sweep over one caller-supplied image.
VerifyResult verify_image(const GrayImage& img,
                          std::optional<FaultInjection> fault = std::nullopt,
                          int image_index = 0);

} // namespace aldp

#endif // ALDP_VERIFY_HPP
