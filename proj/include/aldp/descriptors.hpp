#ifndef ALDP_DESCRIPTORS_HPP
#define ALDP_DESCRIPTORS_HPP

#include <array>
#include <cstdint>
#include <string>

#include "aldp/image.hpp"
#include "aldp/kirsch.hpp"

namespace aldp {

enum class Descriptor { Lbp, Ldp, Aldp };

/// CSV/report name: "LBP", "LDP" or "ALDP".
std::string descriptor_name(Descriptor d);

/// Parses "lbp" / "ldp" / "aldp" (case-insensitive). Throws
/// std::invalid_argument otherwise.
Descriptor parse_descriptor(const std::string& name);

/// Directional code: the bits of the k strongest responses, chosen by
/// (response descending, direction index ascending) so the code has exactly
/// k set bits even when responses tie. Identical to plain thresholding
/// against the k-th largest response whenever all eight values are distinct.
/// Requires 1 <= k <= 7.
std::uint8_t ldp_code(const ResponseVector& responses, int k = 3);

/// Bin rank of a three-set-bit code: the 56 valid codes are ordered by
/// ascending numeric value, so code 0b00000111 = 7 is bin 0. Returns -1 for
/// codes whose popcount is not 3.
int ldp_bin_index(std::uint8_t code);

/// Inverse of ldp_bin_index; `index` must be in [0, 56).
std::uint8_t ldp_bin_code(int index);

struct LdpHistogram {
    std::array<std::uint64_t, 56> bins{};

    std::uint64_t total() const;
    bool operator==(const LdpHistogram&) const = default;
};

struct LbpHistogram {
    std::array<std::uint64_t, 256> bins{};

    std::uint64_t total() const;
    bool operator==(const LbpHistogram&) const = default;
};

/// Directional-code histogram over every pixel (clamped borders), so the
/// bins always sum to rows*cols. Only k == 3 is supported: the 56-bin
/// layout is specific to three-set-bit codes. The Naive and Accelerated
/// response paths produce identical histograms.
LdpHistogram ldp_histogram(const GrayImage& img, int k, ResponsePath path);

/// Binary code of the 3x3 neighborhood: ring neighbors enumerated clockwise
/// from the top-left, neighbor i contributing 2^i when its value >= center.
/// A constant image codes every pixel as 255. With a counter attached, the
/// eight threshold comparisons accrue as 8 additions (and no multiplies).
std::uint8_t lbp_code(const GrayImage& img, int x, int y,
                      BorderPolicy policy = BorderPolicy::Clamp,
                      OpCounter* counter = nullptr);

/// 256-bin code histogram over every pixel; sums to rows*cols.
LbpHistogram lbp_histogram(const GrayImage& img,
                           BorderPolicy policy = BorderPolicy::Clamp);

} // namespace aldp

#endif // ALDP_DESCRIPTORS_HPP
