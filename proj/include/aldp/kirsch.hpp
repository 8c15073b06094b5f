#ifndef ALDP_KIRSCH_HPP
#define ALDP_KIRSCH_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "aldp/image.hpp"

namespace aldp {

/// One of the eight 3x3 compass kernels: three +5 weights along one edge or
/// corner, center 0, the remaining five weights -3. weights[k][l] multiplies
/// the neighbor at (x + k - 1, y + l - 1).
struct KirschMask {
    int index = 0;
    std::array<std::array<int, 3>, 3> weights{};
};

/// The canonical compass family. Mask 0 carries its +5 weights in the right
/// column (l = +1); each subsequent mask rotates the ring of eight outer
/// weights by one step, so mask 2 has its +5 row on top (k = -1).
const std::array<KirschMask, 8>& standard_masks();

/// The eight signed directional edge responses at one pixel. Exact integer
/// arithmetic; for 8-bit input every value lies in [-3825, 3825].
struct ResponseVector {
    std::array<int, 8> m{};

    bool operator==(const ResponseVector&) const = default;
};

/// The fifteen per-column dot products shared by the eight masks. Each mask
/// response is the sum of its three column terms, and masks reuse columns,
/// so fifteen terms cover all twenty-four column slots:
///
///   term  column  (top, mid, bottom)      used by response(s)
///   a0    y-1     (-3, -3, -3)            m0, m1, m7
///   a1    y       (-3,  0, -3)            m0, m4
///   a2    y+1     ( 5,  5,  5)            m0
///   a3    y       ( 5,  0, -3)            m1, m2, m3
///   a4    y+1     ( 5,  5, -3)            m1
///   a5    y-1     ( 5, -3, -3)            m2
///   a6    y+1     ( 5, -3, -3)            m2
///   a7    y-1     ( 5,  5, -3)            m3
///   a8    y+1     (-3, -3, -3)            m3, m4, m5
///   a9    y-1     ( 5,  5,  5)            m4
///   a10   y-1     (-3,  5,  5)            m5
///   a11   y       (-3,  0,  5)            m5, m6, m7
///   a12   y-1     (-3, -3,  5)            m6
///   a13   y+1     (-3, -3,  5)            m6
///   a14   y+1     (-3,  5,  5)            m7
struct ColumnTerms {
    std::array<int, 15> a{};

    bool operator==(const ColumnTerms&) const = default;
};

/// Tally of scalar arithmetic actually executed by a response kernel; one
/// unit per multiply and one per add/subtract/compare. Accrues across calls.
struct OpCounter {
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;
};

/// Direct convolution: each m_i is the 3x3 dot product of mask i with the
/// clamped neighborhood of (x, y), every weight (including the center zero)
/// multiplied as-is. With a counter attached this accrues exactly 72
/// multiplications and 64 additions. Throws std::out_of_range if (x, y) is
/// outside the image and std::invalid_argument for images smaller than 3x3.
ResponseVector responses_naive(const GrayImage& img, int x, int y,
                               BorderPolicy policy = BorderPolicy::Clamp,
                               OpCounter* counter = nullptr);

/// The fifteen shared column sums at (x, y). The neighborhood is read once
/// (nine clamped samples) and each term is computed in factored form, so the
/// per-pixel tally is 25 multiplications and 27 additions.
ColumnTerms column_terms(const GrayImage& img, int x, int y,
                         BorderPolicy policy = BorderPolicy::Clamp,
                         OpCounter* counter = nullptr);

/// Reassembles the eight responses from the column terms: three-term sums
/// only (16 additions, no multiplications). Output is exactly equal to
/// responses_naive at the pixel the terms were computed for.
ResponseVector responses_accelerated(const ColumnTerms& terms,
                                     OpCounter* counter = nullptr);

enum class ResponsePath { Naive, Accelerated };

/// Whole-image convenience: responses at every pixel, row-major.
std::vector<ResponseVector> response_field(const GrayImage& img, ResponsePath path,
                                           BorderPolicy policy = BorderPolicy::Clamp);

} // namespace aldp

#endif // ALDP_KIRSCH_HPP
