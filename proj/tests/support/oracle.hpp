#ifndef ALDP_TESTS_ORACLE_HPP
#define ALDP_TESTS_ORACLE_HPP

// Brute-force reference implementations for the test suite. Everything here
// is kept independent of the library's kernels: the masks are literal
// tables, responses are plain dot products, top-k selection goes through
// std::sort, and the bin ranking is recomputed from scratch.

#include <array>
#include <cstdint>
#include <vector>

#include "aldp/image.hpp"

namespace aldp::oracle {

extern const int kMasks[8][3][3];

// Direct 3x3 dot product of mask `direction` at (x, y), clamp borders.
int response(const GrayImage& img, int x, int y, int direction);

std::array<int, 8> responses(const GrayImage& img, int x, int y);

// Dot product of one mask column (offset -1, 0 or +1) with the image column
// under it; responses decompose into three of these.
int column_slice(const GrayImage& img, int x, int y, int direction, int col_offset);

std::uint8_t ldp_code(const std::array<int, 8>& responses, int k = 3);

std::uint8_t lbp_code(const GrayImage& img, int x, int y);

std::vector<std::uint64_t> ldp_histogram(const GrayImage& img);

std::vector<std::uint64_t> lbp_histogram(const GrayImage& img);

// Ascending list of the 56 codes with exactly three set bits.
const std::vector<std::uint8_t>& ldp_bin_codes();

} // namespace aldp::oracle

#endif // ALDP_TESTS_ORACLE_HPP
