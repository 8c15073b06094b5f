#ifndef ALDP_PGM_HPP
#define ALDP_PGM_HPP

#include <filesystem>

#include "aldp/image.hpp"

namespace aldp {

enum class PgmFormat {
    Binary, // P5
    Ascii,  // P2
};

/// Loads an 8-bit PGM file (binary P5 or ASCII P2, maxval <= 255).
/// Header comments (#...) are permitted. Throws std::runtime_error on I/O
/// failure, malformed headers, truncated payloads, or unsupported bit depth.
GrayImage load_pgm(const std::filesystem::path& path);

/// Writes `img` as PGM with maxval 255. Binary (P5) output round-trips
/// through load_pgm exactly.
void save_pgm(const std::filesystem::path& path, const GrayImage& img,
              PgmFormat format = PgmFormat::Binary);

} // namespace aldp

#endif // ALDP_PGM_HPP
