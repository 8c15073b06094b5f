#include "aldp/descriptors.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace aldp {

namespace {

void require_extractable(const GrayImage& img) {
    if (img.rows() < 3 || img.cols() < 3) {
        throw std::invalid_argument("descriptor extraction needs at least a 3x3 image");
    }
}

void require_in_bounds(const GrayImage& img, int x, int y) {
    if (x < 0 || x >= img.rows() || y < 0 || y >= img.cols()) {
        throw std::out_of_range("pixel coordinates outside image");
    }
}

struct BinTables {
    std::array<int, 256> rank;       // -1 where popcount != 3
    std::array<std::uint8_t, 56> code; // ascending three-set-bit codes
};

const BinTables& bin_tables() {
    static const BinTables tables = [] {
        BinTables t{};
        t.rank.fill(-1);
        int next = 0;
        for (int c = 0; c < 256; ++c) {
            if (std::popcount(static_cast<unsigned>(c)) == 3) {
                t.rank[c] = next;
                t.code[next] = static_cast<std::uint8_t>(c);
                ++next;
            }
        }
        return t;
    }();
    return tables;
}

// LBP ring, clockwise from the top-left neighbor; neighbor i maps to bit i.
constexpr int kLbpRing[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, 1},
                                {1, 1},   {1, 0},  {1, -1}, {0, -1}};

} // namespace

std::string descriptor_name(Descriptor d) {
    switch (d) {
    case Descriptor::Lbp:
        return "LBP";
    case Descriptor::Ldp:
        return "LDP";
    case Descriptor::Aldp:
        return "ALDP";
    }
    throw std::invalid_argument("unknown descriptor");
}

Descriptor parse_descriptor(const std::string& name) {
    std::string lower;
    lower.reserve(name.size());
    for (char ch : name) {
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    if (lower == "lbp") {
        return Descriptor::Lbp;
    }
    if (lower == "ldp") {
        return Descriptor::Ldp;
    }
    if (lower == "aldp") {
        return Descriptor::Aldp;
    }
    throw std::invalid_argument("unknown descriptor '" + name + "' (expected lbp, ldp or aldp)");
}

std::uint8_t ldp_code(const ResponseVector& responses, int k) {
    if (k < 1 || k > 7) {
        throw std::invalid_argument("k must be in [1, 7]");
    }
    // Selection passes: each picks the largest unused response, keeping the
    // lowest direction index on ties, so the code always has k set bits.
    bool used[8] = {};
    unsigned code = 0;
    for (int picked = 0; picked < k; ++picked) {
        int best = -1;
        for (int i = 0; i < 8; ++i) {
            if (!used[i] && (best < 0 || responses.m[i] > responses.m[best])) {
                best = i;
            }
        }
        used[best] = true;
        code |= 1u << best;
    }
    return static_cast<std::uint8_t>(code);
}

int ldp_bin_index(std::uint8_t code) {
    return bin_tables().rank[code];
}

std::uint8_t ldp_bin_code(int index) {
    if (index < 0 || index >= 56) {
        throw std::out_of_range("bin index must be in [0, 56)");
    }
    return bin_tables().code[static_cast<std::size_t>(index)];
}

std::uint64_t LdpHistogram::total() const {
    return std::accumulate(bins.begin(), bins.end(), std::uint64_t{0});
}

std::uint64_t LbpHistogram::total() const {
    return std::accumulate(bins.begin(), bins.end(), std::uint64_t{0});
}

LdpHistogram ldp_histogram(const GrayImage& img, int k, ResponsePath path) {
    if (k != 3) {
        throw std::invalid_argument("the 56-bin histogram layout requires k == 3");
    }
    require_extractable(img);
    LdpHistogram hist{};
    for (int x = 0; x < img.rows(); ++x) {
        for (int y = 0; y < img.cols(); ++y) {
            const ResponseVector r =
                (path == ResponsePath::Naive)
                    ? responses_naive(img, x, y)
                    : responses_accelerated(column_terms(img, x, y));
            ++hist.bins[static_cast<std::size_t>(ldp_bin_index(ldp_code(r, k)))];
        }
    }
    return hist;
}

std::uint8_t lbp_code(const GrayImage& img, int x, int y, BorderPolicy policy,
                      OpCounter* counter) {
    require_extractable(img);
    require_in_bounds(img, x, y);
    const int center = img.sample(x, y, policy);
    unsigned code = 0;
    for (int i = 0; i < 8; ++i) {
        const int neighbor = img.sample(x + kLbpRing[i][0], y + kLbpRing[i][1], policy);
        if (neighbor >= center) {
            code |= 1u << i;
        }
    }
    if (counter) {
        counter->additions += 8; // one threshold comparison per ring neighbor
    }
    return static_cast<std::uint8_t>(code);
}

LbpHistogram lbp_histogram(const GrayImage& img, BorderPolicy policy) {
    require_extractable(img);
    LbpHistogram hist{};
    for (int x = 0; x < img.rows(); ++x) {
        for (int y = 0; y < img.cols(); ++y) {
            ++hist.bins[lbp_code(img, x, y, policy)];
        }
    }
    return hist;
}

} // namespace aldp
