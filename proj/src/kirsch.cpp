#include "aldp/kirsch.hpp"

#include <stdexcept>
#include <string>

namespace aldp {

namespace {

// Ring positions clockwise from the top-left corner.
constexpr int kRingOffsets[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, 1},
                                    {1, 1},   {1, 0},  {1, -1}, {0, -1}};

// Mask 0's ring: +5 down the right column, -3 elsewhere.
constexpr int kBaseRing[8] = {-3, -3, 5, 5, 5, -3, -3, -3};

std::array<KirschMask, 8> build_masks() {
    std::array<KirschMask, 8> masks{};
    for (int i = 0; i < 8; ++i) {
        masks[i].index = i;
        masks[i].weights[1][1] = 0;
        for (int j = 0; j < 8; ++j) {
            const int k = kRingOffsets[j][0];
            const int l = kRingOffsets[j][1];
            masks[i].weights[k + 1][l + 1] = kBaseRing[(j + i) % 8];
        }
    }
    return masks;
}

void require_extractable(const GrayImage& img) {
    if (img.rows() < 3 || img.cols() < 3) {
        throw std::invalid_argument("descriptor extraction needs at least a 3x3 image, got " +
                                    std::to_string(img.rows()) + "x" +
                                    std::to_string(img.cols()));
    }
}

void require_in_bounds(const GrayImage& img, int x, int y) {
    if (x < 0 || x >= img.rows() || y < 0 || y >= img.cols()) {
        throw std::out_of_range("pixel (" + std::to_string(x) + "," + std::to_string(y) +
                                ") outside " + std::to_string(img.rows()) + "x" +
                                std::to_string(img.cols()) + " image");
    }
}

// Kernels are templated on the tally so the counting variant pays for each
// recorded operation while the timed variant compiles to plain arithmetic.
struct NullTally {
    void mul() {}
    void add() {}
};

struct CountTally {
    OpCounter* c;
    void mul() { ++c->multiplications; }
    void add() { ++c->additions; }
};

constexpr int kScanOffsets[9][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 0},
                                    {0, 1},   {1, -1}, {1, 0},  {1, 1}};

template <typename Tally>
ResponseVector responses_naive_impl(const GrayImage& img, int x, int y,
                                    BorderPolicy policy, Tally tally) {
    const auto& masks = standard_masks();
    ResponseVector out{};
    for (int i = 0; i < 8; ++i) {
        const auto& w = masks[i].weights;
        int acc = w[kScanOffsets[0][0] + 1][kScanOffsets[0][1] + 1] *
                  static_cast<int>(img.sample(x + kScanOffsets[0][0],
                                              y + kScanOffsets[0][1], policy));
        tally.mul();
        for (int j = 1; j < 9; ++j) {
            const int k = kScanOffsets[j][0];
            const int l = kScanOffsets[j][1];
            acc += w[k + 1][l + 1] * static_cast<int>(img.sample(x + k, y + l, policy));
            tally.mul();
            tally.add();
        }
        out.m[i] = acc;
    }
    return out;
}

template <typename Tally>
ColumnTerms column_terms_impl(const GrayImage& img, int x, int y, BorderPolicy policy,
                              Tally t) {
    // One clamped read per neighbor; subscripts are (row offset, col offset)
    // with m = -1 and p = +1.
    const int p_mm = img.sample(x - 1, y - 1, policy);
    const int p_0m = img.sample(x, y - 1, policy);
    const int p_pm = img.sample(x + 1, y - 1, policy);
    const int p_m0 = img.sample(x - 1, y, policy);
    const int p_p0 = img.sample(x + 1, y, policy);
    const int p_mp = img.sample(x - 1, y + 1, policy);
    const int p_0p = img.sample(x, y + 1, policy);
    const int p_pp = img.sample(x + 1, y + 1, policy);

    ColumnTerms terms{};
    auto& a = terms.a;

    // Left column, coefficient patterns top-to-bottom.
    a[0] = -3 * (p_mm + p_0m + p_pm);
    t.mul(), t.add(), t.add();
    a[5] = 5 * p_mm + -3 * (p_0m + p_pm);
    t.mul(), t.mul(), t.add(), t.add();
    a[7] = 5 * (p_mm + p_0m) + -3 * p_pm;
    t.mul(), t.mul(), t.add(), t.add();
    a[9] = 5 * (p_mm + p_0m + p_pm);
    t.mul(), t.add(), t.add();
    a[10] = -3 * p_mm + 5 * (p_0m + p_pm);
    t.mul(), t.mul(), t.add(), t.add();
    a[12] = -3 * (p_mm + p_0m) + 5 * p_pm;
    t.mul(), t.mul(), t.add(), t.add();

    // Middle column (center weight is always zero).
    a[1] = -3 * (p_m0 + p_p0);
    t.mul(), t.add();
    a[3] = 5 * p_m0 + -3 * p_p0;
    t.mul(), t.mul(), t.add();
    a[11] = -3 * p_m0 + 5 * p_p0;
    t.mul(), t.mul(), t.add();

    // Right column.
    a[2] = 5 * (p_mp + p_0p + p_pp);
    t.mul(), t.add(), t.add();
    a[4] = 5 * (p_mp + p_0p) + -3 * p_pp;
    t.mul(), t.mul(), t.add(), t.add();
    a[6] = 5 * p_mp + -3 * (p_0p + p_pp);
    t.mul(), t.mul(), t.add(), t.add();
    a[8] = -3 * (p_mp + p_0p + p_pp);
    t.mul(), t.add(), t.add();
    a[13] = -3 * (p_mp + p_0p) + 5 * p_pp;
    t.mul(), t.mul(), t.add(), t.add();
    a[14] = -3 * p_mp + 5 * (p_0p + p_pp);
    t.mul(), t.mul(), t.add(), t.add();

    return terms;
}

// Which three column terms feed each response.
constexpr int kResponseTerms[8][3] = {{0, 1, 2},   {0, 3, 4},  {5, 3, 6},  {7, 3, 8},
                                      {9, 1, 8},   {10, 11, 8}, {12, 11, 13}, {0, 11, 14}};

template <typename Tally>
ResponseVector responses_accelerated_impl(const ColumnTerms& terms, Tally t) {
    ResponseVector out{};
    for (int i = 0; i < 8; ++i) {
        int acc = terms.a[kResponseTerms[i][0]] + terms.a[kResponseTerms[i][1]];
        t.add();
        acc += terms.a[kResponseTerms[i][2]];
        t.add();
        out.m[i] = acc;
    }
    return out;
}

} // namespace

const std::array<KirschMask, 8>& standard_masks() {
    static const std::array<KirschMask, 8> masks = build_masks();
    return masks;
}

ResponseVector responses_naive(const GrayImage& img, int x, int y, BorderPolicy policy,
                               OpCounter* counter) {
    require_extractable(img);
    require_in_bounds(img, x, y);
    if (counter) {
        return responses_naive_impl(img, x, y, policy, CountTally{counter});
    }
    return responses_naive_impl(img, x, y, policy, NullTally{});
}

ColumnTerms column_terms(const GrayImage& img, int x, int y, BorderPolicy policy,
                         OpCounter* counter) {
    require_extractable(img);
    require_in_bounds(img, x, y);
    if (counter) {
        return column_terms_impl(img, x, y, policy, CountTally{counter});
    }
    return column_terms_impl(img, x, y, policy, NullTally{});
}

ResponseVector responses_accelerated(const ColumnTerms& terms, OpCounter* counter) {
    if (counter) {
        return responses_accelerated_impl(terms, CountTally{counter});
    }
    return responses_accelerated_impl(terms, NullTally{});
}

std::vector<ResponseVector> response_field(const GrayImage& img, ResponsePath path,
                                           BorderPolicy policy) {
    require_extractable(img);
    std::vector<ResponseVector> field;
    field.reserve(img.pixel_count());
    for (int x = 0; x < img.rows(); ++x) {
        for (int y = 0; y < img.cols(); ++y) {
            if (path == ResponsePath::Naive) {
                field.push_back(responses_naive(img, x, y, policy));
            } else {
                field.push_back(responses_accelerated(column_terms(img, x, y, policy)));
            }
        }
    }
    return field;
}

} // namespace aldp
