#include <doctest.h>

#include <bit>
#include <random>

#include "aldp/descriptors.hpp"
#include "support/oracle.hpp"

using namespace aldp;

TEST_CASE("descriptor names round-trip") {
    CHECK(descriptor_name(Descriptor::Lbp) == "LBP");
    CHECK(descriptor_name(Descriptor::Aldp) == "ALDP");
    CHECK(parse_descriptor("LDP") == Descriptor::Ldp);
    CHECK(parse_descriptor("aldp") == Descriptor::Aldp);
    CHECK_THROWS_AS(parse_descriptor("glcm"), std::invalid_argument);
}

TEST_CASE("ldp_code selects the k strongest directions") {
    SUBCASE("a total tie resolves to the lowest indices") {
        CHECK(ldp_code(ResponseVector{{0, 0, 0, 0, 0, 0, 0, 0}}) == 7);
    }
    SUBCASE("distinct responses: directions 1, 4 and 6 on top") {
        const ResponseVector r{{-10, 500, -20, 0, 400, 3, 300, -1}};
        CHECK(ldp_code(r) == (1 << 1) + (1 << 4) + (1 << 6));
        CHECK(ldp_code(r) == 82);
    }
    SUBCASE("partial tie keeps the lower direction") {
        // directions 2 and 5 tie for third place; 2 wins
        const ResponseVector r{{9, 9, 5, 0, 0, 5, -1, -2}};
        CHECK(ldp_code(r) == (1 << 0) + (1 << 1) + (1 << 2));
    }
    SUBCASE("k other than 3 sets that many bits") {
        const ResponseVector r{{8, 7, 6, 5, 4, 3, 2, 1}};
        for (int k = 1; k <= 7; ++k) {
            CHECK(std::popcount(static_cast<unsigned>(ldp_code(r, k))) == k);
        }
    }
    SUBCASE("invalid k is rejected") {
        CHECK_THROWS_AS(ldp_code(ResponseVector{}, 0), std::invalid_argument);
        CHECK_THROWS_AS(ldp_code(ResponseVector{}, 8), std::invalid_argument);
    }
    SUBCASE("matches the oracle's sort-based selection on random vectors") {
        std::mt19937 rng(21);
        for (int trial = 0; trial < 500; ++trial) {
            ResponseVector r{};
            std::array<int, 8> values{};
            for (int i = 0; i < 8; ++i) {
                // small range provokes plenty of ties
                values[i] = static_cast<int>(rng() % 7) - 3;
                r.m[i] = values[i];
            }
            CHECK(ldp_code(r) == oracle::ldp_code(values));
        }
    }
}

TEST_CASE("bin index maps the 56 valid codes bijectively") {
    CHECK(ldp_bin_code(0) == 7); // 0b00000111 is the smallest three-bit code
    CHECK(ldp_bin_index(7) == 0);
    int valid = 0;
    for (int c = 0; c < 256; ++c) {
        const int idx = ldp_bin_index(static_cast<std::uint8_t>(c));
        if (std::popcount(static_cast<unsigned>(c)) == 3) {
            REQUIRE(idx >= 0);
            REQUIRE(idx < 56);
            CHECK(ldp_bin_code(idx) == c);
            ++valid;
        } else {
            CHECK(idx == -1);
        }
    }
    CHECK(valid == 56);
    for (int i = 0; i < 56; ++i) {
        CHECK(ldp_bin_index(ldp_bin_code(i)) == i);
        CHECK(ldp_bin_code(i) == oracle::ldp_bin_codes()[static_cast<std::size_t>(i)]);
    }
    CHECK_THROWS_AS(ldp_bin_code(56), std::out_of_range);
}

TEST_CASE("ldp_histogram") {
    SUBCASE("constant image lands every pixel in code 7's bin") {
        const GrayImage img = make_constant(10, 10, 50);
        for (ResponsePath path : {ResponsePath::Naive, ResponsePath::Accelerated}) {
            const LdpHistogram h = ldp_histogram(img, 3, path);
            CHECK(h.bins[0] == 100);
            CHECK(h.total() == 100);
        }
    }
    SUBCASE("mass equals the pixel count") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 10; ++trial) {
            const int rows = 3 + static_cast<int>(rng() % 40);
            const int cols = 3 + static_cast<int>(rng() % 40);
            const GrayImage img = make_random(rows, cols, rng());
            CHECK(ldp_histogram(img, 3, ResponsePath::Accelerated).total() ==
                  static_cast<std::uint64_t>(rows) * static_cast<std::uint64_t>(cols));
        }
    }
    SUBCASE("naive and accelerated paths agree with the oracle") {
        const GrayImage img = make_random(16, 16, 42);
        const LdpHistogram naive = ldp_histogram(img, 3, ResponsePath::Naive);
        const LdpHistogram accel = ldp_histogram(img, 3, ResponsePath::Accelerated);
        CHECK(naive == accel);
        const auto expected = oracle::ldp_histogram(img);
        for (int i = 0; i < 56; ++i) {
            CHECK(naive.bins[static_cast<std::size_t>(i)] ==
                  expected[static_cast<std::size_t>(i)]);
        }
    }
    SUBCASE("path independence across image sizes") {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            const int rows = 3 + static_cast<int>(rng() % 62);
            const int cols = 3 + static_cast<int>(rng() % 62);
            const GrayImage img = make_random(rows, cols, rng());
            REQUIRE(ldp_histogram(img, 3, ResponsePath::Naive) ==
                    ldp_histogram(img, 3, ResponsePath::Accelerated));
        }
    }
    SUBCASE("only k == 3 is accepted") {
        const GrayImage img = make_constant(3, 3, 0);
        CHECK_THROWS_AS(ldp_histogram(img, 2, ResponsePath::Naive), std::invalid_argument);
        CHECK_THROWS_AS(ldp_histogram(img, 4, ResponsePath::Accelerated),
                        std::invalid_argument);
    }
}

TEST_CASE("adding a constant to every pixel leaves codes unchanged") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::uint8_t> base(64);
        for (auto& p : base) {
            p = static_cast<std::uint8_t>(rng() % 200); // headroom for +55
        }
        const GrayImage img(8, 8, base);
        for (int c : {5, 55}) {
            std::vector<std::uint8_t> shifted(base.size());
            for (std::size_t i = 0; i < base.size(); ++i) {
                shifted[i] = static_cast<std::uint8_t>(base[i] + c);
            }
            const GrayImage shifted_img(8, 8, shifted);
            for (int x = 0; x < 8; ++x) {
                for (int y = 0; y < 8; ++y) {
                    CHECK(ldp_code(responses_naive(img, x, y)) ==
                          ldp_code(responses_naive(shifted_img, x, y)));
                }
            }
        }
    }
}

TEST_CASE("lbp_code") {
    SUBCASE("constant image codes every pixel as 255") {
        const GrayImage img = make_constant(4, 4, 9);
        for (int x = 0; x < 4; ++x) {
            for (int y = 0; y < 4; ++y) {
                CHECK(lbp_code(img, x, y) == 255);
            }
        }
    }
    SUBCASE("ramp center follows the clockwise bit order") {
        const GrayImage img(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
        CHECK(lbp_code(img, 1, 1) == 120);
    }
    SUBCASE("a strict local maximum codes as 0") {
        const GrayImage img(3, 3, {1, 1, 1, 1, 9, 1, 1, 1, 1});
        CHECK(lbp_code(img, 1, 1) == 0);
    }
    SUBCASE("eight comparisons accrue as eight additions") {
        const GrayImage img = make_random(5, 5, 1);
        OpCounter counter;
        lbp_code(img, 2, 2, BorderPolicy::Clamp, &counter);
        CHECK(counter.multiplications == 0);
        CHECK(counter.additions == 8);
    }
}

TEST_CASE("lbp_histogram") {
    SUBCASE("constant image concentrates at bin 255") {
        const LbpHistogram h = lbp_histogram(make_constant(10, 10, 3));
        CHECK(h.bins[255] == 100);
        CHECK(h.total() == 100);
    }
    SUBCASE("mass equals the pixel count") {
        std::mt19937 rng(51);
        for (int trial = 0; trial < 10; ++trial) {
            const int rows = 3 + static_cast<int>(rng() % 30);
            const int cols = 3 + static_cast<int>(rng() % 30);
            CHECK(lbp_histogram(make_random(rows, cols, rng())).total() ==
                  static_cast<std::uint64_t>(rows) * static_cast<std::uint64_t>(cols));
        }
    }
    SUBCASE("matches the oracle") {
        const GrayImage img = make_random(8, 8, 7);
        const LbpHistogram h = lbp_histogram(img);
        const auto expected = oracle::lbp_histogram(img);
        for (int c = 0; c < 256; ++c) {
            CHECK(h.bins[static_cast<std::size_t>(c)] ==
                  expected[static_cast<std::size_t>(c)]);
        }
    }
}
