#include "aldp/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <thread>
#include <vector>

#include "aldp/kirsch.hpp"

namespace aldp {

namespace {

struct CorpusSpec {
    int rows;
    int cols;
    std::uint32_t seed;
};

// Image sizes and per-image seeds all derive from the master seed, so the
// corpus is identical across runs and thread counts.
std::vector<CorpusSpec> corpus_specs(int images, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<CorpusSpec> specs;
    specs.reserve(static_cast<std::size_t>(images));
    for (int i = 0; i < images; ++i) {
        const int rows = 3 + static_cast<int>(rng() % 62); // 3..64
        const int cols = 3 + static_cast<int>(rng() % 62);
        specs.push_back({rows, cols, rng()});
    }
    return specs;
}

} // namespace

VerifyResult verify_image(const GrayImage& img, std::optional<FaultInjection> fault,
                          int image_index) {
    VerifyResult result;
    result.images_checked = 1;
    for (int x = 0; x < img.rows(); ++x) {
        for (int y = 0; y < img.cols(); ++y) {
            const ResponseVector naive = responses_naive(img, x, y);
            ColumnTerms terms = column_terms(img, x, y);
            if (fault && fault->image_index == image_index && fault->x == x &&
                fault->y == y) {
                terms.a[static_cast<std::size_t>(fault->term_index)] += fault->delta;
            }
            const ResponseVector accel = responses_accelerated(terms);
            ++result.pixels_checked;
            for (int dir = 0; dir < 8; ++dir) {
                if (naive.m[dir] != accel.m[dir]) {
                    result.mismatch =
                        Mismatch{image_index, x, y, dir, naive.m[dir], accel.m[dir]};
                    return result;
                }
            }
        }
    }
    return result;
}

VerifyResult verify_equivalence(int images, std::uint32_t seed,
                                std::optional<FaultInjection> fault, int threads) {
    images = std::max(images, 1);
    const std::vector<CorpusSpec> specs = corpus_specs(images, seed);

    threads = std::clamp(threads, 1, images);
    std::vector<VerifyResult> partials(static_cast<std::size_t>(threads));

    auto run_range = [&](int begin, int end, VerifyResult& out) {
        for (int i = begin; i < end; ++i) {
            const auto& spec = specs[static_cast<std::size_t>(i)];
            const GrayImage img = make_random(spec.rows, spec.cols, spec.seed);
            VerifyResult one = verify_image(img, fault, i);
            out.images_checked += one.images_checked;
            out.pixels_checked += one.pixels_checked;
            if (one.mismatch) {
                out.mismatch = one.mismatch;
                return;
            }
        }
    };

    if (threads == 1) {
        run_range(0, images, partials[0]);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (images + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int begin = t * chunk;
            const int end = std::min(images, begin + chunk);
            pool.emplace_back(run_range, begin, end, std::ref(partials[static_cast<std::size_t>(t)]));
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    VerifyResult result;
    for (const VerifyResult& p : partials) {
        result.images_checked += p.images_checked;
        result.pixels_checked += p.pixels_checked;
        // Chunks cover ascending image ranges; the first chunk with a
        // mismatch holds the lowest-index one.
        if (!result.mismatch && p.mismatch) {
            result.mismatch = p.mismatch;
        }
    }
    return result;
}

} // namespace aldp
