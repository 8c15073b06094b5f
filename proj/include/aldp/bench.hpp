#ifndef ALDP_BENCH_HPP
#define ALDP_BENCH_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "aldp/descriptors.hpp"
#include "aldp/image.hpp"

namespace aldp {

/// One timing row. `window` is 0 for whole-image extraction (rendered as
/// "none" in CSV, with grid_total 1). elapsed_s is the median of the repeat
/// samples; the op-count columns are deterministic per-pixel constants.
struct BenchRecord {
    std::string descriptor;
    int images = 0;
    int window = 0;
    int grid_total = 0;
    double elapsed_s = 0.0;
    int mults_per_pixel = 0;
    int adds_per_pixel = 0;
};

struct OpCountRow {
    std::string descriptor;
    int multiplications = 0;
    int additions = 0;
};

/// Per-pixel arithmetic constants measured with instrumented kernels on a
/// probe pixel (they are identical at every pixel). The naive directional
/// row must read exactly (72, 64) and the binary-pattern row exactly (0, 8);
/// the accelerated row is asserted to stay within (30, 46). Violations throw
/// std::logic_error.
std::array<OpCountRow, 3> op_count_report();

/// Per-pixel (multiplications, additions) for one descriptor, from the same
/// instrumented probe as op_count_report.
OpCountRow measured_ops(Descriptor descriptor);

/// Median wall-clock seconds for one execution of `work` over `repeats`
/// timed samples, after one untimed warm-up pass. Sub-resolution workloads
/// are batched and the batch time divided. Requires repeats >= 3.
double median_seconds(const std::function<void()>& work, int repeats);

/// Times whole-image feature extraction over growing prefixes of `corpus`:
/// one record per prefix size in `counts` (default 1,2,4,6,8,10) that does
/// not exceed the corpus size. Only extraction is timed. Requires a
/// non-empty corpus and repeats >= 3.
std::vector<BenchRecord> run_time_series(const std::vector<GrayImage>& corpus,
                                         Descriptor descriptor, int repeats,
                                         const std::vector<int>& counts = {1, 2, 4, 6,
                                                                           8, 10});

/// Times windowed extraction of `img` at each window side; records carry the
/// grid's total window count.
std::vector<BenchRecord> run_window_series(const GrayImage& img,
                                           const std::vector<int>& windows,
                                           Descriptor descriptor, int repeats);

/// Exact column set: descriptor,images,window,grid_total,elapsed_s,
/// mults_per_pixel,adds_per_pixel. Seconds printed with six decimals.
extern const char* const kBenchCsvHeader;

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

} // namespace aldp

#endif // ALDP_BENCH_HPP
