#include "aldp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "aldp/windowing.hpp"

namespace aldp {

namespace {

using Clock = std::chrono::steady_clock;

// A timed sample must span at least this long; faster workloads are batched.
constexpr double kMinSampleSeconds = 5e-3;

// Keeps extraction results observable so the timed loops cannot be elided.
volatile std::uint64_t g_sink = 0;

void sink(std::uint64_t v) {
    g_sink = g_sink + v;
}

void extract_whole(const GrayImage& img, Descriptor descriptor) {
    switch (descriptor) {
    case Descriptor::Lbp:
        sink(lbp_histogram(img).bins[255]);
        break;
    case Descriptor::Ldp:
        sink(ldp_histogram(img, 3, ResponsePath::Naive).bins[0]);
        break;
    case Descriptor::Aldp:
        sink(ldp_histogram(img, 3, ResponsePath::Accelerated).bins[0]);
        break;
    }
}

double time_once(const std::function<void()>& work) {
    const auto t0 = Clock::now();
    work();
    const auto t1 = Clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

double median_seconds(const std::function<void()>& work, int repeats) {
    if (repeats < 3) {
        throw std::invalid_argument("repeats must be >= 3");
    }
    // The warm-up pass doubles as batch calibration.
    const double first = time_once(work);
    int batch = 1;
    if (first < kMinSampleSeconds) {
        batch = static_cast<int>(std::ceil(kMinSampleSeconds / std::max(first, 1e-9)));
        batch = std::min(batch, 1000000);
    }
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(repeats));
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = Clock::now();
        for (int b = 0; b < batch; ++b) {
            work();
        }
        const auto t1 = Clock::now();
        samples.push_back(std::chrono::duration<double>(t1 - t0).count() / batch);
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    if (samples.size() % 2 == 1) {
        return samples[mid];
    }
    return 0.5 * (samples[mid - 1] + samples[mid]);
}

OpCountRow measured_ops(Descriptor descriptor) {
    // Counts are identical at every pixel; probe one interior pixel of a
    // small noise image.
    const GrayImage probe = make_random(8, 8, 12345);
    OpCounter counter;
    switch (descriptor) {
    case Descriptor::Lbp:
        lbp_code(probe, 4, 4, BorderPolicy::Clamp, &counter);
        break;
    case Descriptor::Ldp:
        responses_naive(probe, 4, 4, BorderPolicy::Clamp, &counter);
        break;
    case Descriptor::Aldp:
        responses_accelerated(column_terms(probe, 4, 4, BorderPolicy::Clamp, &counter),
                              &counter);
        break;
    }
    return {descriptor_name(descriptor), static_cast<int>(counter.multiplications),
            static_cast<int>(counter.additions)};
}

std::array<OpCountRow, 3> op_count_report() {
    const std::array<OpCountRow, 3> rows = {measured_ops(Descriptor::Aldp),
                                            measured_ops(Descriptor::Ldp),
                                            measured_ops(Descriptor::Lbp)};
    if (rows[1].multiplications != 72 || rows[1].additions != 64) {
        throw std::logic_error("naive directional kernel no longer reads (72, 64)");
    }
    if (rows[2].multiplications != 0 || rows[2].additions != 8) {
        throw std::logic_error("binary-pattern kernel no longer reads (0, 8)");
    }
    if (rows[0].multiplications > 30 || rows[0].additions > 46) {
        throw std::logic_error("accelerated kernel exceeds its (30, 46) budget");
    }
    return rows;
}

std::vector<BenchRecord> run_time_series(const std::vector<GrayImage>& corpus,
                                         Descriptor descriptor, int repeats,
                                         const std::vector<int>& counts) {
    if (corpus.empty()) {
        throw std::invalid_argument("corpus must not be empty");
    }
    const OpCountRow ops = measured_ops(descriptor);
    std::vector<BenchRecord> records;
    for (int count : counts) {
        if (count < 1 || count > static_cast<int>(corpus.size())) {
            continue;
        }
        const double elapsed = median_seconds(
            [&] {
                for (int i = 0; i < count; ++i) {
                    extract_whole(corpus[static_cast<std::size_t>(i)], descriptor);
                }
            },
            repeats);
        records.push_back({descriptor_name(descriptor), count, 0, 1, elapsed,
                           ops.multiplications, ops.additions});
    }
    return records;
}

std::vector<BenchRecord> run_window_series(const GrayImage& img,
                                           const std::vector<int>& windows,
                                           Descriptor descriptor, int repeats) {
    const OpCountRow ops = measured_ops(descriptor);
    std::vector<BenchRecord> records;
    for (int window : windows) {
        const WindowGrid grid = make_grid(img, window);
        const double elapsed = median_seconds(
            [&] {
                const auto features = windowed_features(img, window, descriptor);
                sink(features.size());
            },
            repeats);
        records.push_back({descriptor_name(descriptor), 1, window, grid.total(), elapsed,
                           ops.multiplications, ops.additions});
    }
    return records;
}

const char* const kBenchCsvHeader =
    "descriptor,images,window,grid_total,elapsed_s,mults_per_pixel,adds_per_pixel";

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << kBenchCsvHeader << '\n';
    for (const BenchRecord& r : records) {
        char seconds[32];
        std::snprintf(seconds, sizeof seconds, "%.6f", r.elapsed_s);
        out << r.descriptor << ',' << r.images << ',';
        if (r.window == 0) {
            out << "none";
        } else {
            out << r.window;
        }
        out << ',' << r.grid_total << ',' << seconds << ',' << r.mults_per_pixel << ','
            << r.adds_per_pixel << '\n';
    }
}

} // namespace aldp
