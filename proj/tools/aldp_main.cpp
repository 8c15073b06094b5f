// Command-line front end: extraction, equivalence verification and
// benchmarking for the LBP / LDP / ALDP texture descriptors.
//
// Exit codes: 0 success, 1 verification or assertion failure, 2 usage error.
// Data goes to stdout (or --out); diagnostics go to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "aldp/bench.hpp"
#include "aldp/descriptors.hpp"
#include "aldp/pgm.hpp"
#include "aldp/verify.hpp"
#include "aldp/windowing.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct OutStream {
    std::ofstream file;
    std::ostream* out = &std::cout;

    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) {
                throw std::runtime_error("cannot open output file " + path);
            }
            out = &file;
        }
    }

    std::ostream& get() { return *out; }
};

std::vector<std::uint64_t> whole_image_bins(const aldp::GrayImage& img,
                                            aldp::Descriptor descriptor) {
    using aldp::Descriptor;
    if (descriptor == Descriptor::Lbp) {
        const auto h = aldp::lbp_histogram(img);
        return {h.bins.begin(), h.bins.end()};
    }
    const auto path = descriptor == Descriptor::Ldp ? aldp::ResponsePath::Naive
                                                    : aldp::ResponsePath::Accelerated;
    const auto h = aldp::ldp_histogram(img, 3, path);
    return {h.bins.begin(), h.bins.end()};
}

void write_feature_header(std::ostream& out, aldp::Descriptor descriptor) {
    out << "identifier,descriptor";
    const int bins = descriptor == aldp::Descriptor::Lbp ? 256 : 56;
    for (int i = 0; i < bins; ++i) {
        out << ",bin_" << i;
    }
    out << '\n';
}

void write_feature_row(std::ostream& out, const std::string& identifier,
                       aldp::Descriptor descriptor,
                       const std::vector<std::uint64_t>& bins) {
    out << identifier << ',' << aldp::descriptor_name(descriptor);
    for (std::uint64_t b : bins) {
        out << ',' << b;
    }
    out << '\n';
}

int cmd_extract(const std::vector<std::string>& inputs, const std::string& descriptor_name,
                int window, const std::string& out_path) {
    const aldp::Descriptor descriptor = aldp::parse_descriptor(descriptor_name);
    OutStream out(out_path);
    write_feature_header(out.get(), descriptor);
    for (const std::string& input : inputs) {
        const aldp::GrayImage img = aldp::load_pgm(input);
        if (window > 0) {
            const auto features = aldp::windowed_features(img, window, descriptor);
            for (std::size_t w = 0; w < features.size(); ++w) {
                write_feature_row(out.get(), input + "#w" + std::to_string(w), descriptor,
                                  features[w]);
            }
        } else {
            write_feature_row(out.get(), input, descriptor, whole_image_bins(img, descriptor));
        }
    }
    return kExitOk;
}

int cmd_verify(int images, std::uint32_t seed, bool parallel, bool inject_fault) {
    std::optional<aldp::FaultInjection> fault;
    if (inject_fault) {
        // Perturb one column term at a deterministic pixel of the first image.
        fault = aldp::FaultInjection{0, 1, 1, 0, 1};
    }
    const int threads =
        parallel ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency())) : 1;
    const aldp::VerifyResult result = aldp::verify_equivalence(images, seed, fault, threads);

    if (!result.ok()) {
        const aldp::Mismatch& mm = *result.mismatch;
        std::cout << "MISMATCH image " << mm.image_index << " pixel (" << mm.x << ","
                  << mm.y << ") direction " << mm.direction << ": naive " << mm.naive_value
                  << " != accelerated " << mm.accelerated_value << '\n';
        return kExitFailure;
    }

    const auto ops = aldp::op_count_report();
    std::cout << "equivalence OK: " << result.images_checked << " images, "
              << result.pixels_checked << " pixels, 8 directions each\n";
    std::cout << "op counts per pixel:";
    for (const auto& row : ops) {
        std::cout << ' ' << row.descriptor << " (" << row.multiplications << " mul, "
                  << row.additions << " add)";
    }
    std::cout << '\n';
    return kExitOk;
}

int cmd_bench(const std::string& series, int size, const std::vector<int>& counts,
              const std::vector<int>& windows, int repeats, std::uint32_t seed,
              const std::string& descriptor_filter, const std::string& out_path) {
    std::vector<aldp::Descriptor> descriptors = {
        aldp::Descriptor::Lbp, aldp::Descriptor::Ldp, aldp::Descriptor::Aldp};
    if (!descriptor_filter.empty()) {
        descriptors = {aldp::parse_descriptor(descriptor_filter)};
    }

    std::vector<aldp::BenchRecord> records;
    if (series == "images") {
        const int side = size > 0 ? size : 260;
        int corpus_size = 1;
        for (int c : counts) {
            corpus_size = std::max(corpus_size, c);
        }
        std::vector<aldp::GrayImage> corpus;
        corpus.reserve(static_cast<std::size_t>(corpus_size));
        for (int i = 0; i < corpus_size; ++i) {
            corpus.push_back(aldp::make_random(side, side, seed + static_cast<std::uint32_t>(i)));
        }
        for (aldp::Descriptor d : descriptors) {
            const auto rows = aldp::run_time_series(corpus, d, repeats, counts);
            records.insert(records.end(), rows.begin(), rows.end());
        }
    } else if (series == "window") {
        const int side = size > 0 ? size : 300;
        const aldp::GrayImage img = aldp::make_random(side, side, seed);
        for (aldp::Descriptor d : descriptors) {
            const auto rows = aldp::run_window_series(img, windows, d, repeats);
            records.insert(records.end(), rows.begin(), rows.end());
        }
    } else {
        throw CLI::ValidationError("--series", "must be 'images' or 'window'");
    }

    OutStream out(out_path);
    aldp::write_csv(out.get(), records);
    return kExitOk;
}

int cmd_compare(const std::vector<std::string>& inputs, std::uint32_t seed) {
    bool all_ok = true;
    auto check_one = [&](const std::string& label, const aldp::GrayImage& img) {
        const aldp::VerifyResult result = aldp::verify_image(img);
        const bool hist_equal = aldp::ldp_histogram(img, 3, aldp::ResponsePath::Naive) ==
                                aldp::ldp_histogram(img, 3, aldp::ResponsePath::Accelerated);
        if (result.ok() && hist_equal) {
            std::cout << label << ": identical (" << result.pixels_checked
                      << " pixels, 8 directions, 56 bins)\n";
        } else {
            all_ok = false;
            if (result.mismatch) {
                const aldp::Mismatch& mm = *result.mismatch;
                std::cout << label << ": MISMATCH pixel (" << mm.x << "," << mm.y
                          << ") direction " << mm.direction << ": naive " << mm.naive_value
                          << " != accelerated " << mm.accelerated_value << '\n';
            } else {
                std::cout << label << ": MISMATCH in histogram bins\n";
            }
        }
    };

    if (inputs.empty()) {
        check_one("seeded-256x256", aldp::make_random(256, 256, seed));
    } else {
        for (const std::string& input : inputs) {
            check_one(input, aldp::load_pgm(input));
        }
    }
    return all_ok ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"LBP/LDP/ALDP texture descriptor extraction and benchmarking"};
    app.require_subcommand(1);

    // extract
    auto* extract = app.add_subcommand("extract", "Extract feature histograms from PGM images");
    std::vector<std::string> extract_inputs;
    std::string extract_descriptor = "aldp";
    int extract_window = 0;
    std::string extract_out;
    extract->add_option("inputs", extract_inputs, "PGM files")->required();
    extract->add_option("--descriptor", extract_descriptor, "lbp, ldp or aldp");
    extract->add_option("--window", extract_window, "window side for tiled extraction");
    extract->add_option("--out", extract_out, "output CSV path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Check naive vs accelerated equivalence");
    int verify_images = 1000;
    std::uint32_t verify_seed = 42;
    bool verify_parallel = false;
    bool verify_fault = false;
    verify->add_option("--images", verify_images, "number of seeded images (default 1000)");
    verify->add_option("--seed", verify_seed, "corpus seed");
    verify->add_flag("--parallel", verify_parallel, "spread the sweep across hardware threads");
    verify->add_flag("--inject-fault", verify_fault)->group(""); // test harness hook

    // bench
    auto* bench = app.add_subcommand("bench", "Time extraction and emit a CSV report");
    std::string bench_series = "images";
    int bench_size = 0;
    std::vector<int> bench_counts = {1, 2, 4, 6, 8, 10};
    std::vector<int> bench_windows = {25, 50, 100};
    int bench_repeats = 5;
    std::uint32_t bench_seed = 42;
    std::string bench_descriptor;
    std::string bench_out;
    bench->add_option("--series", bench_series, "'images' or 'window'");
    bench->add_option("--size", bench_size, "image side (default 260 for images, 300 for window)");
    bench->add_option("--counts", bench_counts, "image-count steps")->delimiter(',');
    bench->add_option("--windows", bench_windows, "window sides")->delimiter(',');
    bench->add_option("--repeats", bench_repeats, "timed repeats per point (min 3, default 5)");
    bench->add_option("--seed", bench_seed, "corpus seed");
    bench->add_option("--descriptor", bench_descriptor, "restrict to one descriptor");
    bench->add_option("--out", bench_out, "output CSV path (default stdout)");

    // compare
    auto* compare = app.add_subcommand("compare",
                                       "Compare both response paths on the given images");
    std::vector<std::string> compare_inputs;
    std::uint32_t compare_seed = 42;
    compare->add_option("inputs", compare_inputs, "PGM files (a seeded image when omitted)");
    compare->add_option("--seed", compare_seed, "seed for the generated image");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (extract->parsed()) {
            if (extract_window != 0 && extract_window < 3) {
                std::cerr << "error: --window must be >= 3\n";
                return kExitUsage;
            }
            return cmd_extract(extract_inputs, extract_descriptor, extract_window,
                               extract_out);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_images, verify_seed, verify_parallel, verify_fault);
        }
        if (bench->parsed()) {
            if (bench_repeats < 3) {
                std::cerr << "error: --repeats must be at least 3\n";
                return kExitUsage;
            }
            return cmd_bench(bench_series, bench_size, bench_counts, bench_windows,
                             bench_repeats, bench_seed, bench_descriptor, bench_out);
        }
        if (compare->parsed()) {
            return cmd_compare(compare_inputs, compare_seed);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
