#include "aldp/pgm.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

namespace aldp {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

// Next whitespace-delimited header token; '#' starts a comment running to
// end of line.
std::string next_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) {
                in.unget();
                break;
            }
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    return tok;
}

int parse_header_int(std::istream& in, const std::filesystem::path& path,
                     const char* field) {
    const std::string tok = next_token(in);
    if (tok.empty()) {
        fail(path, std::string("missing ") + field + " in header");
    }
    try {
        std::size_t used = 0;
        const int value = std::stoi(tok, &used);
        if (used != tok.size() || value < 0) {
            fail(path, std::string("malformed ") + field + " '" + tok + "'");
        }
        return value;
    } catch (const std::logic_error&) {
        fail(path, std::string("malformed ") + field + " '" + tok + "'");
    }
}

} // namespace

GrayImage load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(path, "cannot open file");
    }

    const std::string magic = next_token(in);
    if (magic != "P2" && magic != "P5") {
        fail(path, "not a PGM file (magic '" + magic + "')");
    }
    const int cols = parse_header_int(in, path, "width");
    const int rows = parse_header_int(in, path, "height");
    const int maxval = parse_header_int(in, path, "maxval");
    if (cols < 1 || rows < 1) {
        fail(path, "invalid dimensions " + std::to_string(cols) + "x" +
                       std::to_string(rows));
    }
    if (maxval < 1) {
        fail(path, "invalid maxval " + std::to_string(maxval));
    }
    if (maxval > 255) {
        fail(path, "unsupported bit depth (maxval " + std::to_string(maxval) + " > 255)");
    }

    const std::size_t count =
        static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    std::vector<std::uint8_t> px(count);

    if (magic == "P5") {
        // Exactly one whitespace byte separates the header from the payload.
        const int sep = in.get();
        if (sep == EOF || !std::isspace(sep)) {
            fail(path, "malformed header/payload separator");
        }
        in.read(reinterpret_cast<char*>(px.data()), static_cast<std::streamsize>(count));
        if (static_cast<std::size_t>(in.gcount()) != count) {
            fail(path, "truncated pixel payload");
        }
        for (std::uint8_t v : px) {
            if (v > maxval) {
                fail(path, "pixel value " + std::to_string(v) + " exceeds maxval");
            }
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const std::string tok = next_token(in);
            if (tok.empty()) {
                fail(path, "truncated pixel payload");
            }
            int value = -1;
            try {
                std::size_t used = 0;
                value = std::stoi(tok, &used);
                if (used != tok.size()) {
                    value = -1;
                }
            } catch (const std::logic_error&) {
                value = -1;
            }
            if (value < 0 || value > maxval) {
                fail(path, "malformed pixel value '" + tok + "'");
            }
            px[i] = static_cast<std::uint8_t>(value);
        }
    }
    return {rows, cols, std::move(px)};
}

void save_pgm(const std::filesystem::path& path, const GrayImage& img, PgmFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail(path, "cannot open file for writing");
    }
    if (format == PgmFormat::Binary) {
        out << "P5\n" << img.cols() << ' ' << img.rows() << "\n255\n";
        out.write(reinterpret_cast<const char*>(img.pixels().data()),
                  static_cast<std::streamsize>(img.pixel_count()));
    } else {
        out << "P2\n" << img.cols() << ' ' << img.rows() << "\n255\n";
        for (int x = 0; x < img.rows(); ++x) {
            for (int y = 0; y < img.cols(); ++y) {
                out << static_cast<int>(img.at(x, y)) << (y + 1 == img.cols() ? '\n' : ' ');
            }
        }
    }
    if (!out) {
        fail(path, "write failed");
    }
}

} // namespace aldp
