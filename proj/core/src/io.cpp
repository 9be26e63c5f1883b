#include "beltrami/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace beltrami {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[h & 0xf];
        h >>= 4;
    }
    return std::string(buf, 16);
}

void write_field_csv(const std::filesystem::path& path,
                     const std::vector<std::pair<std::string, std::string>>& meta,
                     const std::vector<FieldRow>& rows) {
    std::ofstream out(path, std::ios::binary); // binary: identical bytes everywhere
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    for (const auto& [key, value] : meta) {
        out << "# " << key << ": " << value << "\n";
    }
    out << "x,y,B1,B2,B3\n";
    for (const FieldRow& r : rows) {
        out << format_double(r.x) << ',' << format_double(r.y) << ','
            << format_double(r.B1) << ',' << format_double(r.B2) << ','
            << format_double(r.B3) << '\n';
    }
    if (!out) throw Error("write failed for " + path.string());
}

std::vector<FieldRow> read_field_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<FieldRow> rows;
    std::string line;
    bool seen_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!seen_header) {
            if (line != "x,y,B1,B2,B3") {
                throw Error(path.string() + ": unexpected CSV header '" + line + "'");
            }
            seen_header = true;
            continue;
        }
        FieldRow r{};
        double* fields[5] = {&r.x, &r.y, &r.B1, &r.B2, &r.B3};
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (int k = 0; k < 5; ++k) {
            const auto res = std::from_chars(p, end, *fields[k]);
            if (res.ec != std::errc{}) {
                throw Error(path.string() + ": malformed row '" + line + "'");
            }
            p = res.ptr;
            if (k < 4) {
                if (p == end || *p != ',') {
                    throw Error(path.string() + ": malformed row '" + line + "'");
                }
                ++p;
            }
        }
        rows.push_back(r);
    }
    if (!seen_header) throw Error(path.string() + ": missing CSV header");
    return rows;
}

} // namespace beltrami
