// File emission: CSV (17 significant digits, bit round-trip for doubles),
// a compact binary series format, JSON for estimate records, and a small
// content hash for input provenance.
#pragma once

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetalab/arith.hpp"
#include "zetalab/approximants.hpp"
#include "zetalab/grid.hpp"
#include "zetalab/meanvalue.hpp"
#include "zetalab/stats.hpp"

namespace zetalab {

// %.17g round-trips IEEE doubles exactly through strtod.
inline std::string format_g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace detail {

inline std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

}  // namespace detail

template <typename T>
inline void write_coeff_csv(const CoeffTable<T>& table, const std::string& path) {
    std::ofstream out = detail::open_out(path);
    out << "n,value\n";
    for (std::int64_t n = 1; n <= table.n_max(); ++n) {
        if constexpr (std::is_same_v<T, double>)
            out << n << ',' << format_g17(table(n)) << '\n';
        else
            out << n << ',' << table(n) << '\n';
    }
}

inline void write_line_csv(const LineSeries& series, const std::string& path) {
    std::ofstream out = detail::open_out(path);
    out << "t,re,im\n";
    for (std::int64_t j = 0; j < series.grid.count; ++j)
        out << format_g17(series.grid.t(j)) << ',' << format_g17(series[j].real()) << ','
            << format_g17(series[j].imag()) << '\n';
}

// Binary series: 16-byte header (8-byte magic, u32 version, u32 count),
// then count little-endian f64 (re, im) pairs.
inline constexpr char kLineMagic[8] = {'Z', 'E', 'T', 'A', 'L', 'I', 'N', 'E'};

inline void write_line_binary(const LineSeries& series, const std::string& path) {
    static_assert(std::endian::native == std::endian::little,
                  "binary export assumes a little-endian host");
    std::ofstream out = detail::open_out(path, std::ios::out | std::ios::binary);
    const std::uint32_t version = 1;
    const std::uint32_t count = static_cast<std::uint32_t>(series.grid.count);
    out.write(kLineMagic, 8);
    out.write(reinterpret_cast<const char*>(&version), 4);
    out.write(reinterpret_cast<const char*>(&count), 4);
    out.write(reinterpret_cast<const char*>(series.samples.data()),
              static_cast<std::streamsize>(series.samples.size() * sizeof(cplx)));
}

inline std::vector<cplx> read_line_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    char magic[8];
    std::uint32_t version = 0, count = 0;
    in.read(magic, 8);
    in.read(reinterpret_cast<char*>(&version), 4);
    in.read(reinterpret_cast<char*>(&count), 4);
    if (!in || std::memcmp(magic, kLineMagic, 8) != 0 || version != 1)
        throw std::runtime_error("bad binary series header: " + path);
    std::vector<cplx> samples(count);
    in.read(reinterpret_cast<char*>(samples.data()),
            static_cast<std::streamsize>(count * sizeof(cplx)));
    if (!in) throw std::runtime_error("truncated binary series: " + path);
    return samples;
}

inline void write_phase_csv(const PhaseSeries& series, const std::string& path) {
    std::ofstream out = detail::open_out(path);
    out << "t,theta,masked\n";
    for (std::int64_t j = 0; j < series.grid.count; ++j)
        out << format_g17(series.grid.t(j)) << ','
            << format_g17(series.theta[static_cast<std::size_t>(j)]) << ','
            << (series.is_masked(j) ? 1 : 0) << '\n';
}

inline void write_histogram_csv(const Histogram& hist, const std::string& path) {
    std::ofstream out = detail::open_out(path);
    out << "bin_lo,bin_hi,mass\n";
    for (std::size_t b = 0; b < hist.mass.size(); ++b)
        out << format_g17(hist.bin_lo[b]) << ',' << format_g17(hist.bin_hi[b]) << ','
            << format_g17(hist.mass[b]) << '\n';
}

inline nlohmann::json estimate_to_json(const EstimateRecord& rec) {
    nlohmann::json j;
    j["value_re"] = rec.value.real();
    j["value_im"] = rec.value.imag();
    j["raw"] = rec.raw;
    j["error_proxy"] = rec.error_proxy;
    j["params"] = nlohmann::json::object();
    for (const auto& [key, val] : rec.params) j["params"][key] = val;
    return j;
}

// FNV-1a 64-bit, for content hashes of input files embedded in reports.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot hash missing file: " + path);
    std::vector<char> buf(1 << 16);
    std::uint64_t h = 14695981039346656037ull;
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[static_cast<std::size_t>(i)]);
            h *= 1099511628211ull;
        }
    }
    return h;
}

}  // namespace zetalab
