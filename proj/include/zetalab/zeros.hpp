// Tables of critical-line zero ordinates: ingestion, delta-neighborhood
// exclusion sets, and counting.
//
// Zeros are ingested from a text file (one decimal ordinate per line),
// never computed here; a separate scanner tool produces and validates the
// table shipped with the repository.  No off-critical-line zeros are known,
// so the beta >= sigma > 1/2 zero sets are treated as empty.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetalab/intervals.hpp"

namespace zetalab {

struct ZeroTable {
    std::vector<double> ordinates;  // strictly increasing, all > 14
    std::string source;

    void validate() const {
        if (ordinates.empty()) throw std::runtime_error("ZeroTable: empty table (" + source + ")");
        if (ordinates.front() <= 14.0)
            throw std::runtime_error("ZeroTable: first ordinate below sanity floor 14 (" + source + ")");
        for (std::size_t i = 1; i < ordinates.size(); ++i)
            if (!(ordinates[i] > ordinates[i - 1]))
                throw std::runtime_error("ZeroTable: ordinates not strictly increasing at line " +
                                         std::to_string(i + 1) + " (" + source + ")");
    }
};

// Plain text, one decimal ordinate per line, '#' comments and blank lines
// allowed.  strtod gives round-to-nearest parsing of the decimal strings.
inline ZeroTable load_zero_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_zero_table: cannot open " + path);
    ZeroTable z;
    z.source = path;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::size_t end;
        double gamma;
        try {
            gamma = std::stod(line.substr(pos), &end);
        } catch (const std::exception&) {
            throw std::runtime_error("load_zero_table: parse failure at '" + line + "' in " + path);
        }
        z.ordinates.push_back(gamma);
    }
    z.validate();
    return z;
}

// Union of (gamma - delta, gamma + delta) clipped to [t0, t1], merged.
inline IntervalSet neighborhoods(const ZeroTable& z, double delta, double t0, double t1) {
    if (!(delta > 0.0)) throw std::invalid_argument("neighborhoods: delta must be > 0");
    std::vector<std::pair<double, double>> raw;
    for (double g : z.ordinates) {
        if (g + delta <= t0 || g - delta >= t1) continue;
        raw.emplace_back(g - delta, g + delta);
    }
    IntervalSet s(std::move(raw));
    return s.clipped(t0, t1);
}

// #{gamma <= T}.
inline std::int64_t count_zeros(const ZeroTable& z, double T) {
    if (!(T > 0.0)) throw std::invalid_argument("count_zeros: T must be > 0");
    return std::upper_bound(z.ordinates.begin(), z.ordinates.end(), T) - z.ordinates.begin();
}

}  // namespace zetalab
