// Finite unions of disjoint half-open intervals [a, b) on the positive axis.
// Models the exclusion sets S (delta-neighborhoods of zero ordinates) used
// to mask unstable phases and to measure mass concentration.
#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zetalab {

struct IntervalSet {
    // Sorted, pairwise disjoint [a, b) with a < b.
    std::vector<std::pair<double, double>> intervals;

    IntervalSet() = default;

    // Normalizes on construction: sorts, drops empty intervals, merges overlaps.
    explicit IntervalSet(std::vector<std::pair<double, double>> raw) {
        for (auto& [a, b] : raw) {
            if (a < 0.0) a = 0.0;
            if (b < 0.0) b = 0.0;
        }
        std::sort(raw.begin(), raw.end());
        for (const auto& [a, b] : raw) {
            if (!(a < b)) continue;
            if (!intervals.empty() && a <= intervals.back().second)
                intervals.back().second = std::max(intervals.back().second, b);
            else
                intervals.emplace_back(a, b);
        }
    }

    bool empty() const { return intervals.empty(); }

    double total_measure() const {
        double m = 0.0;
        for (const auto& [a, b] : intervals) m += b - a;
        return m;
    }

    bool contains(double t) const {
        auto it = std::upper_bound(intervals.begin(), intervals.end(),
                                   std::make_pair(t, std::numeric_limits<double>::infinity()));
        if (it == intervals.begin()) return false;
        --it;
        return t >= it->first && t < it->second;
    }

    // Intersection with [lo, hi).
    IntervalSet clipped(double lo, double hi) const {
        std::vector<std::pair<double, double>> out;
        for (const auto& [a, b] : intervals) {
            double a2 = std::max(a, lo), b2 = std::min(b, hi);
            if (a2 < b2) out.emplace_back(a2, b2);
        }
        return IntervalSet(std::move(out));
    }

    // Union with another set.
    IntervalSet merged(const IntervalSet& other) const {
        std::vector<std::pair<double, double>> out = intervals;
        out.insert(out.end(), other.intervals.begin(), other.intervals.end());
        return IntervalSet(std::move(out));
    }
};

}  // namespace zetalab
