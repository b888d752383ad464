// Vertical-line grids {sigma + it : t = t0 + j*h} and complex sample series.
//
// Grids start at t0 >= 1; the coefficient integrals downstream run from 1,
// and staying away from s = 1 keeps the pole out of every experiment.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetalab {

using cplx = std::complex<double>;

struct TGrid {
    double sigma = 0.0;  // real part, in (0, 1]
    double t0 = 1.0;     // first ordinate, >= 1
    double h = 0.0;      // step, > 0
    std::int64_t count = 0;

    TGrid() = default;

    // Grid covering [t0, t1]: count = floor((t1-t0)/h) + 1.
    TGrid(double sigma_, double t0_, double t1_, double h_)
        : sigma(sigma_), t0(t0_), h(h_) {
        if (!(sigma > 0.0 && sigma <= 1.0)) throw std::invalid_argument("TGrid: sigma must be in (0,1]");
        if (!(t0 >= 1.0)) throw std::invalid_argument("TGrid: t0 must be >= 1");
        if (!(t1_ > t0_)) throw std::invalid_argument("TGrid: t1 must exceed t0");
        if (!(h > 0.0)) throw std::invalid_argument("TGrid: h must be > 0");
        count = static_cast<std::int64_t>(std::floor((t1_ - t0_) / h_)) + 1;
    }

    static TGrid with_count(double sigma_, double t0_, double h_, std::int64_t count_) {
        if (count_ < 1) throw std::invalid_argument("TGrid: count must be >= 1");
        TGrid g;
        g.sigma = sigma_;
        g.t0 = t0_;
        g.h = h_;
        g.count = count_;
        if (!(g.sigma > 0.0 && g.sigma <= 1.0)) throw std::invalid_argument("TGrid: sigma must be in (0,1]");
        if (!(g.t0 >= 1.0)) throw std::invalid_argument("TGrid: t0 must be >= 1");
        if (!(g.h > 0.0)) throw std::invalid_argument("TGrid: h must be > 0");
        return g;
    }

    double t(std::int64_t j) const { return t0 + static_cast<double>(j) * h; }
    double t1() const { return t(count - 1); }

    // Largest |frequency| resolvable downstream: h * freq must stay below pi.
    double nyquist() const { return M_PI / h; }

    bool same_as(const TGrid& o) const {
        return sigma == o.sigma && t0 == o.t0 && h == o.h && count == o.count;
    }

    // First count' points of this grid (shared t0; used to reuse long sweeps).
    TGrid prefix(std::int64_t count_) const {
        if (count_ < 1 || count_ > count) throw std::invalid_argument("TGrid::prefix: bad count");
        return with_count(sigma, t0, h, count_);
    }

    // Number of grid points with t <= t_hi.
    std::int64_t count_upto(double t_hi) const {
        if (t_hi < t0) return 0;
        std::int64_t n = static_cast<std::int64_t>(std::floor((t_hi - t0) / h)) + 1;
        return n > count ? count : n;
    }
};

// Complex samples on a grid, with a provenance label ("zeta", "P_N^k", ...).
struct LineSeries {
    TGrid grid;
    std::vector<cplx> samples;
    std::string label;

    LineSeries() = default;
    LineSeries(const TGrid& g, std::string lab)
        : grid(g), samples(static_cast<std::size_t>(g.count)), label(std::move(lab)) {}

    cplx& operator[](std::int64_t j) { return samples[static_cast<std::size_t>(j)]; }
    const cplx& operator[](std::int64_t j) const { return samples[static_cast<std::size_t>(j)]; }

    void check_finite() const {
        for (const cplx& z : samples)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::runtime_error("LineSeries '" + label + "': non-finite sample");
    }

    LineSeries prefix(std::int64_t count_) const {
        LineSeries out(grid.prefix(count_), label);
        std::copy(samples.begin(), samples.begin() + count_, out.samples.begin());
        return out;
    }
};

// Pointwise k-th power.
inline LineSeries pow_line(const LineSeries& f, int k) {
    if (k < 1) throw std::invalid_argument("pow_line: k must be >= 1");
    LineSeries out(f.grid, f.label + "^" + std::to_string(k));
    for (std::size_t j = 0; j < f.samples.size(); ++j) {
        cplx p = f.samples[j];
        cplx acc = 1.0;
        int e = k;
        while (e > 0) {  // binary powering keeps rounding flat in k
            if (e & 1) acc *= p;
            p *= p;
            e >>= 1;
        }
        out.samples[j] = acc;
    }
    return out;
}

}  // namespace zetalab
