// Time-average functionals on line series: inner products, moments, Fourier
// coefficients, Besicovitch distances.
//
// Integrals use composite Simpson on the uniform grid.  Masked points are
// handled by integrating each maximal unmasked run separately and dividing
// by the retained measure; runs shorter than a Simpson panel fall back to
// the trapezoid rule (or contribute nothing if they are single points).
// Every estimate carries a dyadic self-consistency error proxy: half the
// change when the integration range shrinks to its first half.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "zetalab/approximants.hpp"
#include "zetalab/grid.hpp"
#include "zetalab/rotor.hpp"

namespace zetalab {

// A scalar estimate with provenance: enough parameters to re-run bit-exactly.
struct EstimateRecord {
    cplx value{0.0, 0.0};      // the normalized (time-averaged) estimate
    double raw = 0.0;          // un-normalized integral, when meaningful
    double error_proxy = 0.0;  // half-range over the trailing dyadic window
    std::map<std::string, double> params;
};

namespace detail {

// Composite Simpson over one run of consecutive samples, step h.
// Odd-length runs use pure Simpson; even-length runs close with one
// trapezoid panel; single points carry no measure.
template <typename T>
T simpson_run(const T* v, std::int64_t len, double h) {
    if (len < 2) return T{};
    if (len == 2) return (h / 2.0) * (v[0] + v[1]);
    const std::int64_t simpson_len = (len % 2 == 1) ? len : len - 1;
    T odd{}, even{};
    for (std::int64_t j = 1; j < simpson_len - 1; j += 2) odd += v[j];
    for (std::int64_t j = 2; j < simpson_len - 1; j += 2) even += v[j];
    T total = (h / 3.0) * (v[0] + 4.0 * odd + 2.0 * even + v[simpson_len - 1]);
    if (simpson_len != len) total += (h / 2.0) * (v[len - 2] + v[len - 1]);
    return total;
}

// Integral and retained measure of masked samples over [j0, j1).
template <typename T>
std::pair<T, double> integrate_runs(const std::vector<T>& v, const std::vector<std::uint8_t>& mask,
                                    double h, std::int64_t j0, std::int64_t j1) {
    T integral{};
    double measure = 0.0;
    if (mask.empty()) {
        integral = simpson_run(v.data() + j0, j1 - j0, h);
        measure = static_cast<double>(j1 - j0 - 1) * h;
        return {integral, measure};
    }
    std::int64_t j = j0;
    while (j < j1) {
        while (j < j1 && mask[static_cast<std::size_t>(j)]) ++j;
        std::int64_t run = j;
        while (run < j1 && !mask[static_cast<std::size_t>(run)]) ++run;
        if (run - j >= 2) {
            integral += simpson_run(v.data() + j, run - j, h);
            measure += static_cast<double>(run - j - 1) * h;
        }
        j = run;
    }
    return {integral, measure};
}

// Normalized estimate over the whole grid plus the dyadic error proxy.
template <typename T>
EstimateRecord estimate_from_samples(const std::vector<T>& v,
                                     const std::vector<std::uint8_t>& mask, const TGrid& grid) {
    if (grid.count < 3) throw std::invalid_argument("estimate: fewer than 3 grid points");
    auto [full, full_measure] = integrate_runs(v, mask, grid.h, 0, grid.count);
    if (full_measure <= 0.0) throw std::invalid_argument("estimate: no retained measure");
    EstimateRecord rec;
    rec.value = cplx(full) / full_measure;
    if constexpr (std::is_same_v<T, double>)
        rec.raw = full;
    else
        rec.raw = std::abs(cplx(full));
    std::int64_t half = grid.count_upto(grid.t1() / 2.0);
    if (half < 3) half = grid.count / 2 + 1;
    if (half >= 3) {
        auto [part, part_measure] = integrate_runs(v, mask, grid.h, 0, half);
        if (part_measure > 0.0)
            rec.error_proxy = 0.5 * std::abs(cplx(full) / full_measure - cplx(part) / part_measure);
    }
    rec.params["t0"] = grid.t0;
    rec.params["T"] = grid.t1();
    rec.params["h"] = grid.h;
    rec.params["sigma"] = grid.sigma;
    rec.params["retained_measure"] = full_measure;
    return rec;
}

}  // namespace detail

// <f, g> = (1/measure) integral of f conj(g) over unmasked runs.
inline EstimateRecord mean_inner(const LineSeries& f, const LineSeries& g,
                                 const std::vector<std::uint8_t>& mask = {}) {
    if (!f.grid.same_as(g.grid)) throw std::invalid_argument("mean_inner: grid mismatch");
    std::vector<cplx> prod(f.samples.size());
    for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = f.samples[j] * std::conj(g.samples[j]);
    return detail::estimate_from_samples(prod, mask, f.grid);
}

// M_k = integral of |zeta|^{2k}; value holds the normalized M_k / measure,
// raw holds the integral itself.
inline EstimateRecord moment(int k, const LineSeries& series,
                             const std::vector<std::uint8_t>& mask = {}) {
    if (k < 1) throw std::invalid_argument("moment: k must be >= 1");
    std::vector<double> integrand(series.samples.size());
    for (std::size_t j = 0; j < integrand.size(); ++j) {
        const double a2 = std::norm(series.samples[j]);
        double p = a2;
        for (int i = 1; i < k; ++i) p *= a2;
        integrand[j] = p;
    }
    EstimateRecord rec = detail::estimate_from_samples(integrand, mask, series.grid);
    rec.params["k"] = k;
    return rec;
}

// <f, e_lambda> = (1/measure) integral of f(t) e^{-i lambda t} dt.
inline EstimateRecord fourier_coeff(const LineSeries& series, double lambda,
                                    const std::vector<std::uint8_t>& mask = {}) {
    if (std::abs(lambda) > series.grid.nyquist())
        throw std::invalid_argument("fourier_coeff: |lambda| exceeds the grid Nyquist bound pi/h");
    std::vector<cplx> kernel = rotor_sum({{1.0, lambda}}, series.grid);  // e^{-i lambda t}
    std::vector<cplx> prod(series.samples.size());
    for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = series.samples[j] * kernel[j];
    EstimateRecord rec = detail::estimate_from_samples(prod, mask, series.grid);
    rec.params["lambda"] = lambda;
    return rec;
}

// ||zeta^k - f_N||^2 estimate.
inline EstimateRecord besicovitch_dist2(int k, std::int64_t N, const LineSeries& zeta_series,
                                        std::int64_t chunk = kDefaultChunk, int threads = 1) {
    LineSeries zk = pow_line(zeta_series, k);
    LineSeries fn = partial_sum_line(k, N, zeta_series.grid, chunk, threads);
    LineSeries diff(zeta_series.grid, "zeta^k-f_N");
    for (std::size_t j = 0; j < diff.samples.size(); ++j)
        diff.samples[j] = zk.samples[j] - fn.samples[j];
    EstimateRecord rec = mean_inner(diff, diff);
    rec.params["k"] = k;
    rec.params["N"] = static_cast<double>(N);
    return rec;
}

}  // namespace zetalab
