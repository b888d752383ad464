// Smoothed Euler products P_N^k, their phases, Z_N = zeta/P_N, and partial
// Dirichlet sums f_N of zeta^k.
//
// Everything derives from the exponent sum
//   E_N(s) = sum_{2<=n<=N^2} Lambda_N(n) / (n^s log n),
// sampled once per grid with the rotor kernel:  P_N^k = exp(k E_N), and the
// canonical continuous phase representative is k Im E_N — the closed-form
// sine sum — wrapped only at the end, so no branch-cut bookkeeping is needed.
// Phases of zeta itself are taken pointwise as principal values; grid points
// near zeta zeros are masked instead of unwound.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zetalab/arith.hpp"
#include "zetalab/grid.hpp"
#include "zetalab/intervals.hpp"
#include "zetalab/rotor.hpp"

namespace zetalab {

// x reduced mod 2*pi into (-pi, pi].  IEEE remainder lands in [-pi, pi]
// (ties to even on the half-integer quotient), so only -pi needs moving.
inline double wrap_phase(double x) {
    double y = std::remainder(x, 2.0 * M_PI);
    if (y <= -M_PI) y += 2.0 * M_PI;
    return y;
}

// Real phase samples on a grid, with an optional exclusion mask.
struct PhaseSeries {
    TGrid grid;
    std::vector<double> theta;          // each unmasked value in (-pi, pi]
    std::vector<std::uint8_t> masked;   // empty = nothing masked

    PhaseSeries() = default;
    explicit PhaseSeries(const TGrid& g)
        : grid(g), theta(static_cast<std::size_t>(g.count), 0.0) {}

    bool is_masked(std::int64_t j) const {
        return !masked.empty() && masked[static_cast<std::size_t>(j)] != 0;
    }

    std::int64_t unmasked_count() const {
        if (masked.empty()) return grid.count;
        std::int64_t n = 0;
        for (std::uint8_t f : masked) n += (f == 0);
        return n;
    }

    void apply_mask(const IntervalSet& set) {
        if (set.empty()) return;
        if (masked.empty()) masked.assign(static_cast<std::size_t>(grid.count), 0);
        for (std::int64_t j = 0; j < grid.count; ++j)
            if (set.contains(grid.t(j))) masked[static_cast<std::size_t>(j)] = 1;
    }
};

// Grid-point mask flags for an interval set (1 = inside the set).
inline std::vector<std::uint8_t> mask_flags(const TGrid& grid, const IntervalSet& set) {
    std::vector<std::uint8_t> flags(static_cast<std::size_t>(grid.count), 0);
    for (std::int64_t j = 0; j < grid.count; ++j)
        if (set.contains(grid.t(j))) flags[static_cast<std::size_t>(j)] = 1;
    return flags;
}

// Rotor terms of the exponent sum: w = Lambda_N(n)/(n^sigma log n) over the
// prime powers n in [2, N^2].
inline std::vector<DirichletTerm> euler_exponent_terms(std::int64_t N, double sigma) {
    RealTable lam = smoothed_mangoldt_table(N);
    std::vector<DirichletTerm> terms;
    for (std::int64_t n = 2; n <= lam.n_max(); ++n) {
        if (lam(n) == 0.0) continue;
        const double nd = static_cast<double>(n);
        terms.push_back({lam(n) / (std::pow(nd, sigma) * std::log(nd)), std::log(nd)});
    }
    return terms;
}

// E_N(sigma + it) on the grid; the single expensive pass behind P_N and
// theta_{P_N}.  Reuse it when both are needed.
inline LineSeries euler_exponent_line(std::int64_t N, const TGrid& grid,
                                      std::int64_t chunk = kDefaultChunk, int threads = 1) {
    if (N < 2) throw std::invalid_argument("euler_exponent_line: N must be >= 2");
    LineSeries out(grid, "E_" + std::to_string(N));
    rotor_accumulate(euler_exponent_terms(N, grid.sigma), grid, out.samples, chunk, threads);
    return out;
}

// P_N^k = exp(k E_N) from a precomputed exponent line.
inline LineSeries p_n_from_exponent(const LineSeries& expo, int k) {
    if (k < 1) throw std::invalid_argument("p_n_from_exponent: k must be >= 1");
    LineSeries out(expo.grid, "P_N^" + std::to_string(k));
    for (std::size_t j = 0; j < expo.samples.size(); ++j)
        out.samples[j] = std::exp(static_cast<double>(k) * expo.samples[j]);
    return out;
}

// theta_{P_N^k} = wrap(k Im E_N) from a precomputed exponent line.
inline PhaseSeries theta_p_from_exponent(const LineSeries& expo, int k) {
    if (k < 1) throw std::invalid_argument("theta_p_from_exponent: k must be >= 1");
    PhaseSeries out(expo.grid);
    for (std::size_t j = 0; j < expo.samples.size(); ++j)
        out.theta[j] = wrap_phase(static_cast<double>(k) * expo.samples[j].imag());
    return out;
}

inline LineSeries p_n_line(std::int64_t N, int k, const TGrid& grid,
                           std::int64_t chunk = kDefaultChunk, int threads = 1) {
    return p_n_from_exponent(euler_exponent_line(N, grid, chunk, threads), k);
}

inline PhaseSeries theta_p_line(std::int64_t N, int k, const TGrid& grid,
                                std::int64_t chunk = kDefaultChunk, int threads = 1) {
    return theta_p_from_exponent(euler_exponent_line(N, grid, chunk, threads), k);
}

struct ZLine {
    LineSeries z;       // Z_N = zeta / P_N
    PhaseSeries theta;  // theta_{Z_N}, zero-neighborhood points masked
};

// Z_N samples and phases.  theta_{Z_N} = wrap(arg zeta - theta_{P_N}); the
// phases of zeta are principal values, so points inside the mask (usually
// delta-neighborhoods of zero ordinates) are flagged rather than trusted.
inline ZLine z_n_line(const LineSeries& zeta_series, const LineSeries& pn_series,
                      const IntervalSet& mask) {
    if (!zeta_series.grid.same_as(pn_series.grid))
        throw std::invalid_argument("z_n_line: grid mismatch");
    ZLine out{LineSeries(zeta_series.grid, "Z_N"), PhaseSeries(zeta_series.grid)};
    for (std::size_t j = 0; j < zeta_series.samples.size(); ++j) {
        out.z.samples[j] = zeta_series.samples[j] / pn_series.samples[j];
        out.theta.theta[j] =
            wrap_phase(std::arg(zeta_series.samples[j]) - std::arg(pn_series.samples[j]));
    }
    out.theta.apply_mask(mask);
    return out;
}

// f_N(sigma + it) = sum_{n<=N} d_k(n) n^{-sigma-it}.
inline LineSeries partial_sum_line(int k, std::int64_t N, const TGrid& grid,
                                   std::int64_t chunk = kDefaultChunk, int threads = 1) {
    if (k < 1) throw std::invalid_argument("partial_sum_line: k must be >= 1");
    if (N < 0) throw std::invalid_argument("partial_sum_line: N must be >= 0");
    LineSeries out(grid, "f_" + std::to_string(N));
    if (N == 0) return out;  // empty-sum convention: f_0 = 0
    IntTable dk = divisor_table(k, N);
    std::vector<DirichletTerm> terms;
    terms.reserve(static_cast<std::size_t>(N));
    for (std::int64_t n = 1; n <= N; ++n) {
        const double nd = static_cast<double>(n);
        terms.push_back({static_cast<double>(dk(n)) * std::pow(nd, -grid.sigma), std::log(nd)});
    }
    rotor_accumulate(terms, grid, out.samples, chunk, threads);
    return out;
}

}  // namespace zetalab
