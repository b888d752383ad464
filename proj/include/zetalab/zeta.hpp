// Riemann zeta on vertical lines in the strip, by Euler-Maclaurin summation:
//
//   zeta(s) = sum_{n=1}^{M} n^{-s} + M^{1-s}/(s-1) - M^{-s}/2
//           + sum_{v=1}^{8} B_{2v}/(2v)! (prod_{j=0}^{2v-2}(s+j)) M^{-s-2v+1} + R
//
// with M >= 0.7|t|, where the asymptotic correction tail decreases and the
// remainder R is estimated by the first omitted (v=9) term.  Grids use the
// rotor kernel for the main sum (fixed M for the whole grid) plus a direct
// per-point correction pass.  A Borwein-style alternating eta series gives a
// fully independent second route for cross-validation at moderate t.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zetalab/grid.hpp"
#include "zetalab/rotor.hpp"

namespace zetalab {

namespace detail {

// B_{2v}/(2v)! for v = 1..9; 9 is used only for the remainder estimate.
inline const double* em_coeffs() {
    static const double b2v[9] = {1.0 / 6,   -1.0 / 30,      1.0 / 42,  -1.0 / 30, 5.0 / 66,
                                  -691.0 / 2730, 7.0 / 6,    -3617.0 / 510, 43867.0 / 798};
    static double coef[9];
    static bool init = [] {
        double fact = 1.0;
        for (int v = 1; v <= 9; ++v) {
            fact *= (2 * v - 1) * (2 * v);
            coef[v - 1] = b2v[v - 1] / fact;
        }
        return true;
    }();
    (void)init;
    return coef;
}

// Magnitude of the first omitted correction term at s = sigma + it,
// times a safety factor: the asymptotic tail is decreasing for M >= 0.7|t|,
// so this dominates the true remainder up to a small constant.
inline double em_remainder_bound(double sigma, double t, std::int64_t M) {
    double prod = 1.0;
    for (int j = 0; j <= 16; ++j) prod *= std::hypot(sigma + j, t);
    return 4.0 * std::abs(em_coeffs()[8]) * prod *
           std::pow(static_cast<double>(M), -sigma - 17.0);
}

// Smallest main-sum cutoff meeting tol at (sigma, t), starting at 0.7|t|.
inline std::int64_t em_cutoff(double sigma, double t, double tol) {
    std::int64_t M = std::max<std::int64_t>(16, static_cast<std::int64_t>(std::ceil(0.7 * std::abs(t))));
    while (em_remainder_bound(sigma, t, M) > tol) {
        if (M > (std::int64_t{1} << 40))
            throw std::domain_error("zeta: tol unattainable at this precision");
        M *= 2;
    }
    return M;
}

// Correction terms beyond the main sum, at a single point.
inline cplx em_corrections(double sigma, double t, std::int64_t M) {
    const cplx s(sigma, t);
    const double Md = static_cast<double>(M);
    double c, sn;
    seed_rotation(t, std::log(Md), c, sn);               // exp(-i t log M)
    const cplx Ms = std::pow(Md, -sigma) * cplx(c, sn);  // M^{-s}
    cplx total = Ms * Md / (s - 1.0) - 0.5 * Ms;
    const double* coef = em_coeffs();
    cplx poly = s;                       // prod_{j=0}^{2v-2} (s+j), v = 1
    double Mpow = 1.0 / Md;              // M^{1-2v}, v = 1
    const double Minv2 = 1.0 / (Md * Md);
    for (int v = 1; v <= 8; ++v) {
        total += coef[v - 1] * poly * Ms * Mpow;
        poly *= (s + cplx(2.0 * v - 1.0, 0.0)) * (s + cplx(2.0 * v, 0.0));
        Mpow *= Minv2;
    }
    return total;
}

}  // namespace detail

// zeta(sigma + it) with absolute error <= tol, for sigma in (0, 2], s != 1.
// Negative t is handled by the reflection zeta(conj s) = conj(zeta(s)).
inline cplx zeta_point(cplx s, double tol = 1e-10) {
    if (s.imag() < 0.0) return std::conj(zeta_point(std::conj(s), tol));
    const double sigma = s.real(), t = s.imag();
    if (!(sigma > 0.0 && sigma <= 2.0)) throw std::domain_error("zeta_point: Re s must be in (0,2]");
    if (s == cplx(1.0, 0.0)) throw std::domain_error("zeta_point: pole at s = 1");
    if (!(tol >= 1e-14)) throw std::domain_error("zeta_point: tol unattainable in double precision");
    const std::int64_t M = detail::em_cutoff(sigma, t, tol);
    cplx sum = 0.0;
    for (std::int64_t n = M; n >= 1; --n) {  // ascending magnitude: n^{-sigma} grows as n falls
        const double nd = static_cast<double>(n);
        double c, sn;
        detail::seed_rotation(t, std::log(nd), c, sn);
        sum += std::pow(nd, -sigma) * cplx(c, sn);
    }
    return sum + detail::em_corrections(sigma, t, M);
}

// zeta on a grid: fixed cutoff M for the whole grid (sized for t1), rotor
// main sum, then a per-point correction pass.  Agrees with zeta_point to tol.
inline LineSeries zeta_line(const TGrid& grid, double tol = 1e-10,
                            std::int64_t chunk = kDefaultChunk, int threads = 1) {
    if (!(tol >= 1e-14)) throw std::domain_error("zeta_line: tol unattainable in double precision");
    const double sigma = grid.sigma;
    const std::int64_t M = detail::em_cutoff(sigma, grid.t1(), tol);

    std::vector<DirichletTerm> terms;
    terms.reserve(static_cast<std::size_t>(M));
    for (std::int64_t n = 1; n <= M; ++n) {
        const double nd = static_cast<double>(n);
        terms.push_back({std::pow(nd, -sigma), std::log(nd)});
    }

    LineSeries out(grid, "zeta");
    rotor_accumulate(terms, grid, out.samples, chunk, threads);
    for_each_chunk(grid.count, chunk, threads, [&](std::int64_t a, std::int64_t b) {
        for (std::int64_t j = a; j < b; ++j)
            out.samples[static_cast<std::size_t>(j)] += detail::em_corrections(sigma, grid.t(j), M);
    });
    return out;
}

// Independent evaluation route: Borwein's alternating-series acceleration of
// eta(s) = (1 - 2^{1-s}) zeta(s).  The term count grows like 0.9|t| because
// the acceleration error carries a factor e^{pi|t|/2}; practical for t up to
// a few thousand, which is all the cross-validation needs.
inline cplx zeta_point_eta(cplx s) {
    if (s.imag() < 0.0) return std::conj(zeta_point_eta(std::conj(s)));
    const double sigma = s.real(), t = s.imag();
    if (!(sigma > 0.0 && sigma <= 2.0)) throw std::domain_error("zeta_point_eta: Re s must be in (0,2]");
    const cplx denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
    if (std::abs(denom) < 1e-3)
        throw std::domain_error("zeta_point_eta: too close to a zero of 1-2^{1-s}");
    const int n = static_cast<int>(std::ceil(0.892 * t)) + 40;

    // Chebyshev weights d_k via logs (the raw integers overflow wildly):
    // c_i = (n+i-1)! 4^i / ((n-i)! (2i)!), w_k = (sum_{i>k} c_i)/(sum_i c_i).
    std::vector<double> logc(static_cast<std::size_t>(n) + 1);
    double logmax = -1e300;
    for (int i = 0; i <= n; ++i) {
        logc[i] = std::lgamma(n + i) + i * std::log(4.0) - std::lgamma(n - i + 1.0) -
                  std::lgamma(2.0 * i + 1.0);
        logmax = std::max(logmax, logc[i]);
    }
    std::vector<double> suffix(static_cast<std::size_t>(n) + 2, 0.0);
    for (int i = n; i >= 0; --i) suffix[i] = suffix[i + 1] + std::exp(logc[i] - logmax);
    const double total = suffix[0];

    cplx eta = 0.0;
    for (int k = 0; k < n; ++k) {
        const double w = suffix[k + 1] / total;  // in (0, 1], no cancellation
        const cplx term = w * std::exp(-s * std::log(static_cast<double>(k + 1)));
        eta += (k % 2 == 0) ? term : -term;
    }
    return eta / denom;
}

}  // namespace zetalab
