// Probabilistic diagnostics: phase exceedance, the zero-one ratio, the sin^2
// identity residual, and mass-on-set / concentration profiles.
//
// All "probabilities" here are finite-T retained-measure fractions — the
// computable surrogate for natural density.  Mass functionals use the
// rectangle rule (one cell of mass h|f|^2 per grid point) so that mass is
// exactly additive over disjoint interval sets; ratio functionals use the
// same Simpson run integration as the mean values.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zetalab/approximants.hpp"
#include "zetalab/grid.hpp"
#include "zetalab/intervals.hpp"
#include "zetalab/meanvalue.hpp"

namespace zetalab {

struct ExceedanceResult {
    double fraction = 0.0;         // share of unmasked points with |theta| >= eps
    double masked_fraction = 0.0;  // share of points that were masked
};

// Empirical Pr(|theta| >= eps) over unmasked grid points.
inline ExceedanceResult phase_exceedance(const PhaseSeries& theta, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("phase_exceedance: eps must be > 0");
    std::int64_t kept = 0, hits = 0;
    for (std::int64_t j = 0; j < theta.grid.count; ++j) {
        if (theta.is_masked(j)) continue;
        ++kept;
        if (std::abs(theta.theta[static_cast<std::size_t>(j)]) >= eps) ++hits;
    }
    if (kept == 0) throw std::runtime_error("phase_exceedance: all points masked");
    ExceedanceResult r;
    r.fraction = static_cast<double>(hits) / static_cast<double>(kept);
    r.masked_fraction =
        static_cast<double>(theta.grid.count - kept) / static_cast<double>(theta.grid.count);
    return r;
}

// theta_{Z_N} at one point from principal arg zeta and theta_{P_N}.
inline double theta_z_at(const LineSeries& zeta_series, const PhaseSeries& pn_theta,
                         std::int64_t j) {
    return wrap_phase(std::arg(zeta_series[j]) - pn_theta.theta[static_cast<std::size_t>(j)]);
}

// integral |zeta|^{2k} sin^2(k theta_{Z_N}) / integral |zeta|^{2k}, both over
// the unmasked runs.  Lives in [0,1] since the weights are sandwiched.
inline EstimateRecord zero_one_ratio(int k, std::int64_t N, const LineSeries& zeta_series,
                                     const PhaseSeries& pn_theta) {
    if (k < 1) throw std::invalid_argument("zero_one_ratio: k must be >= 1");
    if (!zeta_series.grid.same_as(pn_theta.grid))
        throw std::invalid_argument("zero_one_ratio: grid mismatch");
    const std::int64_t count = zeta_series.grid.count;
    std::vector<double> num(static_cast<std::size_t>(count)), den(static_cast<std::size_t>(count));
    for (std::int64_t j = 0; j < count; ++j) {
        const double a2 = std::norm(zeta_series[j]);
        double p = a2;
        for (int i = 1; i < k; ++i) p *= a2;
        const double s = std::sin(static_cast<double>(k) * theta_z_at(zeta_series, pn_theta, j));
        num[static_cast<std::size_t>(j)] = p * s * s;
        den[static_cast<std::size_t>(j)] = p;
    }
    auto [top, m1] = detail::integrate_runs(num, pn_theta.masked, zeta_series.grid.h, 0, count);
    auto [bot, m2] = detail::integrate_runs(den, pn_theta.masked, zeta_series.grid.h, 0, count);
    (void)m1;
    if (!(bot > 0.0)) throw std::runtime_error("zero_one_ratio: vanishing moment denominator");
    EstimateRecord rec;
    rec.value = top / bot;
    rec.raw = top;
    rec.params["k"] = k;
    rec.params["N"] = static_cast<double>(N);
    rec.params["sigma"] = zeta_series.grid.sigma;
    rec.params["T"] = zeta_series.grid.t1();
    rec.params["h"] = zeta_series.grid.h;
    rec.params["retained_measure"] = m2;
    return rec;
}

struct Sin2Residual {
    double residual = 0.0;  // | M_k - Re I - 2 S |, pure quadrature/rounding
    double m_k = 0.0;       // integral |zeta|^{2k} on the retained set
};

// Exact pointwise identity: with theta_Z = arg zeta - theta_P (mod 2 pi),
//   integral |zeta|^{2k} - Re integral zeta^{2k} e^{-2ik theta_P}
//     = 2 integral |zeta|^{2k} sin^2(k theta_Z)
// holds pointwise, so the integrated residual measures only arithmetic noise.
inline Sin2Residual sin2_identity_residual(int k, const LineSeries& zeta_series,
                                           const PhaseSeries& pn_theta) {
    if (k < 1) throw std::invalid_argument("sin2_identity_residual: k must be >= 1");
    if (!zeta_series.grid.same_as(pn_theta.grid))
        throw std::invalid_argument("sin2_identity_residual: grid mismatch");
    const std::int64_t count = zeta_series.grid.count;
    std::vector<double> mom(static_cast<std::size_t>(count));
    std::vector<double> rot(static_cast<std::size_t>(count));  // Re zeta^{2k} e^{-2ik theta_P}
    std::vector<double> sin2(static_cast<std::size_t>(count));
    for (std::int64_t j = 0; j < count; ++j) {
        const cplx z = zeta_series[j];
        cplx z2k(1.0, 0.0);
        for (int i = 0; i < 2 * k; ++i) z2k *= z;
        const double thp = pn_theta.theta[static_cast<std::size_t>(j)];
        const double a2 = std::norm(z);
        double p = a2;
        for (int i = 1; i < k; ++i) p *= a2;
        const double thz = wrap_phase(std::arg(z) - thp);
        const double s = std::sin(static_cast<double>(k) * thz);
        mom[static_cast<std::size_t>(j)] = p;
        rot[static_cast<std::size_t>(j)] =
            (z2k * std::exp(cplx(0.0, -2.0 * k * thp))).real();
        sin2[static_cast<std::size_t>(j)] = p * 2.0 * s * s;
    }
    const double h = zeta_series.grid.h;
    auto [im, m1] = detail::integrate_runs(mom, pn_theta.masked, h, 0, count);
    auto [ir, m2] = detail::integrate_runs(rot, pn_theta.masked, h, 0, count);
    auto [is, m3] = detail::integrate_runs(sin2, pn_theta.masked, h, 0, count);
    (void)m1, (void)m2, (void)m3;
    return {std::abs(im - ir - is), im};
}

// Share of the |f|^2 mass carried by the set S (rectangle rule; exactly
// additive over disjoint sets).
inline double mass_on_set(const LineSeries& f, const IntervalSet& S) {
    double inside = 0.0, total = 0.0;
    for (std::int64_t j = 0; j < f.grid.count; ++j) {
        const double m = std::norm(f[j]);
        total += m;
        if (S.contains(f.grid.t(j))) inside += m;
    }
    if (!(total > 0.0)) throw std::runtime_error("mass_on_set: series has no mass");
    return inside / total;
}

struct Histogram {
    std::vector<double> bin_lo, bin_hi, mass;
};

// |zeta|^{2k} mass profile across equal index ranges of the grid (cell
// masses normalized to sum to 1).
inline Histogram density_profile(int k, const LineSeries& series, std::int64_t bins) {
    if (bins < 1) throw std::invalid_argument("density_profile: bins must be >= 1");
    if (k < 1) throw std::invalid_argument("density_profile: k must be >= 1");
    const std::int64_t count = series.grid.count;
    if (bins > count) throw std::invalid_argument("density_profile: more bins than grid points");
    Histogram hist;
    hist.bin_lo.resize(static_cast<std::size_t>(bins));
    hist.bin_hi.resize(static_cast<std::size_t>(bins));
    hist.mass.assign(static_cast<std::size_t>(bins), 0.0);
    double total = 0.0;
    for (std::int64_t b = 0; b < bins; ++b) {
        const std::int64_t lo = b * count / bins;
        const std::int64_t hi = (b + 1) * count / bins;
        hist.bin_lo[static_cast<std::size_t>(b)] = series.grid.t(lo);
        hist.bin_hi[static_cast<std::size_t>(b)] =
            (b + 1 == bins) ? series.grid.t1() : series.grid.t(hi);
        double m = 0.0;
        for (std::int64_t j = lo; j < hi; ++j) {
            const double a2 = std::norm(series[j]);
            double p = a2;
            for (int i = 1; i < k; ++i) p *= a2;
            m += p;
        }
        hist.mass[static_cast<std::size_t>(b)] = m;
        total += m;
    }
    if (total > 0.0)
        for (double& m : hist.mass) m /= total;
    return hist;
}

}  // namespace zetalab
