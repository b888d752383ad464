// Moment-asymptotic constants: the arithmetic Euler product a_k, the Barnes
// G-function ratio g_k = G(k+1)^2/G(2k+1) in exact rational arithmetic, the
// series sum_n d_k(n)^2 n^{-2 sigma} with an extrapolated tail, and the
// predicted leading term a_k g_k T (log T)^{k^2}.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetalab/arith.hpp"

namespace zetalab {

using bigint = boost::multiprecision::cpp_int;

struct Rational {
    bigint num = 0, den = 1;

    void reduce() {
        bigint g = boost::multiprecision::gcd(num, den);
        if (g != 0) {
            num /= g;
            den /= g;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }

    // Safe even when num/den individually overflow double: take the top
    // bits of each and restore the difference of scales at the end.
    double to_double() const {
        if (num == 0) return 0.0;
        long en = 0, ed = 0;
        const double dn = scaled(boost::multiprecision::abs(num), en);
        const double dd = scaled(den, ed);
        const double mag = std::ldexp(dn / dd, static_cast<int>(en - ed));
        return num < 0 ? -mag : mag;
    }

  private:
    static double scaled(const bigint& v, long& exp2) {
        const long bits = static_cast<long>(boost::multiprecision::msb(v));
        exp2 = bits > 1000 ? bits - 1000 : 0;
        return (v >> exp2).convert_to<double>();
    }
};

// g_k = G(k+1)^2 / G(2k+1), with the Barnes recurrence G(n+1) = (n-1)! G(n),
// G(1) = G(2) = 1, carried in exact integers.
inline Rational barnes_g_factor(int k) {
    if (k < 1) throw std::invalid_argument("barnes_g_factor: k must be >= 1");
    std::vector<bigint> G(static_cast<std::size_t>(2 * k + 2));
    G[1] = 1;
    G[2] = 1;
    bigint fact = 1;  // (n-1)! while filling G[n+1]
    for (int n = 2; n <= 2 * k; ++n) {
        fact *= (n - 1);
        G[static_cast<std::size_t>(n + 1)] = fact * G[static_cast<std::size_t>(n)];
    }
    Rational g;
    g.num = G[static_cast<std::size_t>(k + 1)] * G[static_cast<std::size_t>(k + 1)];
    g.den = G[static_cast<std::size_t>(2 * k + 1)];
    g.reduce();
    return g;
}

struct EulerProduct {
    double value = 0.0;        // tail-corrected product
    double head = 0.0;         // product over p <= p_max only
    double tail_log = 0.0;     // applied log-correction for p > p_max
    double uncertainty = 0.0;  // estimated error of the corrected value
};

namespace detail {

// Power-series coefficients c_m of log f_k(x), where
// f_k(x) = (1-x)^{(k-1)^2} sum_{n=0}^{k-1} C(k-1,n)^2 x^n
// is the local Euler factor with x = 1/p.  c_0 = c_1 = 0 always, so each
// factor is 1 + O(p^{-2}) and the product tail is summable.
inline std::vector<double> euler_factor_log_series(int k, int m_max) {
    std::vector<double> poly(static_cast<std::size_t>(m_max) + 1, 0.0);
    for (int n = 0; n <= k - 1 && n <= m_max; ++n) {
        const double b = static_cast<double>(binomial(k - 1, n));
        poly[static_cast<std::size_t>(n)] = b * b;
    }
    // log(poly): L' = P'/P  =>  m c_m = m a_m - sum_{i=1}^{m-1} i c_i a_{m-i}
    std::vector<double> c(static_cast<std::size_t>(m_max) + 1, 0.0);
    for (int m = 1; m <= m_max; ++m) {
        double acc = m * poly[static_cast<std::size_t>(m)];
        for (int i = 1; i < m; ++i)
            acc -= i * c[static_cast<std::size_t>(i)] * poly[static_cast<std::size_t>(m - i)];
        c[static_cast<std::size_t>(m)] = acc / m;
    }
    // + (k-1)^2 log(1-x) = -(k-1)^2 sum x^m / m
    const double e = static_cast<double>(k - 1) * static_cast<double>(k - 1);
    for (int m = 1; m <= m_max; ++m) c[static_cast<std::size_t>(m)] -= e / m;
    return c;
}

// Integral-comparison estimate of sum_{p > P} p^{-m} (prime tail):
// int_P^inf dt / (t^m log t) expanded to three terms in 1/((m-1) log P).
inline double prime_power_tail(int m, double P) {
    const double u = 1.0 / ((static_cast<double>(m) - 1.0) * std::log(P));
    return std::pow(P, 1.0 - m) * u * (1.0 - u + 2.0 * u * u);
}

}  // namespace detail

// a_k = prod_p (1-1/p)^{(k-1)^2} sum_{n=0}^{k-1} C(k-1,n)^2 p^{-n}, head
// product over p <= p_max, log-series tail estimate applied for p > p_max.
inline EulerProduct arithmetic_factor(int k, std::int64_t p_max, double tol = 1e-8) {
    if (k < 1) throw std::invalid_argument("arithmetic_factor: k must be >= 1");
    if (p_max < 2) throw std::invalid_argument("arithmetic_factor: p_max must be >= 2");
    EulerProduct out;
    if (k == 1) {  // every factor is exactly 1
        out.value = out.head = 1.0;
        return out;
    }
    const double e = static_cast<double>(k - 1) * static_cast<double>(k - 1);
    double head = 1.0;
    for (std::int64_t p : primes_upto(p_max)) {
        const double x = 1.0 / static_cast<double>(p);
        double inner = 0.0, xn = 1.0;
        for (int n = 0; n <= k - 1; ++n) {
            const double b = static_cast<double>(binomial(k - 1, n));
            inner += b * b * xn;
            xn *= x;
        }
        head *= std::pow(1.0 - x, e) * inner;
    }
    // tail over p > p_max: sum_m c_m sum_{p > p_max} p^{-m}
    const int m_max = 48;
    std::vector<double> c = detail::euler_factor_log_series(k, m_max);
    const double P = static_cast<double>(p_max);
    double tail = 0.0, unc = 0.0;
    for (int m = 2; m <= m_max; ++m) {
        const double pm = detail::prime_power_tail(m, P);
        tail += c[static_cast<std::size_t>(m)] * pm;
        const double u = 1.0 / ((static_cast<double>(m) - 1.0) * std::log(P));
        unc += std::abs(c[static_cast<std::size_t>(m)]) * pm * 6.0 * u * u * u;
    }
    unc += std::abs(c[static_cast<std::size_t>(m_max)]) * detail::prime_power_tail(m_max, P);
    out.head = head;
    out.tail_log = tail;
    out.value = head * std::exp(tail);
    out.uncertainty = unc * std::abs(out.value);
    if (out.uncertainty > tol)
        throw std::domain_error("arithmetic_factor: tol unattainable at this p_max");
    return out;
}

struct SeriesSum {
    double value = 0.0;      // head + extrapolated tail
    double head = 0.0;       // partial sum to n_cut
    double tail = 0.0;       // extrapolated tail beyond n_cut
    double tail_error = 0.0; // estimated error of the tail extrapolation
    std::int64_t n_cut = 0;
};

namespace detail {

// Closed form of int_N^inf (log x)^q x^{-2 sigma} dx for integer q >= 0:
// N^{1-2s} sum_{i=0}^{q} (q!/(q-i)!) (log N)^{q-i} / (2s-1)^{i+1}.
inline double log_power_integral(int q, double sigma, double N) {
    const double a = 2.0 * sigma - 1.0;
    const double logN = std::log(N);
    double falling = 1.0, lp = std::pow(logN, q), total = 0.0;
    for (int i = 0; i <= q; ++i) {
        total += falling * lp / std::pow(a, i + 1);
        falling *= static_cast<double>(q - i);
        lp /= logN;
    }
    return std::pow(N, -a) * total;
}

}  // namespace detail

// sum_{n=1}^inf d_k(n)^2 / n^{2 sigma}: exact head to n_cut, then a tail
// extrapolated from the last dyadic block with the density model
// d_k(n)^2 ~ c (log n)^{k^2-1}, whose integral has a closed form.
inline SeriesSum dk_series(int k, double sigma, double tol, std::int64_t n_cut = 1 << 20) {
    if (!(sigma > 0.5 && sigma < 1.0)) throw std::invalid_argument("dk_series: need 1/2 < sigma < 1");
    if (k < 1) throw std::invalid_argument("dk_series: k must be >= 1");
    if (n_cut < 64) throw std::invalid_argument("dk_series: n_cut too small");
    IntTable dk = divisor_table(k, n_cut);
    SeriesSum out;
    out.n_cut = n_cut;
    double head = 0.0;
    for (std::int64_t n = n_cut; n >= 1; --n) {  // ascending term size
        const double d = static_cast<double>(dk(n));
        head += d * d * std::pow(static_cast<double>(n), -2.0 * sigma);
    }
    // ratio estimator on the block (n_cut/2, n_cut]: match the block's mass
    // to the model's integral over the same block, then extrapolate.
    const int q = k * k - 1;
    double block_mass = 0.0;
    double block_model = 0.0;
    for (std::int64_t n = n_cut / 2 + 1; n <= n_cut; ++n) {
        const double d = static_cast<double>(dk(n));
        const double w = std::pow(static_cast<double>(n), -2.0 * sigma);
        block_mass += d * d * w;
        block_model += std::pow(std::log(static_cast<double>(n)), q) * w;
    }
    const double c = block_mass / block_model;
    out.head = head;
    out.tail = c * detail::log_power_integral(q, sigma, static_cast<double>(n_cut));
    out.value = head + out.tail;
    // the model error is the fluctuation of c across scales; re-fit on the
    // previous block and take the spread as the error estimate
    double prev_mass = 0.0, prev_model = 0.0;
    for (std::int64_t n = n_cut / 4 + 1; n <= n_cut / 2; ++n) {
        const double d = static_cast<double>(dk(n));
        const double w = std::pow(static_cast<double>(n), -2.0 * sigma);
        prev_mass += d * d * w;
        prev_model += std::pow(std::log(static_cast<double>(n)), q) * w;
    }
    const double c_prev = prev_mass / prev_model;
    out.tail_error = std::abs(c - c_prev) / c * out.tail + 1e-14 * out.value;
    if (out.tail_error > tol)
        throw std::domain_error("dk_series: tail error estimate exceeds tol at this n_cut");
    return out;
}

// Partial sum sum_{n<=N} d_k(n)^2 / n^{2 sigma}.
inline double dk_partial(int k, double sigma, std::int64_t N) {
    if (N < 1) return 0.0;
    IntTable dk = divisor_table(k, N);
    double sum = 0.0;
    for (std::int64_t n = N; n >= 1; --n) {
        const double d = static_cast<double>(dk(n));
        sum += d * d * std::pow(static_cast<double>(n), -2.0 * sigma);
    }
    return sum;
}

// sum_{n>N} d_k(n)^2 / n^{2 sigma} with the same tail machinery.
inline SeriesSum dk_tail(int k, double sigma, std::int64_t N, double tol,
                         std::int64_t n_cut = 1 << 20) {
    SeriesSum full = dk_series(k, sigma, tol, n_cut);
    double headN = dk_partial(k, sigma, N);
    SeriesSum out = full;
    out.head = full.head - headN;
    out.value = full.value - headN;
    return out;
}

// Conjectured leading term a_k g_k T (log T)^{k^2}.
inline double ks_prediction(int k, double T, std::int64_t p_max = 1000000) {
    if (!(T > std::exp(1.0))) throw std::invalid_argument("ks_prediction: need T > e");
    const double a = arithmetic_factor(k, p_max).value;
    const double g = barnes_g_factor(k).to_double();
    return a * g * T * std::pow(std::log(T), k * k);
}

}  // namespace zetalab
