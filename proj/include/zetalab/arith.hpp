// Arithmetic-function tables: divisor functions d_k, von Mangoldt weights,
// Dirichlet convolution and the formal Dirichlet exponential.
//
// Divisor tables are exact 64-bit integers with hard overflow detection;
// the smoothed von Mangoldt weights and the Dirichlet exp work in doubles.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetalab {

// Values of an arithmetic function c(n) for 1 <= n <= n_max.
// T is std::int64_t for exact tables, double for floating ones.
template <typename T>
struct CoeffTable {
    std::vector<T> values;  // values[n-1] = c(n)

    CoeffTable() = default;
    explicit CoeffTable(std::int64_t n_max, T fill = T{})
        : values(static_cast<std::size_t>(n_max), fill) {
        if (n_max < 1) throw std::invalid_argument("CoeffTable: n_max must be >= 1");
    }

    std::int64_t n_max() const { return static_cast<std::int64_t>(values.size()); }

    T operator()(std::int64_t n) const { return values[static_cast<std::size_t>(n - 1)]; }
    T& operator()(std::int64_t n) { return values[static_cast<std::size_t>(n - 1)]; }
};

using IntTable = CoeffTable<std::int64_t>;
using RealTable = CoeffTable<double>;

inline RealTable to_floating(const IntTable& a) {
    RealTable b(a.n_max());
    for (std::int64_t n = 1; n <= a.n_max(); ++n) b(n) = static_cast<double>(a(n));
    return b;
}

// Primes <= limit by plain Eratosthenes.
inline std::vector<std::int64_t> primes_upto(std::int64_t limit) {
    if (limit < 2) return {};
    std::vector<bool> comp(static_cast<std::size_t>(limit + 1), false);
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (comp[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (std::int64_t m = p * p; m <= limit; m += p) comp[static_cast<std::size_t>(m)] = true;
    }
    return out;
}

namespace detail {

// Smallest prime factor by trial division.
inline std::int64_t smallest_prime_factor(std::int64_t n) {
    if (n % 2 == 0) return 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return d;
    return n;
}

}  // namespace detail

// Lambda(n) = log p when n = p^m, else 0.
inline double von_mangoldt(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("von_mangoldt: n must be >= 1");
    if (n == 1) return 0.0;
    std::int64_t p = detail::smallest_prime_factor(n);
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

// Lambda_N(n): Lambda(n) for n <= N, tapered by (2 - log n / log N) on
// (N, N^2], zero beyond N^2.  Table covers 1..N^2 (entry for n = 1 is 0).
inline RealTable smoothed_mangoldt_table(std::int64_t N) {
    if (N < 2) throw std::invalid_argument("smoothed_mangoldt_table: N must be >= 2");
    const std::int64_t n2 = N * N;
    RealTable tab(n2, 0.0);
    const double logN = std::log(static_cast<double>(N));
    for (std::int64_t p : primes_upto(n2)) {
        const double logp = std::log(static_cast<double>(p));
        for (std::int64_t q = p; q <= n2; q *= p) {
            if (q <= N) {
                tab(q) = logp;
            } else {
                const double w = 2.0 - std::log(static_cast<double>(q)) / logN;
                tab(q) = logp * (w > 0.0 ? w : 0.0);  // w = 0 exactly at q = N^2
            }
            if (q > n2 / p) break;  // q*p would overflow the table range
        }
    }
    return tab;
}

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error(what);
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error(what);
    return r;
}

}  // namespace detail

// (a * b)(n) = sum_{d | n} a(d) b(n/d), exact with overflow detection.
inline IntTable dirichlet_convolve(const IntTable& a, const IntTable& b) {
    if (a.n_max() != b.n_max())
        throw std::invalid_argument("dirichlet_convolve: mismatched n_max");
    const std::int64_t n_max = a.n_max();
    IntTable c(n_max, 0);
    for (std::int64_t d = 1; d <= n_max; ++d) {
        if (a(d) == 0) continue;
        for (std::int64_t q = 1; d * q <= n_max; ++q) {
            std::int64_t term = detail::checked_mul(a(d), b(q), "dirichlet_convolve: product overflow");
            c(d * q) = detail::checked_add(c(d * q), term, "dirichlet_convolve: sum overflow");
        }
    }
    return c;
}

// Floating-point Dirichlet convolution (same formula, no overflow checks).
inline RealTable dirichlet_convolve(const RealTable& a, const RealTable& b) {
    if (a.n_max() != b.n_max())
        throw std::invalid_argument("dirichlet_convolve: mismatched n_max");
    const std::int64_t n_max = a.n_max();
    RealTable c(n_max, 0.0);
    for (std::int64_t d = 1; d <= n_max; ++d) {
        if (a(d) == 0.0) continue;
        for (std::int64_t q = 1; d * q <= n_max; ++q) c(d * q) += a(d) * b(q);
    }
    return c;
}

// d_k(n) for n <= n_max: (k-1)-fold Dirichlet self-convolution of the
// all-ones table.  Each convolution with ones is a divisor-sum sweep,
// O(n_max log n_max).
inline IntTable divisor_table(int k, std::int64_t n_max) {
    if (k < 1) throw std::invalid_argument("divisor_table: k must be >= 1");
    if (n_max < 1) throw std::invalid_argument("divisor_table: n_max must be >= 1");
    IntTable d(n_max, 1);
    for (int step = 1; step < k; ++step) {
        IntTable next(n_max, 0);
        for (std::int64_t m = 1; m <= n_max; ++m) {
            const std::int64_t dm = d(m);
            if (dm == 0) continue;
            for (std::int64_t n = m; n <= n_max; n += m)
                next(n) = detail::checked_add(next(n), dm, "divisor_table: overflow");
        }
        d = std::move(next);
    }
    return d;
}

// Formal Dirichlet exponential: given a with a(1) = 0, returns b with
// b(1) = 1 and exp(sum a(n) n^{-s}) = sum b(n) n^{-s} truncated at n_max.
// Log-derivative recurrence: b(n) log n = sum_{d|n, d>1} a(d) log d b(n/d).
inline RealTable dirichlet_exp(const RealTable& a) {
    if (a(1) != 0.0) throw std::invalid_argument("dirichlet_exp: requires a(1) == 0");
    const std::int64_t n_max = a.n_max();
    RealTable acc(n_max, 0.0);
    RealTable b(n_max, 0.0);
    std::vector<double> alogd(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (std::int64_t d = 2; d <= n_max; ++d)
        alogd[static_cast<std::size_t>(d)] = a(d) * std::log(static_cast<double>(d));
    for (std::int64_t m = 1; m <= n_max; ++m) {
        b(m) = (m == 1) ? 1.0 : acc(m) / std::log(static_cast<double>(m));
        if (b(m) == 0.0) continue;
        for (std::int64_t d = 2; d * m <= n_max; ++d) {
            if (alogd[static_cast<std::size_t>(d)] == 0.0) continue;
            acc(d * m) += alogd[static_cast<std::size_t>(d)] * b(m);
        }
    }
    return b;
}

// Formal Dirichlet logarithm, the inverse of dirichlet_exp: given b with
// b(1) = 1, returns a with a(1) = 0.  Same recurrence solved for a(n):
// the d = n term of sum_{d|n, d>1} a(d) log d b(n/d) is a(n) log n.
inline RealTable dirichlet_log(const RealTable& b) {
    if (b(1) != 1.0) throw std::invalid_argument("dirichlet_log: requires b(1) == 1");
    const std::int64_t n_max = b.n_max();
    RealTable a(n_max, 0.0);
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const double logn = std::log(static_cast<double>(n));
        double rest = 0.0;
        for (std::int64_t d = 2; d * d <= n; ++d) {
            if (n % d != 0) continue;
            rest += a(d) * std::log(static_cast<double>(d)) * b(n / d);
            if (d * d != n) rest += a(n / d) * std::log(static_cast<double>(n / d)) * b(d);
        }
        a(n) = (b(n) * logn - rest) / logn;
    }
    return a;
}

// Binomial coefficient in exact integers; throws on 64-bit overflow.
inline std::int64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    std::int64_t c = 1;
    for (int i = 1; i <= r; ++i) {
        c = detail::checked_mul(c, n - r + i, "binomial: overflow");
        c /= i;
    }
    return c;
}

}  // namespace zetalab
