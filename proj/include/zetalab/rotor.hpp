// Dense evaluation of sums S(t) = sum_i w_i exp(-i t nu_i) on uniform
// t-grids — the inner loop behind every line evaluation here (zeta main
// sums, Euler-product exponents, partial Dirichlet sums, Fourier kernels).
//
// Each term advances along the grid by the unit rotation r_i = exp(-i h nu_i)
// instead of calling sincos per point.  To keep multiplicative drift out of
// the results, every term re-seeds from direct exponentials at the start of
// each point block (block = 2048 <= 2^12 points, well inside the drift
// budget), and the seed phase t*nu is split by a two-product so its rounding
// does not leak into the phase.  Points advance eight lanes at a time; lanes
// never interact, and the lane arithmetic is elementwise IEEE double, so the
// vector and fallback paths produce identical bits.
//
// Re-seed blocks align to absolute grid indices; a chunk starting mid-block
// recomputes that block from its aligned seed and writes only its own part.
// Chunk sizes round up to a lane multiple.  Samples are therefore bit-exact
// functions of (terms, grid) alone, whatever the chunking or thread count.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <vector>

#include "zetalab/grid.hpp"
#include "zetalab/parallel.hpp"

namespace zetalab {

// One term w * exp(-i t nu).
struct DirichletTerm {
    double w;   // real amplitude
    double nu;  // frequency (t multiplies this)
};

namespace detail {

inline constexpr std::int64_t kRotorBlock = 2048;  // reseed period, multiple of 8, <= 2^12
inline constexpr int kLanes = 8;

#if defined(__GNUC__) || defined(__clang__)
#define ZETALAB_HAVE_VEC 1
typedef double vlanes __attribute__((vector_size(kLanes * sizeof(double))));
inline vlanes broadcast(double x) {
    vlanes v;
    for (int l = 0; l < kLanes; ++l) v[l] = x;
    return v;
}
#endif

// cos/sin of -t*nu with the product split as t*nu = p + e (two-product);
// rotating by the residual -e to first order keeps the seed phase to ~1 ulp
// even when t*nu is ~1e6 and its rounding alone would cost ~1e-10.
inline void seed_rotation(double t, double nu, double& c, double& s) {
    const double p = t * nu;
    const double e = std::fma(t, nu, -p);
    const double cp = std::cos(p), sp = -std::sin(p);
    c = cp + e * sp;
    s = sp - e * cp;
}

// S(t_j) += sum over terms, for j in [j0, j1).
inline void rotor_accumulate_range(const std::vector<DirichletTerm>& terms, const TGrid& grid,
                                   std::int64_t j0, std::int64_t j1, cplx* out) {
    const double h = grid.h;
    const std::size_t m = terms.size();
    std::vector<double> rc(m), rs(m);  // unit step exp(-i h nu)
    for (std::size_t i = 0; i < m; ++i) {
        rc[i] = std::cos(h * terms[i].nu);
        rs[i] = -std::sin(h * terms[i].nu);
    }
    std::vector<double> acc_re(static_cast<std::size_t>(kRotorBlock));
    std::vector<double> acc_im(static_cast<std::size_t>(kRotorBlock));

    for (std::int64_t b0 = (j0 / kRotorBlock) * kRotorBlock; b0 < j1; b0 += kRotorBlock) {
        const std::int64_t bn = std::min(kRotorBlock, j1 - b0);  // points computed
        const std::int64_t w0 = std::max(b0, j0) - b0;           // first point written
        const std::int64_t nvec = bn & ~std::int64_t{kLanes - 1};
        const double tb = grid.t(b0);
        double* __restrict__ are = acc_re.data();
        double* __restrict__ aim = acc_im.data();
        for (std::int64_t j = 0; j < bn; ++j) are[j] = aim[j] = 0.0;

        for (std::size_t i = 0; i < m; ++i) {
            const double w = terms[i].w, nu = terms[i].nu;
            const double c1 = rc[i], s1 = rs[i];
            double c0, s0;
            seed_rotation(tb, nu, c0, s0);
            // lane seeds u_l = w * exp(-i (tb + l h) nu), l = 0..7
            double ur[kLanes], ui[kLanes];
            ur[0] = w * c0;
            ui[0] = w * s0;
            for (int l = 1; l < kLanes; ++l) {
                ur[l] = ur[l - 1] * c1 - ui[l - 1] * s1;
                ui[l] = ur[l - 1] * s1 + ui[l - 1] * c1;
            }
            // rotation by 8 steps via three angle doublings
            const double c2 = c1 * c1 - s1 * s1, s2 = 2.0 * c1 * s1;
            const double c4 = c2 * c2 - s2 * s2, s4 = 2.0 * c2 * s2;
            const double c8 = c4 * c4 - s4 * s4, s8 = 2.0 * c4 * s4;
#ifdef ZETALAB_HAVE_VEC
            vlanes vur, vui;
            std::memcpy(&vur, ur, sizeof(vur));
            std::memcpy(&vui, ui, sizeof(vui));
            const vlanes vc8 = broadcast(c8), vs8 = broadcast(s8);
            for (std::int64_t j = 0; j < nvec; j += kLanes) {
                vlanes ar, ai;
                std::memcpy(&ar, are + j, sizeof(ar));
                std::memcpy(&ai, aim + j, sizeof(ai));
                ar += vur;
                ai += vui;
                std::memcpy(are + j, &ar, sizeof(ar));
                std::memcpy(aim + j, &ai, sizeof(ai));
                const vlanes nr = vur * vc8 - vui * vs8;
                const vlanes ni = vur * vs8 + vui * vc8;
                vur = nr;
                vui = ni;
            }
            std::memcpy(ur, &vur, sizeof(vur));
            std::memcpy(ui, &vui, sizeof(vui));
#else
            for (std::int64_t j = 0; j < nvec; j += kLanes) {
                for (int l = 0; l < kLanes; ++l) {
                    are[j + l] += ur[l];
                    aim[j + l] += ui[l];
                    const double nr = ur[l] * c8 - ui[l] * s8;
                    const double ni = ur[l] * s8 + ui[l] * c8;
                    ur[l] = nr;
                    ui[l] = ni;
                }
            }
#endif
            if (nvec < bn) {  // tail points, scalar single-step walk
                double tr = ur[0], ti = ui[0];
                for (std::int64_t j = nvec; j < bn; ++j) {
                    are[j] += tr;
                    aim[j] += ti;
                    const double nr = tr * c1 - ti * s1;
                    const double ni = tr * s1 + ti * c1;
                    tr = nr;
                    ti = ni;
                }
            }
        }
        for (std::int64_t j = w0; j < bn; ++j)
            out[b0 + j] += cplx(are[j], aim[j]);
    }
}

}  // namespace detail

// out[j] += sum_i w_i exp(-i t_j nu_i) over the whole grid.
inline void rotor_accumulate(const std::vector<DirichletTerm>& terms, const TGrid& grid,
                             std::vector<cplx>& out,
                             std::int64_t chunk = kDefaultChunk, int threads = 1) {
    if (static_cast<std::int64_t>(out.size()) != grid.count)
        throw std::invalid_argument("rotor_accumulate: output size mismatch");
    if (terms.empty()) return;
    chunk = (chunk + detail::kLanes - 1) & ~std::int64_t{detail::kLanes - 1};
    cplx* base = out.data();
    for_each_chunk(grid.count, chunk, threads, [&](std::int64_t a, std::int64_t b) {
        detail::rotor_accumulate_range(terms, grid, a, b, base);
    });
}

// Convenience: freshly allocated sum series.
inline std::vector<cplx> rotor_sum(const std::vector<DirichletTerm>& terms, const TGrid& grid,
                                   std::int64_t chunk = kDefaultChunk, int threads = 1) {
    std::vector<cplx> out(static_cast<std::size_t>(grid.count), cplx(0.0, 0.0));
    rotor_accumulate(terms, grid, out, chunk, threads);
    return out;
}

}  // namespace zetalab
