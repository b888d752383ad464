// Zeta evaluation against frozen high-precision reference values (30-digit
// arbitrary-precision runs, truncated to double) and between independent
// routes: Euler-Maclaurin point evaluation, the rotor-based line evaluation,
// and the alternating eta series.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "zetalab/grid.hpp"
#include "zetalab/rotor.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

namespace {

struct Frozen {
    double sigma, t, re, im;
};

// Reference values computed with mpmath at 30 significant digits.
const Frozen kSpots[] = {
    {0.75, 50.0, 0.239035241259861293188343221539, 0.318248888706225016475410521718},
    {0.75, 1000.0, 0.833713130003152026516327323981, 0.291623424633592487986863108889},
    {0.5, 1000.3, 1.98110948342695371841705927061, 0.945058224347308109004756893889},
    {0.9, 12345.6789, 0.888178227847306238719816437258, 0.459936886171780216541610102726},
    {0.75, 100000.0, 1.83785233725187370401688227631, 1.99884926686611453577110835083},
    {0.8, 31622.7766, 0.472091314838439287927946965315, -0.3761203628798001414720467838},
};

}  // namespace

TEST_CASE("zeta_point at real arguments") {
    const double pi = std::acos(-1.0);
    CHECK(std::abs(zeta_point(cplx(2.0, 0.0)) - cplx(pi * pi / 6.0, 0.0)) < 1e-12);
    CHECK(std::abs(zeta_point(cplx(1.5, 0.0)) - cplx(2.61237534868548834334856756792, 0.0)) < 1e-12);
    CHECK(std::abs(zeta_point(cplx(0.75, 0.0)) - cplx(-3.44128538694522289439513996071, 0.0)) < 1e-12);
}

TEST_CASE("zeta_point at frozen complex references") {
    for (const Frozen& f : kSpots) {
        INFO("sigma=" << f.sigma << " t=" << f.t);
        CHECK(std::abs(zeta_point(cplx(f.sigma, f.t)) - cplx(f.re, f.im)) < 5e-11);
    }
}

TEST_CASE("zeta_point domain errors") {
    CHECK_THROWS_AS(zeta_point(cplx(1.0, 0.0)), std::domain_error);   // pole
    CHECK_THROWS_AS(zeta_point(cplx(2.5, 1.0)), std::domain_error);   // Re s > 2
    CHECK_THROWS_AS(zeta_point(cplx(-0.5, 1.0)), std::domain_error);  // Re s <= 0
    CHECK_THROWS_AS(zeta_point(cplx(0.75, 1.0), 1e-16), std::domain_error);  // absurd tol
}

TEST_CASE("zeta_point reflects conjugates") {
    for (double t : {1.5, 14.134725, 30.0, 997.0}) {
        cplx up = zeta_point(cplx(0.75, t));
        cplx down = zeta_point(cplx(0.75, -t));
        CHECK(down == std::conj(up));  // exact: reflection is by construction
    }
}

TEST_CASE("zeta_line agrees with zeta_point at random grid points") {
    TGrid grid(0.75, 1.0, 100.0, 0.01);
    LineSeries zline = zeta_line(grid, 1e-10);
    zline.check_finite();
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::int64_t> pick(0, grid.count - 1);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        std::int64_t j = pick(rng);
        cplx ref = zeta_point(cplx(grid.sigma, grid.t(j)), 1e-10);
        worst = std::max(worst, std::abs(zline[j] - ref));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("zeta_line single-point grid equals zeta_point") {
    TGrid g = TGrid::with_count(0.6, 5.0, 0.01, 1);
    LineSeries one = zeta_line(g);
    CHECK(std::abs(one[0] - zeta_point(cplx(0.6, 5.0))) < 1e-12);
}

TEST_CASE("zeta_line is chunk-size invariant") {
    TGrid grid(0.8, 1.0, 40.0, 0.01);  // count 3901: exercises the unaligned end block
    LineSeries a = zeta_line(grid, 1e-10, /*chunk=*/512);
    for (std::int64_t chunk : {4096, 1001, 1 << 18}) {
        LineSeries b = zeta_line(grid, 1e-10, chunk);
        double worst = 0.0;
        for (std::int64_t j = 0; j < grid.count; ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
        INFO("chunk=" << chunk);
        // re-seed blocks align to absolute indices, so chunking cannot move a sample
        CHECK(worst == 0.0);
    }
}

TEST_CASE("eta route matches Euler-Maclaurin route on a random sample") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> pick_sigma(0.51, 0.95);
    std::uniform_real_distribution<double> pick_t(2.0, 1000.0);
    int tested = 0;
    double worst = 0.0;
    while (tested < 100) {
        cplx s(pick_sigma(rng), pick_t(rng));
        if (std::abs(1.0 - std::exp((1.0 - s) * std::log(2.0))) < 1e-3) continue;
        worst = std::max(worst, std::abs(zeta_point_eta(s) - zeta_point(s, 1e-10)));
        ++tested;
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("eta route at frozen references") {
    CHECK(std::abs(zeta_point_eta(cplx(0.75, 0.0)) - cplx(-3.44128538694522289439513996071, 0.0)) < 1e-10);
    CHECK(std::abs(zeta_point_eta(cplx(0.75, 50.0)) -
                   cplx(0.239035241259861293188343221539, 0.318248888706225016475410521718)) < 1e-10);
    CHECK(std::abs(zeta_point_eta(cplx(0.5, 1000.3)) -
                   cplx(1.98110948342695371841705927061, 0.945058224347308109004756893889)) < 1e-8);
}

TEST_CASE("rotor keeps unit rotations unit across a long sweep") {
    // w=1 term: every sample should be exactly unimodular up to drift budget.
    TGrid grid = TGrid::with_count(0.75, 1.0, 0.01, 1 << 20);
    std::vector<cplx> s = rotor_sum({{1.0, std::log(2.0)}}, grid);
    double worst = 0.0;
    for (const cplx& z : s) worst = std::max(worst, std::abs(std::abs(z) - 1.0));
    CHECK(worst < 1e-12);
}

TEST_CASE("rotor matches direct exponential sums") {
    TGrid grid(0.7, 1.0, 21.0, 0.01);
    std::vector<DirichletTerm> terms;
    for (std::int64_t n = 1; n <= 50; ++n)
        terms.push_back({std::pow(static_cast<double>(n), -0.7), std::log(static_cast<double>(n))});
    std::vector<cplx> fast = rotor_sum(terms, grid);
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::int64_t> pick(0, grid.count - 1);
    for (int i = 0; i < 50; ++i) {
        std::int64_t j = pick(rng);
        cplx direct = 0.0;
        for (const auto& tm : terms)
            direct += tm.w * std::exp(cplx(0.0, -grid.t(j) * tm.nu));
        CHECK(std::abs(fast[static_cast<std::size_t>(j)] - direct) < 1e-12);
    }
}

TEST_CASE("pow_line") {
    TGrid grid(0.75, 1.0, 2.0, 0.1);
    LineSeries f(grid, "f");
    for (std::int64_t j = 0; j < grid.count; ++j) f[j] = cplx(0.3 * j - 1.0, 0.1 * j);

    SECTION("k=1 is the identity") {
        LineSeries g = pow_line(f, 1);
        for (std::int64_t j = 0; j < grid.count; ++j) CHECK(g[j] == f[j]);
    }
    SECTION("constant series") {
        LineSeries c(grid, "c");
        for (auto& z : c.samples) z = cplx(1.1, -0.4);
        LineSeries g = pow_line(c, 3);
        cplx want = cplx(1.1, -0.4) * cplx(1.1, -0.4) * cplx(1.1, -0.4);
        for (auto& z : g.samples) CHECK(std::abs(z - want) < 1e-15);
    }
    SECTION("modulus multiplicativity") {
        LineSeries g = pow_line(f, 4);
        for (std::int64_t j = 0; j < grid.count; ++j)
            CHECK(std::abs(g[j]) == Catch::Approx(std::pow(std::abs(f[j]), 4.0)).epsilon(1e-12));
    }
}

TEST_CASE("TGrid validation and helpers") {
    CHECK_THROWS_AS(TGrid(0.75, 0.5, 10.0, 0.01), std::invalid_argument);  // t0 < 1
    CHECK_THROWS_AS(TGrid(0.75, 2.0, 2.0, 0.01), std::invalid_argument);   // t1 <= t0
    CHECK_THROWS_AS(TGrid(0.75, 1.0, 10.0, 0.0), std::invalid_argument);   // h = 0
    CHECK_THROWS_AS(TGrid(1.5, 1.0, 10.0, 0.01), std::invalid_argument);   // sigma out of (0,1]
    CHECK_THROWS_AS(TGrid(0.0, 1.0, 10.0, 0.01), std::invalid_argument);

    TGrid g(0.75, 1.0, 2.0, 0.1);
    CHECK(g.count == 11);
    CHECK(g.t(0) == 1.0);
    CHECK(g.t1() == Catch::Approx(2.0));
    CHECK(g.nyquist() == Catch::Approx(M_PI / 0.1));
    CHECK(g.count_upto(1.55) == 6);
    CHECK(g.count_upto(0.5) == 0);
    CHECK(g.count_upto(100.0) == 11);
    TGrid p = g.prefix(5);
    CHECK(p.count == 5);
    CHECK(p.t(4) == g.t(4));
}
