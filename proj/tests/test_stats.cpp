#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "zetalab/approximants.hpp"
#include "zetalab/stats.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;
using Catch::Approx;

namespace {

PhaseSeries phases_of(const LineSeries& f) {
    PhaseSeries out(f.grid);
    for (std::int64_t j = 0; j < f.grid.count; ++j)
        out.theta[static_cast<std::size_t>(j)] = std::arg(f[j]);
    return out;
}

}  // namespace

TEST_CASE("phase exceedance counts the right points") {
    TGrid grid = TGrid::with_count(0.75, 1.0, 0.1, 10);
    PhaseSeries ph(grid);
    ph.theta = {0.0, 0.1, -0.2, 0.6, -0.7, 0.05, 3.0, -3.0, 0.45, 0.0};

    SECTION("plain count") {
        ExceedanceResult r = phase_exceedance(ph, 0.5);
        CHECK(r.fraction == Approx(4.0 / 10.0));
        CHECK(r.masked_fraction == 0.0);
    }

    SECTION("eps beyond pi can never be exceeded") {
        CHECK(phase_exceedance(ph, 3.2).fraction == 0.0);
    }

    SECTION("mask removes points from both counts") {
        ph.masked.assign(10, 0);
        ph.masked[3] = ph.masked[6] = ph.masked[9] = 1;
        ExceedanceResult r = phase_exceedance(ph, 0.5);
        CHECK(r.fraction == Approx(2.0 / 7.0));
        CHECK(r.masked_fraction == Approx(0.3));
    }

    SECTION("degenerate inputs throw") {
        CHECK_THROWS_AS(phase_exceedance(ph, 0.0), std::invalid_argument);
        ph.masked.assign(10, 1);
        CHECK_THROWS_AS(phase_exceedance(ph, 0.5), std::runtime_error);
    }
}

TEST_CASE("phase exceedance is nonincreasing in eps") {
    TGrid grid = TGrid::with_count(0.75, 1.0, 0.1, 500);
    PhaseSeries ph(grid);
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-M_PI + 1e-9, M_PI);
    for (double& th : ph.theta) th = u(rng);
    double prev = 1.1;
    for (double eps = 0.1; eps < 3.3; eps += 0.1) {
        const double frac = phase_exceedance(ph, eps).fraction;
        CHECK(frac <= prev);
        prev = frac;
    }
}

TEST_CASE("theta_Z pointwise is the wrapped phase difference") {
    TGrid grid = TGrid::with_count(0.75, 1.0, 0.1, 4);
    LineSeries f(grid, "f");
    for (std::int64_t j = 0; j < 4; ++j) f[j] = std::polar(2.0, 0.3);
    PhaseSeries ph(grid);
    ph.theta.assign(4, 0.1);
    CHECK(theta_z_at(f, ph, 2) == Approx(0.2));
}

TEST_CASE("zero-one ratio hits its extreme values") {
    TGrid grid(0.75, 1.0, 20.0, 0.05);
    LineSeries zs = zeta_line(grid, 1e-10);

    SECTION("aligned phases give ratio zero") {
        PhaseSeries aligned = phases_of(zs);  // theta_Z == 0 pointwise
        for (int k : {1, 2}) {
            EstimateRecord r = zero_one_ratio(k, 10, zs, aligned);
            CHECK(r.value.real() == Approx(0.0).margin(1e-15));
        }
    }

    SECTION("quarter-turn phases give ratio one") {
        for (int k : {1, 2}) {
            PhaseSeries quarter = phases_of(zs);
            for (double& th : quarter.theta) th = wrap_phase(th - M_PI / (2.0 * k));
            EstimateRecord r = zero_one_ratio(k, 10, zs, quarter);
            CHECK(r.value.real() == Approx(1.0).epsilon(1e-12));
        }
    }

    SECTION("real data stays inside [0,1] and records parameters") {
        PhaseSeries thp = theta_p_line(10, 1, grid);
        EstimateRecord r = zero_one_ratio(1, 10, zs, thp);
        CHECK(r.value.real() >= 0.0);
        CHECK(r.value.real() <= 1.0);
        CHECK(r.params.at("N") == 10.0);
        CHECK(r.params.at("k") == 1.0);
        CHECK(r.params.at("retained_measure") > 0.0);
    }

    SECTION("grid mismatch throws") {
        TGrid other(0.75, 1.0, 20.0, 0.1);
        PhaseSeries wrong(other);
        CHECK_THROWS_AS(zero_one_ratio(1, 10, zs, wrong), std::invalid_argument);
    }
}

TEST_CASE("sin^2 splitting identity holds to rounding on real data") {
    TGrid grid(0.75, 1.0, 201.0, 0.05);
    LineSeries zs = zeta_line(grid, 1e-10);
    LineSeries expo = euler_exponent_line(10, grid);
    for (int k : {1, 2}) {
        PhaseSeries thp = theta_p_from_exponent(expo, k);
        Sin2Residual r = sin2_identity_residual(k, zs, thp);
        CAPTURE(k, r.m_k);
        CHECK(r.m_k > 0.0);
        CHECK(r.residual <= 1e-12 * r.m_k);
    }
}

TEST_CASE("mass on a set is a share of the total") {
    TGrid grid = TGrid::with_count(0.75, 1.0, 0.1, 100);
    LineSeries f(grid, "f");
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    for (cplx& z : f.samples) z = cplx(u(rng), u(rng));

    CHECK(mass_on_set(f, IntervalSet({{0.0, 1e6}})) == 1.0);
    CHECK(mass_on_set(f, IntervalSet{}) == 0.0);

    IntervalSet s1({{2.0, 5.0}}), s2({{7.0, 9.0}});
    const double m1 = mass_on_set(f, s1), m2 = mass_on_set(f, s2);
    CHECK(m1 > 0.0);
    CHECK(m2 > 0.0);
    CHECK(m1 + m2 == Approx(mass_on_set(f, s1.merged(s2))).epsilon(1e-12));

    LineSeries dead(grid, "0");
    CHECK_THROWS_AS(mass_on_set(dead, s1), std::runtime_error);
}

TEST_CASE("density profile partitions the mass") {
    TGrid grid = TGrid::with_count(0.75, 1.0, 0.1, 100);
    LineSeries f(grid, "const");
    for (cplx& z : f.samples) z = cplx(0.0, 1.5);

    SECTION("uniform input spreads uniformly") {
        Histogram hist = density_profile(2, f, 10);
        REQUIRE(hist.mass.size() == 10);
        double total = 0.0;
        for (std::size_t b = 0; b < 10; ++b) {
            CHECK(hist.mass[b] == Approx(0.1).epsilon(1e-12));
            if (b > 0) CHECK(hist.bin_lo[b] == hist.bin_hi[b - 1]);
            total += hist.mass[b];
        }
        CHECK(total == Approx(1.0).epsilon(1e-12));
        CHECK(hist.bin_lo.front() == grid.t0);
        CHECK(hist.bin_hi.back() == grid.t1());
    }

    SECTION("single bin carries everything") {
        Histogram hist = density_profile(1, f, 1);
        REQUIRE(hist.mass.size() == 1);
        CHECK(hist.mass[0] == 1.0);
    }

    SECTION("uneven splits still sum to one") {
        Histogram hist = density_profile(1, f, 7);
        double total = 0.0;
        for (double m : hist.mass) total += m;
        CHECK(total == Approx(1.0).epsilon(1e-12));
    }

    SECTION("bad arguments throw") {
        CHECK_THROWS_AS(density_profile(0, f, 5), std::invalid_argument);
        CHECK_THROWS_AS(density_profile(1, f, 0), std::invalid_argument);
        CHECK_THROWS_AS(density_profile(1, f, 101), std::invalid_argument);
    }
}
