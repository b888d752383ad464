#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "zetalab/constants.hpp"

using namespace zetalab;
using Catch::Approx;

TEST_CASE("barnes quotients are exact unit fractions") {
    // g_k = G(k+1)^2 / G(2k+1) via the factorial recurrence.
    const char* dens[] = {
        "1",
        "12",
        "8640",
        "870912000",
        "22122558259200000",
        "222531556847250309120000000",
        "1280394777025250130271722799104000000000",
    };
    for (int k = 1; k <= 7; ++k) {
        Rational g = barnes_g_factor(k);
        CAPTURE(k);
        CHECK(g.num == 1);
        CHECK(g.den == bigint(dens[k - 1]));
    }
    CHECK_THROWS_AS(barnes_g_factor(0), std::invalid_argument);
}

TEST_CASE("rational to_double survives huge denominators") {
    CHECK(barnes_g_factor(2).to_double() == Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(barnes_g_factor(7).to_double() == Approx(7.810091215174329e-40).epsilon(1e-12));
    const double g10 = barnes_g_factor(10).to_double();
    CHECK(g10 > 0.0);
    CHECK(g10 < 1e-90);
}

TEST_CASE("arithmetic factor matches the classical k=2 value") {
    // a_2 = prod_p (1 - p^{-2}) = 6/pi^2.
    EulerProduct a2 = arithmetic_factor(2, 1000000);
    const double want = 0.607927101854026628663276779258;
    CHECK(a2.value == Approx(want).epsilon(1e-8));
    CHECK(a2.uncertainty < 1e-8);
    CHECK(a2.head > a2.value);  // factors < 1, so the tail pushes down
    CHECK(a2.tail_log < 0.0);
}

TEST_CASE("arithmetic factor at higher k matches converged references") {
    CHECK(arithmetic_factor(1, 100).value == 1.0);
    CHECK(arithmetic_factor(3, 1000000).value == Approx(0.04932167357940009).epsilon(5e-8));
    CHECK(arithmetic_factor(4, 1000000).value == Approx(0.0002146814097756224).epsilon(5e-8));
    CHECK(arithmetic_factor(5, 1000000).value == Approx(3.132556507381301e-8).epsilon(1e-6));
}

TEST_CASE("arithmetic factor refuses unattainable tolerances") {
    CHECK_THROWS_AS(arithmetic_factor(2, 1000), std::domain_error);  // default 1e-8
    EulerProduct loose = arithmetic_factor(2, 1000, 1e-4);
    CHECK(loose.value == Approx(0.607927101854026628663276779258).epsilon(1e-5));
}

TEST_CASE("combined constant a_2 g_2 equals 1/(2 pi^2)") {
    const double c = arithmetic_factor(2, 1000000).value * barnes_g_factor(2).to_double();
    CHECK(c == Approx(0.0506605918211688857219397316049).epsilon(1e-8));
}

TEST_CASE("log-power tail integral matches its closed form") {
    using detail::log_power_integral;
    CHECK(log_power_integral(0, 0.75, 50.0) == Approx(0.28284271247461901).epsilon(1e-13));
    CHECK(log_power_integral(1, 0.75, 1000.0) == Approx(0.56337591041944323).epsilon(1e-13));
    CHECK(log_power_integral(3, 0.8, 1e5) == Approx(4.0140101281508647).epsilon(1e-13));
    CHECK(log_power_integral(8, 0.9, 1e6) == Approx(68302.081649886133).epsilon(1e-13));
}

TEST_CASE("coefficient series k=1 reproduces zeta(2 sigma)") {
    SeriesSum s = dk_series(1, 0.75, 1e-6);
    CHECK(s.value == Approx(2.61237534868548834334856756792).epsilon(1e-7));
    CHECK(s.value == Approx(s.head + s.tail).epsilon(1e-15));
    CHECK(s.tail > 0.0);
    CHECK(s.tail_error < 1e-6);
}

TEST_CASE("coefficient series k=2 reproduces zeta(2s)^4-type value") {
    // sum d_2(n)^2 n^{-1.6} = zeta(1.6)^4 / zeta(3.2), exactly.
    SeriesSum s = dk_series(2, 0.8, 1e-2);
    CHECK(s.value == Approx(23.3959298728867036115134906866).epsilon(5e-3));
    CHECK(s.head < s.value);
}

TEST_CASE("coefficient series demands the open strip") {
    CHECK_THROWS_AS(dk_series(1, 0.5, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(dk_series(1, 1.0, 1e-6), std::invalid_argument);
}

TEST_CASE("partial coefficient sums match frozen references") {
    CHECK(dk_partial(2, 0.8, 10) == Approx(6.62486754690512925054076488306).epsilon(1e-11));
    CHECK(dk_partial(2, 0.8, 100) == Approx(13.8431642009671466456884691993).epsilon(1e-11));
    CHECK(dk_partial(2, 0.8, 1000) == Approx(18.8227569612995912635547764683).epsilon(1e-11));
    CHECK(dk_partial(2, 0.8, 10000) == Approx(21.446295463718287943933229619).epsilon(1e-11));
    CHECK(dk_partial(2, 0.8, 100000) == Approx(22.6279933294127863979015950689).epsilon(1e-11));
    CHECK(dk_partial(2, 0.8, 0) == 0.0);
}

TEST_CASE("coefficient tail beyond N=50 matches zeta minus the head") {
    SeriesSum tail = dk_tail(1, 0.75, 50, 1e-6);
    CHECK(tail.value == Approx(0.281435569567676004317402577272).epsilon(1e-6));
}

TEST_CASE("moment prediction reduces to T log T at k=1") {
    const double T = 1e5;
    CHECK(ks_prediction(1, T) == Approx(T * std::log(T)).epsilon(1e-12));
    CHECK(ks_prediction(2, 1e4) ==
          Approx(0.0506605918211688857219397316049 * 1e4 * std::pow(std::log(1e4), 4.0))
              .epsilon(1e-7));
    CHECK_THROWS_AS(ks_prediction(1, 2.0), std::invalid_argument);
}
