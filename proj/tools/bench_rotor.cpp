// Microbenchmark for the Dirichlet-sum kernel: prints sustained
// term-point updates per second for a zeta-main-sum-shaped workload.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "zetalab/rotor.hpp"

int main(int argc, char** argv) {
    using namespace zetalab;
    const std::int64_t n_terms = argc > 1 ? std::atoll(argv[1]) : 20000;
    const std::int64_t n_points = argc > 2 ? std::atoll(argv[2]) : 200000;

    std::vector<DirichletTerm> terms;
    terms.reserve(n_terms);
    for (std::int64_t n = 1; n <= n_terms; ++n)
        terms.push_back({std::pow(static_cast<double>(n), -0.75),
                         std::log(static_cast<double>(n))});
    TGrid grid = TGrid::with_count(0.75, 1.0, 0.01, n_points);

    auto start = std::chrono::steady_clock::now();
    std::vector<cplx> out = rotor_sum(terms, grid);
    auto stop = std::chrono::steady_clock::now();
    double sec = std::chrono::duration<double>(stop - start).count();

    double checksum = 0.0;
    for (const cplx& z : out) checksum += z.real();
    double updates = static_cast<double>(n_terms) * static_cast<double>(n_points);
    std::printf("terms=%lld points=%lld time=%.3fs rate=%.3e upd/s checksum=%.6e\n",
                static_cast<long long>(n_terms), static_cast<long long>(n_points), sec,
                updates / sec, checksum);
    return 0;
}
