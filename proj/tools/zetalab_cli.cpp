// Experiment driver.  Each subcommand computes one statistic of zeta on a
// vertical-line grid and writes a run directory: summary.json (resolved
// parameters, input hashes, results) plus per-experiment CSV/JSON artifacts.
//
// Numeric options may come from a flat key=value config file (--config) and
// are overridden by command-line flags.  A malformed config or table file
// exits nonzero with a one-line diagnostic.
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetalab/approximants.hpp"
#include "zetalab/constants.hpp"
#include "zetalab/io.hpp"
#include "zetalab/meanvalue.hpp"
#include "zetalab/stats.hpp"
#include "zetalab/zeros.hpp"
#include "zetalab/zeta.hpp"

namespace {

using json = nlohmann::json;
using namespace zetalab;

struct Options {
    int k = 1;
    double sigma = 0.75;
    double T = 1000.0;
    double t0 = 1.0;
    double h = 0.01;
    std::vector<std::int64_t> N = {1000};
    double eps = 0.5;
    double delta = 0.05;
    std::string zeros;
    std::string out;
    int threads = 1;
    std::int64_t chunk = kDefaultChunk;
    std::int64_t pmax = 1000000;
    double tol = 1e-8;
    std::int64_t bins = 50;
    bool dump_series = false;
};

struct Run {
    Options opt;
    std::string experiment;
    std::filesystem::path dir;
    json summary;

    Run(const Options& o, std::string name) : opt(o), experiment(std::move(name)) {
        dir = opt.out.empty() ? std::filesystem::path("runs") / experiment
                              : std::filesystem::path(opt.out);
        std::filesystem::create_directories(dir);
        summary["experiment"] = experiment;
        json& p = summary["params"];
        p["k"] = opt.k;
        p["sigma"] = opt.sigma;
        p["T"] = opt.T;
        p["t0"] = opt.t0;
        p["h"] = opt.h;
        p["N"] = opt.N;
        p["eps"] = opt.eps;
        p["delta"] = opt.delta;
        p["threads"] = opt.threads;
        p["chunk"] = opt.chunk;
        if (!opt.zeros.empty()) {
            summary["inputs"]["zeros"] = opt.zeros;
            char hex[32];
            std::snprintf(hex, sizeof(hex), "%016llx",
                          static_cast<unsigned long long>(fnv1a64_file(opt.zeros)));
            summary["inputs"]["zeros_fnv1a64"] = hex;
        }
    }

    TGrid grid() const { return TGrid(opt.sigma, opt.t0, opt.T, opt.h); }

    LineSeries zeta() const {
        LineSeries z = zeta_line(grid(), 1e-8, opt.chunk, opt.threads);
        z.check_finite();
        return z;
    }

    // Exclusion set from the ingested zero table, empty when no table given.
    IntervalSet exclusions() const {
        if (opt.zeros.empty()) return IntervalSet{};
        ZeroTable table = load_zero_table(opt.zeros);
        return neighborhoods(table, opt.delta, opt.t0, opt.T);
    }

    void finish() {
        std::ofstream f(dir / "summary.json");
        f << summary.dump(2) << '\n';
        std::printf("%s: wrote %s\n", experiment.c_str(), (dir / "summary.json").c_str());
    }
};

// theta_{Z_N} on the grid of a zeta line, masked on the exclusion set.
PhaseSeries theta_z_series(const LineSeries& zs, const PhaseSeries& thp, const IntervalSet& mask) {
    PhaseSeries out(zs.grid);
    for (std::int64_t j = 0; j < zs.grid.count; ++j)
        out.theta[static_cast<std::size_t>(j)] = theta_z_at(zs, thp, j);
    out.apply_mask(mask);
    return out;
}

void run_moments(Run& run) {
    EstimateRecord rec = moment(run.opt.k, run.zeta());
    run.summary["results"]["moment"] = estimate_to_json(rec);
    std::ofstream(run.dir / "moment.json") << estimate_to_json(rec).dump(2) << '\n';
    std::printf("moments: M_%d/T = %.10g  (error proxy %.2g)\n", run.opt.k, rec.value.real(),
                rec.error_proxy);
}

void run_fourier(Run& run) {
    LineSeries series = pow_line(run.zeta(), run.opt.k);
    const std::int64_t n_freq = run.opt.N.empty() ? 10 : run.opt.N.front();
    json rows = json::array();
    for (std::int64_t n = 1; n <= n_freq; ++n) {
        EstimateRecord rec = fourier_coeff(series, -std::log(static_cast<double>(n)));
        json row = estimate_to_json(rec);
        row["n"] = n;
        rows.push_back(row);
    }
    // one deliberately off-spectrum probe between the n=2 and n=3 frequencies
    EstimateRecord off = fourier_coeff(series, -0.5 * (std::log(2.0) + std::log(3.0)));
    json row = estimate_to_json(off);
    row["n"] = nullptr;
    rows.push_back(row);
    run.summary["results"]["coefficients"] = rows;
    std::ofstream(run.dir / "fourier.json") << rows.dump(2) << '\n';
    std::printf("fourier: %lld on-spectrum probes + 1 off-spectrum written\n",
                static_cast<long long>(n_freq));
}

void run_besicovitch(Run& run) {
    LineSeries zs = run.zeta();
    json rows = json::array();
    for (std::int64_t N : run.opt.N) {
        EstimateRecord rec = besicovitch_dist2(run.opt.k, N, zs, run.opt.chunk, run.opt.threads);
        rows.push_back(estimate_to_json(rec));
        std::printf("besicovitch: ||zeta^%d - f_%lld||^2 = %.10g\n", run.opt.k,
                    static_cast<long long>(N), rec.value.real());
    }
    run.summary["results"]["distances"] = rows;
    std::ofstream(run.dir / "besicovitch.json") << rows.dump(2) << '\n';
}

void run_phase(Run& run) {
    LineSeries zs = run.zeta();
    IntervalSet mask = run.exclusions();
    json rows = json::array();
    for (std::int64_t N : run.opt.N) {
        LineSeries expo = euler_exponent_line(N, zs.grid, run.opt.chunk, run.opt.threads);
        PhaseSeries thz = theta_z_series(zs, theta_p_from_exponent(expo, run.opt.k), mask);
        ExceedanceResult r = phase_exceedance(thz, run.opt.eps);
        rows.push_back({{"N", N},
                        {"eps", run.opt.eps},
                        {"fraction", r.fraction},
                        {"masked_fraction", r.masked_fraction}});
        std::printf("phase: N=%lld  Pr(|theta_Z| >= %.3g) = %.6f  (masked %.4f)\n",
                    static_cast<long long>(N), run.opt.eps, r.fraction, r.masked_fraction);
        if (run.opt.dump_series && N == run.opt.N.back())
            write_phase_csv(thz, (run.dir / "theta_z.csv").string());
    }
    run.summary["results"]["exceedance"] = rows;
    std::ofstream(run.dir / "phase.json") << rows.dump(2) << '\n';
}

void run_zero_one(Run& run) {
    LineSeries zs = run.zeta();
    IntervalSet mask = run.exclusions();
    json rows = json::array();
    for (std::int64_t N : run.opt.N) {
        LineSeries expo = euler_exponent_line(N, zs.grid, run.opt.chunk, run.opt.threads);
        PhaseSeries thp = theta_p_from_exponent(expo, run.opt.k);
        thp.apply_mask(mask);
        EstimateRecord rec = zero_one_ratio(run.opt.k, N, zs, thp);
        rows.push_back(estimate_to_json(rec));
        std::printf("zero-one: N=%lld  ratio = %.6f\n", static_cast<long long>(N),
                    rec.value.real());
    }
    run.summary["results"]["ratios"] = rows;
    std::ofstream(run.dir / "zero_one.json") << rows.dump(2) << '\n';
}

void run_constants(Run& run) {
    json rows = json::array();
    for (int k = 1; k <= run.opt.k; ++k) {
        EulerProduct a = arithmetic_factor(k, run.opt.pmax, run.opt.tol);
        Rational g = barnes_g_factor(k);
        rows.push_back({{"k", k},
                        {"a_k", a.value},
                        {"a_k_uncertainty", a.uncertainty},
                        {"g_k_num", g.num.str()},
                        {"g_k_den", g.den.str()},
                        {"a_k_g_k", a.value * g.to_double()}});
        std::printf("constants: k=%d  a_k=%.12g  g_k=%s/%s  a_k g_k=%.12g\n", k, a.value,
                    g.num.str().c_str(), g.den.str().c_str(), a.value * g.to_double());
    }
    run.summary["results"]["constants"] = rows;
    std::ofstream(run.dir / "constants.json") << rows.dump(2) << '\n';
}

void run_mass(Run& run) {
    if (run.opt.zeros.empty())
        throw std::invalid_argument("mass: --zeros table is required to form the set");
    LineSeries zs = run.zeta();
    LineSeries zk = pow_line(zs, run.opt.k);
    IntervalSet S = run.exclusions();
    const double share = mass_on_set(zk, S);
    Histogram hist = density_profile(run.opt.k, zs, run.opt.bins);
    write_histogram_csv(hist, (run.dir / "profile.csv").string());
    run.summary["results"]["mass_share"] = share;
    run.summary["results"]["set_measure"] = S.total_measure();
    run.summary["results"]["window_measure"] = run.opt.T - run.opt.t0;
    std::printf("mass: share on %.3g-neighborhoods = %.6f  (set measure %.6g of %.6g)\n",
                run.opt.delta, share, S.total_measure(), run.opt.T - run.opt.t0);
}

void run_identity(Run& run) {
    LineSeries zs = run.zeta();
    const std::int64_t N = run.opt.N.empty() ? 100 : run.opt.N.front();
    LineSeries expo = euler_exponent_line(N, zs.grid, run.opt.chunk, run.opt.threads);
    PhaseSeries thp = theta_p_from_exponent(expo, run.opt.k);
    thp.apply_mask(run.exclusions());
    Sin2Residual r = sin2_identity_residual(run.opt.k, zs, thp);
    run.summary["results"]["residual"] = r.residual;
    run.summary["results"]["m_k"] = r.m_k;
    run.summary["results"]["relative"] = r.residual / r.m_k;
    std::printf("identity: residual = %.3g  (M_k = %.6g, relative %.3g)\n", r.residual, r.m_k,
                r.residual / r.m_k);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"moments, products, and phase statistics of zeta on vertical lines"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help and exit");  // frees -h for the grid step
    app.set_config("--config", "", "flat key=value parameter file (flags override)");

    Options opt;
    app.add_option("--k", opt.k, "moment exponent k")->capture_default_str();
    app.add_option("--sigma", opt.sigma, "real part, in (1/2, 1)")->capture_default_str();
    app.add_option("--T", opt.T, "window end")->capture_default_str();
    app.add_option("--t0", opt.t0, "window start")->capture_default_str();
    app.add_option("--h", opt.h, "grid step")->capture_default_str();
    app.add_option("--N", opt.N, "truncation parameter(s); repeatable")->capture_default_str();
    app.add_option("--eps", opt.eps, "phase exceedance threshold")->capture_default_str();
    app.add_option("--delta", opt.delta, "zero-neighborhood half-width")->capture_default_str();
    app.add_option("--zeros", opt.zeros, "zero ordinate table (plain text)");
    app.add_option("--out", opt.out, "run directory (default runs/<experiment>)");
    app.add_option("--threads", opt.threads, "worker threads")->capture_default_str();
    app.add_option("--chunk", opt.chunk, "grid chunk size")->capture_default_str();
    app.add_option("--pmax", opt.pmax, "prime cutoff for Euler products")->capture_default_str();
    app.add_option("--tol", opt.tol, "tolerance for constant evaluation")->capture_default_str();
    app.add_option("--bins", opt.bins, "histogram bins")->capture_default_str();
    app.add_flag("--dump-series", opt.dump_series, "also write large per-point CSV artifacts");

    struct Entry {
        const char* name;
        const char* help;
        void (*fn)(Run&);
    };
    const Entry entries[] = {
        {"moments", "time-averaged moment M_k(sigma,T)/T", run_moments},
        {"fourier", "Fourier coefficients of zeta^k at Dirichlet frequencies", run_fourier},
        {"besicovitch", "mean-square distance to partial sums f_N", run_besicovitch},
        {"phase", "exceedance Pr(|theta_{Z_N}| >= eps)", run_phase},
        {"zero-one", "weighted sin^2 ratio of theta_{Z_N}", run_zero_one},
        {"constants", "arithmetic and Barnes factors a_k, g_k", run_constants},
        {"mass", "mass share of |zeta^k|^2 near tabulated zeros", run_mass},
        {"identity", "sin^2 splitting identity residual", run_identity},
    };
    for (const Entry& e : entries) app.add_subcommand(e.name, e.help)->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        for (const Entry& e : entries) {
            if (app.got_subcommand(e.name)) {
                Run run(opt, e.name);
                e.fn(run);
                run.finish();
                return 0;
            }
        }
        throw std::logic_error("no experiment dispatched");
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }
}
