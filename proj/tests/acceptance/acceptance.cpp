// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "fermisea/counting.hpp"
#include "fermisea/factorization.hpp"
#include "fermisea/linalg.hpp"
#include "fermisea/models.hpp"
#include "fermisea/oracle.hpp"
#include "fermisea/random.hpp"
#include "fermisea/thermal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

using namespace fermisea;

namespace {

constexpr double ln2 = std::numbers::ln2;

struct Outcome {
    bool        pass = false;
    std::string detail;
};

std::string fmt(const char *pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// worst slack of both inequalities; negative means violated
double chain_slack(const CountingReport &r) {
    return std::min(r.entropy_nats - r.bound2, r.bound2 - r.bound4);
}

// Seeded random ground states shared by the first two criteria.
struct PureSuite {
    std::vector<oracle::Deviation> deviations;
    double                         seconds = 0.0;
};

const PureSuite &pure_suite() {
    static const PureSuite suite = [] {
        PureSuite s;
        const auto t0 = std::chrono::steady_clock::now();
        Rng        rng(20030601);
        for(int c = 0; c < 50; ++c) {
            const int  dim   = std::uniform_int_distribution<int>(2, 10)(rng);
            const auto n     = std::uniform_int_distribution<Index>(1, dim)(rng);
            const auto orbs  = random_orbitals(dim, n, rng);
            const auto sites = random_sites(dim, rng);
            s.deviations.push_back(oracle::pure_state_check(orbs, sites));
        }
        s.seconds = seconds_since(t0);
        return s;
    }();
    return suite;
}

Outcome factorization_theorem() {
    const auto &s     = pure_suite();
    double      worst = 0.0;
    for(const auto &d : s.deviations) worst = std::max(worst, d.spectrum);
    return {worst <= 1e-8 && s.seconds < 60.0, fmt("50 cases, max eigenvalue deviation %.3g (tol 1e-8), %.2f s (limit 60 s)", worst, s.seconds)};
}

Outcome closed_form_agreement() {
    double moments = 0.0, dist = 0.0;
    for(const auto &d : pure_suite().deviations) {
        moments = std::max({moments, d.entropy, d.mean, d.variance, d.kappa4});
        dist    = std::max(dist, d.distribution);
    }
    return {moments <= 1e-8 && dist <= 1e-10, fmt("max moment deviation %.3g (tol 1e-8), max P(k) deviation %.3g (tol 1e-10)", moments, dist)};
}

std::vector<double> fig2_radii() {
    std::vector<double> radii;
    for(int i = 0; i <= 190; ++i) radii.push_back(1.0 + 0.1 * i);
    return radii;
}

std::vector<CountingReport> thermal_reports() {
    std::vector<CountingReport> reports;
    Rng                         rng(1729);
    for(int c = 0; c < 200; ++c) {
        const int     dim = std::uniform_int_distribution<int>(2, 10)(rng);
        ThermalSystem sys(random_hermitian(dim, 2.0, rng));
        const auto    sites = random_sites(dim, rng);
        reports.push_back(thermal_report(sys, RegionProjector::from_sites(dim, {sites.begin(), sites.end()})));
    }
    return reports;
}

Outcome inequality_chain() {
    double worst_random = std::numeric_limits<double>::infinity();
    Rng    rng(4242);
    for(int c = 0; c < 10000; ++c) {
        const auto len = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 50)(rng));
        worst_random   = std::min(worst_random, chain_slack(inequality_report(OccupationSpectrum(random_unit_values(len, rng)))));
    }

    double worst_lll = std::numeric_limits<double>::infinity();
    for(const auto &row : lll_scan(fig2_radii())) worst_lll = std::min(worst_lll, chain_slack(row.report));

    double             worst_lattice = std::numeric_limits<double>::infinity();
    std::vector<Index> ells(128);
    std::iota(ells.begin(), ells.end(), Index{1});
    for(Index filled : {Index{1}, Index{64}, Index{255}, Index{256}, Index{257}, Index{400}})
        for(const auto &row : lattice_scan(512, filled, ells)) worst_lattice = std::min(worst_lattice, chain_slack(row.report));

    double worst_thermal = std::numeric_limits<double>::infinity();
    for(const auto &r : thermal_reports()) worst_thermal = std::min(worst_thermal, chain_slack(r));

    const auto   half     = inequality_report(OccupationSpectrum(std::vector<double>{0.5}));
    const double equality = std::max({std::abs(half.entropy_nats - half.bound2), std::abs(half.bound2 - half.bound4),
                                      std::abs(half.entropy_nats - ln2)});

    const double worst = std::min({worst_random, worst_lll, worst_lattice, worst_thermal});
    return {worst >= -1e-12 && equality <= 1e-12,
            fmt("min slack: random %.3g, LLL %.3g, lattice %.3g, thermal %.3g (tol -1e-12); d=1/2 equality error %.3g (tol 1e-12)",
                worst_random, worst_lll, worst_lattice, worst_thermal, equality)};
}

Outcome pointwise_identity() {
    const int n     = 100000;
    double    worst = 0.0;
    for(int i = 0; i < n; ++i) {
        const double x     = static_cast<double>(i) / (n - 1);
        const auto   f     = fig1_functions(x);
        const double exact = 12 * ln2 * x * (1 - x) * (1 - 2 * x) * (1 - 2 * x);
        worst              = std::max(worst, std::abs(f.bound2_fn - f.bound4_fn - exact));
    }
    return {worst <= 1e-12, fmt("max |f2 - f4 - 12 ln2 x(1-x)(1-2x)^2| = %.3g over 1e5 points (tol 1e-12)", worst)};
}

Outcome lll_mean() {
    const auto t0    = std::chrono::steady_clock::now();
    double     worst = 0.0;
    for(double r : {1.0, 3.0, 10.0}) worst = std::max(worst, std::abs(mean_number(lll_spectrum(LLLDisc::with_radius(r))) - r * r));
    const double secs = seconds_since(t0);
    return {worst <= 1e-9 && secs < 5.0, fmt("max |sum d_k - R^2| = %.3g at R in {1,3,10} (tol 1e-9), %.3f s (limit 5 s)", worst, secs)};
}

Outcome lll_variance_asymptote() {
    const auto   t0     = std::chrono::steady_clock::now();
    const auto   rows   = lll_scan(std::vector<double>{10.0, 20.0});
    const double secs   = seconds_since(t0);
    const double target = 1.0 / std::sqrt(std::numbers::pi);
    const double rel10  = std::abs(rows[0].report.variance / 10.0 / target - 1.0);
    const double rel20  = std::abs(rows[1].report.variance / 20.0 / target - 1.0);
    return {rel10 <= 0.05 && rel20 <= 0.02 && secs < 30.0,
            fmt("variance/R = %.6f at R=10 (rel %.4f, tol 0.05), %.6f at R=20 (rel %.4f, tol 0.02), %.3f s (limit 30 s)",
                rows[0].report.variance / 10.0, rel10, rows[1].report.variance / 20.0, rel20, secs)};
}

Outcome lll_crossover() {
    const double d24 = lll_occupation(24, 5.0);
    const double d25 = lll_occupation(25, 5.0);
    return {d25 < 0.5 && 0.5 < d24, fmt("d_25 = %.6f < 1/2 < d_24 = %.6f at R^2 = 25", d25, d24)};
}

Outcome fig2_ratio() {
    const auto radii = fig2_radii();
    const auto rows  = lll_scan(radii);
    double     min_ratio = std::numeric_limits<double>::infinity();
    double     lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for(std::size_t i = 0; i < rows.size(); ++i) {
        min_ratio = std::min(min_ratio, rows[i].ratio);
        if(radii[i] >= 10.0 - 1e-9) {
            lo = std::min(lo, rows[i].ratio);
            hi = std::max(hi, rows[i].ratio);
        }
    }
    return {min_ratio >= 4 * ln2 && hi - lo < 0.5,
            fmt("min S/var on R in [1,20] = %.6f (>= 4 ln2 = %.6f); spread on [10,20] = %.4f (< 0.5)", min_ratio, 4 * ln2, hi - lo)};
}

double log_fit_r2(const std::vector<double> &ell, const std::vector<double> &y) {
    std::vector<double> x(ell.size());
    std::transform(ell.begin(), ell.end(), x.begin(), [](double v) { return std::log(v); });
    const double n  = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double       sxx = 0, sxy = 0, syy = 0;
    for(std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy * sxy / (sxx * syy);
}

Outcome lattice_scaling() {
    const auto         t0 = std::chrono::steady_clock::now();
    std::vector<Index> ells;
    for(Index l = 8; l <= 128; ++l) ells.push_back(l);
    const auto          rows = lattice_scan(512, 256, ells);
    std::vector<double> ell, s, v;
    for(const auto &row : rows) {
        ell.push_back(row.parameter);
        s.push_back(row.report.entropy_nats);
        v.push_back(row.report.variance);
    }
    const double r2s = log_fit_r2(ell, s), r2v = log_fit_r2(ell, v), secs = seconds_since(t0);
    return {r2s >= 0.999 && r2v >= 0.999 && secs < 60.0,
            fmt("L=512, N=256, ell=8..128: R^2 entropy %.5f, variance %.5f (>= 0.999), %.2f s (limit 60 s)", r2s, r2v, secs)};
}

Outcome thermal_path() {
    Rng                      rng(20030601);
    const oracle::Tolerances tol{1e-7, 1e-7, 1e-7};
    double                   worst = 0.0;
    bool                     ok    = true;
    for(int c = 0; c < 50; ++c) {
        const int  dim   = std::uniform_int_distribution<int>(2, 6)(rng);
        const auto sys   = ThermalSystem(random_hermitian(dim, 1.5, rng));
        const auto dev   = oracle::thermal_oracle_check(sys, random_sites(dim, rng));
        ok               = ok && oracle::within(dev, tol);
        worst            = std::max(worst, oracle::max_of(dev));
    }

    Rng           hrng(28);
    const Index   dim  = 8, fill = 4;
    const CMatrix h    = random_hermitian(dim, 1.0, hrng);
    const auto    eig  = hermitian_eigen(h);
    const double  mu   = 0.5 * (eig.values[dim - fill - 1] + eig.values[dim - fill]);
    CMatrix       occupied(fill, dim);
    for(Index i = 0; i < fill; ++i) occupied.row(i) = eig.vectors.col(dim - 1 - i).transpose();
    const auto    region = RegionProjector::from_sites(dim, {0, 1, 2, 5});
    const auto    ground = inequality_report(factorize(OrbitalSet(occupied), region).spectrum());
    const CMatrix k      = 1000.0 * (h - mu * CMatrix::Identity(dim, dim));
    const auto    hot    = thermal_report(ThermalSystem(0.5 * (k + k.adjoint())), region);
    const double  limit  = std::max({std::abs(hot.entropy_nats - ground.entropy_nats), std::abs(hot.mean - ground.mean),
                                     std::abs(hot.variance - ground.variance), std::abs(hot.kappa4 - ground.kappa4)});
    return {ok && limit <= 1e-6, fmt("50 oracle cases (D <= 6), max deviation %.3g (tol 1e-7); beta=1000 vs ground state %.3g (tol 1e-6)", worst, limit)};
}

Outcome boson_inequality() {
    Rng  rng(606);
    int  held = 0;
    bool all_applicable = true;
    for(int c = 0; c < 1000; ++c) {
        const auto len = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 20)(rng));
        auto       n   = random_unit_values(len, rng);
        for(double &v : n) v = std::min(v, std::nextafter(1.0, 0.0));
        const auto check = boson_inequality_check(BosonOccupations(n));
        all_applicable   = all_applicable && check.applicable;
        held += check.holds ? 1 : 0;
    }
    const auto   dense = boson_inequality_check(BosonOccupations(std::vector<double>{10.0}));
    const auto   edge  = boson_inequality_check(BosonOccupations(std::vector<double>{1.0}));
    const double gap   = std::abs(edge.entropy - edge.bound);
    return {held == 1000 && all_applicable && !dense.holds && gap <= 1e-12,
            fmt("dilute sets holding %d/1000; n=10: S=%.6f vs ln2 var=%.6f (fails: %s); n=1 equality error %.3g (tol 1e-12)", held,
                dense.entropy, dense.bound, dense.holds ? "no" : "yes", gap)};
}

} // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"factorization theorem", factorization_theorem},
        {"closed-form agreement", closed_form_agreement},
        {"inequality chain", inequality_chain},
        {"pointwise bound identity", pointwise_identity},
        {"LLL mean", lll_mean},
        {"LLL variance asymptote", lll_variance_asymptote},
        {"LLL crossover", lll_crossover},
        {"entropy/fluctuation ratio", fig2_ratio},
        {"1D logarithmic scaling", lattice_scaling},
        {"thermal path", thermal_path},
        {"boson inequality", boson_inequality},
    };
    int failed = 0;
    for(const auto &[name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch(const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s  %-26s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
