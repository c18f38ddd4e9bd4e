#include "fermisea/models.hpp"

#include "fermisea/linalg.hpp"
#include "fermisea/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace fermisea {

namespace {
constexpr double pi = std::numbers::pi;
}

LLLDisc LLLDisc::with_radius(double radius) {
    LLLDisc disc;
    disc.radius = radius;
    disc.kmax   = default_kmax(radius);
    disc.validate();
    return disc;
}

Index LLLDisc::default_kmax(double radius) {
    if(!(radius > 0.0) || !std::isfinite(radius)) throw InvalidInput("LLLDisc: radius must be positive and finite");
    return static_cast<Index>(std::ceil(radius * radius + 12.0 * radius + 50.0));
}

void LLLDisc::validate() const {
    if(!(radius > 0.0) || !std::isfinite(radius)) throw InvalidInput("LLLDisc: radius must be positive and finite");
    if(static_cast<double>(kmax) < std::ceil(radius * radius))
        throw InvalidInput("LLLDisc: kmax must be at least ceil(R^2)");
    if(!(epsilon_tail > 0.0)) throw InvalidInput("LLLDisc: epsilon_tail must be positive");
}

double lll_occupation(Index k, double radius) {
    if(k < 0) throw InvalidInput("lll_occupation: k must be >= 0");
    if(!(radius >= 0.0)) throw InvalidInput("lll_occupation: radius must be >= 0");
    return regularized_gamma_p(static_cast<double>(k) + 1.0, radius * radius);
}

OccupationSpectrum lll_spectrum(const LLLDisc &disc) {
    disc.validate();
    std::vector<double> d(static_cast<std::size_t>(disc.kmax) + 1);
    for(Index k = 0; k <= disc.kmax; ++k) d[static_cast<std::size_t>(k)] = lll_occupation(k, disc.radius);
    if(!(d.back() < disc.epsilon_tail)) {
        throw NumericalError("lll_spectrum: d_kmax = " + std::to_string(d.back()) +
                             " exceeds the tail tolerance; increase kmax");
    }
    return OccupationSpectrum(std::move(d));
}

double ratio_of(const CountingReport &report) {
    if(!(report.variance > 1e-12)) return std::numeric_limits<double>::quiet_NaN();
    return report.entropy_nats / report.variance;
}

std::vector<ScanRow> lll_scan(std::span<const double> radii) {
    std::vector<ScanRow> rows;
    rows.reserve(radii.size());
    for(double r : radii) {
        ScanRow row;
        row.parameter = r;
        row.report    = inequality_report(lll_spectrum(LLLDisc::with_radius(r)));
        row.ratio     = ratio_of(row.report);
        rows.push_back(row);
    }
    return rows;
}

double lll_radial_density(Index k, double r) {
    if(k < 0 || !(r >= 0.0)) throw InvalidInput("lll_radial_density: need k >= 0 and r >= 0");
    if(r == 0.0) return 0.0;
    const double kk = static_cast<double>(k);
    return std::exp(std::numbers::ln2 + (2.0 * kk + 1.0) * std::log(r) - r * r - std::lgamma(kk + 1.0));
}

std::vector<double> lll_mode_profile(Index k, double radius, std::span<const double> r_grid) {
    const double dk = lll_occupation(k, radius);
    if(!(dk > 1e-12)) {
        throw NumericalError("lll_mode_profile: mode " + std::to_string(k) +
                             " is numerically absent from the disc (d_k <= 1e-12)");
    }
    std::vector<double> out;
    out.reserve(r_grid.size());
    for(double r : r_grid) {
        if(!(r >= 0.0 && r <= radius)) throw InvalidInput("lll_mode_profile: grid radius outside [0, R]");
        out.push_back(lll_radial_density(k, r) / dk);
    }
    return out;
}

double lll_mode_mean_radius(Index k, double radius) {
    const double dk    = lll_occupation(k, radius);
    const int    panels = std::max(1, static_cast<int>(std::ceil(radius)));
    const auto   rule   = composite_gauss_legendre(0.0, radius, panels, radial_nodes_per_unit);
    CompensatedSum s;
    for(std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = rule.nodes[i];
        s += rule.weights[i] * r * lll_radial_density(k, r);
    }
    return s.value() / dk;
}

DiscretizedDisc discretized_lll_disc(double radius, Index kmax, double outer_margin) {
    if(!(radius > 0.0) || kmax < 0 || !(outer_margin > 0.0))
        throw InvalidInput("discretized_lll_disc: need R > 0, kmax >= 0, margin > 0");

    const auto inner = composite_gauss_legendre(0.0, radius, std::max(1, static_cast<int>(std::ceil(radius))),
                                                radial_nodes_per_unit);
    const auto outer = composite_gauss_legendre(radius, radius + outer_margin,
                                                std::max(1, static_cast<int>(std::ceil(outer_margin))),
                                                radial_nodes_per_unit);
    std::vector<double> r = inner.nodes;
    std::vector<double> w = inner.weights;
    r.insert(r.end(), outer.nodes.begin(), outer.nodes.end());
    w.insert(w.end(), outer.weights.begin(), outer.weights.end());

    // Exact discrete orthogonality of e^{i(k-k')theta} needs more than 2*kmax angles.
    const Index n_theta = 2 * kmax + 2;
    const Index n_r     = static_cast<Index>(r.size());
    const Index dim     = n_r * n_theta;
    const double dtheta = 2.0 * pi / static_cast<double>(n_theta);

    CMatrix coeffs(kmax + 1, dim);
    for(Index k = 0; k <= kmax; ++k) {
        const double kk   = static_cast<double>(k);
        const double norm = -0.5 * (std::log(pi) + std::lgamma(kk + 1.0));
        for(Index j = 0; j < n_r; ++j) {
            const double rj = r[static_cast<std::size_t>(j)];
            const double radial =
                std::exp(norm + kk * std::log(rj) - 0.5 * rj * rj) * std::sqrt(w[static_cast<std::size_t>(j)] * rj * dtheta);
            for(Index m = 0; m < n_theta; ++m) {
                coeffs(k, j * n_theta + m) = std::polar(radial, kk * dtheta * static_cast<double>(m));
            }
        }
    }

    std::vector<Index> disc_sites;
    const Index        n_inner = static_cast<Index>(inner.nodes.size());
    disc_sites.reserve(static_cast<std::size_t>(n_inner * n_theta));
    for(Index s = 0; s < n_inner * n_theta; ++s) disc_sites.push_back(s);

    return DiscretizedDisc{OrbitalSet(std::move(coeffs)), RegionProjector::from_sites(dim, std::move(disc_sites)), n_r,
                           n_theta};
}

void LatticeRing::validate() const {
    if(sites < 1 || filled < 1 || filled > sites || segment < 1 || segment > sites)
        throw InvalidInput("LatticeRing: need 1 <= N <= L and 1 <= ell <= L");
}

OverlapMatrix lattice_overlap(const LatticeRing &ring) {
    ring.validate();
    const Index  l  = ring.sites;
    const Index  n  = ring.filled;
    const double dl = static_cast<double>(l);

    // Toeplitz: tabulate the kernel for every separation once.
    std::vector<cplx> kernel(static_cast<std::size_t>(ring.segment));
    kernel[0] = static_cast<double>(n) / dl;
    for(Index x = 1; x < ring.segment; ++x) {
        // Reduce the numerator angle pi*N*x/L modulo 2 pi before calling sin.
        const Index  num   = (n * x) % (2 * l);
        const double value = std::sin(pi * static_cast<double>(num) / dl) / (dl * std::sin(pi * static_cast<double>(x) / dl));
        kernel[static_cast<std::size_t>(x)] = ring.convention_dependent() ? std::polar(value, pi * static_cast<double>(x) / dl)
                                                                          : cplx(value, 0.0);
    }

    CMatrix m(ring.segment, ring.segment);
    for(Index j = 0; j < ring.segment; ++j) {
        for(Index k = 0; k < ring.segment; ++k) {
            const cplx v = kernel[static_cast<std::size_t>(std::abs(j - k))];
            m(j, k)      = j >= k ? v : std::conj(v);
        }
    }
    return OverlapMatrix(std::move(m));
}

std::vector<ScanRow> lattice_scan(Index sites, Index filled, std::span<const Index> segments) {
    std::vector<ScanRow> rows;
    rows.reserve(segments.size());
    for(Index ell : segments) {
        ScanRow row;
        row.parameter = static_cast<double>(ell);
        row.report    = inequality_report(lattice_overlap({sites, filled, ell}).spectrum());
        row.ratio     = ratio_of(row.report);
        rows.push_back(row);
    }
    return rows;
}

} // namespace fermisea
