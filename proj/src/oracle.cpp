#include "fermisea/oracle.hpp"

#include "fermisea/linalg.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>

namespace fermisea::oracle {

namespace {

std::size_t fock_dim(int sites) {
    return std::size_t{1} << static_cast<unsigned>(sites);
}

int parity_sign(std::uint32_t bits) noexcept {
    return (std::popcount(bits) & 1) ? -1 : 1;
}

std::uint32_t below(int site) noexcept {
    return (std::uint32_t{1} << static_cast<unsigned>(site)) - 1u;
}

// Scatter the low bits of `packed` onto the given sites.
std::uint32_t deposit(std::uint32_t packed, const std::vector<int> &sites) noexcept {
    std::uint32_t out = 0;
    for(std::size_t i = 0; i < sites.size(); ++i)
        if(packed >> i & 1u) out |= std::uint32_t{1} << static_cast<unsigned>(sites[i]);
    return out;
}

struct Split {
    std::vector<int> region;
    std::vector<int> rest;
    std::uint32_t    region_bits = 0;
};

Split split_sites(int sites, const std::vector<int> &region_sites) {
    Split s;
    s.region = region_sites;
    std::sort(s.region.begin(), s.region.end());
    if(std::adjacent_find(s.region.begin(), s.region.end()) != s.region.end())
        throw InvalidInput("partial_trace: duplicate region site");
    for(int r : s.region) {
        if(r < 0 || r >= sites) throw InvalidInput("partial_trace: region site " + std::to_string(r) + " out of range");
        s.region_bits |= std::uint32_t{1} << static_cast<unsigned>(r);
    }
    for(int i = 0; i < sites; ++i)
        if(!(s.region_bits >> i & 1u)) s.rest.push_back(i);
    return s;
}

} // namespace

FockState::FockState(int sites, CVector amplitudes) : sites_(sites), amplitudes_(std::move(amplitudes)) {
    if(sites < 0 || sites > max_pure_sites) throw InvalidInput("FockState: at most 14 sites");
    if(static_cast<std::size_t>(amplitudes_.size()) != fock_dim(sites)) throw InvalidInput("FockState: wrong amplitude count");
    if(std::abs(amplitudes_.norm() - 1.0) > 1e-12) throw InvalidInput("FockState: state is not normalized");
}

DensityOperator::DensityOperator(int sites, CMatrix matrix) : sites_(sites), matrix_(std::move(matrix)) {
    if(sites < 0 || sites > max_pure_sites) throw InvalidInput("DensityOperator: at most 14 sites");
    const auto dim = static_cast<Index>(fock_dim(sites));
    if(matrix_.rows() != dim || matrix_.cols() != dim) throw InvalidInput("DensityOperator: wrong matrix size");
    if(hermiticity_defect(matrix_) > 1e-10) throw InvalidInput("DensityOperator: matrix is not Hermitian");
    if(std::abs(matrix_.trace() - cplx(1.0, 0.0)) > 1e-10) throw InvalidInput("DensityOperator: trace is not 1");
    const RVector ev = hermitian_eigenvalues(matrix_);
    if(ev.size() > 0 && ev[ev.size() - 1] < -1e-10) throw InvalidInput("DensityOperator: matrix is not positive");
}

std::vector<double> DensityOperator::eigenvalues() const {
    const RVector ev = hermitian_eigenvalues(matrix_);
    return {ev.begin(), ev.end()};
}

FockState slater_state(const OrbitalSet &orbitals) {
    const auto sites = static_cast<int>(orbitals.dim());
    if(sites > max_pure_sites) throw InvalidInput("slater_state: at most 14 single-particle sites");
    const auto     n      = static_cast<int>(orbitals.n_occ());
    const CMatrix &coeffs = orbitals.coeffs();

    CVector amp = CVector::Zero(static_cast<Index>(fock_dim(sites)));
    CMatrix sub(n, n);
    for(std::uint32_t mask = 0; mask < fock_dim(sites); ++mask) {
        if(std::popcount(mask) != n) continue;
        Index col = 0;
        for(int s = 0; s < sites; ++s)
            if(mask >> s & 1u) sub.col(col++) = coeffs.col(s);
        amp[mask] = sub.partialPivLu().determinant();
    }
    amp /= amp.norm();
    return FockState(sites, std::move(amp));
}

int hopping_sign(std::uint32_t in, int i, int j, std::uint32_t &out) noexcept {
    const std::uint32_t bi = std::uint32_t{1} << static_cast<unsigned>(i);
    const std::uint32_t bj = std::uint32_t{1} << static_cast<unsigned>(j);
    if(!(in & bj)) return 0;
    if(i == j) {
        out = in;
        return 1;
    }
    if(in & bi) return 0;
    const std::uint32_t mid = in & ~bj;
    out                     = mid | bi;
    return parity_sign(in & below(j)) * parity_sign(mid & below(i));
}

int reorder_sign(std::uint32_t mask, std::uint32_t region_bits) noexcept {
    const std::uint32_t rest_occ = mask & ~region_bits;
    int                 pairs    = 0;
    for(std::uint32_t r = mask & region_bits; r != 0; r &= r - 1) {
        const int site = std::countr_zero(r);
        pairs += std::popcount(rest_occ & below(site));
    }
    return (pairs & 1) ? -1 : 1;
}

DensityOperator partial_trace(const FockState &state, const std::vector<int> &region_sites) {
    const Split  s      = split_sites(state.sites(), region_sites);
    const auto   m      = static_cast<int>(s.region.size());
    const auto   dim_a  = fock_dim(m);
    const auto   dim_b  = fock_dim(state.sites() - m);
    CMatrix      psi(static_cast<Index>(dim_a), static_cast<Index>(dim_b));
    for(std::uint32_t b = 0; b < dim_b; ++b) {
        const std::uint32_t rest = deposit(b, s.rest);
        for(std::uint32_t a = 0; a < dim_a; ++a) {
            const std::uint32_t mask = deposit(a, s.region) | rest;
            psi(a, b)                = static_cast<double>(reorder_sign(mask, s.region_bits)) * state.amplitudes()[mask];
        }
    }
    CMatrix rho = psi * psi.adjoint();
    rho         = 0.5 * (rho + rho.adjoint()).eval();
    return DensityOperator(m, std::move(rho));
}

DensityOperator partial_trace(const DensityOperator &rho, const std::vector<int> &region_sites) {
    const Split s     = split_sites(rho.sites(), region_sites);
    const auto  m     = static_cast<int>(s.region.size());
    const auto  dim_a = fock_dim(m);
    const auto  dim_b = fock_dim(rho.sites() - m);

    std::vector<std::uint32_t> region_masks(dim_a);
    for(std::uint32_t a = 0; a < dim_a; ++a) region_masks[a] = deposit(a, s.region);

    CMatrix out = CMatrix::Zero(static_cast<Index>(dim_a), static_cast<Index>(dim_a));
    std::vector<int> signs(dim_a);
    std::vector<std::uint32_t> masks(dim_a);
    for(std::uint32_t b = 0; b < dim_b; ++b) {
        const std::uint32_t rest = deposit(b, s.rest);
        for(std::uint32_t a = 0; a < dim_a; ++a) {
            masks[a] = region_masks[a] | rest;
            signs[a] = reorder_sign(masks[a], s.region_bits);
        }
        for(std::uint32_t a = 0; a < dim_a; ++a)
            for(std::uint32_t ap = 0; ap < dim_a; ++ap)
                out(a, ap) += static_cast<double>(signs[a] * signs[ap]) * rho.matrix()(masks[a], masks[ap]);
    }
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityOperator(m, std::move(out));
}

OracleCounting oracle_counting(const DensityOperator &rho) {
    OracleCounting out;
    out.eigenvalues = rho.eigenvalues();

    CompensatedSum ent;
    for(double lam : out.eigenvalues)
        if(lam > 0.0) ent += -lam * std::log(lam);

    out.distribution.assign(static_cast<std::size_t>(rho.sites()) + 1, 0.0);
    for(std::uint32_t a = 0; a < fock_dim(rho.sites()); ++a)
        out.distribution[static_cast<std::size_t>(std::popcount(a))] += rho.matrix()(a, a).real();

    CompensatedSum mean;
    for(std::size_t k = 0; k < out.distribution.size(); ++k) mean += static_cast<double>(k) * out.distribution[k];
    const double   mu = mean.value();
    CompensatedSum m2, m4;
    for(std::size_t k = 0; k < out.distribution.size(); ++k) {
        const double dev = static_cast<double>(k) - mu;
        m2 += dev * dev * out.distribution[k];
        m4 += dev * dev * dev * dev * out.distribution[k];
    }

    CountingReport &r               = out.report;
    r.mean                          = mu;
    r.variance                      = m2.value();
    r.kappa4                        = m4.value() - 3.0 * r.variance * r.variance;
    r.entropy_nats                  = ent.value();
    r.bound2                        = 4.0 * std::numbers::ln2 * r.variance;
    r.bound4                        = -8.0 * std::numbers::ln2 * r.kappa4;
    r.chain_holds.entropy_ge_bound2 = r.entropy_nats - r.bound2 >= -chain_slack;
    r.chain_holds.bound2_ge_bound4  = r.bound2 - r.bound4 >= -chain_slack;
    return out;
}

CMatrix quadratic_hamiltonian(const CMatrix &kernel) {
    if(kernel.rows() != kernel.cols()) throw InvalidInput("quadratic_hamiltonian: kernel is not square");
    const auto sites = static_cast<int>(kernel.rows());
    if(sites > max_thermal_sites) throw InvalidInput("quadratic_hamiltonian: at most 10 sites");
    const auto dim = fock_dim(sites);
    CMatrix    h   = CMatrix::Zero(static_cast<Index>(dim), static_cast<Index>(dim));
    for(std::uint32_t in = 0; in < dim; ++in) {
        for(int i = 0; i < sites; ++i) {
            for(int j = 0; j < sites; ++j) {
                if(kernel(i, j) == cplx(0.0, 0.0)) continue;
                std::uint32_t out  = 0;
                const int     sign = hopping_sign(in, i, j, out);
                if(sign != 0) h(out, in) += static_cast<double>(sign) * kernel(i, j);
            }
        }
    }
    return h;
}

DensityOperator gibbs_state(const ThermalSystem &sys) {
    if(sys.dim() > max_thermal_sites) throw InvalidInput("gibbs_state: at most 10 sites");
    const HermitianEigen eig = hermitian_eigen(quadratic_hamiltonian(sys.kernel()));
    const Index          n   = eig.values.size();
    const double         e0  = eig.values[n - 1]; // smallest
    RVector              w(n);
    for(Index i = 0; i < n; ++i) w[i] = std::exp(-(eig.values[i] - e0));
    w /= compensated_sum(std::span<const double>(w.data(), static_cast<std::size_t>(n)));
    CMatrix rho = eig.vectors * w.asDiagonal() * eig.vectors.adjoint();
    rho         = 0.5 * (rho + rho.adjoint()).eval();
    return DensityOperator(static_cast<int>(sys.dim()), std::move(rho));
}

CMatrix correlation_matrix(const DensityOperator &rho) {
    const int sites = rho.sites();
    CMatrix   c     = CMatrix::Zero(sites, sites);
    for(std::uint32_t in = 0; in < fock_dim(sites); ++in) {
        for(int i = 0; i < sites; ++i) {
            for(int j = 0; j < sites; ++j) {
                std::uint32_t out  = 0;
                const int     sign = hopping_sign(in, i, j, out);
                if(sign != 0) c(i, j) += static_cast<double>(sign) * rho.matrix()(in, out);
            }
        }
    }
    return c;
}

bool within(const Deviation &dev, const Tolerances &tol) noexcept {
    return dev.spectrum <= tol.spectrum && dev.entropy <= tol.moments && dev.mean <= tol.moments &&
           dev.variance <= tol.moments && dev.kappa4 <= tol.moments && dev.distribution <= tol.distribution;
}

double max_of(const Deviation &dev) noexcept {
    return std::max({dev.spectrum, dev.entropy, dev.mean, dev.variance, dev.kappa4, dev.distribution});
}

double spectrum_distance(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    const std::size_t n = std::max(a.size(), b.size());
    a.resize(n, 0.0);
    b.resize(n, 0.0);
    double worst = 0.0;
    for(std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

namespace {

Deviation compare(const OracleCounting &brute, const OccupationSpectrum &spec) {
    const CountingReport closed = inequality_report(spec);
    Deviation            dev;
    dev.spectrum     = spectrum_distance(brute.eigenvalues, eigenvalues_of_rho_a(spec));
    dev.entropy      = std::abs(brute.report.entropy_nats - closed.entropy_nats);
    dev.mean         = std::abs(brute.report.mean - closed.mean);
    dev.variance     = std::abs(brute.report.variance - closed.variance);
    dev.kappa4       = std::abs(brute.report.kappa4 - closed.kappa4);
    // Both distributions are supported on 0..min(m, N); pad the shorter.
    dev.distribution = 0.0;
    const auto closed_p = number_distribution(spec);
    const auto n        = std::max(closed_p.size(), brute.distribution.size());
    for(std::size_t k = 0; k < n; ++k) {
        const double x = k < closed_p.size() ? closed_p[k] : 0.0;
        const double y = k < brute.distribution.size() ? brute.distribution[k] : 0.0;
        dev.distribution = std::max(dev.distribution, std::abs(x - y));
    }
    return dev;
}

std::vector<Index> as_indices(const std::vector<int> &sites) {
    return {sites.begin(), sites.end()};
}

} // namespace

Deviation pure_state_check(const OrbitalSet &orbitals, const std::vector<int> &region_sites) {
    const auto region = RegionProjector::from_sites(orbitals.dim(), as_indices(region_sites));
    const auto f      = factorize(orbitals, region);
    const auto brute  = oracle_counting(partial_trace(slater_state(orbitals), region_sites));
    return compare(brute, f.spectrum());
}

Deviation thermal_oracle_check(const ThermalSystem &sys, const std::vector<int> &region_sites) {
    const auto region = RegionProjector::from_sites(sys.dim(), as_indices(region_sites));
    const auto n_a    = restricted_occupation(occupation_operator(sys), region);
    const auto brute  = oracle_counting(partial_trace(gibbs_state(sys), region_sites));
    return compare(brute, n_a.spectrum());
}

} // namespace fermisea::oracle
