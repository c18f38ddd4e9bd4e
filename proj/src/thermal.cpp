#include "fermisea/thermal.hpp"

#include "fermisea/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fermisea {

ThermalSystem::ThermalSystem(CMatrix kernel) : kernel_(std::move(kernel)) {
    if(kernel_.rows() != kernel_.cols()) throw InvalidInput("ThermalSystem: kernel is not square");
    if(hermiticity_defect(kernel_) > hermitian_tolerance) throw InvalidInput("ThermalSystem: kernel is not Hermitian");
}

double fermi_occupation(double kappa) noexcept {
    if(kappa > 40.0) {
        const double e = std::exp(-kappa);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(kappa));
}

CMatrix occupation_operator(const ThermalSystem &sys) {
    const HermitianEigen eig = hermitian_eigen(sys.kernel());
    RVector              f(eig.values.size());
    for(Index i = 0; i < f.size(); ++i) f[i] = fermi_occupation(eig.values[i]);
    CMatrix n = eig.vectors * f.asDiagonal() * eig.vectors.adjoint();
    return 0.5 * (n + n.adjoint());
}

RestrictedOccupation restricted_occupation(const CMatrix &occupation, const RegionProjector &region) {
    if(occupation.rows() != region.dim() || occupation.cols() != region.dim())
        throw InvalidInput("restricted_occupation: dimension mismatch");
    const CMatrix w   = region.orthonormal_basis();
    CMatrix       n_a = w.adjoint() * occupation * w;
    n_a               = 0.5 * (n_a + n_a.adjoint()).eval();
    auto spec         = OccupationSpectrum::from_eigenvalues(hermitian_eigenvalues(n_a));
    return {std::move(n_a), std::move(spec)};
}

CountingReport thermal_report(const ThermalSystem &sys, const RegionProjector &region) {
    if(sys.dim() != region.dim()) throw InvalidInput("thermal_report: dimension mismatch");
    return inequality_report(restricted_occupation(occupation_operator(sys), region).spectrum());
}

bool EffectiveEnergies::all_finite() const {
    return std::all_of(kinds.begin(), kinds.end(), [](EnergyKind k) { return k == EnergyKind::finite; });
}

EffectiveEnergies effective_energies(const OccupationSpectrum &spec, bool force_finite) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    EffectiveEnergies out;
    out.values.reserve(spec.size());
    out.kinds.reserve(spec.size());
    for(double d : spec) {
        if(force_finite) d = std::clamp(d, 1e-300, 1.0 - 1e-16);
        if(d <= 0.0) {
            out.values.push_back(inf);
            out.kinds.push_back(EnergyKind::plus_infinity);
        } else if(d >= 1.0) {
            out.values.push_back(-inf);
            out.kinds.push_back(EnergyKind::minus_infinity);
        } else {
            out.values.push_back(std::log1p(-d) - std::log(d));
            out.kinds.push_back(EnergyKind::finite);
        }
    }
    return out;
}

EffectiveEnergies effective_energies(const RestrictedOccupation &occ, bool force_finite) {
    return effective_energies(occ.spectrum(), force_finite);
}

} // namespace fermisea
