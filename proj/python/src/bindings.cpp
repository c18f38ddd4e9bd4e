#include "fermisea/counting.hpp"
#include "fermisea/factorization.hpp"
#include "fermisea/models.hpp"
#include "fermisea/oracle.hpp"
#include "fermisea/thermal.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

namespace py = pybind11;
using namespace fermisea;

namespace {

OccupationSpectrum spec(std::vector<double> d) {
    return OccupationSpectrum(std::move(d));
}

RegionProjector region_of(Index dim, const std::vector<Index> &sites) {
    return RegionProjector::from_sites(dim, sites);
}

py::dict deviation_dict(const oracle::Deviation &d) {
    py::dict out;
    out["spectrum"]     = d.spectrum;
    out["entropy"]      = d.entropy;
    out["mean"]         = d.mean;
    out["variance"]     = d.variance;
    out["kappa4"]       = d.kappa4;
    out["distribution"] = d.distribution;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Entanglement entropy and counting statistics of free-fermion states";

    py::class_<CountingReport>(m, "CountingReport")
        .def_readonly("mean", &CountingReport::mean)
        .def_readonly("variance", &CountingReport::variance)
        .def_readonly("kappa4", &CountingReport::kappa4)
        .def_readonly("entropy_nats", &CountingReport::entropy_nats)
        .def_readonly("bound2", &CountingReport::bound2)
        .def_readonly("bound4", &CountingReport::bound4)
        .def_property_readonly("chain_holds",
                               [](const CountingReport &r) {
                                   return py::make_tuple(r.chain_holds.entropy_ge_bound2, r.chain_holds.bound2_ge_bound4);
                               })
        .def("__repr__", [](const CountingReport &r) {
            return "CountingReport(mean=" + std::to_string(r.mean) + ", variance=" + std::to_string(r.variance) +
                   ", entropy_nats=" + std::to_string(r.entropy_nats) + ")";
        });

    // counting
    m.def("binary_entropy", &binary_entropy, py::arg("x"));
    m.def("entropy", [](std::vector<double> d) { return entropy(spec(std::move(d))); }, py::arg("d"));
    m.def("mean_number", [](std::vector<double> d) { return mean_number(spec(std::move(d))); }, py::arg("d"));
    m.def("variance", [](std::vector<double> d) { return variance(spec(std::move(d))); }, py::arg("d"));
    m.def("fourth_cumulant", [](std::vector<double> d) { return fourth_cumulant(spec(std::move(d))); }, py::arg("d"));
    m.def("cumulant", [](std::vector<double> d, int order) { return cumulant(spec(std::move(d)), order); }, py::arg("d"),
          py::arg("order"));
    m.def("generating_function", [](std::vector<double> d, double lambda) { return generating_function(spec(std::move(d)), lambda); },
          py::arg("d"), py::arg("lam"));
    m.def("number_distribution", [](std::vector<double> d) { return number_distribution(spec(std::move(d))); }, py::arg("d"));
    m.def("inequality_report", [](std::vector<double> d) { return inequality_report(spec(std::move(d))); }, py::arg("d"));
    m.def(
        "fig1_functions",
        [](double x) {
            const auto f = fig1_functions(x);
            return py::make_tuple(f.entropy_fn, f.bound2_fn, f.bound4_fn);
        },
        py::arg("x"));

    py::class_<BosonInequality>(m, "BosonInequality")
        .def_readonly("applicable", &BosonInequality::applicable)
        .def_readonly("holds", &BosonInequality::holds)
        .def_readonly("entropy", &BosonInequality::entropy)
        .def_readonly("variance", &BosonInequality::variance)
        .def_readonly("bound", &BosonInequality::bound);
    m.def("boson_entropy", [](std::vector<double> n) { return boson_entropy(BosonOccupations(std::move(n))); }, py::arg("n"));
    m.def("boson_variance", [](std::vector<double> n) { return boson_variance(BosonOccupations(std::move(n))); }, py::arg("n"));
    m.def("boson_inequality_check", [](std::vector<double> n) { return boson_inequality_check(BosonOccupations(std::move(n))); },
          py::arg("n"));

    // factorization
    py::class_<ModeFactorization>(m, "Factorization")
        .def_readonly("d", &ModeFactorization::d)
        .def_readonly("modes_a", &ModeFactorization::modes_a)
        .def_readonly("modes_b", &ModeFactorization::modes_b)
        .def_readonly("a_defined", &ModeFactorization::a_defined)
        .def_readonly("b_defined", &ModeFactorization::b_defined)
        .def_readonly("unitary", &ModeFactorization::unitary);
    m.def(
        "overlap_matrix",
        [](const CMatrix &orbitals, const std::vector<Index> &sites) {
            const OrbitalSet orb(orbitals);
            return overlap_matrix(orb, region_of(orb.dim(), sites)).matrix();
        },
        py::arg("orbitals"), py::arg("sites"), "Rows of `orbitals` are orthonormal orbitals; `sites` are 0-based.");
    m.def(
        "factorize",
        [](const CMatrix &orbitals, const std::vector<Index> &sites) {
            const OrbitalSet orb(orbitals);
            return factorize(orb, region_of(orb.dim(), sites));
        },
        py::arg("orbitals"), py::arg("sites"));
    m.def(
        "eigenvalues_of_rho_a", [](std::vector<double> d, int max_modes) { return eigenvalues_of_rho_a(spec(std::move(d)), max_modes); },
        py::arg("d"), py::arg("max_modes") = default_max_rho_modes);

    // thermal
    m.def("occupation_operator", [](const CMatrix &kernel) { return occupation_operator(ThermalSystem(kernel)); }, py::arg("kernel"));
    m.def(
        "restricted_occupation",
        [](const CMatrix &occupation, const std::vector<Index> &sites) {
            const auto r = restricted_occupation(occupation, region_of(occupation.rows(), sites));
            return py::make_tuple(r.matrix(), r.spectrum().vector());
        },
        py::arg("occupation"), py::arg("sites"));
    m.def(
        "thermal_report",
        [](const CMatrix &kernel, const std::vector<Index> &sites) {
            const ThermalSystem sys(kernel);
            return thermal_report(sys, region_of(sys.dim(), sites));
        },
        py::arg("kernel"), py::arg("sites"));
    m.def(
        "effective_energies",
        [](std::vector<double> d) {
            const auto          e = effective_energies(spec(std::move(d)));
            std::vector<double> out(e.values.size());
            for(std::size_t i = 0; i < out.size(); ++i) {
                switch(e.kinds[i]) {
                case EnergyKind::finite: out[i] = e.values[i]; break;
                case EnergyKind::plus_infinity: out[i] = HUGE_VAL; break;
                case EnergyKind::minus_infinity: out[i] = -HUGE_VAL; break;
                }
            }
            return out;
        },
        py::arg("d"));

    // models
    py::class_<ScanRow>(m, "ScanRow")
        .def_readonly("parameter", &ScanRow::parameter)
        .def_readonly("report", &ScanRow::report)
        .def_readonly("ratio", &ScanRow::ratio);
    m.def("lll_occupation", &lll_occupation, py::arg("k"), py::arg("radius"));
    m.def("lll_spectrum", [](double radius) { return lll_spectrum(LLLDisc::with_radius(radius)).vector(); }, py::arg("radius"));
    m.def("lll_scan", [](const std::vector<double> &radii) { return lll_scan(radii); }, py::arg("radii"));
    m.def("lll_mode_profile", [](Index k, double radius, const std::vector<double> &r) { return lll_mode_profile(k, radius, r); },
          py::arg("k"), py::arg("radius"), py::arg("r"));
    m.def(
        "lattice_overlap", [](Index sites, Index filled, Index segment) { return lattice_overlap({sites, filled, segment}).matrix(); },
        py::arg("sites"), py::arg("filled"), py::arg("segment"));
    m.def(
        "lattice_scan", [](Index sites, Index filled, const std::vector<Index> &segments) { return lattice_scan(sites, filled, segments); },
        py::arg("sites"), py::arg("filled"), py::arg("segments"));

    // brute-force checks
    m.def(
        "pure_state_check",
        [](const CMatrix &orbitals, const std::vector<int> &sites) { return deviation_dict(oracle::pure_state_check(OrbitalSet(orbitals), sites)); },
        py::arg("orbitals"), py::arg("sites"));
    m.def(
        "thermal_oracle_check",
        [](const CMatrix &kernel, const std::vector<int> &sites) { return deviation_dict(oracle::thermal_oracle_check(ThermalSystem(kernel), sites)); },
        py::arg("kernel"), py::arg("sites"));
}
