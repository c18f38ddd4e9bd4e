"""Entanglement entropy and counting statistics of free-fermion states."""

from ._core import (
    BosonInequality,
    CountingReport,
    Factorization,
    ScanRow,
    binary_entropy,
    boson_entropy,
    boson_inequality_check,
    boson_variance,
    cumulant,
    effective_energies,
    eigenvalues_of_rho_a,
    entropy,
    factorize,
    fig1_functions,
    fourth_cumulant,
    generating_function,
    inequality_report,
    lattice_overlap,
    lattice_scan,
    lll_mode_profile,
    lll_occupation,
    lll_scan,
    lll_spectrum,
    mean_number,
    number_distribution,
    occupation_operator,
    overlap_matrix,
    pure_state_check,
    restricted_occupation,
    thermal_oracle_check,
    thermal_report,
    variance,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
