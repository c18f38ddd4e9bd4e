import math

import numpy as np
import pytest

import fermisea as fs

LN2 = math.log(2.0)


def test_half_filled_mode_saturates_the_chain():
    r = fs.inequality_report([0.5])
    assert r.entropy_nats == pytest.approx(LN2, abs=1e-14)
    assert r.bound2 == pytest.approx(LN2, abs=1e-14)
    assert r.bound4 == pytest.approx(LN2, abs=1e-14)
    assert r.chain_holds == (True, True)


def test_counting_functions():
    d = [0.3, 0.9]
    assert fs.number_distribution(d) == pytest.approx([0.07, 0.66, 0.27], abs=1e-14)
    assert fs.mean_number(d) == pytest.approx(1.2)
    assert fs.variance(d) == pytest.approx(0.3 * 0.7 + 0.9 * 0.1)
    assert fs.cumulant(d, 2) == pytest.approx(fs.variance(d))
    assert abs(fs.generating_function(d, 0.0) - 1.0) < 1e-15
    assert fs.fig1_functions(0.5) == pytest.approx((LN2, LN2, LN2))


def test_factorization_matches_brute_force():
    rng = np.random.default_rng(7)
    z = rng.normal(size=(6, 3)) + 1j * rng.normal(size=(6, 3))
    q, _ = np.linalg.qr(z)
    orbitals = q.T.copy()
    f = fs.factorize(orbitals, [0, 1, 2])
    assert all(0.0 <= x <= 1.0 for x in f.d)
    m = fs.overlap_matrix(orbitals, [0, 1, 2])
    assert np.allclose(np.sort(np.linalg.eigvalsh(m))[::-1], f.d, atol=1e-12)
    dev = fs.pure_state_check(orbitals, [0, 1, 2])
    assert max(dev.values()) < 1e-8
    assert sum(fs.eigenvalues_of_rho_a(f.d)) == pytest.approx(1.0)


def test_thermal_path():
    k = np.diag([math.log(3.0), -math.log(3.0)]).astype(complex)
    n = fs.occupation_operator(k)
    assert np.allclose(np.diag(n).real, [0.25, 0.75])
    r = fs.thermal_report(k, [0])
    assert r.mean == pytest.approx(0.25)
    assert fs.effective_energies([0.25])[0] == pytest.approx(math.log(3.0))
    assert fs.effective_energies([0.0])[0] == math.inf
    assert max(fs.thermal_oracle_check(k, [1]).values()) < 1e-10


def test_models():
    assert fs.lll_occupation(0, 1.0) == pytest.approx(1.0 - math.exp(-1.0), rel=1e-15)
    assert sum(fs.lll_spectrum(3.0)) == pytest.approx(9.0, abs=1e-9)
    rows = fs.lll_scan([10.0])
    assert rows[0].report.variance / 10.0 == pytest.approx(1.0 / math.sqrt(math.pi), rel=0.05)
    assert rows[0].ratio >= 4 * LN2
    rows = fs.lattice_scan(4, 2, [1])
    assert rows[0].report.entropy_nats == pytest.approx(LN2)
    assert fs.lattice_overlap(8, 3, 4).shape == (4, 4)


def test_bosons():
    assert fs.boson_entropy([1.0]) == pytest.approx(2 * LN2)
    check = fs.boson_inequality_check([10.0])
    assert not check.applicable and not check.holds


def test_invalid_input_raises_value_error():
    with pytest.raises(ValueError):
        fs.entropy([1.5])
    with pytest.raises(ValueError):
        fs.factorize(np.ones((2, 2), dtype=complex), [0])
