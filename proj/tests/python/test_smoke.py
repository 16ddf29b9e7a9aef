"""End-to-end smoke test of the python bindings on a small chain."""

import math

import numpy as np
import pytest

import koopspin as ks


def small_params():
    p = ks.SpinChainParams()
    p.n_spins = 2
    p.j_par = 0.1 * math.pi
    p.j_perp = 0.2 * math.pi
    p.gamma = 0.01
    p.dt = 0.5
    p.steps = 60
    p.substeps = 20
    p.validate()
    return p


def test_operator_algebra():
    sx = ks.pauli_matrix(ks.PauliAxis.X)
    sy = ks.pauli_matrix(ks.PauliAxis.Y)
    sz = ks.pauli_matrix(ks.PauliAxis.Z)
    assert np.allclose(sx @ sy, 1j * sz)
    assert ks.frobenius_norm(np.eye(4, dtype=complex)) == pytest.approx(2.0)

    rng = np.random.default_rng(0)
    a = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    c = ks.to_pauli_coeffs(a)
    assert np.allclose(ks.from_pauli_coeffs(c), a)

    h = a + a.conj().T
    x = ks.real_coeffs(h)
    assert np.allclose(ks.matrix_from_real_coeffs(x, 3), h)


def test_simulate_fit_analyze():
    p = small_params()
    model = ks.build_model(p)
    rho0 = ks.initial_state("d,u")
    traj = ks.integrate(model, rho0, p, "d,u")
    assert len(traj.states) == 60

    # conservation of trace and total Sz
    sz = ks.total_sz_op(2)
    for x in traj.states[::10]:
        rho = ks.matrix_from_real_coeffs(np.asarray(x), 2)
        assert abs(np.trace(rho) - 1.0) < 1e-9
        assert ks.expectation(sz, rho, 1e-8) == pytest.approx(0.0, abs=1e-8)

    split = ks.dataset_split(traj, 0.5)
    est = ks.fit_rrr(split.train_x, split.train_y, 4, 1e-6)
    assert est.feature_dim == 16
    assert 1 <= ks.numerical_rank(est) <= 4

    trips = ks.eigen_triplets(est)
    modes = ks.decay_rates_frequencies(trips, p.dt)
    assert all(m.abs_lambda <= 1.0 + 1e-6 for m in modes)

    # forecast tracks the truth early in the test window
    f = ks.real_coeffs(ks.spin_polarization_op(1, 2))
    seed = np.asarray(traj.states[split.n_train - 1])
    truth = float(f @ np.asarray(split.test_states[0]))
    assert ks.forecast_observable(est, f, seed, 1) == pytest.approx(truth, abs=0.02)

    # steady mode commutes with the total spin operator
    steady = ks.steady_mode(trips)
    psi_op = ks.eigenfunction_operator(steady, 2)
    assert ks.symmetry_residual(psi_op, sz) < 0.2

    # mode decomposition reproduces the iterated forecast
    dec = ks.mode_decomposition(trips, f, est.transition @ seed)
    for t in range(5):
        direct = ks.forecast_observable(est, f, est.transition @ seed, t)
        assert ks.mode_reconstruction(dec, t) == pytest.approx(direct, abs=1e-8)


def test_errors_map_to_python_exceptions():
    p = small_params()
    p.gamma = -1.0
    with pytest.raises(ValueError):
        p.validate()
    with pytest.raises(ValueError):
        ks.initial_state("x,y")
    with pytest.raises(ArithmeticError):
        ks.embed(ks.pauli_matrix(ks.PauliAxis.Z), 5, 2)
