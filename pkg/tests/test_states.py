import numpy as np
import pytest

from choidetect import (
    BipartiteState,
    Tolerance,
    build_rho_beta_gamma,
    build_sigma_b,
    build_varrho_b,
    is_psd,
    local_unitary_orbit,
    min_eigenvalue,
    pauli_local_unitaries,
    random_density_matrix,
)

TOL = Tolerance()


def test_rho_family_unit_trace():
    for beta, gamma in ((0.0, 0.0), (2.5, 4.0), (10.0, 8.0), (7.0, 0.5)):
        state = build_rho_beta_gamma(beta, gamma)
        assert np.trace(state.matrix).real == pytest.approx(1.0, abs=1e-14)
        assert state.dim_a == 4 and state.dim_b == 4


def test_rho_family_parameter_validation():
    for beta, gamma in ((-0.1, 3.0), (10.1, 3.0), (5.0, -0.5)):
        with pytest.raises(ValueError):
            build_rho_beta_gamma(beta, gamma)


def test_rho_family_ppt_examples():
    assert is_psd(build_rho_beta_gamma(1.0, 3.0).partial_transpose("B"), TOL)
    assert not is_psd(build_rho_beta_gamma(5.0, 2.0).partial_transpose("B"), TOL)


def test_rho_family_affine_in_beta():
    gamma = 4.0
    lo = build_rho_beta_gamma(0.0, gamma).matrix
    hi = build_rho_beta_gamma(10.0, gamma).matrix
    for beta in (1.0, 3.3, 7.25):
        expected = lo + beta * (hi - lo) / 10.0
        got = build_rho_beta_gamma(beta, gamma).matrix
        assert np.abs(got - expected).max() <= 1e-14


def test_rho_family_ppt_region_boundary():
    betas = np.arange(0.0, 10.01, 0.5)
    gammas = np.arange(0.0, 8.01, 1.0)
    for beta in betas:
        for gamma in gammas:
            ppt = is_psd(build_rho_beta_gamma(beta, gamma).partial_transpose("B"), TOL)
            assert ppt == ((1.0 <= beta <= 9.0) and gamma >= 3.0), (beta, gamma)
    # exact boundary probes
    for beta, gamma in ((1.0, 3.0), (9.0, 3.0)):
        assert is_psd(build_rho_beta_gamma(beta, gamma).partial_transpose("B"), TOL)


def test_sigma_b_construction():
    state = build_sigma_b(0.5)
    assert state.dim_a == 2 and state.dim_b == 4
    assert np.trace(state.matrix).real == pytest.approx(1.0, abs=1e-14)
    assert min_eigenvalue(state.matrix) >= -1e-12
    assert is_psd(state.partial_transpose("B"), TOL)
    assert is_psd(state.partial_transpose("A"), TOL)


def test_sigma_b_rejects_closed_interval():
    for b in (0.0, 1.0, -0.2, 1.3):
        with pytest.raises(ValueError):
            build_sigma_b(b)
        with pytest.raises(ValueError):
            build_varrho_b(b)


def test_varrho_b_matches_sigma_spectrum():
    for b in (0.1, 0.3, 0.5, 0.7, 0.9):
        sigma = build_sigma_b(b)
        varrho = build_varrho_b(b)
        spec_s = np.linalg.eigvalsh(sigma.matrix)
        spec_v = np.linalg.eigvalsh(varrho.matrix)
        np.testing.assert_allclose(spec_v, spec_s, atol=1e-10)
        assert is_psd(varrho.partial_transpose("B"), TOL)


def test_pauli_local_unitaries_count_and_unitarity():
    us = pauli_local_unitaries()
    assert len(us) == 64
    np.testing.assert_allclose(us[0], np.eye(8))
    for u in us:
        np.testing.assert_allclose(u @ u.conj().T, np.eye(8), atol=1e-14)
        assert abs(abs(np.linalg.det(u)) - 1.0) <= 1e-12


def test_orbit_preserves_trace_spectrum_and_ppt():
    state = build_sigma_b(0.5)
    orbit = local_unitary_orbit(state, pauli_local_unitaries())
    assert len(orbit) == 64
    reference = np.linalg.eigvalsh(state.matrix)
    for member in orbit:
        assert np.trace(member.matrix).real == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(np.linalg.eigvalsh(member.matrix), reference, atol=1e-10)
        assert is_psd(member.partial_transpose("B"), TOL)
        assert member.params is None


def test_orbit_rejects_dimension_mismatch():
    state = build_sigma_b(0.5)
    with pytest.raises(ValueError):
        local_unitary_orbit(state, [np.eye(4)])


def test_random_density_matrix_properties():
    m1 = random_density_matrix(4, 123)
    m2 = random_density_matrix(4, 123)
    np.testing.assert_array_equal(m1, m2)
    assert np.trace(m1).real == pytest.approx(1.0, abs=1e-12)
    rng = np.random.default_rng(5)
    for _ in range(1000):
        m = random_density_matrix(4, rng)
        assert np.linalg.eigvalsh(m)[0] >= -1e-12
    with pytest.raises(ValueError):
        random_density_matrix(0, 1)


def test_bipartite_state_validation():
    good = np.eye(8) / 8.0
    BipartiteState(2, 4, good, "ok")
    with pytest.raises(ValueError):
        BipartiteState(2, 3, good, "bad dims")
    skew = good.astype(complex).copy()
    skew[0, 1] = 0.5j
    with pytest.raises(ValueError):
        BipartiteState(2, 4, skew, "not hermitian")
    with pytest.raises(ValueError):
        BipartiteState(2, 4, np.eye(8), "trace 8")
    negative = good.copy()
    negative[0, 0] = -0.1
    negative[1, 1] = 1 / 8 + 0.225  # keep unit trace
    with pytest.raises(ValueError):
        BipartiteState(2, 4, negative, "negative eigenvalue")


def test_bipartite_state_matrix_is_read_only():
    state = build_sigma_b(0.5)
    with pytest.raises(ValueError):
        state.matrix[0, 0] = 9.0


def test_bipartite_state_json_round_trip():
    state = build_sigma_b(0.25)
    obj = state.to_json()
    assert {"dim", "re", "im", "dimA", "dimB", "label"} == set(obj)
    back = BipartiteState.from_json(obj)
    assert back.dim_a == 2 and back.dim_b == 4 and back.label == state.label
    np.testing.assert_allclose(back.matrix, state.matrix)
