"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest -s tests/test_acceptance.py -v` to see the per-criterion
lines; the whole module completes in well under two minutes.
"""

import numpy as np
import pytest

from choidetect import (
    MapParams,
    Tolerance,
    analytic_min_eigenvalue,
    apply_map_closed,
    apply_map_kraus,
    build_rho_beta_gamma,
    build_sigma_b,
    build_varrho_b,
    detection_interval_beta,
    extend_map,
    is_psd,
    local_unitary_orbit,
    min_eigenvalue,
    pauli_local_unitaries,
    random_density_matrix,
    sigma_b_mapped_closed_form,
    tensor,
    verify_map_positivity,
)
from conftest import FOUR_MAPS, random_hermitian

TOL = Tolerance()

BETAS = np.arange(0.0, 10.001, 0.25)  # 41 points
GAMMAS = np.arange(0.0, 8.001, 0.5)  # 17 points

# Stated detection ranges: map -> predicate on (beta, gamma).
DETECTION_RANGES = (
    (MapParams(2, 1, 0, 0), lambda beta, gamma: beta < 3.0),
    (MapParams(2, 1.5, 0, 0), lambda beta, gamma: beta < 2.0),
    (MapParams(2, 0, 1, 0), lambda beta, gamma: gamma < 3.0),
    (MapParams(2, 0, 0, 1), lambda beta, gamma: beta > 7.0),
    (MapParams(2, 0.1, 0, 1), lambda beta, gamma: beta > 70.0 / 9.0),
)


@pytest.fixture(scope="module")
def rho_grid():
    """All grid states, built once and shared across criteria."""
    return {
        (beta, gamma): build_rho_beta_gamma(beta, gamma)
        for beta in BETAS
        for gamma in GAMMAS
    }


def test_criterion_1_map_form_equivalence():
    rng = np.random.default_rng(101)
    inputs = [random_hermitian(rng) for _ in range(500)]
    params = [MapParams(*rng.uniform(0.0, 5.0, size=4)) for _ in range(50)]
    worst = 0.0
    for p in params:
        for x in inputs:
            dev = np.abs(apply_map_kraus(p, x) - apply_map_closed(p, x)).max()
            worst = max(worst, dev)
    assert worst <= 1e-12
    print(f"criterion 1 PASS: operator-sum and closed forms agree, max dev {worst:.2e}")


def test_criterion_2_ppt_region(rho_grid):
    for (beta, gamma), state in rho_grid.items():
        ppt = is_psd(state.partial_transpose("B"), TOL)
        expected = (1.0 <= beta <= 9.0) and gamma >= 3.0
        assert ppt == expected, (beta, gamma)
    for beta in (1.0, 9.0):
        assert is_psd(build_rho_beta_gamma(beta, 3.0).partial_transpose("B"), TOL)
    print(f"criterion 2 PASS: PPT region matches on all {len(rho_grid)} grid points")


def test_criterion_3_detection_ranges(rho_grid):
    checked = 0
    for params, stated in DETECTION_RANGES:
        intervals = {gamma: detection_interval_beta(params, gamma) for gamma in GAMMAS}
        for (beta, gamma), state in rho_grid.items():
            lam = analytic_min_eigenvalue(params, beta, gamma)
            low = min_eigenvalue(extend_map(params, state.matrix, 4))
            numeric = low < -TOL.psd_tol
            interval = intervals[gamma]
            analytic = interval is not None and interval.contains(beta)
            assert numeric == stated(beta, gamma), (params, beta, gamma)
            assert analytic == stated(beta, gamma), (params, beta, gamma)
            if lam < -1e-8:
                assert abs(lam - low) <= 1e-9, (params, beta, gamma)
            checked += 1
    print(f"criterion 3 PASS: detection ranges a-e verified on {checked} (map, point) pairs")


def test_criterion_4_bound_entanglement_exhibit():
    state = build_rho_beta_gamma(2.0, 4.0)
    assert is_psd(state.partial_transpose("B"), TOL)
    low = min_eigenvalue(extend_map(MapParams(2, 1, 0, 0), state.matrix, 4))
    assert low == pytest.approx(-1.0 / 68.0, abs=1e-9)
    print(f"criterion 4 PASS: PPT state detected with min eigenvalue {low:.12g} = -1/68")


def test_criterion_5_positivity_verification():
    clean = (
        MapParams(2, 1, 0, 0),
        MapParams(2, 0, 1, 0),
        MapParams(2, 0, 0, 1),
        MapParams(2, 1.5, 0, 0),
        MapParams(2, 1, 1, 1),
    )
    floor = np.inf
    for k, params in enumerate(clean):
        verdict = verify_map_positivity(params, 10000, seed=1000 + k)
        assert verdict.counterexample is None, params
        assert verdict.min_observed >= -1e-10, params
        floor = min(floor, verdict.min_observed)
    failing = verify_map_positivity(MapParams(0, 0, 0, 0), 10000, seed=1006)
    assert failing.counterexample is not None
    assert failing.min_observed <= -1.0 + 1e-10
    print(
        "criterion 5 PASS: five maps clean at 1e4 samples "
        f"(floor {floor:.2e}); zero map fails at {failing.min_observed:.12g}"
    )


def test_criterion_6_nondetection_of_horodecki_family():
    bs = [k / 10 for k in range(1, 10)]
    worst_gap = np.inf
    for b in bs:
        sigma = build_sigma_b(b)
        for params in FOUR_MAPS:
            mapped = extend_map(params, sigma.matrix, 2)
            assert is_psd(mapped, TOL), (b, params)
            closed = sigma_b_mapped_closed_form(b, params)
            assert np.abs(closed - mapped).max() <= 1e-13, (b, params)
            for row in range(8):
                off = np.abs(np.delete(mapped[row], row)).max()
                gap = mapped[row, row].real - off
                assert gap > 0, (b, params, row)
                worst_gap = min(worst_gap, gap)
    print(
        f"criterion 6 PASS: (I2 x map)(sigma_b) PSD for all {len(bs)} b values x 4 maps, "
        f"closed form matches, diagonal dominance margin {worst_gap:.3g}"
    )


def test_criterion_7_local_unitary_orbit_sweep():
    unitaries = pauli_local_unitaries()
    floor = np.inf
    count = 0
    for builder in (build_sigma_b, build_varrho_b):
        for member in local_unitary_orbit(builder(0.5), unitaries):
            assert min_eigenvalue(member.partial_transpose("B")) >= -1e-10
            for params in FOUR_MAPS:
                low = min_eigenvalue(extend_map(params, member.matrix, 2))
                assert low >= -1e-10, (builder.__name__, params)
                floor = min(floor, low)
                count += 1
    assert count == 2 * 64 * 4
    print(
        f"criterion 7 PASS: all 64 orbit members of both variants stay PPT and "
        f"undetected ({count} eigendecompositions, floor {floor:.3g})"
    )


def test_criterion_8_separable_soundness():
    rng = np.random.default_rng(808)
    floor = np.inf
    for dim_a in (2, 4):
        for _ in range(200):
            prod = tensor(random_density_matrix(dim_a, rng), random_density_matrix(4, rng))
            for params in FOUR_MAPS:
                low = min_eigenvalue(extend_map(params, prod, dim_a))
                assert low >= -1e-10, (dim_a, params)
                floor = min(floor, low)
    print(
        f"criterion 8 PASS: 400 random product states never detected by the four maps "
        f"(floor {floor:.3g})"
    )
