"""Verdict engine: map-based detection, parameter scans, positivity checks.

A state is *detected* by a map when the block-extended map produces a
matrix with an eigenvalue below -psd_tol.  PPT status always takes
precedence in the classification: an NPT state is reported as NPT even
when the map also detects it.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .linalg import DEFAULT_TOL, Tolerance, is_psd, min_eigenvalue
from .maps import DIM, MapParams, apply_map_closed, extend_map
from .states import (
    BipartiteState,
    HorodeckiParams,
    RhoFamilyParams,
    build_rho_beta_gamma,
    build_sigma_b,
    local_unitary_orbit,
    pauli_local_unitaries,
    random_density_matrix,
)

# |lambda| at or below this band is treated as sitting on a detection
# boundary; the strict inequalities of the detection ranges leave the
# boundary itself undetected.
BOUNDARY_BAND = 1e-8

RHO_FAMILY = "rho-beta-gamma"
SIGMA_FAMILY = "sigma-b"
VARRHO_FAMILY = "varrho-b"


class Classification(str, Enum):
    NPT_ENTANGLED = "NPT_ENTANGLED"
    PPT_ENTANGLED_DETECTED = "PPT_ENTANGLED_DETECTED"
    NOT_DETECTED = "NOT_DETECTED"


def _round12(v: float) -> float:
    return float(f"{v:.12g}")


@dataclass(frozen=True)
class DetectionReport:
    """Per-state, per-map verdict."""

    state_label: str
    map_params: MapParams
    min_eig_mapped: float
    lambda_analytic: float | None
    ppt: bool
    classification: Classification
    boundary: bool = False

    def to_json(self) -> dict:
        obj = {
            "state": self.state_label,
            "map": self.map_params.to_json(),
            "min_eig": _round12(self.min_eig_mapped),
            "lambda": None if self.lambda_analytic is None else _round12(self.lambda_analytic),
            "ppt": self.ppt,
            "class": self.classification.value,
        }
        if self.boundary:
            obj["boundary"] = True
        return obj


@dataclass(frozen=True)
class PositivityVerdict:
    """Outcome of randomized positivity verification of one map.

    Absence of a counterexample is evidence of positivity, not proof.
    """

    map_params: MapParams
    samples: int
    min_observed: float
    counterexample: np.ndarray | None
    conditions_met: dict

    def to_json(self) -> dict:
        from .linalg import matrix_to_json

        return {
            "map": self.map_params.to_json(),
            "samples": self.samples,
            "min_observed": _round12(self.min_observed),
            "counterexample": (
                None if self.counterexample is None else matrix_to_json(self.counterexample)
            ),
            "conditions_met": dict(self.conditions_met),
        }


@dataclass(frozen=True)
class ScanPoint:
    coords: tuple
    report: DetectionReport


@dataclass(frozen=True)
class ScanResult:
    """Grid of detection reports in deterministic row-major order."""

    family: str
    axis_names: tuple
    map_params: MapParams
    points: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class BetaInterval:
    """A single interval of beta values inside [0, 10]."""

    lo: float
    hi: float
    lo_inclusive: bool
    hi_inclusive: bool

    def contains(self, beta: float) -> bool:
        above = beta >= self.lo if self.lo_inclusive else beta > self.lo
        below = beta <= self.hi if self.hi_inclusive else beta < self.hi
        return above and below

    def __str__(self) -> str:
        left = "[" if self.lo_inclusive else "("
        right = "]" if self.hi_inclusive else ")"
        return f"{left}{self.lo:g}, {self.hi:g}{right}"


def analytic_min_eigenvalue(params: MapParams, beta: float, gamma: float) -> float:
    """Closed form for the one possibly-negative eigenvalue of the mapped state.

    For the 4 (x) 4 family at (beta, gamma), applying (I (x) map) leaves a
    single eigenvalue that can go negative:

        (-9 + 3w + (10 - beta)z + x*beta + y*gamma) / (52 + 4*gamma)

    The state is detected exactly when this value is negative.
    """
    w, x, y, z = params.as_tuple()
    return (-9.0 + 3.0 * w + (10.0 - beta) * z + x * beta + y * gamma) / (52.0 + 4.0 * gamma)


def detect(state: BipartiteState, params: MapParams, tol: Tolerance = DEFAULT_TOL) -> DetectionReport:
    """Classify one state under one map.

    Computes PPT status from the partial transpose, the minimum eigenvalue
    of the block-extended map output, and (for states built by
    ``build_rho_beta_gamma``) the analytic eigenvalue shortcut.
    """
    if state.dim_b != DIM:
        raise ValueError(f"detection requires dim_b = {DIM}, got {state.dim_b}")
    ppt = is_psd(state.partial_transpose("B"), tol)
    mapped = extend_map(params, state.matrix, state.dim_a)
    min_eig = min_eigenvalue(mapped, tol.herm_tol)
    lam = None
    if isinstance(state.params, RhoFamilyParams):
        lam = analytic_min_eigenvalue(params, state.params.beta, state.params.gamma)
    boundary = lam is not None and abs(lam) <= BOUNDARY_BAND
    if not ppt:
        classification = Classification.NPT_ENTANGLED
    elif min_eig < -tol.psd_tol:
        classification = Classification.PPT_ENTANGLED_DETECTED
    else:
        classification = Classification.NOT_DETECTED
    return DetectionReport(
        state_label=state.label,
        map_params=params,
        min_eig_mapped=min_eig,
        lambda_analytic=lam,
        ppt=ppt,
        classification=classification,
        boundary=boundary,
    )


def detection_interval_beta(params: MapParams, gamma: float) -> BetaInterval | None:
    """Solve for the beta values in [0, 10] where the analytic eigenvalue
    is negative at fixed gamma.

    Returns None when no beta is detected.  Endpoints come from a single
    closed-form division, so they are exact up to one rounding.
    """
    if gamma < 0:
        raise ValueError(f"gamma must be >= 0, got {gamma}")
    w, x, y, z = params.as_tuple()
    slope = x - z
    const = -9.0 + 3.0 * w + 10.0 * z + y * gamma
    if slope == 0.0:
        return BetaInterval(0.0, 10.0, True, True) if const < 0 else None
    cut = -const / slope
    if slope > 0:
        # negative for beta < cut
        if cut <= 0:
            return None
        if cut > 10:
            return BetaInterval(0.0, 10.0, True, True)
        return BetaInterval(0.0, cut, True, False)
    # slope < 0: negative for beta > cut
    if cut >= 10:
        return None
    if cut < 0:
        return BetaInterval(0.0, 10.0, True, True)
    return BetaInterval(cut, 10.0, False, True)


def scan_grid(
    family: str,
    params: MapParams,
    *,
    betas=None,
    gammas=None,
    bs=None,
    tol: Tolerance = DEFAULT_TOL,
) -> ScanResult:
    """Run detect over a parameter grid, row-major over the given axes."""
    points = []
    if family == RHO_FAMILY:
        if betas is None or gammas is None:
            raise ValueError("rho-beta-gamma scans need both betas and gammas")
        for beta in betas:
            for gamma in gammas:
                report = detect(build_rho_beta_gamma(beta, gamma), params, tol)
                points.append(ScanPoint(coords=(float(beta), float(gamma)), report=report))
        return ScanResult(family, ("beta", "gamma"), params, points)
    if family == SIGMA_FAMILY:
        if bs is None:
            raise ValueError("sigma-b scans need the b axis")
        for b in bs:
            report = detect(build_sigma_b(b), params, tol)
            points.append(ScanPoint(coords=(float(b),), report=report))
        return ScanResult(family, ("b",), params, points)
    raise ValueError(f"unknown scan family {family!r}")


def _adversarial_inputs() -> list[np.ndarray]:
    """Rank-1 inputs where positivity fails first.

    Basis projectors plus every two-level superposition
    (|e_i> + e^{i theta}|e_j>) for theta in {0, pi/2, pi, 3pi/2}, kept
    unnormalized (trace 2) so a failing map shows its full violation.
    """
    out = []
    eye = np.eye(DIM, dtype=complex)
    for i in range(DIM):
        out.append(np.outer(eye[i], eye[i].conj()))
    for i in range(DIM):
        for j in range(i + 1, DIM):
            for theta in (0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi):
                v = eye[i] + np.exp(1j * theta) * eye[j]
                out.append(np.outer(v, v.conj()))
    return out


ADVERSARIAL_INPUTS = _adversarial_inputs()


def positivity_conditions(params: MapParams) -> dict:
    """The sufficient-condition triple for positivity of a map."""
    return {
        "w_ge_1": params.w >= 1.0,
        "y_ge_1": params.y >= 1.0,
        "xz_ge_1": params.x * params.z >= 1.0,
    }


def verify_map_positivity(
    params: MapParams,
    samples: int,
    seed: int,
    tol: Tolerance = DEFAULT_TOL,
) -> PositivityVerdict:
    """Randomized falsifier for positivity of one map.

    Evaluates the map on the fixed adversarial set followed by ``samples``
    seeded random density matrices, recording the global minimum output
    eigenvalue and the first input (in evaluation order) that drives it
    below -psd_tol.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    min_observed = math.inf
    counterexample = None

    def probe(x_mat):
        nonlocal min_observed, counterexample
        low = min_eigenvalue(apply_map_closed(params, x_mat), tol.herm_tol)
        if low < min_observed:
            min_observed = low
        if counterexample is None and low < -tol.psd_tol:
            counterexample = x_mat

    for x_mat in ADVERSARIAL_INPUTS:
        probe(x_mat)
    for _ in range(samples):
        probe(random_density_matrix(DIM, rng))
    return PositivityVerdict(
        map_params=params,
        samples=samples,
        min_observed=min_observed,
        counterexample=counterexample,
        conditions_met=positivity_conditions(params),
    )


def sigma_b_mapped_closed_form(b: float, params: MapParams) -> np.ndarray:
    """Closed form of (I_2 (x) map) applied to the Horodecki state.

    With f = w+x+y+z the four upper diagonal entries are b*f, the lower
    block diagonal mixes b with (1+b)/2 per the cyclic weights, and the
    surviving off-diagonal entries are negated.
    """
    HorodeckiParams(b)
    w, x, y, z = params.as_tuple()
    f = w + x + y + z
    g = (w + z + b * (w + 2 * x + 2 * y + z)) / 2.0
    h = (z + y + b * (2 * w + 2 * x + y + z)) / 2.0
    i = (x + y + b * (2 * w + x + y + 2 * z)) / 2.0
    j = (w + x + b * (w + x + 2 * y + 2 * z)) / 2.0
    s = np.sqrt(1.0 - b * b) / 2.0
    m = np.zeros((8, 8), dtype=complex)
    for k in range(4):
        m[k, k] = b * f
    m[4, 4], m[5, 5], m[6, 6], m[7, 7] = g, h, i, j
    m[0, 5] = m[5, 0] = -b
    m[1, 6] = m[6, 1] = -b
    m[2, 7] = m[7, 2] = -b
    m[4, 7] = m[7, 4] = -s
    return m / (7.0 * b + 1.0)


def nondetection_certificate(b: float, params: MapParams, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when the map leaves the Horodecki state and its entire
    64-member Pauli local-unitary orbit positive semidefinite.

    Requires w >= 1 (the regime where the maps are known positive, which
    makes non-detection meaningful rather than vacuous).
    """
    if params.w < 1.0:
        raise ValueError(f"nondetection certificate requires w >= 1, got w = {params.w}")
    sigma = build_sigma_b(b)
    if not is_psd(extend_map(params, sigma.matrix, sigma.dim_a), tol):
        return False
    for member in local_unitary_orbit(sigma, pauli_local_unitaries()):
        if not is_psd(extend_map(params, member.matrix, member.dim_a), tol):
            return False
    return True
