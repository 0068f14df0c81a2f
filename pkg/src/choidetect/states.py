"""Factories for the bipartite states under study.

Computational-basis convention throughout: |ij> has index i*dim_b + j
(subsystem A major), matching the explicit 8x8 layouts of the Horodecki
family builders below.
"""

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg

STATE_HERM_TOL = 1e-12
STATE_TRACE_TOL = 1e-12
STATE_PSD_TOL = 1e-10

PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class RhoFamilyParams:
    """Mixing weights (beta, gamma) of the 4x4 diagonal-plus-projector family."""

    beta: float
    gamma: float

    def __post_init__(self):
        if not 0 <= self.beta <= 10:
            raise ValueError(f"beta must lie in [0, 10], got {self.beta}")
        if not self.gamma >= 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")


@dataclass(frozen=True)
class HorodeckiParams:
    """Parameter b of the 2x4 bound entangled family, open interval (0, 1)."""

    b: float

    def __post_init__(self):
        if not 0 < self.b < 1:
            raise ValueError(f"b must lie strictly inside (0, 1), got {self.b}")


@dataclass(frozen=True)
class BipartiteState:
    """A density matrix with a declared subsystem split.

    Construction validates Hermiticity, unit trace and positivity; the
    stored matrix is made read-only, so instances are safely shareable.
    ``params`` optionally records the family parameters the state was
    built from (used to attach analytic shortcuts in detection reports).
    """

    dim_a: int
    dim_b: int
    matrix: np.ndarray
    label: str
    params: object = field(default=None, compare=False)

    def __post_init__(self):
        arr = linalg.as_matrix(self.matrix)
        if arr.shape[0] != self.dim_a * self.dim_b:
            raise ValueError(
                f"matrix dim {arr.shape[0]} != dim_a*dim_b = {self.dim_a * self.dim_b}"
            )
        if not linalg.is_hermitian(arr, STATE_HERM_TOL):
            raise ValueError(f"state {self.label!r} is not Hermitian")
        if abs(arr.trace().real - 1.0) > STATE_TRACE_TOL or abs(arr.trace().imag) > STATE_TRACE_TOL:
            raise ValueError(f"state {self.label!r} does not have unit trace")
        if np.linalg.eigvalsh(arr)[0] < -STATE_PSD_TOL:
            raise ValueError(f"state {self.label!r} is not positive semidefinite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "matrix", arr)

    def partial_transpose(self, subsystem: str = "B") -> np.ndarray:
        return linalg.partial_transpose(self.matrix, self.dim_a, self.dim_b, subsystem)

    def to_json(self) -> dict:
        obj = linalg.matrix_to_json(self.matrix)
        obj.update({"dimA": self.dim_a, "dimB": self.dim_b, "label": self.label})
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "BipartiteState":
        return cls(
            dim_a=int(obj["dimA"]),
            dim_b=int(obj["dimB"]),
            matrix=linalg.matrix_from_json(obj),
            label=str(obj["label"]),
        )


# Diagonal support of the three mixing components: lists of (i, j) basis
# pairs, each |ij><ij| entering with weight 1/4.
_COMPONENT_1 = ((0, 1), (1, 2), (2, 3), (3, 0))
_COMPONENT_2 = ((0, 2), (1, 3), (2, 0), (3, 1))
_COMPONENT_3 = ((0, 3), (1, 0), (2, 1), (3, 2))


def build_rho_beta_gamma(beta: float, gamma: float) -> BipartiteState:
    """The two-parameter 4 (x) 4 family.

    Mixes three diagonal components (cyclic |i, i+k> supports for
    k = 1, 2, 3 weighted by beta, gamma and 10-beta) with three times the
    projector onto (|00> + |11> + |22> + |33>)/2, all normalized by
    1/(13 + gamma).
    """
    params = RhoFamilyParams(beta, gamma)
    norm = 13.0 + gamma
    m = np.zeros((16, 16), dtype=complex)
    for weight, pairs in (
        (beta, _COMPONENT_1),
        (gamma, _COMPONENT_2),
        (10.0 - beta, _COMPONENT_3),
    ):
        for i, j in pairs:
            m[4 * i + j, 4 * i + j] = weight / 4.0
    psi = np.zeros(16, dtype=complex)
    for i in range(4):
        psi[4 * i + i] = 0.5
    m += 3.0 * np.outer(psi, psi.conj())
    m /= norm
    return BipartiteState(
        dim_a=4,
        dim_b=4,
        matrix=m,
        label=f"rho-beta-gamma(beta={beta:g},gamma={gamma:g})",
        params=params,
    )


def build_sigma_b(b: float) -> BipartiteState:
    """The 2 (x) 4 Horodecki bound entangled family, parameter 0 < b < 1."""
    params = HorodeckiParams(b)
    s = np.sqrt(1.0 - b * b) / 2.0
    h = (1.0 + b) / 2.0
    m = np.zeros((8, 8), dtype=complex)
    for i in range(4):
        m[i, i] = b
    m[5, 5] = m[6, 6] = b
    m[4, 4] = m[7, 7] = h
    m[0, 5] = m[5, 0] = b
    m[1, 6] = m[6, 1] = b
    m[2, 7] = m[7, 2] = b
    m[4, 7] = m[7, 4] = s
    m /= 7.0 * b + 1.0
    return BipartiteState(
        dim_a=2, dim_b=4, matrix=m, label=f"sigma-b(b={b:g})", params=params
    )


def build_varrho_b(b: float) -> BipartiteState:
    """Local-unitary relabeling of the Horodecki family in the same basis.

    Built from the same spectrum as :func:`build_sigma_b` with the
    entangled pure component moved to a different basis pair.
    """
    params = HorodeckiParams(b)
    s = np.sqrt(1.0 - b * b) / 2.0
    h = (1.0 + b) / 2.0
    m = np.zeros((8, 8), dtype=complex)
    for i in (0, 1, 2, 3, 4, 7):
        m[i, i] = b
    m[5, 5] = m[6, 6] = h
    m[0, 7] = m[7, 0] = -b
    m[1, 4] = m[4, 1] = b
    m[3, 6] = m[6, 3] = b
    m[5, 6] = m[6, 5] = s
    m /= 7.0 * b + 1.0
    return BipartiteState(
        dim_a=2, dim_b=4, matrix=m, label=f"varrho-b(b={b:g})", params=params
    )


def pauli_local_unitaries() -> list[np.ndarray]:
    """All 64 products P_a (x) (P_b (x) P_c) over the Pauli set {I, X, Y, Z}.

    The 2x2 first factor acts on subsystem A, the 4x4 Kronecker pair on
    subsystem B.  Ordering is row-major over (a, b, c); the first element
    is the 8x8 identity.
    """
    out = []
    for a, b, c in itertools.product(range(4), repeat=3):
        u = np.kron(PAULI[a], np.kron(PAULI[b], PAULI[c]))
        u.setflags(write=False)
        out.append(u)
    return out


def local_unitary_orbit(state: BipartiteState, unitaries) -> list[BipartiteState]:
    """Conjugate a state by each unitary, preserving spectrum and PPT status."""
    dim = state.dim_a * state.dim_b
    orbit = []
    for k, u in enumerate(unitaries):
        u = linalg.as_matrix(u)
        if u.shape[0] != dim:
            raise ValueError(f"unitary {k} has dim {u.shape[0]}, state has dim {dim}")
        rotated = u @ state.matrix @ u.conj().T
        # Analytic shortcuts tied to the computational basis do not
        # survive the basis change, so members carry no family params.
        orbit.append(
            BipartiteState(
                dim_a=state.dim_a,
                dim_b=state.dim_b,
                matrix=rotated,
                label=f"{state.label}#u{k:02d}",
            )
        )
    return orbit


def random_density_matrix(dim: int, seed) -> np.ndarray:
    """Random density matrix G G† / tr(G G†) with complex Gaussian G.

    ``seed`` may be an integer or an existing ``numpy.random.Generator``;
    identical integer seeds reproduce identical matrices.
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = g @ g.conj().T
    return m / m.trace().real
