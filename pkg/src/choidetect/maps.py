"""The four-parameter positive-map family on 4x4 complex matrices.

The map negates every off-diagonal entry and replaces each diagonal entry
by a cyclic weighted sum of all four diagonal entries:

    out[i, i] = w*X[i, i] + x*X[i+1, i+1] + y*X[i+2, i+2] + z*X[i+3, i+3]

(indices mod 4).  ``apply_map_closed`` implements this directly and is the
production path; ``apply_map_kraus`` evaluates the equivalent signed
operator sum and exists as an independent oracle for it.  ``extend_map``
lifts the map block-wise to act on one factor of a bipartite operator.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix

DIM = 4

# Index pairs receiving the x, y, z weights in the operator-sum form:
# (i, j) contributes X[j, j] to out[i, i], so each group is the cyclic
# shift j = i+1, i+2, i+3 (mod 4).
X_PAIRS = ((0, 1), (1, 2), (2, 3), (3, 0))
Y_PAIRS = ((0, 2), (2, 0), (1, 3), (3, 1))
Z_PAIRS = ((0, 3), (3, 2), (1, 0), (2, 1))


@dataclass(frozen=True)
class MapParams:
    """Nonnegative weights (w, x, y, z) selecting one map of the family."""

    w: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            v = getattr(self, name)
            if not np.isfinite(v) or v < 0:
                raise ValueError(f"map parameter {name} must be finite and >= 0, got {v}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    def to_json(self) -> dict:
        return {"w": self.w, "x": self.x, "y": self.y, "z": self.z}

    @classmethod
    def from_json(cls, obj: dict) -> "MapParams":
        return cls(float(obj["w"]), float(obj["x"]), float(obj["y"]), float(obj["z"]))

    @classmethod
    def from_string(cls, text: str) -> "MapParams":
        """Parse the CLI form "w,x,y,z" (comma-separated decimals)."""
        parts = text.split(",")
        if len(parts) != 4:
            raise ValueError(f"expected 4 comma-separated values, got {text!r}")
        try:
            w, x, y, z = (float(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"malformed map parameters {text!r}") from exc
        return cls(w, x, y, z)

    def __str__(self) -> str:
        return f"Phi[{self.w:g},{self.x:g},{self.y:g},{self.z:g}]"


def _basis_matrix(i: int, j: int) -> np.ndarray:
    e = np.zeros((DIM, DIM), dtype=complex)
    e[i, j] = 1.0
    return e


@dataclass(frozen=True)
class ElementaryOps:
    """Precomputed matrix units and the diagonal F/G pair operators.

    ``e[i][j]`` is |i><j|; for each unordered pair i < j,
    ``f[(i, j)] = (e_ii + e_jj)/sqrt(2)`` and ``g[(i, j)] = (e_ii - e_jj)/sqrt(2)``.
    """

    e: tuple
    f: dict
    g: dict


def _build_elementary() -> ElementaryOps:
    e = tuple(tuple(_basis_matrix(i, j) for j in range(DIM)) for i in range(DIM))
    f = {}
    g = {}
    for i in range(DIM):
        for j in range(i + 1, DIM):
            f[(i, j)] = (e[i][i] + e[j][j]) / np.sqrt(2.0)
            g[(i, j)] = (e[i][i] - e[j][j]) / np.sqrt(2.0)
    for mat in [m for row in e for m in row] + list(f.values()) + list(g.values()):
        mat.setflags(write=False)
    return ElementaryOps(e=e, f=f, g=g)


ELEMENTARY = _build_elementary()


def _require_4x4(x_mat) -> np.ndarray:
    arr = as_matrix(x_mat)
    if arr.shape[0] != DIM:
        raise ValueError(f"map acts on {DIM}x{DIM} matrices, got {arr.shape[0]}x{arr.shape[0]}")
    return arr


def apply_map_kraus(params: MapParams, x_mat) -> np.ndarray:
    """Evaluate the map as its literal signed operator sum.

    The G and F sums run over unordered index pairs i < j; summing ordered
    pairs would double every off-diagonal contribution and disagree with
    the closed form.
    """
    x = _require_4x4(x_mat)
    e, f, g = ELEMENTARY.e, ELEMENTARY.f, ELEMENTARY.g
    out = np.zeros((DIM, DIM), dtype=complex)
    for i in range(DIM):
        out += params.w * (e[i][i] @ x @ e[i][i].conj().T)
    for weight, pairs in (
        (params.x, X_PAIRS),
        (params.y, Y_PAIRS),
        (params.z, Z_PAIRS),
    ):
        for i, j in pairs:
            out += weight * (e[i][j] @ x @ e[i][j].conj().T)
    for pair in f:
        out += g[pair] @ x @ g[pair].conj().T
        out -= f[pair] @ x @ f[pair].conj().T
    return out


def apply_map_closed(params: MapParams, x_mat) -> np.ndarray:
    """Evaluate the map entrywise: negated off-diagonal, cyclic diagonal mix."""
    x = _require_4x4(x_mat)
    out = -x.copy()
    w, xx, y, z = params.as_tuple()
    d = np.diagonal(x)
    for i in range(DIM):
        out[i, i] = (
            w * d[i]
            + xx * d[(i + 1) % DIM]
            + y * d[(i + 2) % DIM]
            + z * d[(i + 3) % DIM]
        )
    return out


def extend_map(params: MapParams, m, dim_a: int) -> np.ndarray:
    """Apply (I_A (x) map) to a matrix on A (x) C^4.

    The input is partitioned into dim_a x dim_a blocks of size 4x4 and the
    map is applied to every block; linearity makes the block action exact
    for off-diagonal (non-Hermitian) blocks as well.
    """
    arr = as_matrix(m)
    if dim_a < 1:
        raise ValueError(f"dim_a must be >= 1, got {dim_a}")
    if arr.shape[0] != dim_a * DIM:
        raise ValueError(
            f"matrix dim {arr.shape[0]} is not {dim_a} x {DIM}; "
            "extend_map needs a (dim_a*4)-dimensional input"
        )
    out = np.empty_like(arr)
    for bi in range(dim_a):
        for bj in range(dim_a):
            rows = slice(DIM * bi, DIM * (bi + 1))
            cols = slice(DIM * bj, DIM * (bj + 1))
            out[rows, cols] = apply_map_closed(params, arr[rows, cols])
    return out
