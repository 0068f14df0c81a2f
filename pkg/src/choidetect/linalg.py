"""Dense complex matrix kernel for small (<= 16x16) Hermitian problems.

Everything operates on plain ``numpy.ndarray`` matrices with complex128
entries.  All functions are pure; none mutate their inputs.
"""

import itertools
from dataclasses import dataclass

import numpy as np

PSD_TOL = 1e-10
HERM_TOL = 1e-12
EIG_TOL = 1e-10

# Imaginary residue allowed on a principal minor of a Hermitian matrix.
MINOR_IMAG_TOL = 1e-10


@dataclass(frozen=True)
class Tolerance:
    """Numerical tolerances shared across the package."""

    psd_tol: float = PSD_TOL
    herm_tol: float = HERM_TOL
    eig_tol: float = EIG_TOL

    def __post_init__(self):
        for name in ("psd_tol", "herm_tol", "eig_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")


DEFAULT_TOL = Tolerance()


def as_matrix(m) -> np.ndarray:
    """Coerce input to a square complex matrix, raising ValueError otherwise."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def is_hermitian(m, tol: float = HERM_TOL) -> bool:
    """True if max |m_ij - conj(m_ji)| <= tol."""
    arr = as_matrix(m)
    return bool(np.max(np.abs(arr - dagger(arr))) <= tol)


def tensor(a, b) -> np.ndarray:
    """Kronecker product of two square matrices."""
    return np.kron(as_matrix(a), as_matrix(b))


def partial_transpose(m, dim_a: int, dim_b: int, subsystem: str = "B") -> np.ndarray:
    """Transpose one tensor factor of a bipartite operator.

    Parameters
    ----------
    m : array_like
        Square matrix of dimension ``dim_a * dim_b`` acting on A (x) B,
        with A-major index ordering (row = i*dim_b + k).
    dim_a, dim_b : int
        Subsystem dimensions.
    subsystem : {"A", "B"}
        Which factor to transpose.
    """
    arr = as_matrix(m)
    if dim_a < 1 or dim_b < 1 or arr.shape[0] != dim_a * dim_b:
        raise ValueError(
            f"matrix dim {arr.shape[0]} does not match subsystems {dim_a}x{dim_b}"
        )
    if subsystem not in ("A", "B"):
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    t = arr.reshape(dim_a, dim_b, dim_a, dim_b)
    if subsystem == "B":
        t = t.transpose(0, 3, 2, 1)
    else:
        t = t.transpose(2, 1, 0, 3)
    return t.reshape(dim_a * dim_b, dim_a * dim_b)


def eig_hermitian(m, herm_tol: float = HERM_TOL) -> np.ndarray:
    """All real eigenvalues of a Hermitian matrix, ascending.

    Raises ValueError if the input is not Hermitian within ``herm_tol``.
    """
    arr = as_matrix(m)
    if not is_hermitian(arr, herm_tol):
        raise ValueError("matrix is not Hermitian within tolerance")
    return np.linalg.eigvalsh(arr)


def min_eigenvalue(m, herm_tol: float = HERM_TOL) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    return float(eig_hermitian(m, herm_tol)[0])


def is_psd(m, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True if the Hermitian matrix has no eigenvalue below -tol.psd_tol."""
    return min_eigenvalue(m, tol.herm_tol) >= -tol.psd_tol


def principal_minors(m, herm_tol: float = HERM_TOL) -> list[tuple[tuple[int, ...], float]]:
    """All 2^n - 1 principal minors of a Hermitian matrix.

    Returns (index-subset, determinant) pairs ordered by subset size then
    lexicographically; subsets use 0-based row/column indices.  Each
    determinant of a Hermitian submatrix is real; an imaginary residue
    above 1e-10 raises ValueError.
    """
    arr = as_matrix(m)
    if not is_hermitian(arr, herm_tol):
        raise ValueError("matrix is not Hermitian within tolerance")
    n = arr.shape[0]
    out = []
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            sub = arr[np.ix_(subset, subset)]
            det = complex(np.linalg.det(sub))
            if abs(det.imag) > MINOR_IMAG_TOL:
                raise ValueError(
                    f"principal minor {subset} has imaginary residue {det.imag:g}"
                )
            out.append((subset, det.real))
    return out


def matrix_to_json(m) -> dict:
    """Encode a matrix as {"dim": n, "re": [...], "im": [...]} (row-major)."""
    arr = as_matrix(m)
    return {
        "dim": int(arr.shape[0]),
        "re": [float(v) for v in arr.real.ravel()],
        "im": [float(v) for v in arr.imag.ravel()],
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    """Decode the matrix JSON produced by :func:`matrix_to_json`."""
    dim = int(obj["dim"])
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj["im"], dtype=float)
    if re.size != dim * dim or im.size != dim * dim:
        raise ValueError(f"matrix JSON needs {dim * dim} entries per component")
    return (re + 1j * im).reshape(dim, dim)
