"""Positive-map family on M4(C) and map-based bound-entanglement detection."""

from .detection import (
    BetaInterval,
    Classification,
    DetectionReport,
    PositivityVerdict,
    ScanPoint,
    ScanResult,
    analytic_min_eigenvalue,
    detect,
    detection_interval_beta,
    nondetection_certificate,
    scan_grid,
    sigma_b_mapped_closed_form,
    verify_map_positivity,
)
from .linalg import (
    Tolerance,
    eig_hermitian,
    is_hermitian,
    is_psd,
    matrix_from_json,
    matrix_to_json,
    min_eigenvalue,
    partial_transpose,
    principal_minors,
    tensor,
)
from .maps import ELEMENTARY, MapParams, apply_map_closed, apply_map_kraus, extend_map
from .states import (
    BipartiteState,
    HorodeckiParams,
    RhoFamilyParams,
    build_rho_beta_gamma,
    build_sigma_b,
    build_varrho_b,
    local_unitary_orbit,
    pauli_local_unitaries,
    random_density_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BetaInterval",
    "BipartiteState",
    "Classification",
    "DetectionReport",
    "ELEMENTARY",
    "HorodeckiParams",
    "MapParams",
    "PositivityVerdict",
    "RhoFamilyParams",
    "ScanPoint",
    "ScanResult",
    "Tolerance",
    "analytic_min_eigenvalue",
    "apply_map_closed",
    "apply_map_kraus",
    "build_rho_beta_gamma",
    "build_sigma_b",
    "build_varrho_b",
    "detect",
    "detection_interval_beta",
    "eig_hermitian",
    "extend_map",
    "is_hermitian",
    "is_psd",
    "local_unitary_orbit",
    "matrix_from_json",
    "matrix_to_json",
    "min_eigenvalue",
    "nondetection_certificate",
    "partial_transpose",
    "pauli_local_unitaries",
    "principal_minors",
    "random_density_matrix",
    "scan_grid",
    "sigma_b_mapped_closed_form",
    "tensor",
    "verify_map_positivity",
]
