"""Spectral maps, band reductions, and Toda flows for Hermitian block
tridiagonal matrices."""

from bandspec._core import (
    BandedHermitian,
    EquivalenceReport,
    MatrixMeasure,
    MeasureAtom,
    MeasureClassReport,
    NumericalError,
    ValidationError,
    banded_violations,
    block_lanczos,
    equivalence_check,
    evolve_measure,
    householder_blocktridiag,
    inverse_spectral_map,
    random_banded,
    random_hermitian,
    random_measure,
    spectral_map,
    toda_qr_flow,
    toda_rk4,
    toda_spectral_flow,
    validate_banded,
    validate_measure,
)

__all__ = [
    "BandedHermitian",
    "EquivalenceReport",
    "MatrixMeasure",
    "MeasureAtom",
    "MeasureClassReport",
    "NumericalError",
    "ValidationError",
    "banded_violations",
    "block_lanczos",
    "equivalence_check",
    "evolve_measure",
    "householder_blocktridiag",
    "inverse_spectral_map",
    "random_banded",
    "random_hermitian",
    "random_measure",
    "spectral_map",
    "toda_qr_flow",
    "toda_rk4",
    "toda_spectral_flow",
    "validate_banded",
    "validate_measure",
]
