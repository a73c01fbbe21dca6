"""Compactness of the Fourier transform between Besov-type spaces on R^n.

Exact region classification and rate tables live in :mod:`space_lattice`
and :mod:`rates`; sampled-function norms in :mod:`littlewood_paley`;
non-compactness witnesses in :mod:`extremals`; singular-value and entropy
experiments in :mod:`entropy_lab`.
"""
from .errors import DomainError, TruncationError, UnsupportedParameters
from .space_lattice import (
    SpaceSpec,
    classify_embedding,
    classify_fourier,
    classify_lorentz_source,
    classify_spaces,
    dual_space,
    region_grid,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "SpaceSpec",
    "TruncationError",
    "UnsupportedParameters",
    "classify_embedding",
    "classify_fourier",
    "classify_lorentz_source",
    "classify_spaces",
    "dual_space",
    "region_grid",
]
