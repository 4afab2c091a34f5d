"""Affine holomorphic families ``T + mu A`` and their spectral data."""

from hother.perispec.family.affine import AffineFamily
from hother.perispec.family.codec import family_from_json, family_to_json, load_family
from hother.perispec.family.models import JordanChainSet, LaurentData, SpectralPoint
from hother.perispec.family.spectral import (
    chain_system,
    compact_reduction,
    isolating_radius,
    jordan_chain_dim,
    laurent_coefficients,
    reduction_spectrum,
    residue_projection,
    resolvent,
    spectral_set,
)

__all__ = [
    "AffineFamily",
    "JordanChainSet",
    "LaurentData",
    "SpectralPoint",
    "chain_system",
    "compact_reduction",
    "family_from_json",
    "family_to_json",
    "isolating_radius",
    "jordan_chain_dim",
    "laurent_coefficients",
    "load_family",
    "reduction_spectrum",
    "residue_projection",
    "resolvent",
    "spectral_set",
]
