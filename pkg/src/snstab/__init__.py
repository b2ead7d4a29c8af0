"""Exact Fourier and spectral analysis of Boolean functions on the symmetric group."""

from .coset_spectral import SpectralSummary, coset_matrix, moments
from .perms import Coset, PermFamily, Permutation, read_family, write_family
from .reconstruct import certify, reconstruct
from .repr_spectra import cayley_spectrum

__version__ = "0.1.0"

__all__ = [
    "Coset",
    "PermFamily",
    "Permutation",
    "SpectralSummary",
    "cayley_spectrum",
    "certify",
    "coset_matrix",
    "moments",
    "read_family",
    "reconstruct",
    "write_family",
]
