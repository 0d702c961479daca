"""Quantum cohomology of Grassmannians at q = 1."""

from ._qgr import (
    CacheMismatch,
    Class,
    DegenerateSpectrum,
    Grassmannian,
    Spectrum,
    bar,
    cshift,
    dual,
    gw,
    mul,
    spectrum,
    verify,
)

__all__ = [
    "CacheMismatch",
    "Class",
    "DegenerateSpectrum",
    "Grassmannian",
    "Spectrum",
    "bar",
    "cshift",
    "dual",
    "gw",
    "mul",
    "spectrum",
    "verify",
]
