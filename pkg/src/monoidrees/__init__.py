"""Minimal Rees-algebra generators for monoid-type rational parametrizations."""

from .errors import (
    CommonFactor,
    Degenerate,
    DegenerateCurve,
    DegenerateInput,
    DegenerateSurface,
    ParseError,
    PreconditionError,
    ReesError,
    ResourceLimit,
)
from .oracle import kernel_slice, verify_generation, verify_minimality
from .reesgen import generators, hypersurface_generators, implicit_equation, inverse_map
from .ring import GF, QQ, MultiPoly, parse_field, parse_poly
from .syzygy import MuBasis, Parametrization

__all__ = [
    "GF",
    "QQ",
    "CommonFactor",
    "Degenerate",
    "DegenerateCurve",
    "DegenerateInput",
    "DegenerateSurface",
    "MuBasis",
    "MultiPoly",
    "Parametrization",
    "ParseError",
    "PreconditionError",
    "ReesError",
    "ResourceLimit",
    "generators",
    "hypersurface_generators",
    "implicit_equation",
    "inverse_map",
    "kernel_slice",
    "parse_field",
    "parse_poly",
    "verify_generation",
    "verify_minimality",
]
