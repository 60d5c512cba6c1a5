"""Exact computations with function fields over F2 inside Carlitz cyclotomic
and constant-field compositums."""

from .gf2poly import BinaryPoly, Place, INFINITY, parse_poly, format_poly
from .galois import GaloisContext, Subgroup, SplittingType, new_context
from .zeta import PlaceSpectrum, LPolynomial
from .moebius import MoebiusMap
from .pipeline import RunConfig, FieldReport, classify, verify_paper

__version__ = "0.1.0"
