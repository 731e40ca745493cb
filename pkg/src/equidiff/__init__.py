"""Invariant holomorphic differentials of cyclic covers of curves: closed
formulas and an explicit finite-field check of them."""

from .covers import CoverKind, CoverSpec, analyze
from .divisors import Divisor, FiberDatum, equivariant_floor_pushforward, rr_dim_genus0
from .gfpoly import GF, FieldElement, Matrix, Polynomial
from .ramcalc import (
    CyclicPData,
    Prop2Verdict,
    RamificationProfile,
    Verdict,
    faithfulness_classifier,
    invariant_dimension,
    invariant_dimension_cyclic_p,
    prop2_classifier,
)

__version__ = "0.1.0"
