"""Exact arithmetic: integer polynomials, the (c, s, lam) ring, determinants, trig forms."""

from .intpoly import (
    IntPoly,
    RootInterval,
    content_primitive,
    exact_div,
    poly_eval,
    poly_gcd,
    prem,
    primitive,
    real_roots_in,
    signed_content,
    squarefree_decomposition,
    sturm_sequence,
)
from .multipoly import MultiPoly, exact_div_multi, reduce_relation, split_trig_monomial
from .det import bareiss_det, intpoly_det, multi_det
from .trigform import StructuralError, TrigForm, trig_canonicalize, trig_equal

__all__ = [
    "IntPoly",
    "RootInterval",
    "content_primitive",
    "exact_div",
    "poly_eval",
    "poly_gcd",
    "prem",
    "primitive",
    "real_roots_in",
    "signed_content",
    "squarefree_decomposition",
    "sturm_sequence",
    "MultiPoly",
    "exact_div_multi",
    "reduce_relation",
    "split_trig_monomial",
    "bareiss_det",
    "intpoly_det",
    "multi_det",
    "StructuralError",
    "TrigForm",
    "trig_canonicalize",
    "trig_equal",
]
