"""Exact computer algebra for the superelliptic algebra ``u^2 = P(x)``: the
derivation ``∂ = u d/dx``, normal forms in ``A/∂A``, the central cocycle,
and the Legendre polynomial dictionary around them."""
from .center import CenterClass, dimension, monomial_class, quartic_even_pair, reduce, relation_coeffs
from .cocycle import E, F, cross_closed_form, cross_coefficients, g_n, psi, psi_basis, uce_bracket
from .exact import A, LaurentPoly, ParamPoly, laurent_ddx, laurent_mul, ppoly_eval
from .legendre import antiderivative_tail, formal_integral_to_one, legendre, legendre_poly
from .superelliptic import (
    AlgebraElement,
    Curve,
    apply_partial,
    apply_partial2,
    curve_new,
    elem_mul,
    palindromic_family,
    quadratic,
    quartic,
)

__all__ = [
    "A",
    "AlgebraElement",
    "CenterClass",
    "Curve",
    "E",
    "F",
    "LaurentPoly",
    "ParamPoly",
    "antiderivative_tail",
    "apply_partial",
    "apply_partial2",
    "cross_closed_form",
    "cross_coefficients",
    "curve_new",
    "dimension",
    "elem_mul",
    "formal_integral_to_one",
    "g_n",
    "laurent_ddx",
    "laurent_mul",
    "legendre",
    "legendre_poly",
    "monomial_class",
    "palindromic_family",
    "ppoly_eval",
    "psi",
    "psi_basis",
    "quadratic",
    "quartic",
    "quartic_even_pair",
    "reduce",
    "relation_coeffs",
    "uce_bracket",
]

__version__ = "0.1.0"
