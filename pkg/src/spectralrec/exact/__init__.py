"""Exact computer-algebra kernel over Q, optionally extended by nu and lam."""

from .bernoulli import bernoulli_number, bernoulli_polynomial
from .calculus import (
    Antiderivative,
    PartialFractions,
    antiderivative,
    apply_map,
    definite_integral,
    definite_integral_0_to_inf,
    limit_at,
    mobius,
    partial_fractions,
    preimages,
    rational_roots,
    residue_at,
    substitute,
)
from .laurent import LaurentSeries, laurent_expand, order_at
from .logalg import HbarSeries, LogPolynomial, lam_power
from .points import INF, as_point, point_key, point_str
from .polynomial import Polynomial, poly_gcd
from .ratfunc import RationalFunction, as_ratfunc, lam_symbol, nu_symbol

__all__ = [
    "Antiderivative", "HbarSeries", "INF", "LaurentSeries", "LogPolynomial", "PartialFractions",
    "Polynomial", "RationalFunction", "antiderivative", "apply_map", "as_point", "as_ratfunc",
    "bernoulli_number", "bernoulli_polynomial", "definite_integral", "definite_integral_0_to_inf",
    "lam_power", "lam_symbol", "laurent_expand", "limit_at", "mobius", "nu_symbol", "order_at",
    "partial_fractions", "point_key", "point_str", "poly_gcd", "preimages", "rational_roots",
    "residue_at", "substitute",
]
