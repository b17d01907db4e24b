"""Spectral-curve ingestion and validation."""

from .curve import (
    BUILTINS,
    CurveModel,
    RamPoint,
    SingularData,
    airy,
    bessel,
    builtin,
    conjugate_map,
    differential_order,
    index_rho,
    load_curve,
    order_formula_check,
    parse_curve,
    pole_set,
    singular_sets,
    weber,
)
from .descent import descend_to_x, pullback
from .parser import parse_expression, parse_statements


def curve_file(name: str):
    """Path of a bundled curve file such as ``"weber"`` or ``"nodal_cubic"``."""
    from importlib.resources import files

    path = files(__name__).joinpath("curves", f"{name}.curve")
    if not path.is_file():
        raise ValueError(f"no bundled curve file named {name!r}")
    return path


def classify_ramification(curve: CurveModel):
    """Ramification points with effectiveness flags, and R*."""
    return list(curve.ramification), list(curve.R_star)


__all__ = [
    "BUILTINS", "CurveModel", "RamPoint", "SingularData", "airy", "bessel", "builtin",
    "classify_ramification", "conjugate_map", "curve_file", "descend_to_x", "differential_order", "index_rho",
    "load_curve", "order_formula_check", "parse_curve", "parse_expression", "parse_statements",
    "pole_set", "pullback", "singular_sets", "weber",
]
