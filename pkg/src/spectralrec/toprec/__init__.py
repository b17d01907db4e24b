"""Topological recursion: correlation differentials and free energies."""

from .energy import (
    FreeEnergy,
    VariationalReport,
    free_energy,
    free_energy_closed_form,
    integrate_0_to_inf,
    verify_variational,
    weber_free_energy_derivative,
    weber_low_genus,
)
from .engine import DEFAULT_CAP, TopologicalRecursion, clear_memo, engine_for
from .multidiff import MultiDifferential, label_rf, rf_to_labels
from .properties import (
    Check,
    RecursionKernel,
    bergman,
    check_properties,
    homogeneity_checks,
    recursion_kernel,
    reflection_defect,
)


def correlation(curve, g: int, n: int, cap: int = DEFAULT_CAP) -> MultiDifferential:
    """W_{g,n} for a validated curve, memoized per curve."""
    return engine_for(curve, cap=cap).W(g, n)


__all__ = [
    "DEFAULT_CAP", "Check", "FreeEnergy", "MultiDifferential", "RecursionKernel", "TopologicalRecursion",
    "VariationalReport", "bergman", "check_properties", "clear_memo", "correlation", "engine_for",
    "free_energy", "free_energy_closed_form", "homogeneity_checks", "integrate_0_to_inf", "label_rf",
    "recursion_kernel", "reflection_defect", "rf_to_labels", "verify_variational",
    "weber_free_energy_derivative", "weber_low_genus",
]
