"""Voros coefficients of the quantum Weber curve and the identities they satisfy."""

# %% Integrals of T_m from z = 0 to z = oo, nu kept symbolic
from spectralrec.voros import (
    nu_reflection_ok,
    verify_difference_equations,
    verify_main_relation,
    voros_closed_form,
    voros_coefficients,
)

vs = voros_coefficients(M=6)
for line in vs.lines():
    print(line)
print("equal to B_{m+1}((nu+1)/2)/(m(m+1)):", all(vs.coeffs[m] == voros_closed_form(m) for m in vs.coeffs))
print("V_m(-nu) = (-1)^(m+1) V_m(nu):", nu_reflection_ok(vs))

# %% Relation between the Voros series and the free energy
report = verify_main_relation(6, voros=vs)
print("\n".join(report.lines()))
for rep in verify_difference_equations(6, voros=vs):
    print("\n".join(rep.lines()))

# %% A corrupted F_2 is caught
from fractions import Fraction

bad = verify_main_relation(4, nu=0, F_overrides={2: Fraction(-1, 239)}, source="closed")
print("\n".join(bad.lines()[-1:]))
