"""Quantum curves for the three built-in spectral curves.

The operator is hbar^2 d^2/dx^2 + q hbar d/dx + r; removing the first-order
term gives the Schrodinger potential Q(x, hbar).
"""

# %%
from fractions import Fraction

from spectralrec.curvedsl import airy, bessel, weber
from spectralrec.quantize import DivisorWeights, quantize, sl_form, u1_identity

for curve in (airy(), bessel(), weber()):
    qc = quantize(curve)
    print(f"{curve.tag:>7}: {qc.operator_text()}")
    print(f"{'':>7}  Q = {sl_form(qc).text()}   U1 identity: {u1_identity(curve, qc)}")

# %% Weber with a specific divisor parameter nu = nu_oo - nu_0
w = weber()
for nu in (Fraction(0), Fraction(1, 3), Fraction(-1)):
    qc = quantize(w, DivisorWeights.default(w, nu))
    print(f"nu = {nu}: r1 = {qc.r1}")
