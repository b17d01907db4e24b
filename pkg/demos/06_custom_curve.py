"""Working with a curve file that is not built in.

y = z/(z^2 - 1) over x = z^2 has a regular singular point at x = 1, so the
quantum curve picks up an hbar^2 correction.  The nodal cubic in the bundled
curve files is rejected because Delta dx vanishes off the ramification set.
"""

# %%
from fractions import Fraction

from spectralrec.curvedsl import curve_file, load_curve, parse_curve
from spectralrec.errors import CurveRejected
from spectralrec.exact import INF
from spectralrec.quantize import DivisorWeights, quantize
from spectralrec.toprec import check_properties
from spectralrec.wkb import verify_thm31

curve = parse_curve("x = z^2; y = z/(z^2 - 1)  # regular singular at x = 1")
print(curve.describe())
print(curve.singular_data)

# %% Three divisor points, so the weights are given explicitly
weights = DivisorWeights({Fraction(-1): Fraction(1, 3), Fraction(1): Fraction(1, 6), INF: Fraction(1, 2)})
print(quantize(curve, weights).operator_text())
print("T_m == T-hat_m:", verify_thm31(curve, 2, weights))
for chk in check_properties(curve, 5)[:4]:
    print(chk.line())

# %% Rejection with the named assumption
try:
    load_curve(str(curve_file("nodal_cubic")))
except CurveRejected as e:
    print("rejected:", e)
