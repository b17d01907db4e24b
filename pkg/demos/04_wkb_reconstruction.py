"""WKB coefficients from the Riccati equation and from correlation functions.

T_m(z) are the hbar^m coefficients of the log-derivative of the WKB solution
pulled back to the z-plane.  The same functions come out of integrating
W_{g,n} over the divisor [z] - sum nu_beta [beta].
"""

# %%
from spectralrec.curvedsl import weber
from spectralrec.quantize import DivisorWeights, quantize
from spectralrec.wkb import GIntegralTable, even_odd_split, riccati_expand, t_hat

curve = weber()
weights = DivisorWeights.default(curve)  # symbolic nu
expansion = riccati_expand(quantize(curve, weights), curve, 3)
table = GIntegralTable(curve, weights)

for m in range(-1, 4):
    same = expansion.T[m] == t_hat(curve, weights, m, table)
    print(f"T[{m}] = {expansion.T[m]}\n        matches the correlator sum: {same}")

# %% Split S_0 into its even and odd parts on the x-line
s0 = even_odd_split(expansion.T[0], curve, 0)
print("S_0 =", s0.A, "+ (", s0.B, ") * sqrt(x^2/4 - 1)")
