"""Correlation differentials of the Weber curve.

The Weber curve x = z + 1/z, y = (z - 1/z)/2 is the lam = 1 slice of
y^2 = x^2/4 - lam.  Every W_{g,n} below is exact; restore lam by multiplying
with lam^(2 - 2g - n).
"""

# %% The curve and its ramification data
from spectralrec.curvedsl import weber
from spectralrec.toprec import correlation

curve = weber()
print(curve.describe())

# %% Low correlators
for g, n in [(0, 1), (0, 2), (0, 3), (1, 1), (2, 1)]:
    W = correlation(curve, g, n)
    print(f"W[{g},{n}] = {W.text()}   x lam^{2 - 2 * g - n}")

# %% Pole labels: each term is a product of dz/(z - p)^k factors
W12 = correlation(curve, 1, 2)
print(f"W[1,2] has {len(W12)} sorted label tuples, max pole orders {W12.max_pole_order()}")

# %% Exact point evaluation is symmetric in the arguments
from fractions import Fraction

a, b = Fraction(3), Fraction(-2, 5)
print("W[1,2](3, -2/5) =", W12.evaluate((a, b)), "=", W12.evaluate((b, a)))
