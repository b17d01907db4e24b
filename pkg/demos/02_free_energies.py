"""Free energies F_g of the Weber curve against the Bernoulli closed form.

F_g(lam) = B_{2g} / (2g (2g - 2)) * lam^(2 - 2g) for g >= 2.
"""

# %%
import time

from spectralrec.curvedsl import weber
from spectralrec.toprec import free_energy, free_energy_closed_form, weber_low_genus

curve = weber()
F0, F1 = weber_low_genus(curve)
print("F0 =", F0)
print("F1 =", F1)

# %% Residue formula, one genus at a time
for g in (2, 3, 4):
    t0 = time.perf_counter()
    F = free_energy(curve, g)
    dt = time.perf_counter() - t0
    print(f"F{g} = {F.text():<20} closed form {free_energy_closed_form(g)}  ({dt:.1f} s)")

# %% The primitive of y dx can be moved by a constant without changing F_g
print("F2 with shifted primitive:", free_energy(curve, 2, phi_shift=17).value)
