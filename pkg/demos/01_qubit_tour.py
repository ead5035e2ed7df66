"""A short tour of the two monotones on single qubits.

A qubit is real exactly when its Bloch vector has no y component, so both
measures vanish on the x-z plane and grow as the state tilts toward the y axis.
"""

import numpy as np

from imaginarity import bloch_to_density, me, me_numeric, mh

ALPHA, BETA = 0.5, 0.5

print("How imaginarity grows along the y axis (alpha = beta = 1/2)")
print(f"{'r2':>6} {'mh':>12} {'me':>12}")
for r2 in np.linspace(0, 1, 6):
    rho = bloch_to_density((0.0, r2, 0.0))
    print(f"{r2:6.2f} {mh(rho, ALPHA, BETA):12.6f} {me(rho, ALPHA, BETA).value:12.6f}")

# The closest real state is not always the maximally mixed one. Tilt the
# state so it also has x and z components and look at the optimiser.
v = (0.4, 0.5, -0.3)
rho = bloch_to_density(v)
analytic = me(rho, ALPHA, BETA)
numeric = me_numeric(rho, ALPHA, BETA)
print(f"\nState with Bloch vector {v}:")
print(f"  closed-form me  = {analytic.value:.12f}")
print(f"  Nelder-Mead me  = {numeric.value:.12f}")
print("  closest real state (real part of its matrix):")
for row in analytic.minimizer.real:
    print("    " + "  ".join(f"{x:9.6f}" for x in row))

# Raising beta lowers both measures, raising alpha raises mh.
print("\nmh on the same state across parameters")
for a in (0.2, 0.5, 0.8):
    row = "  ".join(f"{mh(rho, a, b):8.5f}" for b in (0.25, 0.5, 1.0))
    print(f"  alpha={a:.1f}:  {row}   (beta = 0.25, 0.5, 1)")
