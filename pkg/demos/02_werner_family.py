"""The modified Werner family and the closed-form expression for mh.

werner(k) interpolates between the maximally mixed state (k = 0) and the
pure state (|01> + i|10>)/sqrt(2) (k = 1). The pure endpoint is orthogonal to
its own complex conjugate, so tr(rho^a rho*^(1-a)) = 0 and mh reaches its
largest possible value 1/((1 - a) b).

The library also ships `werner_mh_closed_form`, a closed-form expression for
the same quantity. This demo shows that it does not match the direct
computation away from k = 0.
"""

import numpy as np

from imaginarity import mh, werner, werner_linear_entropy, werner_mh_closed_form

A, B = 0.5, 0.5
print(f"{'k':>5} {'mh (eigen)':>12} {'closed form':>12} {'linear ent.':>12}")
for k in np.linspace(0, 1, 11):
    print(f"{k:5.1f} {mh(werner(k), A, B):12.6f} {werner_mh_closed_form(k, A, B) + 0.0:12.6f} "
          f"{werner_linear_entropy(k):12.6f}")

print(f"\nUpper bound 1/((1-a) b) at a = b = 1/2: {1 / ((1 - A) * B):.6f}")
print("mh(werner(1)) hits it; the closed form stops at "
      f"{werner_mh_closed_form(1.0, A, B):.6f}.")
print("Both curves increase with k while the linear entropy decreases, so more")
print("imaginarity goes with less mixedness in this family.")
