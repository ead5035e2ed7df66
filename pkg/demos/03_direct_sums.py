"""What happens to the monotones on a direct sum p rho (+) (1-p) tau.

On a block-diagonal state the trace functional is linear,
T(p rho (+) (1-p) tau) = p T(rho) + (1-p) T(tau), and the map from T to the
measure is convex. So mh is *sub*additive on direct sums for beta < 1 and
additive at beta = 1. For me the optimum over real states also rebalances
the weight between the blocks, which breaks additivity even at beta = 1.
"""

from imaginarity import (bloch_to_density, direct_sum, h_alpha_beta, me, me_numeric, mh,
                         OptimizerConfig)

rho = bloch_to_density((0.1, 0.9, 0.2))
tau = bloch_to_density((0.3, 0.1, -0.5))
p = 0.4

for beta in (0.3, 1.0):
    joint = mh(direct_sum(p, rho, tau), 0.5, beta)
    avg = p * mh(rho, 0.5, beta) + (1 - p) * mh(tau, 0.5, beta)
    print(f"beta = {beta}: mh(direct sum) = {joint:.6f}, weighted average = {avg:.6f}")

a, b = 0.5, 1.0
t_rho, t_tau = me(rho, a, b).achieved_trace, me(tau, a, b).achieved_trace
blockwise = h_alpha_beta(p * t_rho + (1 - p) * t_tau, a, b)
rebalanced = h_alpha_beta((p * t_rho ** (1 / a) + (1 - p) * t_tau ** (1 / a)) ** a, a, b)
numeric = me_numeric(direct_sum(p, rho, tau), a, b, OptimizerConfig(restarts=4)).value

print(f"\nme of the direct sum at alpha = 1/2, beta = 1:")
print(f"  blockwise optimisers stacked : {blockwise:.9f}")
print(f"  blocks with rebalanced mass  : {rebalanced:.9f}")
print(f"  Nelder-Mead on the 4x4 state : {numeric:.9f}")
