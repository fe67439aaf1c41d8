#!/usr/bin/env python3
"""Codes in a one-way repeater chain: success probabilities, rates at a
fixed link length, cost factors at the optimal link length, and the
optimal-k table over the AME grid."""

from amecodes import ChannelParams, CodeParams, LinkPlan, cost_report, loss_probability, p_success, rate
from amecodes.catalog import catalog_grid
from amecodes.repeater import children_params, optimal_k_table

ch = ChannelParams()  # 20 km attenuation length, unit coupling

# Per-link physics: a photon survives e^(-L0/20km); a distance-d code
# tolerates d-1 erasures out of n.
code = CodeParams(5, 1, 3, 2)
for l0 in (0.5, 1.0, 2.0, 5.0):
    pl = loss_probability(l0, ch)
    print(f"L0 = {l0:>4.1f} km: loss/photon = {pl:.4f}, "
          f"P_success([[5,1,3]]_2) = {p_success(code, pl):.6f}")

# Rate comparison at a fixed 1 km link: the AME(6,2) children vs Steane.
print("\nR*t0 at L0 = 1 km:")
contenders = children_params(6, 2) + [CodeParams(7, 1, 3, 2)]
for l_tot in (100.0, 1000.0, 10000.0):
    plan = LinkPlan(l_tot, int(l_tot))
    row = {c.label(): rate(c, plan, ch) for c in contenders}
    print(f"  L_tot = {l_tot:>7.0f} km: " +
          "  ".join(f"{k}: {v:.4f}" for k, v in row.items()))

# Cost factors minimize over the link grid; C_LT/C_ST = q/log2(q).
print("\ncost factors at 1000 km (minimized over the link grid):")
for c in contenders:
    rep = cost_report(c, 1000.0, ch)
    print(f"  {c.label():>12}: C_ST = {rep.c_st:8.3f}/km  C_LT = {rep.c_lt:8.3f}/km "
          f" at L0 = {rep.plan.l0:.2f} km")

# For big codes the best child is no longer the max-distance one: the
# AME(14,7) family trades distance for encoded qudits.
print("\nAME(14,7) children at 1000 km:")
for c in children_params(14, 7):
    rep = cost_report(c, 1000.0, ch)
    print(f"  k={c.k} {c.label():>12}: C_LT = {rep.c_lt:10.3f}/km")

# The full optimal-k table over the known AME grid.
grid = catalog_grid()
cells = [(n, q, existence) for (n, q), existence in grid.items()]
table = optimal_k_table(cells, [1000.0, 10000.0], ch)
qs = sorted({q for _, q in grid})
print("\noptimal k (1000 km, 10000 km) per AME(n, q); '-' no AME, '?' unknown:")
print("  n\\q " + "".join(f"{q:>7}" for q in qs))
for n in sorted({n for n, _ in grid}):
    print(f"  {n:>3} " + "".join(f"{','.join(table[(n, q)]):>7}" for q in qs))
