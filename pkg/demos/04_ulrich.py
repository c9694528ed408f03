# %% [markdown]
# # Ulrich bundles of rank 2
#
# An Ulrich bundle of rank 2 on F has 14 sections. That pins down `c1`, and
# two values of `c2` remain.

# %%
from dp7.bundle import chi_rr, end_bundle_chi, h1_from_chi, invariant_c1c2_hc2, rank2
from dp7.classify import ulrich_c1_solve, ulrich_c2_enumeration

# %%
alpha = ulrich_c1_solve()
betas = ulrich_c2_enumeration()
alpha, betas

# %%
for beta in betas:
    E = rank2(alpha, beta)
    c1c2, hc2 = invariant_c1c2_hc2(alpha, beta)
    print(f"beta = {beta}: chi = {chi_rr(E)}, c1c2 = {c1c2}, hc2 = {hc2}")

# %% [markdown]
# Deformations and extensions. For a simple bundle the only sections of
# `End(E)` are scalars, so `h^1` follows from the Euler characteristic.

# %%
chi_self = end_bundle_chi(alpha, (3, 3), alpha, (3, 3))
chi_self, h1_from_chi(chi_self, 1, 0, 0)

# %%
chi_cross = end_bundle_chi(alpha, (3, 3), alpha, (4, 1))
chi_cross, h1_from_chi(chi_cross, 0, 0, 0)
