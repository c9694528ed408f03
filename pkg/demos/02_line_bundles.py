# %% [markdown]
# # Cohomology of line bundles
#
# `LineBundle(l1, l2)` is O_F(l1*xi + l2*f). Its cohomology has a closed form,
# tabulated here for a small box and compared with Riemann-Roch.

# %%
import numpy as np

from dp7.bundle import chi_rr, line_bundle_data
from dp7.cohomology import LineBundle, cohomology_table, enumerate_acm_initialized_lines, is_acm_line

# %% [markdown]
# h^0 on the box |l1|, |l2| <= 4, rows indexed by l1.

# %%
r = range(-4, 5)
h0 = np.array([[cohomology_table(LineBundle(a, b)).h0 for b in r] for a in r])
print(h0)

# %% [markdown]
# The Euler characteristic from the cohomology table matches Riemann-Roch
# everywhere on a larger box.

# %%
mismatches = [
    (a, b)
    for a in range(-8, 9)
    for b in range(-8, 9)
    if chi_rr(line_bundle_data(LineBundle(a, b))) != cohomology_table(LineBundle(a, b)).euler
]
mismatches

# %% [markdown]
# Which line bundles have no intermediate cohomology in any twist?

# %%
acm = np.array([[is_acm_line(LineBundle(a, b)) for b in r] for a in r], dtype=int)
print(acm)

# %% [markdown]
# Up to twist there are five of them. None has 7 sections, so no line
# bundle is Ulrich.

# %%
for L in enumerate_acm_initialized_lines():
    print(L, cohomology_table(L).h0)
