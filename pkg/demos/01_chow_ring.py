# %% [markdown]
# # Intersection numbers on F
#
# F is the blow-up of P^3 at a point. Its Chow ring is generated by `xi`
# (pulled back from P^3) and `f` (pulled back from P^2). Classes are stored
# exactly, with Fraction coefficients where needed.

# %%
from fractions import Fraction

from dp7.chow import F, F2, H, XI, XI2, degree, intersect

# %% [markdown]
# The hyperplane class is `h = xi + f`. Its square and cube:

# %%
print("h^2 =", H * H)
print("h^3 =", degree(H * H * H))

# %% [markdown]
# Products of two divisors land in the span of `xi^2` and `f^2`. Note that
# `xi*f` and `xi^2` are the same class.

# %%
for name, a, b in [("xi*xi", XI, XI), ("xi*f", XI, F), ("f*f", F, F)]:
    print(f"{name:6} = {a * b}")

# %% [markdown]
# Triple intersections. `f^3 = 0` since `f` comes from a surface.

# %%
table = {
    (i, j): intersect(*([XI] * i + [F] * j))
    for i in range(4)
    for j in range(4)
    if i + j == 3
}
table

# %% [markdown]
# The exceptional divisor `xi - f` meets a general plane section in a line.

# %%
intersect(XI - F, H, H)

# %% [markdown]
# Rational coefficients survive every operation.

# %%
half = Fraction(1, 2) * (XI2 + F2)
print(half, "|", half * H, "|", degree(half * H))
