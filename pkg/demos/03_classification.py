# %% [markdown]
# # Rank 2 cases with a section
#
# A rank 2 aCM bundle with a section vanishing along a curve plus a divisor
# gives a small linear system for `c2 = beta1*xi^2 + beta2*f^2`. Solving it
# over the admissible first Chern classes produces two tables.

# %%
from dp7.batch import zero_locus_class_array
from dp7.bundle import dual_twist
from dp7.classify import divisor_candidates, table_a, table_b, theorem_a_table
from dp7.render import Table, render

# %% [markdown]
# Divisorial parts that can occur:

# %%
divisor_candidates()

# %%
def show(rows):
    t = Table("", ["name", "alpha", "D = c1", "beta", "verdict"],
              [[r.name, r.alpha, r.d_equals_c1, str(r.beta), r.verdict.value] for r in rows])
    print(render(t, "md"))


show(table_a())

# %%
show(table_b())

# %% [markdown]
# Dualizing and twisting by `h` swaps rows in pairs.

# %%
rows = {r.name: r for r in table_b()}
for i in range(3):
    src = rows[f"A{i}"]
    print(src.name, "->", dual_twist(src.alpha, src.beta.beta, 1))

# %% [markdown]
# The curve class of the zero locus on a parameter grid, computed in one
# vectorized pass.

# %%
E = zero_locus_class_array([1, 1, 1, 2], [1, 1, 1, 1], [0, 1, 2, 2], [2, 0, -2, 1], 0, [1, 1, 1, 0])
[str(E.at(k)) for k in range(len(E))]

# %% [markdown]
# The surviving cases and the degree of their zero loci:

# %%
for case in theorem_a_table():
    print(case.c1, "|", case.c2, "|", case.zero_locus_degree, "|", case.chi)
