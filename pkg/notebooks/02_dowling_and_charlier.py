# %% [markdown]
# # Whitney numbers, Dowling polynomials and Charlier polynomials
#
# (mx+r)_{n,lam} expanded in the basis m^k (x)_k gives the degenerate
# r-Whitney numbers; their row polynomials are the degenerate r-Dowling
# polynomials.

# %%
from fractions import Fraction

from degdowling import (
    DegParams, charlier_poly, deg_r_dowling_poly, deg_r_whitney2, whitney_table, thm_rhs,
)

p = DegParams(Fraction(1, 2), m=2, r=1)
for row in whitney_table("W_r_deg", p, 4).rows():
    print(" ".join(f"{str(c):>8}" for c in row))
print(deg_r_dowling_poly(p, 3))

# %% [markdown]
# Charlier polynomials, with alpha symbolic inside the x-coefficients.

# %%
for n in range(4):
    print(n, charlier_poly(n))

# %% [markdown]
# Several closed forms for the same polynomial in alpha. Each is a
# different finite sum; all agree exactly.

# %%
p = DegParams(Fraction(-1, 3), m=3, r=2)
target = deg_r_dowling_poly(p, 4, "alpha")
for theorem in ("C5", "T6", "T7", "T8", "T10R", "T11"):
    print(theorem, thm_rhs(theorem, p, 4) == target)
print(target)
