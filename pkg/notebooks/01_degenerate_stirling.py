# %% [markdown]
# # Degenerate falling factorials and Stirling numbers
#
# The degenerate falling factorial (x)_{n,lam} = x(x-lam)...(x-(n-1)lam)
# slides between x^n (lam=0) and the ordinary falling factorial (lam=1).
# Its coordinates in the falling-factorial basis are the degenerate
# Stirling numbers of the second kind.

# %%
from fractions import Fraction

from degdowling import deg_falling_poly, stirling_table, to_falling_basis, bell_poly, deg_bell_poly

for lam in (0, Fraction(1, 2), 1):
    print(f"lam={lam}:  (x)_3,lam = {deg_falling_poly(3, lam)}")

# %% [markdown]
# Rows of the triangle come straight from the basis change.

# %%
lam = Fraction(1, 2)
print(to_falling_basis(deg_falling_poly(4, lam)))
for row in stirling_table("S2deg", lam, 5).rows():
    print(" ".join(f"{str(c):>6}" for c in row))

# %% [markdown]
# At lam=0 the triangle is the classical one, and the row polynomials are
# the Bell polynomials; phi_n(1) counts set partitions.

# %%
print(stirling_table("S2deg", 0, 6).entries == stirling_table("S2", 0, 6).entries)
print([int(bell_poly(n)(1)) for n in range(8)])
print(deg_bell_poly(3, lam))

# %% [markdown]
# The two degenerate triangles are inverse to each other.

# %%
n = 6
a = stirling_table("S1deg", lam, n).rows()
b = stirling_table("S2deg", lam, n).rows()
product = [[sum(a[i][k] * b[k][j] for k in range(n + 1)) for j in range(n + 1)] for i in range(n + 1)]
print(all(product[i][j] == (i == j) for i in range(n + 1) for j in range(n + 1)))
