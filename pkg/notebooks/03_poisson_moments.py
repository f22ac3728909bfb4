# %% [markdown]
# # Poisson degenerate central moments by simulation
#
# For X ~ Poisson(alpha/m) the mean of (mX+r)_{n,lam} is the degenerate
# r-Dowling polynomial at alpha. Here we sample and compare.

# %%
from fractions import Fraction

from degdowling import DegParams, PoissonSpec, estimate_deg_moment, estimate_raw_moment

params = DegParams(Fraction(1, 2), m=2, r=1)
alpha = Fraction(2)
spec = PoissonSpec(rate=float(alpha / params.m), seed=42, n_samples=1_000_000)
for n in range(5):
    est = estimate_deg_moment(params, n, alpha, spec)
    print(f"n={n}  mean={est.mean:10.4f}  exact={est.target_exact:10.4f}  "
          f"se={est.std_error:.4f}  z={est.z:.2f}")

# %% [markdown]
# With lam=0, m=1, r=0 this is the raw moment E[X^n] = phi_n(alpha).

# %%
spec = PoissonSpec(rate=1.0, seed=7, n_samples=1_000_000)
for n in range(1, 5):
    est = estimate_raw_moment(n, 1, spec)
    print(n, round(est.mean, 4), est.target_exact)

# %% [markdown]
# Sharding is part of the reproducibility contract: a sharded run is
# identical whether the shards run one after another or on threads.

# %%
spec = PoissonSpec(rate=1.0, seed=3, n_samples=400_000, shards=8)
a = estimate_deg_moment(params, 3, alpha, spec)
b = estimate_deg_moment(params, 3, alpha, spec, workers=8)
print(a == b, a)
