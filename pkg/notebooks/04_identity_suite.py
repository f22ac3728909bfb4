# %% [markdown]
# # Running the identity suite
#
# Each exact check fixes (n, m, r), keeps alpha symbolic and compares two
# polynomials in alpha at n+1 distinct rational lambdas. Both sides are
# polynomials of degree <= n in lambda, so agreement there proves the
# identity for every lambda.

# %%
import logging

from degdowling.verify import MUTANTS, Grid, IdentityCheck, SuiteConfig, format_reports, run_check, run_suite

logging.basicConfig(level=logging.INFO)
result = run_suite(SuiteConfig(grid=Grid(nmax=6, samples=200_000)))
print(format_reports(result.reports, "markdown"))

# %% [markdown]
# A deliberately broken formula must fail, and the report carries an exact
# witness that reproduces the disagreement.

# %%
report = run_check(IdentityCheck("T8", Grid(nmax=3)), rhs=MUTANTS["T8"])
print(report.to_dict())
