"""Degenerate Stirling, Bell, Whitney, Dowling and Charlier families in exact
arithmetic, with identity verification and Poisson moment simulation."""

from .exact_core import Poly, Series, binom, rat, rat_str, series_compose, series_exp, series_mul
from .stirling import (
    DegParams,
    TriangleTable,
    bell_poly,
    deg_bell_poly,
    deg_falling_eval,
    deg_falling_poly,
    falling_poly,
    stirling_table,
    to_deg_falling_basis,
    to_falling_basis,
)
from .dowling import (
    WhitneyTable,
    charlier_poly,
    deg_dowling_poly,
    deg_r_dowling_poly,
    deg_r_whitney2,
    deg_whitney2,
    dowling_poly,
    thm_rhs,
    whitney_classical,
    whitney_first,
    whitney_table,
)
from .genfun import GfSpec, e_lambda_series, gf_coefficients, log_lambda_series
from .poisson_lab import McEstimate, PoissonSpec, estimate_deg_moment, estimate_raw_moment, poisson_sample
from .verify import CheckReport, Grid, IdentityCheck, SuiteConfig, certify_lambda_identity, run_check, run_suite

__version__ = "0.1.0"
