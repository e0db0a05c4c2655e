"""Configuration determinants for point configurations in R^3.

The core quantity is the scale- and rotation-invariant determinant D of a
configuration of n nonzero points with no two equal or antipodally equal.
D is conjectured to satisfy D >= 1 (proved for n = 2); this package evaluates
D, the associated unitary flag-map representative, and runs reproducible
Monte Carlo and minimization searches for counterexamples.
"""

from confdet._core import (
    ConfdetError,
    ConjectureViolation,
    DeterminantReport,
    SearchReport,
    SingularConfigurationError,
    __version__,
    compute_d,
    flag_residuals,
    lift,
    minimize_d,
    monte_carlo,
    oracle_n2,
    polar_flag,
    reduce_n2,
    sample_points,
    stereographic,
)

__all__ = [
    "ConfdetError",
    "ConjectureViolation",
    "DeterminantReport",
    "SearchReport",
    "SingularConfigurationError",
    "__version__",
    "compute_d",
    "flag_residuals",
    "lift",
    "minimize_d",
    "monte_carlo",
    "oracle_n2",
    "polar_flag",
    "reduce_n2",
    "sample_points",
    "stereographic",
]
