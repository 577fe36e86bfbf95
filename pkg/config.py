"""
Configuration file for the weighted contraharmonic mean verifier.
Contains numerical tolerances, campaign defaults, and the property table.
"""

import os
from typing import Dict, Tuple

# Tolerance for every pass/fail decision (normalized margins)
DEFAULT_TOL = float(os.getenv("CHM_TOL", "1e-9"))

# Tolerance used when --nu-extreme widens the weight range
EXTREME_TOL = 1e-6

# Relative tolerance of the Hermitian input check
HERMITIAN_TOL = 1e-12

# Reconstruction / unitarity bound of a spectral decomposition
SPECTRAL_TOL = 1e-10

# Jacobi eigensolver
JACOBI_OFFDIAG_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100

# "jacobi" (cyclic Jacobi rotations) or "lapack" (numpy.linalg.eigh)
EIGEN_SOLVER = os.getenv("CHM_EIGEN_SOLVER", "jacobi")

# Relative tolerance on the constraint x + y = e
DECOMPOSITION_TOL = 1e-8

# z counts as invertible when s_min(z) > INVERTIBLE_TOL * ||z||
INVERTIBLE_TOL = 1e-8

# Campaign defaults
DEFAULT_DIMS: Tuple[int, int] = (1, 8)
MAX_DIM = 16
DEFAULT_TRIALS = 500
DEFAULT_SEED = 42
DEFAULT_COND_CAP = 1e6
NU_RANGE: Tuple[float, float] = (0.05, 0.95)
NU_EXTREME_RANGE: Tuple[float, float] = (1e-3, 1 - 1e-3)

# Interpolation weights t of x = (1 - t) z + t g
INTERPOLATION_WEIGHTS = (0.0, 0.01, 0.1, 0.5, 1.0)

# Scalar grid-search oracle
ORACLE_GRID_STEP = 1e-4
ORACLE_WINDOW: Tuple[float, float] = (-1.0, 2.0)
ORACLE_AGREEMENT_TOL = 1e-6
SELFTEST_PAIRS = 1000
SELFTEST_RANGE: Tuple[float, float] = (1e-2, 1e2)

# Worker pool
WORKERS = int(os.getenv("CHM_WORKERS", "1"))
ASSIGNMENT_METHOD = os.getenv("CHM_ASSIGNMENT_METHOD", "round_robin")

# Campaign store
DATABASE_PATH = os.getenv("CHM_DATABASE_PATH", "campaigns.db")
RUN_LABEL_PREFIX = "Run-"

# Logging
LOG_LEVEL = os.getenv("CHM_LOG_LEVEL", "INFO")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Property id -> the statement it checks
PROPERTY_STATEMENTS: Dict[str, str] = {
    "SYMMETRY": "C_nu(a, b) = C_{1-nu}(b, a)",
    "HOMOGENEITY": "C_nu(ra, rb) = r C_nu(a, b) for r > 0",
    "SCALAR_EMBED": "C_nu(alpha e, beta e) = C_nu(alpha, beta) e",
    "BOUNDS_REMARK": "0 <= C_nu(a, b) <= A_nu(b / nu, a / (1 - nu))",
    "CONVEXITY_MIX": "C_nu(A_mu(a, b), A_mu(c, d)) <= A_mu(C_nu(a, c), C_nu(b, d))",
    "CONGRUENCE": "C_nu(z*az, z*bz) = z* C_nu(a, b) z for invertible z",
    "MIXED_MEAN": "C_nu(a, A_mu(a, b)) <= A_mu(gamma a, C_nu(a, b))",
    "FUNCTIONAL": "C_nu(phi(a), phi(b)) <= phi(C_nu(a, b)) for positive phi",
    "NORM_LOWER": "A_nu(b / nu, a / (1 - nu)) - A_nu(alpha^2 a, beta^2 b) <= C_nu(a, b)",
    "LAMBDA_FAMILY": "(nu - l^2) a / (1 - nu) + (2l - l^2 - nu) b / nu <= C_nu(a, b)",
    "CONTRACTION": "A_nu(b, a) = z* C_nu(a, b) z with ||z|| <= 1",
    "REFINED_UPPER": "C_nu(a, b) <= A_nu(b / nu, a / (1 - nu)) - H_nu(1/||a^-1||, 1/||b^-1||) e",
    "VARIATIONAL": "objective(x) <= C_nu(a, b) whenever x + y = e",
    "ATTAINMENT": "objective(z) = C_nu(a, b) at the witness pair",
    "GAP_IDENTITY": "C_nu(a, b) - objective(x) = a^{1/2} h*h a^{1/2} / (1 - nu)",
    "PRODUCT_IDENTITY": "a K^-1 b = nu H_nu(a, b) = b K^-1 a with K = a + (1 - nu) b / nu",
    "SQUARE_IDENTITY": "T - (e + T^-1)^-1 = (e + T)^{-1/2} T^2 (e + T)^{-1/2}",
    "ORDER_CHAIN": "H_nu <= G_nu <= A_nu(a, b) and A_nu(b, a) <= C_nu(a, b)",
    "HARMONIC_BOUNDS": "H_nu(a, b) <= a / (1 - nu) and H_nu(a, b) <= b / nu",
}

# Terminal output templates
MESSAGES = {
    "verdict_line": "{property:<17} {status:<4}  margin={margin:+.3e}",
    "diagnostic_line": "  {name:<30} {value:+.3e}",
    "campaign_done": "Campaign finished: {total} trials, {failures} failures",
    "summary_line": "{property:<17} trials={trials:<6} failures={failures:<4} min_margin={min_margin:+.3e}",
    "stored": "Stored campaign as {label}",
    "no_campaigns": "No stored campaigns.",
    "campaign_row": "{label:<14} seed={seed:<6} dims={dims_lo}..{dims_hi} trials={trials:<5} tol={tol:.1e} failures={failures}",
    "selftest_line": "{check:<40} {status}  worst={worst:.3e}",
}
