"""Commonly used constants."""

import math
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        """Backport of :class:`enum.StrEnum` for Python 3.10."""

        __str__ = str.__str__
        __format__ = str.__format__
from typing import NamedTuple

LOGGER_FORMAT = '[%(levelname)s] %(asctime)s - %(message)s'

DEFAULT_SEED = 0xC0FFEE
SEED_ENV_VAR = "RFUNC_SEED"

# Dense kernel scope: operators up to 32 levels; eigenproblems up to the
# n^2 x n^2 forms and superoperators of 8 levels.
MAX_MATRIX_DIM = 32
MAX_KERNEL_DIM = 64
MAX_VERIFY_N = 8
MIN_LEVELS = 2

SQRT2 = math.sqrt(2.0)

# Sharp constants of the general two-sided bound.
C_PLUS = (1.0 + SQRT2) / 2.0
C_MINUS = (1.0 - SQRT2) / 2.0


class MinMax(NamedTuple):
    """Represent a min and max value in a single object."""

    min: float
    max: float

    def __repr__(self) -> str:
        """Return string representation of this object."""
        return f"<MinMax(min={self.min}, max={self.max})>"

    def contains(self, value: float, slack: float = 0.0) -> bool:
        """Return True if value lies within [min - slack, max + slack]."""
        return self.min - slack <= value <= self.max + slack


class Tolerances(NamedTuple):
    """Tolerance set shared by the kernel, the checks and the CLI.

    Every value is used as a hybrid absolute/relative threshold,
    i.e. ``tol * max(1, scale)``.
    """

    hermitian: float = 1e-12
    unitary: float = 1e-12
    imaginary_residue: float = 1e-12
    expression_spread: float = 1e-10
    identity: float = 1e-11
    bound: float = 1e-10
    eig_hermitian_residual: float = 1e-10
    eig_general_residual: float = 1e-8
    svd_residual: float = 1e-12
    normality: float = 1e-10
    zero_eigenvalue: float = 1e-9
    rate: float = 1e-9
    relaxation_identity: float = 1e-8
    sum_rule: float = 1e-8
    traceless: float = 1e-12

    def __repr__(self) -> str:
        """Return string representation of this object."""
        return f"<Tolerances(bound={self.bound}, identity={self.identity})>"


DEFAULT_TOLERANCES = Tolerances()


class OptimizerDefaults(NamedTuple):
    """Defaults of the alternating extremizer."""

    restarts: int = 20
    max_sweeps: int = 500
    convergence_tol: float = 1e-12
    monotone_slack: float = 1e-13
    bound_slack: float = 1e-9


OPTIMIZER_DEFAULTS = OptimizerDefaults()


class Sign(StrEnum):
    """Which side of a two-sided bound a witness attains."""

    UPPER = "upper"
    LOWER = "lower"


class Mode(StrEnum):
    """Direction of an extremization."""

    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


class ConstantMode(StrEnum):
    """Which relaxation-rate constant an audit checks against."""

    TRACELESS = "theorem5_traceless"
    GENERAL = "theorem5_general"
    SQRT2_LEGACY = "sqrt2_legacy"


class OutputFormat(StrEnum):
    """Report output formats."""

    JSON = "json"
    CSV = "csv"


# Frozen CSV column sets.
TRAJECTORY_COLUMNS = ("sweep", "ratio")
ENSEMBLE_COLUMNS = ("n", "num_jumps", "count", "min_margin", "failures",
                    "max_rate_ratio", "conjectured_ratio")
AUDIT_COLUMNS = ("generator_id", "n", "sum_rates", "max_rate",
                 "bound_constant", "margin", "pass")
SPECTRUM_COLUMNS = ("generator_id", "n", "min_rate", "max_rate", "sum_rates",
                    "rate_ratio", "identity_ok", "conjugation_ok",
                    "skipped_pairs")
SUM_RULE_COLUMNS = ("generator_id", "n", "lhs", "rhs", "holds")
