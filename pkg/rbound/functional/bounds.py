"""Sharp constants of the two-sided r-functional bounds."""

from __future__ import annotations
import math
from typing import NamedTuple

from ..core.constants import C_MINUS, C_PLUS, MIN_LEVELS, MinMax
from ..core.exception import ContractError


class BoundConstants(NamedTuple):
    """The sharp constants c_- <= r / (||A||^2 ||B||^2) <= c_+."""

    n: int
    traceless: bool
    c_minus: float
    c_plus: float

    @property
    def limits(self) -> MinMax:
        """Return the constants as a MinMax."""
        return MinMax(min=self.c_minus, max=self.c_plus)

    def contains(self, ratio: float, slack: float = 0.0) -> bool:
        """Return True if 'ratio' respects both constants."""
        return self.limits.contains(ratio, slack)

    def to_dict(self) -> dict:
        """Return a JSON-ready dictionary."""
        return self._asdict()


def require_levels(n: int) -> int:
    """Raise ContractError unless n is an integer level count >= 2."""
    if isinstance(n, bool) or not isinstance(n, int) or n < MIN_LEVELS:
        raise ContractError(f"Level count must be an integer >= "
                            f"{MIN_LEVELS}, got {n!r}.")
    return n


def best_constants(n: int, traceless: bool = False) -> BoundConstants:
    """Return the sharp constants for n levels.

    Without constraint the constants are (1 -+ sqrt 2)/2 for every n. With
    tr A = 0 they tighten to (1 -+ sqrt(2(1 - 1/n)))/2, which is (0, 1) for
    a qubit.
    """
    require_levels(n)
    if not traceless:
        return BoundConstants(n, False, C_MINUS, C_PLUS)
    root = math.sqrt(2.0 * (1.0 - 1.0 / n))
    return BoundConstants(n, True, (1.0 - root) / 2.0, (1.0 + root) / 2.0)


def constant_roots(n: int, traceless: bool = False) -> tuple[float, float]:
    """Return the residuals of the defining equation at (c_-, c_+).

    General constants solve 4c(c - 1) = 1. Traceless constants for n >= 3
    solve 4(c + c/(n-2) - 1)(c + c/(n-2)) = (1 + 2c/(n-2))^2, and for n = 2
    they are the roots of c(c - 1) = 0.
    """
    consts = best_constants(n, traceless)

    def residual(c: float) -> float:
        if not traceless:
            return 4.0 * c * (c - 1.0) - 1.0
        if n == 2:
            return c * (c - 1.0)
        k = c + c / (n - 2)
        return 4.0 * (k - 1.0) * k - (1.0 + 2.0 * c / (n - 2)) ** 2

    return residual(consts.c_minus), residual(consts.c_plus)
