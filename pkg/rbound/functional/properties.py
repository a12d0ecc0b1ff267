"""Randomized property suite for the r-functional.

Every property is measured as a non-negative violation, normalized to the
scale of the sample, and compared to a tolerance. The suite backs the
`verify` command and the ensemble tests.
"""

from __future__ import annotations
from dataclasses import dataclass
import logging

import numpy as np

from ..core.constants import DEFAULT_TOLERANCES, SQRT2, Sign, Tolerances
from ..core.linalg import frobenius_norm, random_unitary
from ..core.matrix import ComplexMatrix, ginibre
from .bounds import best_constants, constant_roots, require_levels
from .pauli import pauli_decompose, r_pauli
from .rfunc import bw_check, cartesian_additivity_check, \
    commutator_half_norm, diagonal_expansion, r_eval, r_report, r_self, \
    r_self_singular, scaling_check, unitary_invariance_check
from .witness import WITNESS_KINDS, build_witness

logger = logging.getLogger(__name__)

WITNESS_TOL = 1e-12


@dataclass(frozen=True)
class PropertyResult:
    """Largest normalized violation of one property over the samples."""

    name: str
    samples: int
    max_violation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        """Return True if the violation stays within tolerance."""
        return self.max_violation <= self.tolerance

    def to_dict(self) -> dict:
        """Return a JSON-ready dictionary."""
        return {"name": self.name, "samples": self.samples,
                "max_violation": self.max_violation,
                "tolerance": self.tolerance, "pass": self.passed}


class _Tracker:
    """Keep the running maximum violation per property."""

    def __init__(self):
        self._worst: dict[str, float] = {}
        self._count: dict[str, int] = {}
        self._tol: dict[str, float] = {}

    def record(self, name: str, violation: float, tol: float) -> None:
        self._worst[name] = max(self._worst.get(name, 0.0), float(violation))
        self._count[name] = self._count.get(name, 0) + 1
        self._tol[name] = tol

    def results(self) -> list[PropertyResult]:
        return [PropertyResult(name, self._count[name], self._worst[name],
                               self._tol[name]) for name in self._worst]


def random_traceless(rng: np.random.Generator, n: int) -> ComplexMatrix:
    """Return a Ginibre matrix with its trace part removed."""
    g = ginibre(rng, n)
    return g - ComplexMatrix.identity(n) * (g.trace() / n)


def random_normal(rng: np.random.Generator, n: int, index: int
                  ) -> ComplexMatrix:
    """Return a random normal matrix: Hermitian, unitary or diagonal."""
    kind = index % 3
    if kind == 0:
        g = ginibre(rng, n)
        return (g + g.dag) / 2.0
    if kind == 1:
        return random_unitary(rng, n)
    return ComplexMatrix.diag(rng.standard_normal(n)
                              + 1j * rng.standard_normal(n))


def _excess(value: float, lower: float | None, upper: float | None) -> float:
    low = lower - value if lower is not None else 0.0
    high = value - upper if upper is not None else 0.0
    return max(0.0, low, high)


def run_property_suite(n: int, samples: int, seed: int,
                       tolerances: Tolerances = DEFAULT_TOLERANCES
                       ) -> list[PropertyResult]:
    """Run every randomized property for n levels and return the results."""
    require_levels(n)
    rng = np.random.default_rng(seed)
    general = best_constants(n, False)
    tight = best_constants(n, True)
    track = _Tracker()

    for index in range(samples):
        a, b = ginibre(rng, n), ginibre(rng, n)
        scale = frobenius_norm(a) ** 2 * frobenius_norm(b) ** 2
        norm = max(1.0, scale)

        report = r_report(a, b)
        track.record("expression_spread", report.max_spread / norm,
                     tolerances.expression_spread)
        track.record("general_bounds",
                     _excess(report.ratio, general.c_minus, general.c_plus),
                     tolerances.bound)
        track.record("sqrt2_bound",
                     _excess(report.value, None, SQRT2 * scale) / norm,
                     tolerances.bound)
        lhs, rhs = bw_check(a, b)
        track.record("commutator_norm_bound",
                     _excess(lhs, None, rhs) / max(1.0, rhs), tolerances.bound)

        alpha = complex(*rng.standard_normal(2))
        beta = complex(*rng.standard_normal(2))
        scaled, expected = scaling_check(a, b, alpha, beta)
        track.record("scaling", abs(scaled - expected) /
                     max(1.0, abs(alpha * beta) ** 2 * scale),
                     tolerances.identity)

        u = random_unitary(rng, n)
        rotated, plain = unitary_invariance_check(a, b, u)
        track.record("unitary_invariance", abs(rotated - plain) / norm,
                     tolerances.identity)

        whole, real, imag = cartesian_additivity_check(a, b)
        track.record("cartesian_additivity", abs(whole - real - imag) / norm,
                     tolerances.identity)

        t = random_traceless(rng, n)
        t_scale = frobenius_norm(t) ** 2 * frobenius_norm(b) ** 2
        track.record("traceless_bounds",
                     _excess(r_eval(t, b) / t_scale, tight.c_minus,
                             tight.c_plus), tolerances.bound)

        nb = random_normal(rng, n, index)
        n_scale = frobenius_norm(a) ** 2 * frobenius_norm(nb) ** 2
        value = r_eval(a, nb)
        track.record("normal_commutator_identity",
                     abs(value - commutator_half_norm(a, nb)) /
                     max(1.0, n_scale), tolerances.identity)
        track.record("normal_restricted_bound",
                     _excess(value / n_scale, None, 1.0), tolerances.bound)

        a4 = frobenius_norm(a) ** 4
        self_value = r_self(a)
        track.record("self_bounds",
                     _excess(self_value, 0.0, 0.5 * a4) / max(1.0, a4),
                     tolerances.bound)
        track.record("self_singular_agreement",
                     abs(self_value - r_self_singular(a)) / max(1.0, a4),
                     tolerances.identity)

        diag = rng.standard_normal(n)
        d_scale = float(diag @ diag) * frobenius_norm(b) ** 2
        track.record("diagonal_expansion",
                     abs(r_eval(ComplexMatrix.diag(diag), b)
                         - diagonal_expansion(diag, b)) / max(1.0, d_scale),
                     tolerances.identity)

        if n == 2:
            track.record("pauli_formula",
                         abs(r_pauli(pauli_decompose(a), pauli_decompose(b))
                             - report.value) / norm, tolerances.identity)

    for kind in WITNESS_KINDS:
        if kind == "qubit" and n != 2:
            continue
        signs = (Sign.UPPER,) if kind == "self" else (Sign.UPPER, Sign.LOWER)
        for sign in signs:
            wit = build_witness(kind, n, sign)
            track.record("witness_exactness", abs(wit.achieved - wit.target),
                         WITNESS_TOL)
    for traceless in (False, True):
        track.record("constant_equations",
                     max(abs(x) for x in constant_roots(n, traceless)),
                     WITNESS_TOL)

    results = track.results()
    failed = [res.name for res in results if not res.passed]
    if failed:
        logger.warning("n=%d: %d properties violated: %s", n, len(failed),
                       ", ".join(failed))
    else:
        logger.info("n=%d: all %d properties hold over %d samples", n,
                    len(results), samples)
    return results
