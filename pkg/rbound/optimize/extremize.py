"""Alternating exact extremization of r(A, B) / (||A||^2 ||B||^2).

r is a Hermitian quadratic form in each argument separately, so on the unit
sphere the best B for a fixed A (and the best A for a fixed B) is an extreme
eigenvector of that form. Alternating the two updates never moves the ratio
the wrong way and needs no step size.
"""

from __future__ import annotations
from concurrent.futures import ThreadPoolExecutor
import csv
from dataclasses import dataclass, field
import logging
from typing import TextIO

import numpy as np

from ..core.constants import DEFAULT_SEED, MAX_VERIFY_N, MIN_LEVELS, \
    OPTIMIZER_DEFAULTS, TRAJECTORY_COLUMNS, MinMax, Mode
from ..core.exception import ContractError, ConvergenceError, \
    InternalAssertionError
from ..core.linalg import eig_hermitian, frobenius_norm
from ..core.matrix import ComplexMatrix, ginibre
from ..core.matrix_io import matrix_to_json
from ..core.validators import InRange, OneOf, Positive
from ..functional.bounds import best_constants
from ..functional.rfunc import r_eval
from .quad_form import quad_form_in_A, quad_form_in_B, traceless_basis

logger = logging.getLogger(__name__)

SEED_LIMITS = MinMax(0, 2 ** 64 - 1)
STEP_LIMITS = MinMax(1e-8, 1e-4)


class ExtremizeTask:
    """A validated description of one extremization run."""

    # pylint: disable=too-many-instance-attributes,too-many-arguments

    n = InRange(MinMax(MIN_LEVELS, MAX_VERIFY_N), integer=True)
    mode = OneOf(Mode.MAXIMIZE, Mode.MINIMIZE)
    restarts = Positive(integer=True)
    seed = InRange(SEED_LIMITS, integer=True)
    max_sweeps = Positive(integer=True)
    convergence_tol = Positive()
    workers = Positive(integer=True)

    def __init__(self, n: int, mode=Mode.MAXIMIZE, traceless_a=False,
                 restarts=OPTIMIZER_DEFAULTS.restarts, seed=DEFAULT_SEED,
                 max_sweeps=OPTIMIZER_DEFAULTS.max_sweeps,
                 convergence_tol=OPTIMIZER_DEFAULTS.convergence_tol,
                 workers=1):
        """Initialize the task; every field is validated on assignment."""
        self.n = n
        self.mode = mode
        self.traceless_a = bool(traceless_a)
        self.restarts = restarts
        self.seed = seed
        self.max_sweeps = max_sweeps
        self.convergence_tol = convergence_tol
        self.workers = workers

    @property
    def maximize(self) -> bool:
        """Return True for a maximization."""
        return self.mode is Mode.MAXIMIZE

    @property
    def target(self) -> float:
        """Return the sharp constant this task should recover."""
        consts = best_constants(self.n, self.traceless_a)
        return consts.c_plus if self.maximize else consts.c_minus

    def to_dict(self) -> dict:
        """Return a JSON-ready dictionary."""
        return {"n": self.n, "mode": str(self.mode),
                "traceless_A": self.traceless_a, "restarts": self.restarts,
                "seed": self.seed, "max_sweeps": self.max_sweeps,
                "convergence_tol": self.convergence_tol,
                "workers": self.workers}

    def __repr__(self) -> str:
        """Return a string representation of this object."""
        return (f"ExtremizeTask(n={self.n}, mode={self.mode!s}, "
                f"traceless_a={self.traceless_a}, restarts={self.restarts}, "
                f"seed={self.seed})")

    # --------========[ End of class ]========-------- #


@dataclass(frozen=True)
class ExtremizeResult:
    """The best pair found, with the trajectory of its restart."""

    ratio: float
    a: ComplexMatrix
    b: ComplexMatrix
    sweeps_used: int
    restart_index: int
    trajectory: tuple[float, ...] = field(default_factory=tuple)
    converged: bool = True

    def to_dict(self) -> dict:
        """Return a JSON-ready dictionary."""
        return {"ratio": self.ratio, "sweeps_used": self.sweeps_used,
                "restart_index": self.restart_index,
                "converged": self.converged,
                "trajectory": list(self.trajectory),
                "A": matrix_to_json(self.a), "B": matrix_to_json(self.b)}


def _unit(m: ComplexMatrix) -> ComplexMatrix:
    return m / frobenius_norm(m)


def _start_pair(task: ExtremizeTask, restart_index: int
                ) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Return the seeded random unit starting pair of a restart."""
    rng = np.random.default_rng(task.seed ^ restart_index)
    a, b = ginibre(rng, task.n), ginibre(rng, task.n)
    if task.traceless_a:
        a = a - ComplexMatrix.identity(task.n) * (a.trace() / task.n)
    return _unit(a), _unit(b)


def _extreme_vector(form: ComplexMatrix, maximize: bool) -> np.ndarray:
    eig = eig_hermitian(form)
    return eig.vector(-1 if maximize else 0)


def _run_restart(task: ExtremizeTask, restart_index: int) -> ExtremizeResult:
    """Run the alternating updates from one starting pair."""
    n = task.n
    a, b = _start_pair(task, restart_index)
    ratio = r_eval(a, b)
    trajectory = [ratio]
    sweeps = 0
    converged = False
    sign = 1.0 if task.maximize else -1.0
    try:
        while sweeps < task.max_sweeps:
            sweeps += 1
            b = ComplexMatrix.from_vec(
                _extreme_vector(quad_form_in_B(a), task.maximize), n)
            coords = _extreme_vector(quad_form_in_A(b, task.traceless_a),
                                     task.maximize)
            if task.traceless_a:
                coords = traceless_basis(n) @ coords
            a = ComplexMatrix.from_vec(coords, n)
            new_ratio = r_eval(a, b)
            if sign * (new_ratio - ratio) < -OPTIMIZER_DEFAULTS.monotone_slack:
                raise InternalAssertionError(
                    f"restart {restart_index} sweep {sweeps}: ratio moved "
                    f"backwards by {abs(new_ratio - ratio):.3e}")
            trajectory.append(new_ratio)
            done = abs(new_ratio - ratio) < task.convergence_tol
            ratio = new_ratio
            if done:
                converged = True
                break
    except ConvergenceError as err:
        raise ConvergenceError(f"Eigensolver failed in restart "
                               f"{restart_index}", residual=err.residual,
                               restart_index=restart_index) from err
    logger.debug("restart %d: ratio=%.15f after %d sweeps", restart_index,
                 ratio, sweeps)
    return ExtremizeResult(ratio=ratio, a=a, b=b, sweeps_used=sweeps,
                           restart_index=restart_index,
                           trajectory=tuple(trajectory), converged=converged)


def alternating_extremize(task: ExtremizeTask) -> ExtremizeResult:
    """Return the best result over all restarts of 'task'.

    Restarts are independent and may run on a thread pool; the merge picks
    the best ratio and breaks ties by the lowest restart index, so the
    result does not depend on scheduling.
    """
    indices = range(task.restarts)
    if task.workers > 1:
        with ThreadPoolExecutor(max_workers=task.workers) as pool:
            results = list(pool.map(lambda i: _run_restart(task, i), indices))
    else:
        results = [_run_restart(task, i) for i in indices]
    sign = 1.0 if task.maximize else -1.0
    best = min(results, key=lambda res: (-sign * res.ratio,
                                         res.restart_index))
    target = task.target
    if sign * (best.ratio - target) > OPTIMIZER_DEFAULTS.bound_slack:
        raise InternalAssertionError(
            f"Extremal ratio {best.ratio!r} lies beyond the "
            f"sharp constant {target!r}.")
    logger.info("%s n=%d traceless=%s: ratio=%.12f (target %.12f) from "
                "restart %d", task.mode, task.n, task.traceless_a,
                best.ratio, target, best.restart_index)
    return best


def finite_diff_check(a: ComplexMatrix, b: ComplexMatrix,
                      step: float = 1e-6) -> float:
    """Return the worst relative gap between form gradients and differences.

    The gradient of v^dag N v is 2 Re(N v) along real coordinates and
    2 Im(N v) along imaginary ones. Every one of the 4 n^2 real coordinates
    of (A, B) is compared against a central difference of r_eval.
    """
    if not STEP_LIMITS.contains(step):
        raise ContractError(f"Step {step!r} is outside "
                            f"[{STEP_LIMITS.min}, {STEP_LIMITS.max}].")
    a.require_square()
    a.require_same_shape(b)
    n = a.rows
    grad_a = 2.0 * (quad_form_in_A(b).array @ a.vec())
    grad_b = 2.0 * (quad_form_in_B(a).array @ b.vec())
    scale = max(1.0, float(np.max(np.abs(grad_a))),
                float(np.max(np.abs(grad_b))))

    worst = 0.0
    for which, grad in ((0, grad_a), (1, grad_b)):
        base = (a if which == 0 else b).array
        for k in range(n * n):
            row, col = k % n, k // n
            for direction, expected in ((1.0, grad[k].real),
                                        (1j, grad[k].imag)):
                delta = np.zeros((n, n), dtype=np.complex128)
                delta[row, col] = direction * step
                plus = ComplexMatrix(base + delta)
                minus = ComplexMatrix(base - delta)
                if which == 0:
                    diff = r_eval(plus, b) - r_eval(minus, b)
                else:
                    diff = r_eval(a, plus) - r_eval(a, minus)
                worst = max(worst, abs(diff / (2.0 * step) - expected) / scale)
    return worst


def write_trajectory_csv(result: ExtremizeResult, stream: TextIO) -> None:
    """Write the (sweep, ratio) trajectory of 'result' as CSV."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(TRAJECTORY_COLUMNS)
    for sweep, ratio in enumerate(result.trajectory):
        writer.writerow((sweep, repr(ratio)))
