"""The r-functional and the identities and inequalities it satisfies.

    r(A, B) = 1/2 (<[B, A], BA> + <[B, A^dagger], BA^dagger>)

with the Hilbert-Schmidt inner product. r is real, quadratic (not bilinear)
in each argument and asymmetric in (A, B). The canonical evaluation uses the
fully expanded trace form; the other equivalent forms are evaluated by
r_report as a cross-check.
"""

from __future__ import annotations
from dataclasses import dataclass, field
import logging
from typing import NamedTuple

import numpy as np

from ..core.constants import DEFAULT_TOLERANCES, SQRT2, Tolerances
from ..core.exception import ContractError, ImaginaryResidueError
from ..core.linalg import cartesian_split, frobenius_norm, is_normal, \
    is_unitary, svd
from ..core.matrix import ComplexMatrix
from .bounds import best_constants

logger = logging.getLogger(__name__)

FORM_NAMES = ("definition", "expanded_trace", "anticommutator",
              "commutator", "adjoint_commutator", "commutator_adjoint_b",
              "adjoint_a_commutator", "symmetrized")


@dataclass(frozen=True)
class RReport:
    """r(A, B) with every equivalent form and their agreement."""

    value: float
    alternates: dict[str, float] = field(default_factory=dict)
    max_spread: float = 0.0
    ratio: float | None = None
    norm_a: float = 0.0
    norm_b: float = 0.0

    @property
    def scale(self) -> float:
        """Return ||A||^2 ||B||^2."""
        return self.norm_a ** 2 * self.norm_b ** 2

    def spread_ok(self, tol: float = DEFAULT_TOLERANCES.expression_spread
                  ) -> bool:
        """Return True if the forms agree within tol * max(1, scale)."""
        return self.max_spread <= tol * max(1.0, self.scale)

    def to_dict(self) -> dict:
        """Return a JSON-ready dictionary."""
        return {"value": self.value, "alternates": dict(self.alternates),
                "max_spread": self.max_spread, "ratio": self.ratio,
                "norm_a": self.norm_a, "norm_b": self.norm_b}


class BoundCheck(NamedTuple):
    """One bound: whether it applies to the pair and whether it holds."""

    name: str
    applies: bool
    lower: float | None
    upper: float | None
    value: float
    holds: bool

    def to_dict(self) -> dict:
        """Return a JSON-ready dictionary."""
        return self._asdict()


def _require_pair(a: ComplexMatrix, b: ComplexMatrix) -> None:
    a.require_square()
    a.require_same_shape(b)


def _scale(a: ComplexMatrix, b: ComplexMatrix) -> float:
    return frobenius_norm(a) ** 2 * frobenius_norm(b) ** 2


def _real(value: complex, scale: float, what: str,
          tol: float = DEFAULT_TOLERANCES.imaginary_residue) -> float:
    """Assert value is real within tol * max(1, scale) and drop the residue."""
    threshold = tol * max(1.0, scale)
    if abs(value.imag) > threshold:
        raise ImaginaryResidueError(f"{what} is not real",
                                    residue=abs(value.imag),
                                    threshold=threshold)
    return float(value.real)


def _trace(m: np.ndarray) -> complex:
    return complex(np.trace(m))


def _norm_sq(m: np.ndarray) -> float:
    return float(np.vdot(m, m).real)


# -----[ Evaluation ]-------------------------------------------------

def r_eval(a: ComplexMatrix, b: ComplexMatrix) -> float:
    """Return r(A, B).

    Evaluated as 1/2 tr(A^dag A B^dag B + A A^dag B^dag B - A^dag B A B^dag
    - B A^dag B^dag A); the imaginary part left by rounding is checked
    against 1e-12 max(1, ||A||^2 ||B||^2) and discarded.
    """
    _require_pair(a, b)
    x, y = a.array, b.array
    xd, yd = x.conj().T, y.conj().T
    ydy = yd @ y
    value = 0.5 * _trace(xd @ x @ ydy + x @ xd @ ydy
                         - xd @ y @ x @ yd - y @ xd @ yd @ x)
    return _real(value, _scale(a, b), "r(A, B)")


def expression_forms(a: ComplexMatrix, b: ComplexMatrix) -> dict[str, complex]:
    """Return every equivalent expression of r(A, B), keyed by form name.

    The values are complex as computed; all real parts agree and all
    imaginary parts vanish up to rounding.
    """
    _require_pair(a, b)
    x, y = a.array, b.array
    xd, yd = x.conj().T, y.conj().T
    xdx, xxd = xd @ x, x @ xd
    ydy = yd @ y
    dag_comm = ydy - y @ yd

    def comm(p, q):
        return p @ q - q @ p

    def hs(p, q):
        return complex(np.vdot(p, q))

    return {
        "definition": 0.5 * (hs(comm(y, x), y @ x)
                             + hs(comm(y, xd), y @ xd)),
        "expanded_trace": 0.5 * _trace(xdx @ ydy + xxd @ ydy
                                       - xd @ y @ x @ yd - y @ xd @ yd @ x),
        "anticommutator": 0.5 * _trace((xxd + xdx) @ ydy)
        - _trace(xd @ y @ x @ yd).real,
        "commutator": 0.5 * (_norm_sq(comm(x, y)) + _trace(xdx @ dag_comm)),
        "adjoint_commutator": 0.5 * (_norm_sq(comm(xd, yd))
                                     + _trace(xdx @ dag_comm)),
        "commutator_adjoint_b": 0.5 * (_norm_sq(comm(x, yd))
                                       + _trace(xxd @ dag_comm)),
        "adjoint_a_commutator": 0.5 * (_norm_sq(comm(xd, y))
                                       + _trace(xxd @ dag_comm)),
        "symmetrized": 0.25 * (_norm_sq(comm(x, y)) + _norm_sq(comm(xd, y))
                               + _trace((xxd + xdx) @ dag_comm)),
    }


def r_report(a: ComplexMatrix, b: ComplexMatrix) -> RReport:
    """Return r(A, B) with all equivalent forms and their max spread."""
    value = r_eval(a, b)
    scale = _scale(a, b)
    alternates = {name: _real(form, scale, name)
                  for name, form in expression_forms(a, b).items()}
    values = list(alternates.values())
    spread = max(values) - min(values)
    norm_a, norm_b = frobenius_norm(a), frobenius_norm(b)
    ratio = value / scale if norm_a > 0 and norm_b > 0 else None
    return RReport(value=value, alternates=alternates, max_spread=spread,
                   ratio=ratio, norm_a=norm_a, norm_b=norm_b)


def ratio_of(a: ComplexMatrix, b: ComplexMatrix) -> float | None:
    """Return r(A, B) / (||A||^2 ||B||^2), or None if a norm is zero."""
    scale = _scale(a, b)
    if scale == 0.0:
        return None
    return r_eval(a, b) / scale


def r_self(a: ComplexMatrix) -> float:
    """Return r(A, A) = 1/2 tr(A^dag A [A^dag, A])."""
    a.require_square()
    x = a.array
    xd = x.conj().T
    xdx = xd @ x
    value = 0.5 * _trace(xdx @ (xdx - x @ xd))
    return _real(value, frobenius_norm(a) ** 4, "r(A, A)")


def r_self_singular(a: ComplexMatrix) -> float:
    """Return r(A, A) from the singular value decomposition.

    With A = sum_i s_i |b_i><beta_i|, r(A, A) equals
    1/2 (sum_i s_i^4 - sum_ij s_i^2 s_j^2 |<b_i|beta_j>|^2).
    """
    result = svd(a)
    s2 = result.singular_values ** 2
    overlap = np.abs(result.left.array.conj().T @ result.right.array) ** 2
    return 0.5 * float(np.sum(s2 ** 2) - s2 @ overlap @ s2)


def diagonal_expansion(diagonal, b: ComplexMatrix) -> float:
    """Return r(diag(a), B) = sum_{i != j} |b_ji|^2 (a_i^2 - a_i a_j).

    'diagonal' holds the real diagonal of A.
    """
    b.require_square()
    diag = np.asarray(diagonal, dtype=np.float64)
    if diag.shape != (b.rows,):
        raise ContractError(
            f"Expected {b.rows} diagonal entries, got {diag.shape}.")
    # weight[j, i] = a_i^2 - a_i a_j
    weight = diag[np.newaxis, :] ** 2 - np.outer(diag, diag)
    return float(np.sum(np.abs(b.array) ** 2 * weight))


# -----[ Identity checks ]--------------------------------------------

def scaling_check(a: ComplexMatrix, b: ComplexMatrix, alpha: complex,
                  beta: complex) -> tuple[float, float]:
    """Return (r(alpha A, beta B), |alpha|^2 |beta|^2 r(A, B))."""
    scaled = r_eval(a * alpha, b * beta)
    return scaled, abs(alpha) ** 2 * abs(beta) ** 2 * r_eval(a, b)


def unitary_invariance_check(a: ComplexMatrix, b: ComplexMatrix,
                             u: ComplexMatrix) -> tuple[float, float]:
    """Return (r(U A U^dag, U B U^dag), r(A, B))."""
    _require_pair(a, b)
    a.require_same_shape(u)
    if not is_unitary(u):
        raise ContractError("unitary_invariance_check requires a unitary U.")
    return r_eval(u @ a @ u.dag, u @ b @ u.dag), r_eval(a, b)


def cartesian_additivity_check(a: ComplexMatrix, b: ComplexMatrix
                               ) -> tuple[float, float, float]:
    """Return (r(A, B), r(A_R, B), r(A_I, B))."""
    real, imag = cartesian_split(a)
    return r_eval(a, b), r_eval(real, b), r_eval(imag, b)


def bw_check(a: ComplexMatrix, b: ComplexMatrix) -> tuple[float, float]:
    """Return (||[A, B]||^2, 2 ||A||^2 ||B||^2)."""
    _require_pair(a, b)
    x, y = a.array, b.array
    return _norm_sq(x @ y - y @ x), 2.0 * _scale(a, b)


def sqrt2_bound_check(a: ComplexMatrix, b: ComplexMatrix
                      ) -> tuple[float, float]:
    """Return (r(A, B), sqrt(2) ||A||^2 ||B||^2)."""
    return r_eval(a, b), SQRT2 * _scale(a, b)


def commutator_half_norm(a: ComplexMatrix, b: ComplexMatrix) -> float:
    """Return 1/2 ||[A, B]||^2, the value of r(A, B) for normal B."""
    return 0.5 * bw_check(a, b)[0]


def applicable_bounds(a: ComplexMatrix, b: ComplexMatrix,
                      tolerances: Tolerances = DEFAULT_TOLERANCES
                      ) -> list[BoundCheck]:
    """Return every bound on r(A, B), flagged by applicability and status.

    The two-sided general bound, the sqrt(2) bound and the commutator-norm
    bound always apply; the traceless bound applies when tr A vanishes; the
    restricted bound and the commutator identity apply when B is normal.
    """
    _require_pair(a, b)
    n = a.rows
    value = r_eval(a, b)
    scale = _scale(a, b)
    slack = tolerances.bound * max(1.0, scale)
    checks = []

    def add(name, applies, lower, upper, measured=value):
        holds = (lower is None or measured >= lower - slack) and \
                (upper is None or measured <= upper + slack)
        checks.append(BoundCheck(name, applies, lower, upper, measured,
                                 bool(holds) if applies else True))

    general = best_constants(n, False)
    add("general", True, general.c_minus * scale, general.c_plus * scale)

    traceless = abs(a.trace()) <= tolerances.traceless * \
        max(1.0, frobenius_norm(a))
    tight = best_constants(n, True)
    add("traceless", traceless, tight.c_minus * scale, tight.c_plus * scale)

    normal = is_normal(b, tolerances.normality) if scale > 0 else True
    add("normal_b", normal, None, scale)
    half = commutator_half_norm(a, b)
    add("commutator_identity", normal, half, half)

    add("sqrt2", True, None, SQRT2 * scale)
    lhs, rhs = bw_check(a, b)
    add("commutator_norm", True, None, rhs, lhs)
    return checks
