"""Hermitian quadratic forms of r in each argument.

With column-stacking vectorization, r(A, B) = vec(B)^dag M_A vec(B) =
vec(A)^dag N_B vec(A), where

    M_A = 1/2 ({A, A^dag}^T (x) I) - 1/2 (A^T (x) A^dag + conj(A) (x) A)
    N_B = 1/2 (P^T (x) I + I (x) P - conj(B) (x) B - B^T (x) B^dag)

and P = B^dag B.
"""

from __future__ import annotations
from functools import lru_cache

import numpy as np

from ..core.constants import DEFAULT_TOLERANCES
from ..core.exception import InternalAssertionError
from ..core.matrix import ComplexMatrix, ginibre
from ..functional.rfunc import r_eval

VERIFY_SAMPLES = 20
VERIFY_SEED = 0x5EED


def _hermitize(m: np.ndarray) -> ComplexMatrix:
    return ComplexMatrix((m + m.conj().T) / 2.0)


def quad_form_in_B(a: ComplexMatrix,  # pylint: disable=invalid-name
                   verify: bool = False) -> ComplexMatrix:
    """Return M_A, the n^2 x n^2 Hermitian form of B -> r(A, B)."""
    a.require_square()
    n = a.rows
    x = a.array
    xd = x.conj().T
    eye = np.eye(n)
    anti = x @ xd + xd @ x
    cross = np.kron(x.T, xd)
    form = _hermitize(0.5 * np.kron(anti.T, eye)
                      - 0.5 * (cross + cross.conj().T))
    if verify:
        _verify(form, lambda other: r_eval(a, other), n)
    return form


def quad_form_in_A(b: ComplexMatrix,  # pylint: disable=invalid-name
                   traceless: bool = False,
                   verify: bool = False) -> ComplexMatrix:
    """Return N_B, the Hermitian form of A -> r(A, B).

    With 'traceless' the form is compressed onto the orthonormal traceless
    basis of traceless_basis(n) and has size n^2 - 1.
    """
    b.require_square()
    n = b.rows
    y = b.array
    yd = y.conj().T
    eye = np.eye(n)
    p = yd @ y
    cross = np.kron(y.conj(), y)
    form = 0.5 * (np.kron(p.T, eye) + np.kron(eye, p)
                  - cross - cross.conj().T)
    if verify:
        _verify(_hermitize(form), lambda other: r_eval(other, b), n)
    if traceless:
        basis = traceless_basis(n)
        form = basis.conj().T @ form @ basis
    return _hermitize(form)


@lru_cache(maxsize=None)
def traceless_basis(n: int) -> np.ndarray:
    """Return an n^2 x (n^2 - 1) orthonormal basis of traceless vec(A).

    The columns complete vec(I)/sqrt(n) to a unitary via a complete QR.
    """
    unit = np.eye(n).reshape(-1, order="F") / np.sqrt(n)
    q, _ = np.linalg.qr(unit.reshape(-1, 1).astype(np.complex128),
                        mode="complete")
    basis = q[:, 1:]
    basis.setflags(write=False)
    return basis


def form_value(form: ComplexMatrix, vector: np.ndarray) -> float:
    """Return vector^dag form vector (real for a Hermitian form)."""
    return float(np.vdot(vector, form.array @ vector).real)


def _verify(form: ComplexMatrix, evaluate, n: int) -> None:
    """Compare the form with r_eval on random matrices."""
    rng = np.random.default_rng(VERIFY_SEED)
    for _ in range(VERIFY_SAMPLES):
        other = ginibre(rng, n)
        expected = evaluate(other)
        got = form_value(form, other.vec())
        scale = max(1.0, float(np.linalg.norm(form.array))
                    * float(np.vdot(other.array, other.array).real))
        if abs(got - expected) > DEFAULT_TOLERANCES.identity * scale:
            raise InternalAssertionError(
                f"Quadratic form disagrees with r_eval: "
                f"{got!r} vs {expected!r}.")
