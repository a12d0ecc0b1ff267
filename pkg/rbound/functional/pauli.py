"""Qubit formulation of the r-functional in the normalized Pauli basis.

A 2x2 matrix is A = a0 F0 + sum_i a_i F_i with F0 = I/sqrt2 and
F_i = sigma_i/sqrt2, an orthonormal basis for the Hilbert-Schmidt product.
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..core.constants import C_MINUS, C_PLUS, DEFAULT_TOLERANCES, SQRT2
from ..core.exception import DimensionError
from ..core.matrix import ComplexMatrix


class PauliBasis:
    """The Pauli matrices and the normalized basis F0..F3."""

    def __new__(cls):
        """Implement a singleton by returning the existing or new instance."""
        if not hasattr(cls, 'instance'):
            cls.instance = super(PauliBasis, cls).__new__(cls)
            sigma = np.array([
                [[1, 0], [0, 1]],
                [[0, 1], [1, 0]],
                [[0, -1j], [1j, 0]],
                [[1, 0], [0, -1]],
            ], dtype=np.complex128)
            sigma.setflags(write=False)
            cls.instance._sigma = sigma
            cls.instance._basis = tuple(ComplexMatrix(s / SQRT2)
                                        for s in sigma)
        return cls.instance

    def __repr__(self) -> str:
        """Return a string representation of this object."""
        return "PauliBasis()"

    def sigma(self, index: int) -> ComplexMatrix:
        """Return sigma_index; index 0 is the identity."""
        return ComplexMatrix(self._sigma[index])

    def element(self, index: int) -> ComplexMatrix:
        """Return the normalized basis element F_index."""
        return self._basis[index]

    @property
    def stack(self) -> np.ndarray:
        """Return the 4x2x2 array of sigma_0..sigma_3."""
        return self._sigma

    # --------========[ End of class ]========-------- #


@dataclass(frozen=True)
class PauliVector:
    """Coefficients (a0, a) of a 2x2 matrix in the normalized basis."""

    a0: complex
    a: tuple[complex, complex, complex]

    @property
    def vector(self) -> np.ndarray:
        """Return a as a complex array."""
        return np.array(self.a, dtype=np.complex128)

    @property
    def norm_sq(self) -> float:
        """Return |a0|^2 + |a|^2, i.e. ||A||^2."""
        return abs(self.a0) ** 2 + self.vector_norm_sq

    @property
    def vector_norm_sq(self) -> float:
        """Return |a|^2."""
        vec = self.vector
        return float(np.vdot(vec, vec).real)

    @property
    def real_part(self) -> np.ndarray:
        """Return Re a."""
        return self.vector.real

    @property
    def imag_part(self) -> np.ndarray:
        """Return Im a."""
        return self.vector.imag

    def __repr__(self) -> str:
        """Return a string representation of this object."""
        return f"PauliVector(a0={self.a0!r}, a={self.a!r})"


def pauli_decompose(m: ComplexMatrix) -> PauliVector:
    """Return the coefficients a_mu = <F_mu, A> of a 2x2 matrix."""
    if m.shape != (2, 2):
        raise DimensionError(f"Pauli decomposition needs a 2x2 matrix, "
                             f"got {m.shape}.")
    stack = PauliBasis().stack
    # F_mu are Hermitian, so <F_mu, A> = tr(F_mu A).
    coeffs = np.einsum("mij,ji->m", stack, m.array) / SQRT2
    return PauliVector(complex(coeffs[0]),
                       tuple(complex(c) for c in coeffs[1:]))


def pauli_reconstruct(vector: PauliVector) -> ComplexMatrix:
    """Return a0 F0 + sum_i a_i F_i."""
    coeffs = np.concatenate(([vector.a0], vector.vector))
    return ComplexMatrix(np.einsum("m,mij->ij", coeffs, PauliBasis().stack)
                         / SQRT2)


def r_pauli(a: PauliVector, b: PauliVector) -> float:
    """Return r(A, B) from the Pauli coefficients.

        r = |a|^2 |b|^2 - 1/2 (|a.b|^2 + |conj(a).b|^2)
            - Im(conj(a0) a.(conj(b) x b))

    Dots without conjugation are bilinear. b0 does not enter.
    """
    va, vb = a.vector, b.vector
    cross = np.cross(vb.conj(), vb)
    value = a.vector_norm_sq * b.vector_norm_sq \
        - 0.5 * (abs(np.dot(va, vb)) ** 2 + abs(np.vdot(va, vb)) ** 2) \
        - (np.conj(a.a0) * np.dot(va, cross)).imag
    return float(value)


def scalar_upper_gap(x: float, a_norm: float, b_real_norm: float,
                     b_imag_norm: float) -> float:
    """Return c+ (x^2 + |a|^2)|b|^2 - |a|^2|b|^2 - 2x|a||b_R||b_I| >= 0.

    Zero at x = (sqrt2 - 1)|a| with |b_R| = |b_I|.
    """
    b_sq = b_real_norm ** 2 + b_imag_norm ** 2
    return C_PLUS * (x * x + a_norm ** 2) * b_sq - a_norm ** 2 * b_sq \
        - 2.0 * x * a_norm * b_real_norm * b_imag_norm


def scalar_lower_gap(x: float, y_norm: float, z_norm: float,
                     w_norm: float) -> float:
    """Return (|y|^2 + |z|^2)(c+ |w|^2 - c- x^2) - 2|w||y||z|x >= 0.

    Zero at x = (sqrt2 + 1)|w| with |y| = |z|.
    """
    return (y_norm ** 2 + z_norm ** 2) * (C_PLUS * w_norm ** 2
                                          - C_MINUS * x * x) \
        - 2.0 * w_norm * y_norm * z_norm * x


class QubitBoundChain(NamedTuple):
    """The direct qubit bounds for one pair of Pauli vectors."""

    value: float
    lower: float
    upper: float
    traceless: bool
    holds: bool


def pauli_bounds(a: PauliVector, b: PauliVector,
                 tol: float = DEFAULT_TOLERANCES.bound) -> QubitBoundChain:
    """Return the qubit bound chain on r.

    Traceless A (a0 = 0): 0 <= r <= |a|^2|b|^2 <= ||A||^2 ||B||^2.
    Otherwise: c- ||A||^2||B||^2 <= r <= c+ ||A||^2||B||^2.
    """
    value = r_pauli(a, b)
    scale = a.norm_sq * b.norm_sq
    traceless = abs(a.a0) <= DEFAULT_TOLERANCES.traceless * \
        max(1.0, np.sqrt(a.norm_sq))
    slack = tol * max(1.0, scale)
    if traceless:
        lower, upper = 0.0, a.vector_norm_sq * b.vector_norm_sq
        chain = upper <= scale + slack
    else:
        lower, upper = C_MINUS * scale, C_PLUS * scale
        chain = True
    holds = chain and lower - slack <= value <= upper + slack
    return QubitBoundChain(value, lower, upper, bool(traceless), bool(holds))
