"""Closed-form matrix pairs that attain the sharp bounds.

Every pair uses B with a single unit entry (or its qubit analogue); the ratio
r / (||A||^2 ||B||^2) is scale free, so no rescaling is applied.
"""

from __future__ import annotations
from dataclasses import dataclass
import math

import numpy as np

from ..core.constants import C_MINUS, C_PLUS, SQRT2, Sign
from ..core.exception import ContractError
from ..core.linalg import frobenius_norm
from ..core.matrix import ComplexMatrix
from ..core.matrix_io import matrix_to_json
from .bounds import best_constants, require_levels
from .pauli import PauliVector, pauli_reconstruct
from .rfunc import ratio_of, r_self


@dataclass(frozen=True)
class Witness:
    """A witness pair with the constant it is built to attain."""

    kind: str
    n: int
    sign: Sign
    traceless: bool
    a: ComplexMatrix
    b: ComplexMatrix
    target: float

    @property
    def achieved(self) -> float:
        """Return the ratio the pair actually achieves."""
        if self.kind == "self":
            return r_self(self.a) / frobenius_norm(self.a) ** 4
        return ratio_of(self.a, self.b)

    def to_dict(self) -> dict:
        """Return the pair as matrix documents plus a metadata block."""
        return {
            "A": matrix_to_json(self.a),
            "B": matrix_to_json(self.b),
            "metadata": {"kind": self.kind, "n": self.n,
                         "sign": str(self.sign), "traceless": self.traceless,
                         "target_constant": self.target,
                         "achieved_ratio": self.achieved},
        }


def _sign(sign) -> Sign:
    try:
        return Sign(sign)
    except ValueError as err:
        raise ContractError(f"Unknown sign {sign!r}.") from err


def witness_general(n: int, sign=Sign.UPPER
                    ) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Return (A, B) with A = diag(1, -2c, 0, ...) and b_12 = 1.

    The ratio is c = c+ for the upper and c- for the lower sign, for any n.
    """
    require_levels(n)
    c = C_PLUS if _sign(sign) is Sign.UPPER else C_MINUS
    diag = np.zeros(n)
    diag[0], diag[1] = 1.0, -2.0 * c
    return ComplexMatrix.diag(diag), ComplexMatrix.unit(n, 0, 1)


def witness_traceless(n: int, sign=Sign.UPPER
                      ) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Return a real diagonal traceless A and B attaining the tr A = 0 bound.

    For a qubit A = diag(1, -1): B = e1 e2^dag gives ratio 1 and the
    diagonal B = e1 e1^dag gives ratio 0. For n >= 3, with
    s = c (n-1)/(n-2), the upper pair is a1 = sqrt(s), a2 = -sqrt(s - 1) and
    the lower pair a1 = sqrt(-s), a2 = sqrt(1 - s); the remaining n - 2
    entries share what is left of the trace, and b_21 = 1.
    """
    require_levels(n)
    upper = _sign(sign) is Sign.UPPER
    if n == 2:
        a = ComplexMatrix.diag([1.0, -1.0])
        b = ComplexMatrix.unit(2, 0, 1) if upper else ComplexMatrix.unit(2, 0, 0)
        return a, b
    consts = best_constants(n, True)
    c = consts.c_plus if upper else consts.c_minus
    s = c + c / (n - 2)
    if upper:
        a1, a2 = math.sqrt(s), -math.sqrt(s - 1.0)
    else:
        a1, a2 = math.sqrt(-s), math.sqrt(1.0 - s)
    rest = -(a1 + a2) / (n - 2)
    diag = np.full(n, rest)
    diag[0], diag[1] = a1, a2
    return ComplexMatrix.diag(diag), ComplexMatrix.unit(n, 1, 0)


def witness_self(n: int) -> ComplexMatrix:
    """Return A = e1 e2^dag, with r(A, A) = ||A||^4 / 2."""
    require_levels(n)
    return ComplexMatrix.unit(n, 0, 1)


def qubit_vectors(sign=Sign.UPPER, left_handed: bool = True
                  ) -> tuple[PauliVector, PauliVector]:
    """Return the Pauli vectors of the qubit witness.

    a = (0, 0, -1), b = b_R + i b_I with b_R = (1, 0, 0) and b_I = (0, +-1, 0),
    b0 = 0. The triple (a, b_R, b_I) is left handed, a.(b_R x b_I) = -1,
    unless 'left_handed' is False. a0 = sqrt2 - 1 for the upper sign and
    a0 = -(sqrt2 + 1) for the lower one.
    """
    a0 = SQRT2 - 1.0 if _sign(sign) is Sign.UPPER else -(SQRT2 + 1.0)
    b_imag = 1.0 if left_handed else -1.0
    a = PauliVector(complex(a0), (0j, 0j, complex(-1.0)))
    b = PauliVector(0j, (complex(1.0), complex(0.0, b_imag), 0j))
    return a, b


def witness_qubit(sign=Sign.UPPER, left_handed: bool = True
                  ) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Return the reconstructed qubit witness pair (A, B)."""
    a, b = qubit_vectors(sign, left_handed)
    return pauli_reconstruct(a), pauli_reconstruct(b)


def build_witness(kind: str, n: int = 2, sign=Sign.UPPER) -> Witness:
    """Return the witness of 'kind' (general, traceless, self or qubit)."""
    sign = _sign(sign)
    if kind == "general":
        a, b = witness_general(n, sign)
        consts = best_constants(n, False)
        traceless = False
    elif kind == "traceless":
        a, b = witness_traceless(n, sign)
        consts = best_constants(n, True)
        traceless = True
    elif kind == "self":
        a = witness_self(n)
        return Witness(kind, n, Sign.UPPER, False, a, a, 0.5)
    elif kind == "qubit":
        a, b = witness_qubit(sign)
        n = 2
        consts = best_constants(2, False)
        traceless = False
    else:
        raise ContractError(f"Unknown witness kind {kind!r}.")
    target = consts.c_plus if sign is Sign.UPPER else consts.c_minus
    return Witness(kind, n, sign, traceless, a, b, target)


WITNESS_KINDS = ("general", "traceless", "self", "qubit")
