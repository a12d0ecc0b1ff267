"""GKLS generators, their spectra and the relaxation-rate constraints.

    L(rho) = -i [H, rho] + sum_k (L_k rho L_k^dag - 1/2 {L_k^dag L_k, rho})

Superoperators use column stacking, vec(X rho Y) = (Y^T (x) X) vec(rho).
The relaxation rates are Gamma_alpha = -Re lambda_alpha over the n^2 - 1
eigenvalues other than the structural zero.
"""

from __future__ import annotations
from dataclasses import dataclass
import json
import logging
import math
from typing import Any, NamedTuple

import numpy as np

from ..core.constants import C_PLUS, DEFAULT_TOLERANCES, MAX_KERNEL_DIM, \
    SQRT2, ConstantMode, Tolerances
from ..core.exception import ContractError, DimensionError, \
    InputFormatError, StructuralError
from ..core.linalg import eig_general, frobenius_norm, hermitian_defect
from ..core.matrix import ComplexMatrix
from ..core.matrix_io import matrix_from_json, matrix_to_json
from ..functional.bounds import require_levels
from ..functional.pauli import PauliBasis
from ..functional.rfunc import r_eval

logger = logging.getLogger(__name__)


class GklsGenerator:
    """A Hermitian Hamiltonian and traceless jump operators on n levels.

    Trace parts of the jumps are removed on construction; the Hamiltonian is
    left as given, since the compensating shift never enters the rates.
    """

    __slots__ = ("_h", "_jumps", "_name")

    def __init__(self, hamiltonian: ComplexMatrix, jumps=(),
                 name: str | None = None,
                 tolerances: Tolerances = DEFAULT_TOLERANCES):
        """Initialize the generator and enforce its invariants."""
        hamiltonian.require_square()
        n = require_levels(hamiltonian.rows)
        if n * n > MAX_KERNEL_DIM:
            raise DimensionError(f"{n} levels exceed the superoperator "
                                 f"limit of {MAX_KERNEL_DIM}.")
        defect = hermitian_defect(hamiltonian)
        if defect >= tolerances.hermitian * max(1.0,
                                                frobenius_norm(hamiltonian)):
            raise ContractError(f"Hamiltonian is not Hermitian "
                                f"(defect {defect:.3e}).")
        eye = ComplexMatrix.identity(n)
        cleaned = []
        for jump in jumps:
            hamiltonian.require_same_shape(jump)
            cleaned.append(jump - eye * (jump.trace() / n))
        self._h = hamiltonian
        self._jumps = tuple(cleaned)
        self._name = name

    @property
    def n(self) -> int:
        """Return the level count."""
        return self._h.rows

    @property
    def hamiltonian(self) -> ComplexMatrix:
        """Return H."""
        return self._h

    @property
    def jumps(self) -> tuple[ComplexMatrix, ...]:
        """Return the traceless jump operators."""
        return self._jumps

    @property
    def name(self) -> str:
        """Return the generator id."""
        return self._name if self._name is not None else "generator"

    def to_dict(self) -> dict:
        """Return the generator document {n, H, jumps}."""
        return {"n": self.n, "H": matrix_to_json(self._h),
                "jumps": [matrix_to_json(j) for j in self._jumps]}

    def to_json(self) -> str:
        """Return the generator document as a JSON string."""
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, doc: Any, source: str = "unk_source",
                  name: str | None = None) -> GklsGenerator:
        """Return the generator described by a parsed document."""
        if not isinstance(doc, dict):
            raise InputFormatError("Expected a generator object", source, "-")
        if "H" not in doc:
            raise InputFormatError("Missing Hamiltonian", source, "H")
        hamiltonian = matrix_from_json(doc["H"], source, "H")
        raw_jumps = doc.get("jumps", [])
        if not isinstance(raw_jumps, list):
            raise InputFormatError("'jumps' must be a list", source, "jumps")
        jumps = [matrix_from_json(j, source, f"jumps[{i}]")
                 for i, j in enumerate(raw_jumps)]
        if "n" in doc and doc["n"] != hamiltonian.rows:
            raise InputFormatError(f"'n' is {doc['n']!r} but H is "
                                   f"{hamiltonian.rows}x{hamiltonian.cols}",
                                   source, "n")
        for index, jump in enumerate(jumps):
            if jump.shape != hamiltonian.shape:
                raise InputFormatError("Jump shape differs from H", source,
                                       f"jumps[{index}]")
        return cls(hamiltonian, jumps, name=name)

    @classmethod
    def from_json(cls, text: str, source: str = "buffer") -> GklsGenerator:
        """Return the generator stored in a JSON string."""
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as err:
            raise InputFormatError(f"Malformed JSON at line {err.lineno}",
                                   source, "-") from err
        return cls.from_dict(doc, source)

    def __repr__(self) -> str:
        """Return a string representation of this object."""
        return f"GklsGenerator(n={self.n}, jumps={len(self._jumps)})"

    # --------========[ End of class ]========-------- #


def amplitude_damping(gamma: float = 1.0) -> GklsGenerator:
    """Return the qubit decay generator H = 0, L = sqrt(gamma) |0><1|."""
    return GklsGenerator(ComplexMatrix.zeros(2),
                         [ComplexMatrix.unit(2, 0, 1) * math.sqrt(gamma)],
                         name="amplitude_damping")


def dephasing(gamma: float = 1.0) -> GklsGenerator:
    """Return the qubit dephasing generator H = 0, L = sqrt(gamma/2) sigma_3."""
    return GklsGenerator(ComplexMatrix.zeros(2),
                         [PauliBasis().sigma(3) * math.sqrt(gamma / 2.0)],
                         name="dephasing")


# -----[ Superoperator and spectrum ]---------------------------------

def build_superoperator(gen: GklsGenerator) -> ComplexMatrix:
    """Return the n^2 x n^2 matrix of the generator."""
    n = gen.n
    eye = np.eye(n)
    h = gen.hamiltonian.array
    sup = -1j * (np.kron(eye, h) - np.kron(h.T, eye))
    for jump in gen.jumps:
        x = jump.array
        xdx = x.conj().T @ x
        sup = sup + np.kron(x.conj(), x) - 0.5 * np.kron(eye, xdx) \
            - 0.5 * np.kron(xdx.T, eye)
    # Trace preservation: vec(I) is a left null vector.
    leak = float(np.linalg.norm(np.eye(n).reshape(-1, order="F") @ sup))
    if leak > DEFAULT_TOLERANCES.traceless * max(1.0, np.linalg.norm(sup)):
        logger.error("superoperator is not trace preserving (%.3e)", leak)
        raise StructuralError(f"Superoperator leaks trace ({leak:.3e}).")
    return ComplexMatrix(sup)


@dataclass(frozen=True)
class SpectralResult:
    """Eigenvalues, unit eigenmatrices and relaxation rates of a generator."""

    eigenvalues: np.ndarray
    eigenmatrices: tuple[ComplexMatrix, ...]
    residuals: np.ndarray
    defective_flags: tuple[bool, ...]
    zero_index: int
    scale: float

    def rate_of(self, index: int) -> float:
        """Return -Re lambda_index."""
        return float(-self.eigenvalues[index].real)

    @property
    def nonzero_indices(self) -> tuple[int, ...]:
        """Return every index except the structural zero."""
        return tuple(i for i in range(len(self.eigenvalues))
                     if i != self.zero_index)

    @property
    def rates(self) -> tuple[float, ...]:
        """Return the n^2 - 1 relaxation rates, descending."""
        return tuple(sorted((self.rate_of(i) for i in self.nonzero_indices),
                            reverse=True))

    @property
    def min_rate(self) -> float:
        """Return the smallest rate."""
        return min(self.rates) if self.rates else 0.0

    def is_zero(self, index: int,
                tol: float = DEFAULT_TOLERANCES.zero_eigenvalue) -> bool:
        """Return True if lambda_index vanishes within tol * scale."""
        return abs(self.eigenvalues[index]) < tol * self.scale

    def conjugation_defect(self) -> float:
        """Return how far the spectrum is from closed under conjugation."""
        values = self.eigenvalues
        conj = values.conj()
        return float(max(np.min(np.abs(conj - v)) for v in values))

    def max_eigenmatrix_trace(self) -> float:
        """Return max |tr u| over non-defective, nonzero eigenpairs."""
        traces = [abs(self.eigenmatrices[i].trace())
                  for i in self.nonzero_indices
                  if not self.defective_flags[i] and not self.is_zero(i)]
        return max(traces, default=0.0)

    def to_dict(self) -> dict:
        """Return a JSON-ready summary."""
        return {"eigenvalues": [[float(v.real), float(v.imag)]
                                for v in self.eigenvalues],
                "rates": list(self.rates), "zero_index": self.zero_index,
                "defective": list(self.defective_flags),
                "conjugation_defect": self.conjugation_defect(),
                "max_eigenmatrix_trace": self.max_eigenmatrix_trace()}


def spectrum(gen: GklsGenerator,
             tolerances: Tolerances = DEFAULT_TOLERANCES) -> SpectralResult:
    """Return the spectral data of the generator."""
    sup = build_superoperator(gen)
    eig = eig_general(sup, tolerances.eig_general_residual)
    scale = max(1.0, frobenius_norm(sup))
    moduli = np.abs(eig.values)
    zero_index = int(np.argmin(moduli))
    if moduli[zero_index] >= tolerances.zero_eigenvalue * scale:
        logger.error("no zero eigenvalue: smallest modulus %.3e",
                     moduli[zero_index])
        raise StructuralError(f"Smallest eigenvalue modulus "
                              f"{moduli[zero_index]:.3e} exceeds the zero "
                              f"threshold.")
    n = gen.n
    mats = tuple(ComplexMatrix.from_vec(eig.vector(i), n)
                 for i in range(len(eig)))
    return SpectralResult(eigenvalues=eig.values, eigenmatrices=mats,
                          residuals=eig.residuals,
                          defective_flags=eig.defective,
                          zero_index=zero_index, scale=scale)


# -----[ Checks ]-----------------------------------------------------

class RelaxationEntry(NamedTuple):
    """Gamma_alpha against sum_k r(u_alpha, L_k) for one eigenpair."""

    index: int
    eigenvalue: complex
    rate: float
    r_sum: float | None
    residual: float
    skipped: bool
    holds: bool

    def to_dict(self) -> dict:
        """Return a JSON-ready dictionary."""
        return {"index": self.index,
                "eigenvalue": [self.eigenvalue.real, self.eigenvalue.imag],
                "rate": self.rate, "r_sum": self.r_sum,
                "residual": self.residual, "skipped": self.skipped,
                "holds": self.holds}


def relaxation_identity_check(gen: GklsGenerator,
                              spectral: SpectralResult | None = None,
                              tolerances: Tolerances = DEFAULT_TOLERANCES
                              ) -> list[RelaxationEntry]:
    """Check Gamma_alpha = sum_k r(u_alpha, L_k) on every eigenpair.

    The structural zero and other vanishing eigenvalues are not listed.
    Defective pairs are listed as skipped.
    """
    spectral = spectral if spectral is not None else spectrum(gen)
    entries = []
    for index in spectral.nonzero_indices:
        if spectral.is_zero(index, tolerances.zero_eigenvalue):
            continue
        value = complex(spectral.eigenvalues[index])
        rate = spectral.rate_of(index)
        residual = float(spectral.residuals[index])
        if spectral.defective_flags[index]:
            entries.append(RelaxationEntry(index, value, rate, None,
                                           residual, True, True))
            continue
        u = spectral.eigenmatrices[index]
        total = sum((r_eval(u, jump) for jump in gen.jumps), 0.0)
        holds = abs(rate - total) < tolerances.relaxation_identity * \
            max(1.0, rate)
        entries.append(RelaxationEntry(index, value, rate, total, residual,
                                       False, bool(holds)))
    return entries


class SumRule(NamedTuple):
    """sum_alpha Gamma_alpha against n sum_k ||L_k||^2."""

    lhs: float
    rhs: float

    @property
    def holds(self) -> bool:
        """Return True if both sides agree within 1e-8 max(1, rhs)."""
        return abs(self.lhs - self.rhs) < \
            DEFAULT_TOLERANCES.sum_rule * max(1.0, self.rhs)


def sum_rule_check(gen: GklsGenerator,
                   spectral: SpectralResult | None = None) -> SumRule:
    """Return (sum of rates, n times the total squared jump norm)."""
    spectral = spectral if spectral is not None else spectrum(gen)
    rhs = gen.n * sum(frobenius_norm(j) ** 2 for j in gen.jumps)
    return SumRule(float(sum(spectral.rates)), float(rhs))


def bound_constant(n: int, mode=ConstantMode.TRACELESS) -> float:
    """Return the relaxation-rate constant of 'mode' for n levels."""
    require_levels(n)
    mode = ConstantMode(mode)
    if mode is ConstantMode.TRACELESS:
        return (1.0 + math.sqrt(2.0 * (1.0 - 1.0 / n))) / (2.0 * n)
    if mode is ConstantMode.GENERAL:
        return C_PLUS / n
    return SQRT2 / n


@dataclass(frozen=True)
class AuditRecord:
    """One generator's relaxation-rate constraint audit."""

    generator_id: str
    n: int
    mode: ConstantMode
    rates: tuple[float, ...]
    sum_rates: float
    max_rate: float
    bound_constant: float
    margin: float
    passed: bool

    def to_dict(self) -> dict:
        """Return a JSON-ready dictionary."""
        return {"generator_id": self.generator_id, "n": self.n,
                "mode": str(self.mode), "rates": list(self.rates),
                "sum_rates": self.sum_rates, "max_rate": self.max_rate,
                "bound_constant": self.bound_constant,
                "margin": self.margin, "pass": self.passed}

    def csv_row(self) -> tuple:
        """Return the row for the audit CSV columns."""
        return (self.generator_id, self.n, repr(self.sum_rates),
                repr(self.max_rate), repr(self.bound_constant),
                repr(self.margin), int(self.passed))


def constraint_audit(gen: GklsGenerator,
                     constant_mode=ConstantMode.TRACELESS,
                     spectral: SpectralResult | None = None,
                     tolerances: Tolerances = DEFAULT_TOLERANCES
                     ) -> AuditRecord:
    """Audit max Gamma <= c(n) sum Gamma for the generator.

    The record passes when the margin c(n) sum Gamma - max Gamma is at least
    -1e-9 max(1, sum Gamma).
    """
    spectral = spectral if spectral is not None else spectrum(gen)
    mode = ConstantMode(constant_mode)
    rates = spectral.rates
    total = float(sum(rates))
    top = max(rates) if rates else 0.0
    constant = bound_constant(gen.n, mode)
    margin = constant * total - top
    passed = margin >= -tolerances.rate * max(1.0, total)
    return AuditRecord(gen.name, gen.n, mode, rates, total, top, constant,
                       margin, bool(passed))


def rate_ratio(spectral: SpectralResult,
               tol: float = DEFAULT_TOLERANCES.rate) -> float | None:
    """Return max Gamma / sum Gamma, or None when every rate vanishes."""
    rates = spectral.rates
    total = sum(rates)
    if total <= tol * spectral.scale:
        return None
    return max(rates) / total


class RelaxationTimes(NamedTuple):
    """Qubit rate triangle and longitudinal/transverse times."""

    rates: tuple[float, float, float]
    triangle_holds: bool
    coincident: bool
    t_longitudinal: float | None
    t_transverse: float | None
    relation_holds: bool | None

    def to_dict(self) -> dict:
        """Return a JSON-ready dictionary."""
        return self._asdict() | {"rates": list(self.rates)}


def relaxation_times(gen: GklsGenerator,
                     spectral: SpectralResult | None = None,
                     tolerances: Tolerances = DEFAULT_TOLERANCES
                     ) -> RelaxationTimes:
    """Return the qubit rate triangle and the T_L / T_T relation.

    Every rate is at most the sum of the other two. When two rates coincide
    the third is longitudinal, T_L = 1/Gamma_L, the pair transverse,
    T_T = 1/Gamma_T, and the triangle reads T_T <= 2 T_L.
    """
    if gen.n != 2:
        raise ContractError("Relaxation times are defined for a qubit.")
    spectral = spectral if spectral is not None else spectrum(gen)
    rates = spectral.rates
    slack = tolerances.rate * max(1.0, sum(rates))
    triangle = all(rates[i] <= rates[(i + 1) % 3] + rates[(i + 2) % 3]
                   + slack for i in range(3))
    tie = tolerances.rate * spectral.scale
    longitudinal = transverse = None
    if abs(rates[1] - rates[2]) <= tie:
        longitudinal, transverse = rates[0], rates[1]
    elif abs(rates[0] - rates[1]) <= tie:
        longitudinal, transverse = rates[2], rates[0]
    if longitudinal is None:
        return RelaxationTimes(rates, triangle, False, None, None, None)

    def period(rate: float) -> float:
        return 1.0 / rate if rate > slack else math.inf

    t_long, t_trans = period(longitudinal), period(transverse)
    relation = longitudinal <= 2.0 * transverse + slack
    return RelaxationTimes(rates, triangle, True, t_long, t_trans,
                           bool(relation))
