"""Dense complex linear algebra for small matrices.

Norms, products and decompositions used by the r-functional, the optimizer
and the generator spectra. Eigenproblems go to LAPACK through numpy:
``eigh`` (Householder tridiagonalization followed by implicit QL/QR) for the
Hermitian forms of the optimizer and ``eig`` (Hessenberg reduction followed by
shifted complex QR) for non-Hermitian superoperators. The SVD is a one-sided
Jacobi iteration on the columns.
"""

from __future__ import annotations
from dataclasses import dataclass
import logging

import numpy as np

from .constants import DEFAULT_TOLERANCES, MAX_KERNEL_DIM
from .exception import ContractError, ConvergenceError, DimensionError
from .matrix import ComplexMatrix, ginibre

logger = logging.getLogger(__name__)

SVD_MAX_SWEEPS = 60
# Two eigenpairs closer than this (relative to scale) count as one cluster
# when looking for defective structure.
CLUSTER_TOL = 1e-6
PARALLEL_TOL = 1e-6


@dataclass(frozen=True)
class EigenResult:
    """Eigenvalues, unit eigenvectors (columns) and per-pair residuals."""

    values: np.ndarray
    vectors: np.ndarray
    residuals: np.ndarray
    tolerance: float
    defective: tuple[bool, ...]

    def __len__(self) -> int:
        """Return the number of eigenpairs."""
        return len(self.values)

    def vector(self, index: int) -> np.ndarray:
        """Return eigenvector 'index' as a 1-D array."""
        return self.vectors[:, index]

    def __repr__(self) -> str:
        """Return a string representation of this object."""
        return (f"EigenResult(dim={len(self.values)}, "
                f"max_residual={float(np.max(self.residuals)):.3e}, "
                f"defective={sum(self.defective)})")


class SvdResult(tuple):
    """(singular_values, left, right) with A = left diag(s) right^dagger."""

    __slots__ = ()

    def __new__(cls, singular_values, left, right):
        """Create the result tuple."""
        return super().__new__(cls, (singular_values, left, right))

    @property
    def singular_values(self) -> np.ndarray:
        """Return the singular values, descending."""
        return self[0]

    @property
    def left(self) -> ComplexMatrix:
        """Return the left unitary factor."""
        return self[1]

    @property
    def right(self) -> ComplexMatrix:
        """Return the right unitary factor."""
        return self[2]


# -----[ Products and norms ]-----------------------------------------

def hs_inner(a: ComplexMatrix, b: ComplexMatrix) -> complex:
    """Return the Hilbert-Schmidt inner product tr(A^dagger B)."""
    a.require_same_shape(b)
    return complex(np.vdot(a.array, b.array))


def frobenius_norm(a: ComplexMatrix) -> float:
    """Return sqrt(tr(A^dagger A))."""
    return float(np.linalg.norm(a.array))


def commutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Return AB - BA."""
    _require_square_pair(a, b)
    return ComplexMatrix(a.array @ b.array - b.array @ a.array)


def anticommutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Return AB + BA."""
    _require_square_pair(a, b)
    return ComplexMatrix(a.array @ b.array + b.array @ a.array)


def cartesian_split(a: ComplexMatrix) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Return the Hermitian parts (A_R, A_I) with A = A_R + i A_I."""
    a.require_square()
    data = a.array
    adj = data.conj().T
    return ComplexMatrix((data + adj) / 2.0), \
        ComplexMatrix((data - adj) / 2.0j)


def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Return the Kronecker product A (x) B."""
    return ComplexMatrix(np.kron(a.array, b.array))


# -----[ Predicates ]-------------------------------------------------

def hermitian_defect(m: ComplexMatrix) -> float:
    """Return ||M - M^dagger||."""
    m.require_square()
    return float(np.linalg.norm(m.array - m.array.conj().T))


def is_hermitian(m: ComplexMatrix,
                 tol: float = DEFAULT_TOLERANCES.hermitian) -> bool:
    """Return True if ||M - M^dagger|| <= tol * max(1, ||M||)."""
    return hermitian_defect(m) <= tol * max(1.0, frobenius_norm(m))


def is_unitary(u: ComplexMatrix,
               tol: float = DEFAULT_TOLERANCES.unitary) -> bool:
    """Return True if ||U^dagger U - I|| <= tol * max(1, n)."""
    u.require_square()
    gram = u.array.conj().T @ u.array
    defect = float(np.linalg.norm(gram - np.eye(u.rows)))
    return defect <= tol * max(1, u.rows)


def is_normal(b: ComplexMatrix,
              tol: float = DEFAULT_TOLERANCES.normality) -> bool:
    """Return True if ||[B^dagger, B]|| <= tol * ||B||^2."""
    b.require_square()
    data = b.array
    adj = data.conj().T
    defect = float(np.linalg.norm(adj @ data - data @ adj))
    return defect <= tol * max(frobenius_norm(b) ** 2, np.finfo(float).tiny)


def random_unitary(rng: np.random.Generator, n: int) -> ComplexMatrix:
    """Return a Haar-distributed unitary from the QR of a Ginibre matrix."""
    q, r = np.linalg.qr(ginibre(rng, n).array)
    diag = np.diag(r)
    phases = np.where(np.abs(diag) > 0, diag / np.abs(diag), 1.0)
    return ComplexMatrix(q * phases)


# -----[ Decompositions ]---------------------------------------------

def svd(a: ComplexMatrix) -> SvdResult:
    """Return the singular value decomposition by one-sided Jacobi.

    The columns of W = A V are orthogonalized pairwise by complex Jacobi
    rotations applied to W and V alike. The singular values are the column
    norms of W; left vectors are the normalized columns, completed to a
    unitary basis when A is rank deficient.
    """
    a.require_square()
    n = a.rows
    _require_kernel_dim(n)
    work = np.array(a.array, dtype=np.complex128)
    right = np.eye(n, dtype=np.complex128)
    eps = np.finfo(float).eps
    rotated = True
    sweeps = 0
    while rotated:
        if sweeps >= SVD_MAX_SWEEPS:
            raise ConvergenceError("One-sided Jacobi SVD did not converge",
                                   residual=_svd_off_diagonal(work))
        sweeps += 1
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = float(np.vdot(work[:, p], work[:, p]).real)
                beta = float(np.vdot(work[:, q], work[:, q]).real)
                gamma = complex(np.vdot(work[:, p], work[:, q]))
                mag = abs(gamma)
                if mag <= n * eps * np.sqrt(alpha * beta) or mag == 0.0:
                    continue
                rotated = True
                phase = gamma / mag
                work[:, q] *= phase.conjugate()
                right[:, q] *= phase.conjugate()
                zeta = (beta - alpha) / (2.0 * mag)
                sign = 1.0 if zeta >= 0 else -1.0
                t = sign / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = c * t
                for mat in (work, right):
                    col_p = mat[:, p].copy()
                    col_q = mat[:, q].copy()
                    mat[:, p] = c * col_p - s * col_q
                    mat[:, q] = s * col_p + c * col_q

    sigma = np.linalg.norm(work, axis=0)
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    work = work[:, order]
    right = right[:, order]

    cutoff = n * eps * max(float(sigma[0]), np.finfo(float).tiny)
    rank = int(np.sum(sigma > cutoff))
    left = np.zeros((n, n), dtype=np.complex128)
    left[:, :rank] = work[:, :rank] / sigma[:rank]
    if rank < n:
        basis, _ = np.linalg.qr(np.hstack([left[:, :rank], np.eye(n)]))
        left[:, rank:] = basis[:, rank:n]
        sigma[rank:] = 0.0

    recon = (left * sigma) @ right.conj().T
    residual = float(np.linalg.norm(recon - a.array))
    limit = DEFAULT_TOLERANCES.svd_residual * max(1.0, frobenius_norm(a))
    if residual > limit:
        raise ConvergenceError("SVD reconstruction exceeds tolerance",
                               residual=residual)
    sigma.setflags(write=False)
    return SvdResult(sigma, ComplexMatrix(left), ComplexMatrix(right))


def eig_hermitian(m: ComplexMatrix,
                  tol: float = DEFAULT_TOLERANCES.eig_hermitian_residual
                  ) -> EigenResult:
    """Return the ascending spectrum and orthonormal eigenvectors of M."""
    m.require_square()
    _require_kernel_dim(m.rows)
    scale = max(1.0, frobenius_norm(m))
    if hermitian_defect(m) > DEFAULT_TOLERANCES.hermitian * scale:
        raise ContractError("eig_hermitian requires a Hermitian matrix "
                            f"(defect {hermitian_defect(m):.3e}).")
    data = m.array
    try:
        values, vectors = np.linalg.eigh(data)
    except np.linalg.LinAlgError as err:
        raise ConvergenceError(f"Hermitian eigensolver failed: {err}") \
            from err
    residuals = np.linalg.norm(data @ vectors - vectors * values, axis=0)
    limit = tol * scale
    worst = float(np.max(residuals))
    if worst > limit:
        raise ConvergenceError("Hermitian eigenpair residual exceeds "
                               "tolerance", residual=worst)
    return _freeze(values.astype(np.float64), vectors, residuals, limit,
                   tuple(False for _ in values))


def eig_general(m: ComplexMatrix,
                tol: float = DEFAULT_TOLERANCES.eig_general_residual
                ) -> EigenResult:
    """Return every eigenvalue of M with unit eigenvectors and residuals.

    Eigenvalues are sorted by decreasing real part, then increasing
    imaginary part. Pairs whose residual exceeds tol * max(1, ||M||), or
    whose eigenvector is numerically parallel to the vector of a clustered
    eigenvalue (the signature of a Jordan block), are flagged defective;
    they are reported, not rejected.
    """
    m.require_square()
    _require_kernel_dim(m.rows)
    data = m.array
    scale = max(1.0, frobenius_norm(m))
    try:
        values, vectors = np.linalg.eig(data)
    except np.linalg.LinAlgError as err:
        raise ConvergenceError(f"General eigensolver failed: {err}") from err
    order = np.lexsort((values.imag, -values.real))
    values = values[order]
    vectors = vectors[:, order]
    vectors = vectors / np.linalg.norm(vectors, axis=0)
    residuals = np.linalg.norm(data @ vectors - vectors * values, axis=0)
    limit = tol * scale

    flags = [bool(res > limit) for res in residuals]
    dim = len(values)
    for i in range(dim):
        for j in range(i + 1, dim):
            if abs(values[i] - values[j]) > CLUSTER_TOL * scale:
                continue
            overlap = abs(np.vdot(vectors[:, i], vectors[:, j]))
            if overlap > 1.0 - PARALLEL_TOL:
                flags[i] = flags[j] = True
    if any(flags):
        logger.debug("eig_general: %d of %d eigenpairs flagged defective",
                     sum(flags), dim)
    return _freeze(values, vectors, residuals, limit, tuple(flags))


# -----[ Private helpers ]--------------------------------------------

def _require_square_pair(a: ComplexMatrix, b: ComplexMatrix) -> None:
    a.require_square()
    a.require_same_shape(b)


def _require_kernel_dim(dim: int) -> None:
    if dim > MAX_KERNEL_DIM:
        raise DimensionError(
            f"Dimension {dim} exceeds the dense kernel limit "
            f"{MAX_KERNEL_DIM}.")


def _svd_off_diagonal(work: np.ndarray) -> float:
    gram = work.conj().T @ work
    return float(np.linalg.norm(gram - np.diag(np.diag(gram))))


def _freeze(values, vectors, residuals, tolerance, flags) -> EigenResult:
    for arr in (values, vectors, residuals):
        arr.setflags(write=False)
    return EigenResult(values=values, vectors=vectors, residuals=residuals,
                       tolerance=float(tolerance), defective=flags)
