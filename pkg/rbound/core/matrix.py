"""An immutable dense complex matrix value.

ComplexMatrix is the carrier for every operator the package handles: the
pair (A, B) fed to the r-functional, Hamiltonians, jump operators and
eigenmatrices of a generator. The entries live in a read-only numpy array of
dtype complex128; every operation returns a new matrix.
"""

from __future__ import annotations
import numbers

import numpy as np

from .exception import DimensionError, NonFiniteError


class ComplexMatrix:
    """Dense rows x cols complex matrix, immutable after construction."""

    __slots__ = ('_data',)

    def __init__(self, entries, rows: int | None = None,
                 cols: int | None = None):
        """Initialize the matrix.

        'entries' is either a nested (2-D) sequence/array or, when 'rows' and
        'cols' are given, a flat row-major sequence of rows * cols numbers.
        """
        data = np.array(entries, dtype=np.complex128)
        if rows is not None or cols is not None:
            if rows is None or cols is None:
                raise DimensionError("Both 'rows' and 'cols' are required.")
            if data.size != rows * cols:
                raise DimensionError(
                    f"{data.size} entries cannot fill a {rows}x{cols} matrix.")
            data = data.reshape(rows, cols)
        if data.ndim != 2 or data.shape[0] < 1 or data.shape[1] < 1:
            raise DimensionError(
                f"A matrix needs a 2-D non-empty shape, got {data.shape}.")
        if not np.all(np.isfinite(data)):
            raise NonFiniteError()
        data.setflags(write=False)
        self._data = data

    @classmethod
    def _wrap(cls, array: np.ndarray) -> ComplexMatrix:
        """Wrap an array this module just produced."""
        return cls(array)

    # -----[ Constructors ]-------------------------------------------

    @classmethod
    def identity(cls, n: int) -> ComplexMatrix:
        """Return the n x n identity."""
        return cls(np.eye(n))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> ComplexMatrix:
        """Return a zero matrix."""
        return cls(np.zeros((rows, rows if cols is None else cols)))

    @classmethod
    def diag(cls, values) -> ComplexMatrix:
        """Return the diagonal matrix with the given diagonal."""
        return cls(np.diag(np.asarray(values, dtype=np.complex128)))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> ComplexMatrix:
        """Return the matrix unit e_i e_j^dagger (zero-based indices)."""
        data = np.zeros((n, n), dtype=np.complex128)
        data[i, j] = 1.0
        return cls(data)

    @classmethod
    def from_vec(cls, vector, n: int) -> ComplexMatrix:
        """Undo the column-stacking vectorization of an n x n matrix."""
        return cls(np.asarray(vector, dtype=np.complex128)
                   .reshape((n, n), order="F"))

    # -----[ Properties ]---------------------------------------------

    @property
    def array(self) -> np.ndarray:
        """Return the read-only entry array."""
        return self._data

    @property
    def rows(self) -> int:
        """Return the row count."""
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        """Return the column count."""
        return self._data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        """Return (rows, cols)."""
        return self._data.shape

    @property
    def n(self) -> int:
        """Return the dimension of a square matrix."""
        self.require_square()
        return self._data.shape[0]

    @property
    def entries(self) -> tuple[complex, ...]:
        """Return the entries in row-major order."""
        return tuple(complex(x) for x in self._data.ravel(order="C"))

    def is_square(self) -> bool:
        """Return True if rows == cols."""
        return self._data.shape[0] == self._data.shape[1]

    def require_square(self) -> None:
        """Raise DimensionError unless the matrix is square."""
        if not self.is_square():
            raise DimensionError(f"Expected a square matrix, got {self.shape}.")

    def require_same_shape(self, other: ComplexMatrix) -> None:
        """Raise DimensionError unless other has the same shape."""
        if self.shape != other.shape:
            raise DimensionError(
                f"Shape mismatch: {self.shape} vs {other.shape}.")

    # -----[ Algebra ]------------------------------------------------

    @property
    def dag(self) -> ComplexMatrix:
        """Return the Hermitian conjugate."""
        return self._wrap(self._data.conj().T)

    @property
    def T(self) -> ComplexMatrix:  # pylint: disable=invalid-name
        """Return the transpose."""
        return self._wrap(self._data.T)

    def conj(self) -> ComplexMatrix:
        """Return the entrywise complex conjugate."""
        return self._wrap(self._data.conj())

    def trace(self) -> complex:
        """Return the trace of a square matrix."""
        self.require_square()
        return complex(np.trace(self._data))

    def vec(self) -> np.ndarray:
        """Return the column-stacking vectorization (a new array)."""
        return self._data.reshape(-1, order="F").copy()

    def __matmul__(self, other: ComplexMatrix) -> ComplexMatrix:
        """Return the matrix product."""
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(
                f"Cannot multiply {self.shape} by {other.shape}.")
        return self._wrap(self._data @ other.array)

    def __add__(self, other: ComplexMatrix) -> ComplexMatrix:
        """Return the sum."""
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        self.require_same_shape(other)
        return self._wrap(self._data + other.array)

    def __sub__(self, other: ComplexMatrix) -> ComplexMatrix:
        """Return the difference."""
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        self.require_same_shape(other)
        return self._wrap(self._data - other.array)

    def __mul__(self, scalar) -> ComplexMatrix:
        """Return the product with a scalar."""
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return self._wrap(self._data * complex(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> ComplexMatrix:
        """Return the quotient by a scalar."""
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return self._wrap(self._data / complex(scalar))

    def __neg__(self) -> ComplexMatrix:
        """Return the negated matrix."""
        return self._wrap(-self._data)

    def __array__(self, dtype=None, copy=None):
        """Expose the entries to numpy."""
        if dtype is None and not copy:
            return self._data
        return np.array(self._data, dtype=dtype, copy=True)

    # -----[ Comparisons ]--------------------------------------------

    def allclose(self, other: ComplexMatrix, tol: float = 1e-12) -> bool:
        """Return True if max |self - other| <= tol * max(1, max|self|)."""
        if self.shape != other.shape:
            return False
        scale = max(1.0, float(np.max(np.abs(self._data))))
        return bool(np.max(np.abs(self._data - other.array)) <= tol * scale)

    def __repr__(self) -> str:
        """Return the representation of how this object was instantiated."""
        return f"ComplexMatrix({self._data.tolist()!r})"

    def __str__(self) -> str:
        """Return a friendly string of the matrix."""
        return f"ComplexMatrix {self.rows}x{self.cols}\n{self._data}"

    # --------========[ End of class ]========-------- #


def ginibre(rng: np.random.Generator, n: int) -> ComplexMatrix:
    """Return an n x n complex Ginibre matrix (unit-variance entries)."""
    real = rng.standard_normal((n, n))
    imag = rng.standard_normal((n, n))
    return ComplexMatrix((real + 1j * imag) / np.sqrt(2.0))
