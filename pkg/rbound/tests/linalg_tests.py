"""Dense kernel unit tests."""

import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from ..core.constants import DEFAULT_TOLERANCES
from ..core.exception import ContractError, DimensionError, NonFiniteError
from ..core.linalg import anticommutator, cartesian_split, commutator, \
    eig_general, eig_hermitian, frobenius_norm, hs_inner, is_hermitian, \
    is_normal, is_unitary, kron, random_unitary, svd
from ..core.matrix import ComplexMatrix, ginibre


class MatrixUnitTests(unittest.TestCase):
    """ComplexMatrix construction and algebra."""

    def test_flat_entries_are_row_major(self):
        """Test a flat entry list fills rows first."""
        m = ComplexMatrix([1, 2, 3, 4], rows=2, cols=2)
        self.assertEqual(m.entries, (1, 2, 3, 4))
        self.assertEqual(complex(m.array[0, 1]), 2)

    def test_wrong_entry_count(self):
        """Test a flat list that cannot fill the shape is rejected."""
        with self.assertRaises(DimensionError):
            ComplexMatrix([1, 2, 3], rows=2, cols=2)

    def test_non_finite_entries(self):
        """Test NaN and Inf entries are rejected."""
        with self.assertRaises(NonFiniteError):
            ComplexMatrix([[1, float("nan")], [0, 1]])
        with self.assertRaises(NonFiniteError):
            ComplexMatrix([[1, 0], [complex(0, float("inf")), 1]])

    def test_immutable(self):
        """Test the entry array cannot be written."""
        m = ComplexMatrix.identity(2)
        with self.assertRaises(ValueError):
            m.array[0, 0] = 5

    def test_product_shape_mismatch(self):
        """Test a product of incompatible shapes raises."""
        a = ComplexMatrix.zeros(2, 3)
        with self.assertRaises(DimensionError):
            _ = a @ a

    def test_trace_of_rectangular(self):
        """Test the trace of a non-square matrix raises."""
        with self.assertRaises(DimensionError):
            ComplexMatrix.zeros(2, 3).trace()

    def test_vec_is_column_stacking(self):
        """Test vec stacks columns and from_vec undoes it."""
        m = ComplexMatrix([[1, 2], [3, 4]])
        self.assertEqual(list(m.vec()), [1, 3, 2, 4])
        self.assertTrue(ComplexMatrix.from_vec(m.vec(), 2).allclose(m))

    def test_dagger(self):
        """Test the adjoint conjugates and transposes."""
        m = ComplexMatrix([[1, 2j], [3, 4]])
        self.assertTrue(m.dag.allclose(ComplexMatrix([[1, 3], [-2j, 4]])))


class LinalgUnitTests(unittest.TestCase):
    """Norms, products and predicates."""

    def setUp(self):
        """Draw a fixed random pair."""
        rng = np.random.default_rng(7)
        self.a = ginibre(rng, 3)
        self.b = ginibre(rng, 3)

    def test_hs_inner_matches_trace(self):
        """Test <A, B> = tr(A^dagger B)."""
        expected = (self.a.dag @ self.b).trace()
        self.assertAlmostEqual(hs_inner(self.a, self.b), expected, places=12)

    def test_frobenius_norm(self):
        """Test ||A||^2 = <A, A>."""
        self.assertAlmostEqual(frobenius_norm(self.a) ** 2,
                               hs_inner(self.a, self.a).real, places=12)

    def test_commutators(self):
        """Test [A, B] + {A, B} = 2AB."""
        total = commutator(self.a, self.b) + anticommutator(self.a, self.b)
        self.assertTrue(total.allclose((self.a @ self.b) * 2))

    def test_shape_mismatch(self):
        """Test commutators of different dimensions raise."""
        with self.assertRaises(DimensionError):
            commutator(self.a, ComplexMatrix.identity(2))

    def test_cartesian_split(self):
        """Test A = A_R + i A_I with Hermitian parts."""
        real, imag = cartesian_split(self.a)
        self.assertTrue(is_hermitian(real))
        self.assertTrue(is_hermitian(imag))
        self.assertTrue((real + imag * 1j).allclose(self.a))

    def test_hs_inner_conjugate_symmetric(self):
        """Test <A, B> = conj(<B, A>)."""
        self.assertAlmostEqual(hs_inner(self.a, self.b),
                               hs_inner(self.b, self.a).conjugate(),
                               places=12)

    def test_adjoint_commutator_norm(self):
        """Test ||[A, B]|| = ||[A^dagger, B^dagger]||."""
        self.assertAlmostEqual(frobenius_norm(commutator(self.a, self.b)),
                               frobenius_norm(commutator(self.a.dag,
                                                         self.b.dag)),
                               places=12)

    def test_kron_mixed_product(self):
        """Test (A (x) B)(C (x) D) = AC (x) BD."""
        rng = np.random.default_rng(17)
        c, d = ginibre(rng, 3), ginibre(rng, 3)
        left = kron(self.a, self.b) @ kron(c, d)
        self.assertTrue(left.allclose(kron(self.a @ c, self.b @ d)))

    def test_kron_dimension(self):
        """Test the Kronecker product of 3x3 factors is 9x9."""
        self.assertEqual(kron(self.a, self.b).shape, (9, 9))

    def test_random_unitary(self):
        """Test the QR-based sampler returns a unitary."""
        u = random_unitary(np.random.default_rng(1), 4)
        self.assertTrue(is_unitary(u, 1e-12))

    def test_normality(self):
        """Test Hermitian matrices are normal and a nilpotent unit is not."""
        real, _ = cartesian_split(self.a)
        self.assertTrue(is_normal(real))
        self.assertFalse(is_normal(ComplexMatrix.unit(2, 0, 1)))


class DecompositionUnitTests(unittest.TestCase):
    """SVD and eigensolvers."""

    def test_svd_reconstructs(self):
        """Test A = U diag(s) V^dagger with unitary factors."""
        a = ginibre(np.random.default_rng(3), 5)
        sigma, left, right = svd(a)
        recon = (left.array * sigma) @ right.array.conj().T
        self.assertTrue(np.allclose(recon, a.array, atol=1e-12))
        self.assertTrue(is_unitary(left, 1e-10))
        self.assertTrue(is_unitary(right, 1e-10))
        self.assertTrue(np.all(np.diff(sigma) <= 0))

    def test_svd_rank_deficient(self):
        """Test a rank-one matrix gets a completed unitary left factor."""
        a = ComplexMatrix.unit(3, 0, 2) * 2
        result = svd(a)
        self.assertAlmostEqual(result.singular_values[0], 2.0, places=12)
        self.assertAlmostEqual(result.singular_values[1], 0.0, places=12)
        self.assertTrue(is_unitary(result.left, 1e-10))

    def test_svd_of_zero(self):
        """Test the zero matrix has zero singular values."""
        result = svd(ComplexMatrix.zeros(3))
        self.assertTrue(np.all(result.singular_values == 0))
        self.assertTrue(is_unitary(result.left, 1e-10))

    def test_eig_hermitian(self):
        """Test eigenpairs of a Hermitian matrix are accurate and ascending."""
        g = ginibre(np.random.default_rng(5), 4)
        h = (g + g.dag) / 2
        result = eig_hermitian(h)
        self.assertTrue(np.all(np.diff(result.values) >= 0))
        self.assertLess(float(np.max(result.residuals)),
                        DEFAULT_TOLERANCES.eig_hermitian_residual)
        self.assertFalse(any(result.defective))

    def test_eig_hermitian_rejects_non_hermitian(self):
        """Test a non-Hermitian input violates the contract."""
        with self.assertRaises(ContractError):
            eig_hermitian(ComplexMatrix.unit(2, 0, 1))

    def test_eig_general_ordering(self):
        """Test eigenvalues come by decreasing real part."""
        m = ComplexMatrix.diag([-1, 2, 1j, -1j])
        values = eig_general(m).values
        self.assertAlmostEqual(values[0], 2)
        self.assertAlmostEqual(values[1], -1j)
        self.assertAlmostEqual(values[2], 1j)
        self.assertAlmostEqual(values[3], -1)

    def test_eig_general_flags_jordan_block(self):
        """Test a Jordan block is reported as defective."""
        result = eig_general(ComplexMatrix([[1, 1], [0, 1]]))
        self.assertEqual(len(result), 2)
        self.assertTrue(all(result.defective))

    def test_svd_drops_values_below_cutoff(self):
        """Test a singular value under the rank cutoff is reported as 0."""
        result = svd(ComplexMatrix.diag([1.0, 1e-20, 0.0]))
        self.assertEqual(result.singular_values[0], 1.0)
        self.assertEqual(result.singular_values[1], 0.0)
        self.assertTrue(is_unitary(result.left, 1e-10))

    def test_eig_general_small_oracle(self):
        """Test [[0, 1], [-2, -3]] has eigenvalues -1 and -2."""
        result = eig_general(ComplexMatrix([[0, 1], [-2, -3]]))
        self.assertTrue(np.allclose(result.values, [-1.0, -2.0]))
        self.assertFalse(any(result.defective))

    def test_eig_general_companion_roots(self):
        """Test companion matrices recover the roots of their polynomial."""
        rng = np.random.default_rng(31)
        grid = np.linspace(-3.0, 3.0, 13)
        for degree in range(2, 7):
            with self.subTest(degree=degree):
                roots = rng.choice(grid, degree, replace=False) \
                    + 1j * rng.choice(grid, degree, replace=False) / 4
                coeffs = np.poly(roots)
                companion = np.zeros((degree, degree), dtype=np.complex128)
                companion[0, :] = -coeffs[1:]
                companion[1:, :-1] = np.eye(degree - 1)
                values = eig_general(ComplexMatrix(companion)).values
                self.assertTrue(np.allclose(np.sort_complex(values),
                                            np.sort_complex(roots),
                                            atol=1e-7, rtol=0.0))

    def test_eig_general_flags_nilpotent_block(self):
        """Test [[0, 1], [0, 0]] is reported as defective."""
        result = eig_general(ComplexMatrix([[0, 1], [0, 0]]))
        self.assertTrue(np.allclose(result.values, 0.0))
        self.assertTrue(all(result.defective))

    def test_kernel_dimension_limit(self):
        """Test eigenproblems above the kernel limit are refused."""
        with self.assertRaises(DimensionError):
            eig_general(ComplexMatrix.identity(65))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=2, max_value=6),
           st.integers(min_value=0, max_value=2 ** 32 - 1))
    def test_svd_matches_numpy(self, n, seed):
        """Test Jacobi singular values agree with LAPACK."""
        a = ginibre(np.random.default_rng(seed), n)
        ours = svd(a).singular_values
        reference = np.linalg.svd(a.array, compute_uv=False)
        self.assertTrue(np.allclose(ours, reference, atol=1e-11))
