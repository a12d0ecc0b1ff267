"""r-functional unit tests."""

import math
import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from ..core.constants import C_MINUS, C_PLUS, SQRT2
from ..core.exception import ContractError, DimensionError
from ..core.linalg import cartesian_split, commutator, frobenius_norm, \
    hs_inner, random_unitary
from ..core.matrix import ComplexMatrix, ginibre
from ..functional.bounds import best_constants, constant_roots
from ..functional.properties import run_property_suite
from ..functional.rfunc import FORM_NAMES, applicable_bounds, bw_check, \
    cartesian_additivity_check, diagonal_expansion, r_eval, r_report, \
    r_self, r_self_singular, ratio_of, scaling_check, sqrt2_bound_check, \
    unitary_invariance_check

PAIR_A = ComplexMatrix([[0, 1], [1, 1]])
PAIR_B = ComplexMatrix([[0, 0], [1, 0]])
SIGMA_1 = ComplexMatrix([[0, 1], [1, 0]])
SIGMA_2 = ComplexMatrix([[0, -1j], [1j, 0]])
SIGMA_3 = ComplexMatrix([[1, 0], [0, -1]])
HADAMARD = ComplexMatrix([[1, 1], [1, -1]]) / SQRT2


class EvaluationUnitTests(unittest.TestCase):
    """Evaluation of r and its equivalent forms."""

    def test_reference_pair(self):
        """Test r(A, B) = 1 and r(B, A) = 3/2 on the reference pair."""
        self.assertAlmostEqual(r_eval(PAIR_A, PAIR_B), 1.0, places=14)
        self.assertAlmostEqual(r_eval(PAIR_B, PAIR_A), 1.5, places=14)

    def test_reference_pair_inner_product(self):
        """Test the reference pair has <A, B> = 1 and ||A|| = sqrt 3."""
        self.assertAlmostEqual(hs_inner(PAIR_A, PAIR_B), 1.0)
        self.assertAlmostEqual(frobenius_norm(PAIR_A), math.sqrt(3.0))

    def test_identity_gives_zero(self):
        """Test r(I, B) = 0 for any B."""
        b = ginibre(np.random.default_rng(11), 3)
        self.assertAlmostEqual(r_eval(ComplexMatrix.identity(3), b), 0.0,
                               places=12)

    def test_every_form_on_reference_pair(self):
        """Test all eight forms give 1 on the reference pair."""
        report = r_report(PAIR_A, PAIR_B)
        self.assertEqual(set(report.alternates), set(FORM_NAMES))
        for name, value in report.alternates.items():
            with self.subTest(form=name):
                self.assertAlmostEqual(value, 1.0, places=13)
        self.assertAlmostEqual(report.ratio, 1.0 / 3.0, places=13)

    def test_forms_agree_on_random_pair(self):
        """Test the forms agree on a random 3x3 pair."""
        rng = np.random.default_rng(2024)
        report = r_report(ginibre(rng, 3), ginibre(rng, 3))
        self.assertLess(report.max_spread, 1e-10)
        self.assertTrue(report.spread_ok())

    def test_normal_b_reduces_to_commutator(self):
        """Test r(A, sigma_3) = 1/2 ||[A, sigma_3]||^2."""
        a = ginibre(np.random.default_rng(8), 2)
        half = 0.5 * frobenius_norm(commutator(a, SIGMA_3)) ** 2
        self.assertAlmostEqual(r_eval(a, SIGMA_3), half, places=12)

    def test_ratio_undefined_at_zero(self):
        """Test the ratio is absent when a norm vanishes."""
        self.assertIsNone(ratio_of(PAIR_A, ComplexMatrix.zeros(2)))
        self.assertIsNone(r_report(ComplexMatrix.zeros(2), PAIR_B).ratio)

    def test_shape_mismatch(self):
        """Test pairs of different dimensions are refused."""
        with self.assertRaises(DimensionError):
            r_eval(PAIR_A, ComplexMatrix.identity(3))

    def test_general_witness_value(self):
        """Test A = diag(1, -(1+sqrt2)), b_12 = 1 attains c+."""
        a = ComplexMatrix.diag([1.0, -(1.0 + SQRT2)])
        b = ComplexMatrix.unit(2, 0, 1)
        self.assertAlmostEqual(ratio_of(a, b), C_PLUS, places=13)
        self.assertAlmostEqual(frobenius_norm(a) ** 2, 4.0 + 2.0 * SQRT2)


class SelfValueUnitTests(unittest.TestCase):
    """r(A, A) and its singular value formula."""

    def test_normal_matrix(self):
        """Test r(A, A) = 0 for a normal A."""
        self.assertAlmostEqual(r_self(PAIR_A), 0.0, places=14)
        self.assertAlmostEqual(r_self_singular(PAIR_A), 0.0, places=12)

    def test_rank_one_maximum(self):
        """Test the orthogonal rank-one A reaches ||A||^4 / 2."""
        a = ComplexMatrix.unit(3, 0, 1)
        self.assertAlmostEqual(r_self(a), 0.5, places=14)
        self.assertAlmostEqual(r_self(a * 2), 8.0, places=12)

    def test_singular_formula_agrees(self):
        """Test the singular value formula on random matrices."""
        rng = np.random.default_rng(99)
        for n in (2, 3, 5):
            a = ginibre(rng, n)
            with self.subTest(n=n):
                self.assertAlmostEqual(r_self(a), r_self_singular(a),
                                       places=10)
                self.assertAlmostEqual(r_self(a), r_eval(a, a), places=10)


class IdentityUnitTests(unittest.TestCase):
    """Scaling, invariance and additivity."""

    def test_scaling(self):
        """Test r(2A, 3iB) = 36 r(A, B) on the reference pair."""
        scaled, expected = scaling_check(PAIR_A, PAIR_B, 2, 3j)
        self.assertAlmostEqual(scaled, 36.0, places=12)
        self.assertAlmostEqual(expected, 36.0, places=12)

    def test_phase_invariance(self):
        """Test unimodular factors leave r unchanged."""
        scaled, expected = scaling_check(PAIR_A, PAIR_B, 1j, -1)
        self.assertAlmostEqual(scaled, expected, places=13)

    def test_hadamard_invariance(self):
        """Test conjugation by the Hadamard matrix keeps r = 1."""
        rotated, plain = unitary_invariance_check(PAIR_A, PAIR_B, HADAMARD)
        self.assertAlmostEqual(rotated, 1.0, places=13)
        self.assertAlmostEqual(plain, 1.0, places=13)

    def test_random_unitary_invariance(self):
        """Test invariance under a random unitary."""
        rng = np.random.default_rng(17)
        a, b, u = ginibre(rng, 4), ginibre(rng, 4), random_unitary(rng, 4)
        rotated, plain = unitary_invariance_check(a, b, u)
        self.assertLess(abs(rotated - plain),
                        1e-11 * max(1.0, abs(plain)))

    def test_non_unitary_refused(self):
        """Test a non-unitary conjugation is a contract error."""
        with self.assertRaises(ContractError):
            unitary_invariance_check(PAIR_A, PAIR_B, PAIR_A)

    def test_cartesian_additivity(self):
        """Test r(A, B) = r(A_R, B) + r(A_I, B)."""
        b = ginibre(np.random.default_rng(4), 2)
        whole, real, imag = cartesian_additivity_check(
            ComplexMatrix.unit(2, 0, 1), b)
        self.assertAlmostEqual(whole, real + imag, places=12)

    def test_cartesian_hermitian(self):
        """Test a Hermitian A puts everything in the real part."""
        whole, real, imag = cartesian_additivity_check(PAIR_A, PAIR_B)
        self.assertAlmostEqual(whole, real, places=13)
        self.assertAlmostEqual(imag, 0.0, places=13)

    def test_cartesian_split_of_unit(self):
        """Test E12 splits into sigma_1/2 and sigma_2/2."""
        unit = ComplexMatrix.unit(2, 0, 1)
        real, imag = cartesian_split(unit)
        self.assertTrue(real.allclose(SIGMA_1 / 2))
        self.assertTrue(imag.allclose(SIGMA_2 / 2))
        self.assertTrue((real + imag * 1j).allclose(unit))

    def test_diagonal_expansion(self):
        """Test the diagonal expansion against direct evaluation."""
        rng = np.random.default_rng(21)
        diag = rng.standard_normal(4)
        b = ginibre(rng, 4)
        self.assertAlmostEqual(diagonal_expansion(diag, b),
                               r_eval(ComplexMatrix.diag(diag), b),
                               places=11)

    def test_diagonal_expansion_length(self):
        """Test a diagonal of the wrong length is refused."""
        with self.assertRaises(ContractError):
            diagonal_expansion([1.0, 2.0], ComplexMatrix.identity(3))


class BoundUnitTests(unittest.TestCase):
    """The bounds on r and their constants."""

    def test_best_constants(self):
        """Test the sharp constants for a few level counts."""
        general = best_constants(3, False)
        self.assertAlmostEqual(general.c_plus, 1.20710678, places=8)
        self.assertAlmostEqual(general.c_minus, C_MINUS)
        qubit = best_constants(2, True)
        self.assertAlmostEqual(qubit.c_minus, 0.0, places=15)
        self.assertAlmostEqual(qubit.c_plus, 1.0, places=15)
        self.assertAlmostEqual(best_constants(3, True).c_plus,
                               (1.0 + math.sqrt(4.0 / 3.0)) / 2.0)

    def test_constants_solve_their_equations(self):
        """Test every constant is a root of its defining equation."""
        for n in range(2, 9):
            for traceless in (False, True):
                with self.subTest(n=n, traceless=traceless):
                    low, high = constant_roots(n, traceless)
                    self.assertLess(abs(low), 1e-12)
                    self.assertLess(abs(high), 1e-12)

    def test_level_count(self):
        """Test fewer than two levels is a contract error."""
        with self.assertRaises(ContractError):
            best_constants(1)

    def test_bw_equality(self):
        """Test ||[sigma_1, sigma_2]||^2 = 2 ||sigma_1||^2 ||sigma_2||^2."""
        lhs, rhs = bw_check(SIGMA_1, SIGMA_2)
        self.assertAlmostEqual(lhs, 8.0, places=13)
        self.assertAlmostEqual(rhs, 8.0, places=13)

    def test_bw_commuting(self):
        """Test a commuting pair has a vanishing commutator."""
        lhs, _ = bw_check(SIGMA_3, ComplexMatrix.diag([2, 5]))
        self.assertEqual(lhs, 0.0)

    def test_sqrt2_bound(self):
        """Test r <= sqrt2 ||A||^2 ||B||^2 on the reference pair."""
        value, bound = sqrt2_bound_check(PAIR_A, PAIR_B)
        self.assertAlmostEqual(value, 1.0)
        self.assertAlmostEqual(bound, 3.0 * SQRT2)
        self.assertEqual(sqrt2_bound_check(PAIR_A, ComplexMatrix.zeros(2)),
                         (0.0, 0.0))

    def test_applicable_bounds(self):
        """Test which bounds apply to the reference pair."""
        checks = {c.name: c for c in applicable_bounds(PAIR_A, PAIR_B)}
        self.assertTrue(all(c.holds for c in checks.values()))
        self.assertTrue(checks["general"].applies)
        self.assertFalse(checks["traceless"].applies)
        self.assertFalse(checks["normal_b"].applies)

    def test_normal_b_bounds(self):
        """Test the restricted bound and the identity apply for normal B."""
        a = ginibre(np.random.default_rng(6), 2)
        checks = {c.name: c for c in applicable_bounds(a, SIGMA_3)}
        self.assertTrue(checks["normal_b"].applies)
        self.assertTrue(checks["commutator_identity"].applies)
        self.assertTrue(checks["commutator_identity"].holds)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=2, max_value=5),
           st.integers(min_value=0, max_value=2 ** 32 - 1))
    def test_general_bounds_hold(self, n, seed):
        """Test c- <= ratio <= c+ on random pairs."""
        rng = np.random.default_rng(seed)
        ratio = ratio_of(ginibre(rng, n), ginibre(rng, n))
        self.assertGreaterEqual(ratio, C_MINUS - 1e-10)
        self.assertLessEqual(ratio, C_PLUS + 1e-10)

    def test_property_suite(self):
        """Test the randomized property suite passes for small n."""
        for n in (2, 3):
            with self.subTest(n=n):
                results = run_property_suite(n, 40, seed=0xC0FFEE)
                failed = [r.name for r in results if not r.passed]
                self.assertEqual(failed, [])
