"""Witness and qubit formula unit tests."""

import math
import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from ..core.constants import C_MINUS, C_PLUS, SQRT2, Sign
from ..core.exception import ContractError, DimensionError
from ..core.matrix import ComplexMatrix, ginibre
from ..functional.pauli import PauliBasis, PauliVector, scalar_lower_gap, \
    scalar_upper_gap, pauli_bounds, pauli_decompose, pauli_reconstruct, \
    r_pauli
from ..functional.rfunc import r_eval, r_self, ratio_of
from ..functional.witness import build_witness, qubit_vectors, \
    witness_general, witness_qubit, witness_self, witness_traceless

WITNESS_TOL = 1e-12


class WitnessUnitTests(unittest.TestCase):
    """Closed-form pairs that attain the sharp constants."""

    def test_general_witness(self):
        """Test the general witness attains c+ and c- for several n."""
        for n in (2, 3, 5):
            for sign, target in ((Sign.UPPER, C_PLUS), (Sign.LOWER, C_MINUS)):
                with self.subTest(n=n, sign=sign):
                    a, b = witness_general(n, sign)
                    self.assertLess(abs(ratio_of(a, b) - target), 1e-13)

    def test_traceless_qubit(self):
        """Test the qubit traceless witness attains 1 and 0."""
        a, b = witness_traceless(2, Sign.UPPER)
        self.assertAlmostEqual(ratio_of(a, b), 1.0, places=14)
        a, b = witness_traceless(2, Sign.LOWER)
        self.assertAlmostEqual(ratio_of(a, b), 0.0, places=14)

    def test_traceless_examples(self):
        """Test the traceless witnesses for three and four levels."""
        a, b = witness_traceless(3, Sign.UPPER)
        self.assertLess(abs(ratio_of(a, b)
                            - (1.0 + math.sqrt(4.0 / 3.0)) / 2.0),
                        WITNESS_TOL)
        a, b = witness_traceless(4, Sign.LOWER)
        self.assertLess(abs(ratio_of(a, b)
                            - (1.0 - math.sqrt(1.5)) / 2.0), WITNESS_TOL)

    def test_traceless_witness_is_traceless(self):
        """Test tr A vanishes for every traceless witness."""
        for n in range(2, 9):
            for sign in Sign:
                with self.subTest(n=n, sign=sign):
                    a, _ = witness_traceless(n, sign)
                    self.assertLess(abs(a.trace()), 1e-13)

    def test_self_witness(self):
        """Test the rank-one witness reaches ||A||^4 / 2."""
        self.assertTrue(witness_self(2).allclose(
            ComplexMatrix([[0, 1], [0, 0]])))
        self.assertAlmostEqual(r_self(witness_self(3)), 0.5, places=14)
        self.assertAlmostEqual(r_self(witness_self(3) * 2), 8.0, places=12)

    def test_qubit_witness(self):
        """Test the qubit witness attains both general constants."""
        a, b = witness_qubit(Sign.UPPER)
        self.assertLess(abs(ratio_of(a, b) - C_PLUS), WITNESS_TOL)
        a, b = witness_qubit(Sign.LOWER)
        self.assertLess(abs(ratio_of(a, b) - C_MINUS), WITNESS_TOL)

    def test_qubit_triple_orientation(self):
        """Test a . (b_R x b_I) = -1 and |b_R| = |b_I|."""
        a, b = qubit_vectors(Sign.UPPER)
        triple = np.dot(a.vector.real, np.cross(b.real_part, b.imag_part))
        self.assertAlmostEqual(triple, -1.0)
        self.assertAlmostEqual(np.linalg.norm(b.real_part),
                               np.linalg.norm(b.imag_part))
        self.assertEqual(b.a0, 0)

    def test_right_handed_triple_misses_bound(self):
        """Test the opposite orientation falls short of c+."""
        a, b = witness_qubit(Sign.UPPER, left_handed=False)
        self.assertAlmostEqual(ratio_of(a, b), 0.5, places=13)
        self.assertLess(ratio_of(a, b), C_PLUS - 0.1)

    def test_build_witness(self):
        """Test every kind reproduces its target in the metadata."""
        for kind in ("general", "traceless", "qubit", "self"):
            with self.subTest(kind=kind):
                wit = build_witness(kind, 3 if kind != "qubit" else 2)
                doc = wit.to_dict()
                meta = doc["metadata"]
                self.assertLess(abs(meta["achieved_ratio"]
                                    - meta["target_constant"]), WITNESS_TOL)
                self.assertEqual(doc["A"]["rows"], wit.n)

    def test_build_witness_errors(self):
        """Test unknown kinds and signs are contract errors."""
        with self.assertRaises(ContractError):
            build_witness("circulant", 3)
        with self.assertRaises(ContractError):
            build_witness("general", 3, "sideways")
        with self.assertRaises(ContractError):
            witness_general(1)


class PauliUnitTests(unittest.TestCase):
    """The qubit formula in the normalized Pauli basis."""

    def test_singleton(self):
        """Test the basis is shared."""
        self.assertIs(PauliBasis(), PauliBasis())
        self.assertTrue(PauliBasis().sigma(0).allclose(
            ComplexMatrix.identity(2)))

    def test_decompose_examples(self):
        """Test the coefficients of I, sigma_3 and E12."""
        ident = pauli_decompose(ComplexMatrix.identity(2))
        self.assertAlmostEqual(ident.a0, SQRT2)
        self.assertAlmostEqual(ident.vector_norm_sq, 0.0)
        sig3 = pauli_decompose(PauliBasis().sigma(3))
        self.assertAlmostEqual(sig3.a0, 0.0)
        self.assertTrue(np.allclose(sig3.vector, [0, 0, SQRT2]))
        unit = pauli_decompose(ComplexMatrix.unit(2, 0, 1))
        self.assertTrue(np.allclose(unit.vector,
                                    [1 / SQRT2, 1j / SQRT2, 0]))

    def test_round_trip_and_trace(self):
        """Test reconstruction and tr A = sqrt2 a0."""
        a = ginibre(np.random.default_rng(31), 2)
        vec = pauli_decompose(a)
        self.assertTrue(pauli_reconstruct(vec).allclose(a, 1e-13))
        self.assertAlmostEqual(a.trace(), SQRT2 * vec.a0, places=13)
        self.assertAlmostEqual(vec.norm_sq,
                               float(np.vdot(a.array, a.array).real))

    def test_wrong_shape(self):
        """Test only 2x2 matrices decompose."""
        with self.assertRaises(DimensionError):
            pauli_decompose(ComplexMatrix.identity(3))

    def test_parallel_real_vectors(self):
        """Test parallel real vectors give r = 0."""
        a = PauliVector(0j, (1 + 0j, 2 + 0j, 0j))
        b = PauliVector(0.5 + 0j, (2 + 0j, 4 + 0j, 0j))
        self.assertAlmostEqual(r_pauli(a, b), 0.0, places=13)

    def test_orthogonal_vectors_attain_traceless_bound(self):
        """Test a . b = conj(a) . b = 0 gives r = |a|^2 |b|^2."""
        a = PauliVector(0j, (0j, 0j, 1 + 0j))
        b = PauliVector(0j, (1 + 0j, 1j, 0j))
        self.assertAlmostEqual(r_pauli(a, b), 2.0, places=13)
        chain = pauli_bounds(a, b)
        self.assertTrue(chain.traceless)
        self.assertTrue(chain.holds)
        self.assertAlmostEqual(chain.upper, 2.0)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32 - 1))
    def test_formula_matches_evaluator(self, seed):
        """Test the Pauli formula agrees with r on random qubit pairs."""
        rng = np.random.default_rng(seed)
        a, b = ginibre(rng, 2), ginibre(rng, 2)
        direct = r_eval(a, b)
        formula = r_pauli(pauli_decompose(a), pauli_decompose(b))
        scale = max(1.0, pauli_decompose(a).norm_sq
                    * pauli_decompose(b).norm_sq)
        self.assertLess(abs(direct - formula), 1e-11 * scale)
        self.assertTrue(pauli_bounds(pauli_decompose(a),
                                     pauli_decompose(b)).holds)

    def test_b0_does_not_enter(self):
        """Test the identity part of B leaves r unchanged."""
        a = pauli_decompose(ginibre(np.random.default_rng(3), 2))
        b = PauliVector(0j, (1 + 1j, 0.5j, -2 + 0j))
        shifted = PauliVector(3 - 4j, b.a)
        self.assertAlmostEqual(r_pauli(a, b), r_pauli(a, shifted), places=12)

    def test_cross_term_is_bilinear(self):
        """Test a complex pair where only the bilinear cross term matches r.

        A = i sqrt2 E11 and B = sqrt2 E12 give r(A, B) = 0.
        """
        a = PauliVector(1j, (0j, 0j, 1j))
        b = PauliVector(0j, (1 + 0j, 1j, 0j))
        self.assertTrue(pauli_reconstruct(a).allclose(
            ComplexMatrix.unit(2, 0, 0) * (1j * SQRT2)))
        self.assertTrue(pauli_reconstruct(b).allclose(
            ComplexMatrix.unit(2, 0, 1) * SQRT2))
        cross = np.cross(b.vector.conj(), b.vector)
        bilinear = (np.conj(a.a0) * np.dot(a.vector, cross)).imag
        sesquilinear = (np.conj(a.a0) * np.vdot(a.vector, cross)).imag
        self.assertAlmostEqual(bilinear, 2.0)
        self.assertAlmostEqual(sesquilinear, -2.0)
        self.assertAlmostEqual(r_pauli(a, b), 0.0, places=12)
        self.assertAlmostEqual(r_eval(pauli_reconstruct(a),
                                      pauli_reconstruct(b)), 0.0, places=12)

    def test_bound_chain_with_trace(self):
        """Test the chain holds for a pair whose A has a trace part."""
        rng = np.random.default_rng(0)
        a = pauli_decompose(ginibre(rng, 2))
        b = pauli_decompose(ginibre(rng, 2))
        chain = pauli_bounds(a, b)
        scale = a.norm_sq * b.norm_sq
        self.assertFalse(chain.traceless)
        self.assertAlmostEqual(chain.upper, C_PLUS * scale)
        self.assertAlmostEqual(chain.lower, C_MINUS * scale)
        self.assertTrue(chain.holds)

    def test_bound_chain_traceless(self):
        """Test the traceless chain 0 <= r <= |a|^2|b|^2 <= ||A||^2||B||^2."""
        a = PauliVector(0j, (1 + 0j, 0.5j, 0j))
        b = PauliVector(2 + 0j, (0j, 1 + 0j, 1j))
        chain = pauli_bounds(a, b)
        self.assertTrue(chain.traceless)
        self.assertEqual(chain.lower, 0.0)
        self.assertAlmostEqual(chain.upper, a.vector_norm_sq * b.vector_norm_sq)
        self.assertTrue(chain.holds)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=-10, max_value=10),
           st.floats(min_value=0, max_value=10),
           st.floats(min_value=0, max_value=10),
           st.floats(min_value=0, max_value=10))
    def test_scalar_gaps_nonnegative(self, x, p, q, w):
        """Test both scalar gaps stay non-negative."""
        self.assertGreaterEqual(scalar_upper_gap(x, p, q, w), -1e-9)
        self.assertGreaterEqual(scalar_lower_gap(abs(x), p, q, w), -1e-9)

    def test_scalar_gaps_equality(self):
        """Test the gaps close at their equality points."""
        self.assertAlmostEqual(scalar_upper_gap(SQRT2 - 1, 1.0, 1.0, 1.0),
                               0.0, places=13)
        self.assertAlmostEqual(scalar_lower_gap(SQRT2 + 1, 1.0, 1.0, 1.0),
                               0.0, places=13)
