"""The r-functional, its bounds and the witnesses that attain them."""
from .bounds import BoundConstants, best_constants, constant_roots, \
    require_levels
from .rfunc import RReport, BoundCheck, FORM_NAMES, r_eval, r_report, \
    expression_forms, ratio_of, r_self, r_self_singular, diagonal_expansion, \
    scaling_check, unitary_invariance_check, cartesian_additivity_check, \
    bw_check, sqrt2_bound_check, commutator_half_norm, applicable_bounds
from .pauli import PauliBasis, PauliVector, QubitBoundChain, \
    pauli_decompose, pauli_reconstruct, r_pauli, pauli_bounds, \
    scalar_upper_gap, scalar_lower_gap
from .witness import Witness, WITNESS_KINDS, witness_general, \
    witness_traceless, witness_self, witness_qubit, qubit_vectors, \
    build_witness
from .properties import PropertyResult, run_property_suite, \
    random_traceless, random_normal

__all__ = [
    "BoundConstants", "best_constants", "constant_roots", "require_levels",
    "RReport", "BoundCheck", "FORM_NAMES", "r_eval", "r_report",
    "expression_forms", "ratio_of", "r_self", "r_self_singular",
    "diagonal_expansion", "scaling_check", "unitary_invariance_check",
    "cartesian_additivity_check", "bw_check", "sqrt2_bound_check",
    "commutator_half_norm", "applicable_bounds",
    "PauliBasis", "PauliVector", "QubitBoundChain", "pauli_decompose",
    "pauli_reconstruct", "r_pauli", "pauli_bounds", "scalar_upper_gap",
    "scalar_lower_gap",
    "Witness", "WITNESS_KINDS", "witness_general", "witness_traceless",
    "witness_self", "witness_qubit", "qubit_vectors", "build_witness",
    "PropertyResult", "run_property_suite", "random_traceless",
    "random_normal",
]
