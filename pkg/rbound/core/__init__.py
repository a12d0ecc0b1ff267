"""Core classes."""
from .constants import MinMax, Tolerances, OptimizerDefaults, Sign, Mode, \
    ConstantMode, OutputFormat, DEFAULT_TOLERANCES, OPTIMIZER_DEFAULTS, \
    DEFAULT_SEED, SEED_ENV_VAR, LOGGER_FORMAT, C_PLUS, C_MINUS, SQRT2, \
    MAX_MATRIX_DIM, MAX_KERNEL_DIM, MAX_VERIFY_N, MIN_LEVELS, \
    TRAJECTORY_COLUMNS, ENSEMBLE_COLUMNS, AUDIT_COLUMNS, SPECTRUM_COLUMNS, \
    SUM_RULE_COLUMNS
from .exception import RBoundException, DimensionError, NonFiniteError, \
    ContractError, InternalAssertionError, ImaginaryResidueError, \
    ConvergenceError, StructuralError, InputFormatError, ExitCode
from .validators import Validator, OneOf, Positive, InRange
from .matrix import ComplexMatrix, ginibre
from .linalg import EigenResult, SvdResult, hs_inner, frobenius_norm, \
    commutator, anticommutator, cartesian_split, kron, svd, eig_hermitian, \
    eig_general, is_hermitian, is_unitary, is_normal, random_unitary, \
    hermitian_defect
from .matrix_io import DocumentReader, BufferReader, FileReader, \
    matrix_from_json, matrix_to_json

__all__ = [
    "MinMax", "Tolerances", "OptimizerDefaults", "Sign", "Mode",
    "ConstantMode", "OutputFormat", "DEFAULT_TOLERANCES",
    "OPTIMIZER_DEFAULTS", "DEFAULT_SEED", "SEED_ENV_VAR", "LOGGER_FORMAT",
    "C_PLUS", "C_MINUS", "SQRT2", "MAX_MATRIX_DIM", "MAX_KERNEL_DIM",
    "MAX_VERIFY_N", "MIN_LEVELS", "TRAJECTORY_COLUMNS", "ENSEMBLE_COLUMNS",
    "AUDIT_COLUMNS", "SPECTRUM_COLUMNS", "SUM_RULE_COLUMNS",
    "RBoundException", "DimensionError", "NonFiniteError", "ContractError",
    "InternalAssertionError", "ImaginaryResidueError", "ConvergenceError",
    "StructuralError", "InputFormatError", "ExitCode",
    "Validator", "OneOf", "Positive", "InRange",
    "ComplexMatrix", "ginibre",
    "EigenResult", "SvdResult", "hs_inner", "frobenius_norm", "commutator",
    "anticommutator", "cartesian_split", "kron", "svd", "eig_hermitian",
    "eig_general", "is_hermitian", "is_unitary", "is_normal",
    "random_unitary", "hermitian_defect",
    "DocumentReader", "BufferReader", "FileReader", "matrix_from_json",
    "matrix_to_json",
]
