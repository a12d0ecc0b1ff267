"""Sharp bounds of the r-functional and GKLS relaxation-rate audits."""
from .core import ComplexMatrix, Tolerances, DEFAULT_TOLERANCES, \
    RBoundException
from .functional import r_eval, r_report, best_constants, build_witness, \
    run_property_suite
from .optimize import ExtremizeTask, alternating_extremize
from .dynamics import GklsGenerator, spectrum, constraint_audit, \
    ensemble_audit

__version__ = "0.1.0"

__all__ = [
    "ComplexMatrix", "Tolerances", "DEFAULT_TOLERANCES", "RBoundException",
    "r_eval", "r_report", "best_constants", "build_witness",
    "run_property_suite", "ExtremizeTask", "alternating_extremize",
    "GklsGenerator", "spectrum", "constraint_audit", "ensemble_audit",
]
