"""Numerical extremization of the r-functional ratio."""
from .quad_form import quad_form_in_A, quad_form_in_B, traceless_basis, \
    form_value
from .extremize import ExtremizeTask, ExtremizeResult, \
    alternating_extremize, finite_diff_check, write_trajectory_csv

__all__ = [
    "quad_form_in_A", "quad_form_in_B", "traceless_basis", "form_value",
    "ExtremizeTask", "ExtremizeResult", "alternating_extremize",
    "finite_diff_check", "write_trajectory_csv",
]
