"""Exact rational analysis of symmetric multilinear forms of degree >= 3.

Everything crosses the boundary exactly: rationals are "p/q" strings (python
ints are also accepted on input), matrices are row-major lists of such
strings with columns as images of basis vectors.
"""

from ._hdform import (
    CyclicData,
    FormParseError,
    NoRationalLift,
    NotInCenter,
    NotIsometry,
    SymmetricForm,
    associated_terms,
    center_basis,
    chi,
    cyclic_form,
    decompose,
    diagonal_form,
    embed_rho,
    evaluate,
    grading_report,
    group_inv,
    group_mul,
    is_isometry,
    is_regular,
    kernel_check,
    lie_basis,
    lie_derived_series,
    lift,
    orthogonal_sum,
    polarize_terms,
    radical,
    trace_form_matrix_algebra,
    trace_form_number_field,
    transform,
    two_regular_witness,
    witt_report,
)

__all__ = [
    "CyclicData",
    "FormParseError",
    "NoRationalLift",
    "NotInCenter",
    "NotIsometry",
    "SymmetricForm",
    "associated_terms",
    "center_basis",
    "chi",
    "cyclic_form",
    "decompose",
    "diagonal_form",
    "embed_rho",
    "evaluate",
    "grading_report",
    "group_inv",
    "group_mul",
    "is_isometry",
    "is_regular",
    "kernel_check",
    "lie_basis",
    "lie_derived_series",
    "lift",
    "orthogonal_sum",
    "polarize_terms",
    "radical",
    "trace_form_matrix_algebra",
    "trace_form_number_field",
    "transform",
    "two_regular_witness",
    "witt_report",
]
