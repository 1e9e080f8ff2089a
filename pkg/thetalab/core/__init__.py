"""Exact combinatorics, Johnson scheme tables and integer linear algebra."""
from thetalab.core.combinat import (
    LSpec,
    Rational,
    Run,
    RunDecomposition,
    binom,
    complement_L,
    complement_gap_lengths,
    complement_values,
    full_runs,
)
from thetalab.core.linalg import bareiss_determinant, solve_integer_system
from thetalab.core.scheme import (
    PMatrix,
    SchemeTriple,
    build_P_matrix,
    build_scheme,
    eigenvalue_P,
    eigenvalue_leading_term,
)

__all__ = [
    "LSpec",
    "Rational",
    "Run",
    "RunDecomposition",
    "binom",
    "complement_L",
    "complement_gap_lengths",
    "complement_values",
    "full_runs",
    "bareiss_determinant",
    "solve_integer_system",
    "PMatrix",
    "SchemeTriple",
    "build_P_matrix",
    "build_scheme",
    "eigenvalue_P",
    "eigenvalue_leading_term",
]
