"""Closed forms and asymptotic data for theta of generalized Johnson graphs."""
from thetalab.asympt.feasible import (
    DetPCheck,
    FeasibleVector,
    det_constant,
    detP_check,
    feasible_leading_coefficients,
    feasible_solution,
)
from thetalab.asympt.formulas import (
    DefBound,
    DefStructure,
    LeadingTerm,
    SchrijverAlternative,
    chain_binomial,
    factorial_identity,
    cosingleton_leading,
    def_bound,
    def_structure,
    exact_theta_cosingleton,
    exact_theta_singleton,
    leading_constant,
    rcw_bound,
    run_factorial_product,
    schrijver_alternative,
    singleton_denominator,
    singleton_slope,
)

__all__ = [
    "DetPCheck",
    "FeasibleVector",
    "det_constant",
    "detP_check",
    "feasible_leading_coefficients",
    "feasible_solution",
    "DefBound",
    "DefStructure",
    "LeadingTerm",
    "SchrijverAlternative",
    "chain_binomial",
    "factorial_identity",
    "cosingleton_leading",
    "def_bound",
    "def_structure",
    "exact_theta_cosingleton",
    "exact_theta_singleton",
    "leading_constant",
    "rcw_bound",
    "run_factorial_product",
    "schrijver_alternative",
    "singleton_denominator",
    "singleton_slope",
]
