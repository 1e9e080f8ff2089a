"""Pydantic schemas for command reports."""
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field

from thetalab.core.combinat import LSpec
from thetalab.exceptions import InputError

Number = Union[Fraction, int]


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


def fraction_str(value: Number) -> str:
    """Exact "numerator/denominator" form; the denominator is always written."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def decimal_str(value: Union[Number, float], precision: int) -> str:
    """Decimal approximation with ``precision`` significant digits."""
    if precision < 1:
        raise InputError(f"precision must be at least 1, got {precision}")
    if isinstance(value, float):
        return format(value, f".{precision}g")
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = precision
        return str(Decimal(value.numerator) / Decimal(value.denominator))


class ExactValue(BaseModel):
    exact: str  # "p/q"
    approx: str  # approximate, `precision` significant digits

    @classmethod
    def of(cls, value: Number, precision: int) -> "ExactValue":
        return cls(exact=fraction_str(value), approx=decimal_str(value, precision))

    def value(self) -> Fraction:
        return parse_fraction(self.exact)


class Instance(BaseModel):
    n: int
    k: int
    L: List[int]

    @classmethod
    def of(cls, spec: LSpec) -> "Instance":
        return cls(n=spec.n, k=spec.k, L=list(spec.L))


# Single-instance reports
class DefStructureReport(BaseModel):
    divisibility_chain: bool
    intersection_threshold: int
    divisibility_threshold: int


class SchrijverReport(BaseModel):
    theta_complement: ExactValue
    def_complement: ExactValue
    within: bool  # theta <= DEF for L
    complement_within: bool
    counterexample_candidate: bool


class LeadingTermReport(BaseModel):
    coefficient: str
    exponent: int


class FeasiblePointReport(BaseModel):
    objective: ExactValue
    feasible: bool
    violated_rows: List[int]
    tight_rows: List[int]
    leading_terms: List[LeadingTermReport]


class ThetaReport(BaseModel):
    command: str
    instance: Instance
    theta: ExactValue
    sigma: Optional[ExactValue] = None
    sigma_le_theta: Optional[bool] = None
    leading_constant: Optional[ExactValue] = None
    def_bound: ExactValue
    def_valid: bool
    rcw_bound: ExactValue
    def_structure: DefStructureReport
    schrijver: SchrijverReport
    feasible_point: Optional[FeasiblePointReport] = None
    timing_seconds: Optional[float] = None


class AlphaReport(BaseModel):
    command: str
    instance: Instance
    alpha: int
    alpha_exact: bool
    nodes: int
    sigma: ExactValue
    theta: ExactValue
    sandwich_holds: bool
    alpha_equals_theta: bool
    timing_seconds: Optional[float] = None


class SuiteReport(BaseModel):
    name: str
    passed: bool
    checked: int
    failures: List[str] = Field(default_factory=list)
    details: Dict[str, str] = Field(default_factory=dict)


class VerifyReport(BaseModel):
    command: str
    k_max: int
    lp_k_max: int
    passed: bool
    suites: List[SuiteReport]
    timing_seconds: Optional[float] = None


# Table rows: flat so that CSV columns can be plotted directly
class SweepRowReport(BaseModel):
    n: int
    theta: str
    theta_approx: str
    sigma: str
    sigma_approx: str
    leading: str
    leading_approx: str
    residual: str
    residual_approx: str
    sigma_residual: str
    sigma_residual_approx: str
    def_bound: str
    def_bound_approx: str
    def_valid: bool
    rcw_bound: str


class GapRowReport(BaseModel):
    q: int
    p: int
    m: int
    k: int
    n: int
    L: str
    N: str
    theta: str
    theta_approx: str
    sigma: str
    theta_complement: str
    theta_complement_approx: str
    minrank_bound: str
    alpha: Optional[int] = None
    alpha_exact: Optional[bool] = None
    def_bound: str
    rcw_bound: str
    leading_ratio_approx: str
    exponent_estimate: str
    target_exponent: str
    target_exponent_approx: str
