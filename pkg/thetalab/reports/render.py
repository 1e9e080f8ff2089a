"""Turn domain results into report models and serialize them as JSON or CSV."""
import logging
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple, Union

import pandas as pd
from pydantic import BaseModel, TypeAdapter

from thetalab.asympt.feasible import FeasibleVector
from thetalab.asympt.formulas import DefStructure, SchrijverAlternative
from thetalab.graphs.alpha import SandwichReport
from thetalab.graphs.gap import GapReport
from thetalab.reports.schemas import (
    AlphaReport,
    DefStructureReport,
    ExactValue,
    FeasiblePointReport,
    GapRowReport,
    Instance,
    LeadingTermReport,
    OutputFormat,
    SchrijverReport,
    SuiteReport,
    SweepRowReport,
    VerifyReport,
    decimal_str,
    fraction_str,
)
from thetalab.services.sweep import SweepTable
from thetalab.services.verification import VerificationReport

logger = logging.getLogger(__name__)

Renderable = Union[BaseModel, Sequence[BaseModel]]


def def_structure_report(structure: DefStructure) -> DefStructureReport:
    return DefStructureReport(
        divisibility_chain=structure.divisibility_chain,
        intersection_threshold=structure.intersection_threshold,
        divisibility_threshold=structure.divisibility_threshold,
    )


def schrijver_report(alternative: SchrijverAlternative, precision: int) -> SchrijverReport:
    return SchrijverReport(
        theta_complement=ExactValue.of(alternative.theta_complement, precision),
        def_complement=ExactValue.of(alternative.def_complement, precision),
        within=alternative.within,
        complement_within=alternative.complement_within,
        counterexample_candidate=alternative.counterexample_candidate,
    )


def feasible_point_report(
    point: FeasibleVector,
    leading_terms: List[Tuple[Fraction, int]],
    precision: int,
) -> FeasiblePointReport:
    return FeasiblePointReport(
        objective=ExactValue.of(point.objective, precision),
        feasible=point.feasible,
        violated_rows=list(point.violated_rows),
        tight_rows=list(point.tight_rows),
        leading_terms=[
            LeadingTermReport(coefficient=fraction_str(c), exponent=e) for c, e in leading_terms
        ],
    )


def sweep_rows(table: SweepTable, precision: int) -> List[SweepRowReport]:
    def pair(name: str, value) -> Dict[str, str]:
        return {name: fraction_str(value), f"{name}_approx": decimal_str(value, precision)}

    return [
        SweepRowReport(
            n=row.n,
            **pair("theta", row.theta),
            **pair("sigma", row.sigma),
            **pair("leading", row.leading),
            **pair("residual", row.residual),
            **pair("sigma_residual", row.sigma_residual),
            **pair("def_bound", row.def_bound),
            def_valid=row.def_valid,
            rcw_bound=fraction_str(row.rcw_bound),
        )
        for row in table.rows
    ]


def gap_row(report: GapReport, precision: int) -> GapRowReport:
    return GapRowReport(
        q=report.q,
        p=report.p,
        m=report.m,
        k=report.k,
        n=report.n,
        L=",".join(map(str, report.L)),
        N=str(report.N),
        theta=fraction_str(report.theta),
        theta_approx=decimal_str(report.theta, precision),
        sigma=fraction_str(report.sigma),
        theta_complement=fraction_str(report.theta_complement),
        theta_complement_approx=decimal_str(report.theta_complement, precision),
        minrank_bound=fraction_str(report.minrank_bound),
        alpha=report.alpha,
        alpha_exact=report.alpha_exact,
        def_bound=fraction_str(report.def_bound),
        rcw_bound=fraction_str(report.rcw_bound),
        leading_ratio_approx=decimal_str(report.leading_ratio, precision),
        exponent_estimate=decimal_str(report.exponent_estimate, precision),
        target_exponent=fraction_str(report.target_exponent),
        target_exponent_approx=decimal_str(report.target_exponent, precision),
    )


def alpha_report(result: SandwichReport, precision: int) -> AlphaReport:
    return AlphaReport(
        command="alpha",
        instance=Instance.of(result.spec),
        alpha=result.alpha.value,
        alpha_exact=result.alpha.exact,
        nodes=result.alpha.nodes,
        sigma=ExactValue.of(result.sigma, precision),
        theta=ExactValue.of(result.theta, precision),
        sandwich_holds=result.holds,
        alpha_equals_theta=result.tight,
    )


def verify_report(result: VerificationReport) -> VerifyReport:
    return VerifyReport(
        command="verify",
        k_max=result.k_max,
        lp_k_max=result.lp_k_max,
        passed=result.passed,
        suites=[
            SuiteReport(
                name=r.name,
                passed=r.passed,
                checked=r.checked,
                failures=r.failures,
                details=r.details,
            )
            for r in result.results
        ],
    )


def _records(report: Renderable) -> List[Dict[str, Any]]:
    if isinstance(report, VerifyReport):
        # One row per suite
        return [
            {
                "name": suite.name,
                "passed": suite.passed,
                "checked": suite.checked,
                "failures": "; ".join(suite.failures),
                "details": "; ".join(f"{key}:{value}" for key, value in suite.details.items()),
            }
            for suite in report.suites
        ]
    if isinstance(report, BaseModel):
        return pd.json_normalize(report.model_dump(mode="json"), sep="_").to_dict("records")
    return [row.model_dump(mode="json") for row in report]


def render(report: Renderable, fmt: OutputFormat = OutputFormat.JSON) -> str:
    """Serialize a report (or a table of row reports).

    JSON keeps exact values as "p/q" strings; a table becomes an array of
    objects. CSV has a header row and LF line endings.
    """
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        if isinstance(report, BaseModel):
            return report.model_dump_json(indent=2) + "\n"
        rows = list(report)
        if not rows:
            return "[]\n"
        adapter = TypeAdapter(List[type(rows[0])])
        return adapter.dump_json(rows, indent=2).decode() + "\n"

    frame = pd.DataFrame(_records(report))
    return frame.to_csv(index=False, lineterminator="\n")
