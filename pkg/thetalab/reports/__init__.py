"""Report schemas and JSON/CSV rendering."""
from thetalab.reports.render import (
    alpha_report,
    def_structure_report,
    feasible_point_report,
    gap_row,
    render,
    schrijver_report,
    sweep_rows,
    verify_report,
)
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
    ThetaReport,
    VerifyReport,
    decimal_str,
    fraction_str,
    parse_fraction,
)

__all__ = [
    "alpha_report",
    "def_structure_report",
    "feasible_point_report",
    "gap_row",
    "render",
    "schrijver_report",
    "sweep_rows",
    "verify_report",
    "AlphaReport",
    "DefStructureReport",
    "ExactValue",
    "FeasiblePointReport",
    "GapRowReport",
    "Instance",
    "LeadingTermReport",
    "OutputFormat",
    "SchrijverReport",
    "SuiteReport",
    "SweepRowReport",
    "ThetaReport",
    "VerifyReport",
    "decimal_str",
    "fraction_str",
    "parse_fraction",
]
