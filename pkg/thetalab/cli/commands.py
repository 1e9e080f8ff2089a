"""Command-line parser and command handlers."""
import argparse
import logging
import time
from typing import Callable, Dict, Optional, Tuple

from thetalab.asympt.feasible import feasible_leading_coefficients, feasible_solution
from thetalab.asympt.formulas import (
    def_bound,
    def_structure,
    leading_constant,
    rcw_bound,
    schrijver_alternative,
)
from thetalab.config import Settings
from thetalab.core.combinat import LSpec, binom
from thetalab.exceptions import InputError, SingularMatrixError
from thetalab.graphs.alpha import sandwich_check
from thetalab.graphs.gap import gap_report
from thetalab.graphs.johnson import build_graph
from thetalab.lp.theta_lp import sigma, theta
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
from thetalab.reports.schemas import ExactValue, FeasiblePointReport, Instance, OutputFormat, ThetaReport
from thetalab.services.sweep import run_sweep, sweep_ns
from thetalab.services.verification import run_verification

logger = logging.getLogger(__name__)

# (stdout text, exit code)
CommandResult = Tuple[str, int]

DUMP_FORMAT_HELP = (
    "dump-graph prints one line per vertex in colex order: the sorted k-subset "
    "(comma-separated, 1-based), a colon, then the 0-based indices of its neighbours."
)


def positive_int(text: str) -> int:
    """argparse type for counts and sizes; bad values exit with the usage code 2."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def parse_int_list(text: str, what: str = "L") -> Tuple[int, ...]:
    """Parse "1,3,4" (or "") into integers, rejecting duplicates.

    Raises:
        InputError: malformed entry or duplicate value.
    """
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise InputError(f"--{what}: expected comma-separated integers, got {text!r}")
    duplicates = sorted({v for v in values if values.count(v) > 1})
    if duplicates:
        raise InputError(f"--{what}: duplicate values {duplicates}")
    return tuple(values)


def make_spec(n: int, k: int, L_text: str) -> LSpec:
    """Validate the user's (n, k, L) loudly before building the instance."""
    L = parse_int_list(L_text)
    if k < 1:
        raise InputError(f"--k must be >= 1, got {k}")
    if n <= k:
        raise InputError(f"need n > k, got n={n}, k={k}")
    bad = [l for l in L if l < 0 or l > k - 1]
    if bad:
        raise InputError(f"--L values {bad} are outside [0, {k - 1}]")
    return LSpec.of(n, k, L)


def _timed(args: argparse.Namespace, started: float, report) -> None:
    elapsed = time.perf_counter() - started
    logger.info(f"{args.command} finished in {elapsed:.3f}s")
    if args.timing:
        report.timing_seconds = round(elapsed, 6)


def _feasible_point(spec: LSpec, precision: int) -> Optional[FeasiblePointReport]:
    """The explicit P^{-1} point, or None when L is empty or P is singular at n."""
    if not spec.s:
        return None
    try:
        point = feasible_solution(spec)
    except SingularMatrixError as e:
        logger.info(str(e))
        return None
    return feasible_point_report(point, feasible_leading_coefficients(spec.k, spec.L), precision)


def cmd_theta(args: argparse.Namespace, settings: Settings) -> CommandResult:
    started = time.perf_counter()
    spec = make_spec(args.n, args.k, args.L).require_scheme()
    want_sigma = args.sigma or args.command == "sigma"
    precision = args.precision

    th = theta(spec)
    sg = sigma(spec) if want_sigma else None
    bound = def_bound(spec)
    report = ThetaReport(
        command=args.command,
        instance=Instance.of(spec),
        theta=ExactValue.of(th, precision),
        sigma=ExactValue.of(sg, precision) if sg is not None else None,
        sigma_le_theta=(sg <= th) if sg is not None else None,
        leading_constant=(
            ExactValue.of(leading_constant(spec.k, spec.L).constant, precision) if spec.s else None
        ),
        def_bound=ExactValue.of(bound.value, precision),
        def_valid=bound.valid,
        rcw_bound=ExactValue.of(rcw_bound(spec), precision),
        def_structure=def_structure_report(def_structure(spec)),
        schrijver=schrijver_report(schrijver_alternative(spec), precision),
        feasible_point=_feasible_point(spec, precision),
    )
    _timed(args, started, report)
    return render(report, args.format), 0


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> CommandResult:
    if args.n_from < 2 * args.k:
        raise InputError(f"--n-from must be >= 2k = {2 * args.k}, got {args.n_from}")
    L = make_spec(args.n_from, args.k, args.L).L
    ns = sweep_ns(args.n_from, args.n_to, step=args.step, samples=args.samples)
    table = run_sweep(args.k, L, ns, workers=settings.sweep_workers)
    low, high = table.residual_range
    logger.info(f"sweep residual range [{float(low):.6g}, {float(high):.6g}]")
    return render(sweep_rows(table, args.precision), args.format), 0


def cmd_verify(args: argparse.Namespace, settings: Settings) -> CommandResult:
    started = time.perf_counter()
    if not 1 <= args.k_max <= 10:
        raise InputError(f"--k-max must be in [1, 10], got {args.k_max}")
    result = run_verification(args.k_max)
    report = verify_report(result)
    _timed(args, started, report)
    return render(report, args.format), 0 if result.passed else 3


def cmd_gap(args: argparse.Namespace, settings: Settings) -> CommandResult:
    ns = parse_int_list(args.n_list, what="n")
    if not ns:
        raise InputError("--n needs at least one value")
    reports = [
        gap_report(
            args.q,
            n,
            include_alpha=not args.no_alpha,
            vertex_cap=args.cap,
            alpha_budget=settings.alpha_node_budget,
        )
        for n in ns
    ]
    rows = [gap_row(report, args.precision) for report in reports]
    return render(rows, args.format), 0


def cmd_alpha(args: argparse.Namespace, settings: Settings) -> CommandResult:
    started = time.perf_counter()
    spec = make_spec(args.n, args.k, args.L)
    result = sandwich_check(spec, vertex_cap=args.cap, budget=settings.alpha_node_budget)
    report = alpha_report(result, args.precision)
    _timed(args, started, report)
    return render(report, args.format), 0


def cmd_dump_graph(args: argparse.Namespace, settings: Settings) -> CommandResult:
    spec = make_spec(args.n, args.k, args.L)
    graph = build_graph(spec, args.cap)
    logger.info(f"{spec.label()}: {graph.num_vertices} vertices, C(n,k)={binom(spec.n, spec.k)}")
    return "".join(line + "\n" for line in graph.dump_lines()), 0


COMMANDS: Dict[str, Callable[[argparse.Namespace, Settings], CommandResult]] = {
    "theta": cmd_theta,
    "sigma": cmd_theta,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "gap": cmd_gap,
    "alpha": cmd_alpha,
    "dump-graph": cmd_dump_graph,
}


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default=settings.default_format,
        help="output format (default: %(default)s)",
    )
    common.add_argument(
        "--precision", type=positive_int, default=settings.precision,
        help="significant digits of the approximate decimal fields",
    )
    common.add_argument(
        "--cap", type=positive_int, default=settings.cap,
        help="vertex cap for explicit graphs (env THETALAB_CAP)",
    )
    common.add_argument("--seedless", action="store_true", help="accepted for scripts; no RNG is used")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")
    common.add_argument("--metrics-out", default=None, help="write Prometheus metrics to this file")

    parser = argparse.ArgumentParser(
        prog="thetalab",
        description="Exact Lovasz theta and Schrijver bounds of generalized Johnson graphs G(n,k,L).",
        epilog=DUMP_FORMAT_HELP,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def instance(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--L", default="", help='comma-separated intersection sizes, e.g. "1,3,4"')

    for name in ("theta", "sigma"):
        p = sub.add_parser(name, parents=[common], help="exact theta (and sigma) with DEF/RCW bounds")
        instance(p)
        p.add_argument("--sigma", action="store_true", help="also compute sigma")

    p = sub.add_parser("sweep", parents=[common], help="theta/sigma against the leading term over n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--L", required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--step", type=positive_int, default=None, help="arithmetic step (default: geometric)")
    p.add_argument("--samples", type=positive_int, default=None, help="number of geometric sample points")

    p = sub.add_parser("verify", parents=[common], help="run the exact identity suites")
    p.add_argument("--k-max", type=int, default=6)

    p = sub.add_parser("gap", parents=[common], help="gap construction report for prime power q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", dest="n_list", required=True, help='comma-separated n values, e.g. "50,100"')
    p.add_argument("--no-alpha", action="store_true", help="skip brute-force alpha")

    p = sub.add_parser("alpha", parents=[common], help="brute-force alpha with the sandwich check")
    instance(p)

    p = sub.add_parser("dump-graph", parents=[common], help="adjacency dump", description=DUMP_FORMAT_HELP)
    instance(p)

    return parser


def dispatch(args: argparse.Namespace, settings: Settings) -> CommandResult:
    return COMMANDS[args.command](args, settings)
