"""Command-line entry point: ``decat <group> <command> [options]``.

Exit status is 0 on success, 1 if a verification failed and 2 on invalid input or any
other decat error (reported as one line on stderr).
"""

import argparse
import logging
import sys
from typing import List, Optional

from decat import __version__
from decat.cli.commands import COMMANDS
from decat.cli.config import RunConfig
from decat.errors import ERRORS
from decat.fieldmath import backend_manager
from decat.util.reports import write_report

logger = logging.getLogger("decat")


def _comma_list(text: str) -> List[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--jobs", type=int, help="Worker threads (default: $DECAT_JOBS or 1).")
    parser.add_argument("--seed", type=int, help="Evaluation-point seed (default: $DECAT_SEED or 0).")
    parser.add_argument("--output", help="Write the JSON report (or module file for 'rep build') here; '-' for stdout.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="INFO logging; twice for DEBUG.")
    parser.add_argument("--quiet", action="store_true", help="Only log errors.")


def _graph_options(parser: argparse.ArgumentParser, module: bool = False):
    parser.add_argument("--graph", help="Graph file (JSON).")
    parser.add_argument("--w", help='Framing, e.g. "1,0".')
    if module:
        parser.add_argument("--depth", type=int, help="Truncation depth (needed for infinite type).")
        parser.add_argument("--module", help="Read the module from a file written by 'rep build'.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="decat",
        description="Exact checks of quantum group, braid group and K-theory identities.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    groups = parser.add_subparsers(dest="group", required=True)

    cartan = groups.add_parser("cartan").add_subparsers(dest="action", required=True)
    info = cartan.add_parser("info", help="Cartan matrix and quiver-variety dimensions.")
    _graph_options(info)
    info.add_argument("--height", type=int, help="Largest sum(v) in the table.")
    _common(info)

    quiver = groups.add_parser("quiver").add_subparsers(dest="action", required=True)
    dims = quiver.add_parser("dims", help="Dimensions, Hecke dimensions and adjunction shifts.")
    _graph_options(dims)
    dims.add_argument("--height", type=int, help="Largest sum(v) in the table.")
    _common(dims)

    rep = groups.add_parser("rep").add_subparsers(dest="action", required=True)
    build = rep.add_parser("build", help="Build V(Lambda_w).")
    _graph_options(build, module=True)
    _common(build)
    verify = rep.add_parser("verify", help="Check the relation suite on V(Lambda_w).")
    _graph_options(verify, module=True)
    verify.add_argument("--checks", type=_comma_list, help="Relation families (default: all).")
    _common(verify)

    braid = groups.add_parser("braid").add_subparsers(dest="action", required=True)
    evaluate = braid.add_parser("eval", help="Evaluate a braid word.")
    _graph_options(evaluate, module=True)
    evaluate.add_argument("--word", required=True, help='E.g. "T1 T2 T1".')
    evaluate.add_argument("--minus", help="A second word; report whether the difference is zero.")
    evaluate.add_argument("--geometric", action="store_true", help="Act on K(T*G(k, N)) instead.")
    evaluate.add_argument("--N", type=int)
    evaluate.add_argument("--k", type=int)
    evaluate.add_argument("--symbolic", action="store_true", help="Symbolic rational functions.")
    _common(evaluate)
    braid_verify = braid.add_parser("verify", help="Check the braid relations on V(Lambda_w).")
    _graph_options(braid_verify, module=True)
    _common(braid_verify)

    ktheory = groups.add_parser("ktheory").add_subparsers(dest="action", required=True)
    kverify = ktheory.add_parser("verify", help="Check the sl2 kernel identities on T*G(k, N).")
    kverify.add_argument("--N", type=int, required=True)
    kverify.add_argument("--k", type=int, help="A single k (default: all 0 <= k <= N).")
    kverify.add_argument("--checks", type=_comma_list, help="Checks to run (default: all).")
    kverify.add_argument("--symbolic", action="store_true", help="Symbolic rational functions.")
    _common(kverify)
    return parser


def configure_logging(verbose: int, quiet: bool):
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def summary_lines(report: dict) -> List[str]:
    "A short human-readable rendering of a report."
    lines = []
    if "rows" in report:
        lines.append("v\tpairings\tdim\tcanonical")
        for row in report["rows"]:
            v = ",".join(map(str, row["v"]))
            pairings = ",".join(map(str, row["pairings"]))
            lines.append(f"{v}\t{pairings}\t{row['dim']}\t{row['canonical_weight']}")
    if "total_dimension" in report:
        lines.append(f"V({report['highest_weight']}): dimension {report['total_dimension']}")
    if report.get("truncated"):
        lines.append(f"truncated at depth {report['depth_limit']}; deeper weight spaces are not known")
    for check in report.get("checks", []):
        status = "PASS" if check["passed"] else "FAIL"
        where = ", ".join(
            f"{key}={value}" for key, value in sorted(check["details"].items())
            if key in ("N", "k", "r", "l", "weight", "vertex", "vertices", "relation")
        )
        lines.append(f"{status} {check['name']}: {check['identity']}" + (f" [{where}]" if where else ""))
    if "difference_is_zero" in report:
        lines.append(f"difference is zero: {report['difference_is_zero']}")
    if "passed" in report:
        lines.append("all checks passed" if report["passed"] else "verification FAILED")
    return lines


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    args.command = f"{args.group} {args.action}"
    configure_logging(args.verbose, args.quiet)
    try:
        config = RunConfig.from_args(args)
        if config.symbolic:
            backend_manager.set_backend("symbolic")
        else:
            backend_manager.set_backend("evaluation", seed=config.seed)
        report, passed = COMMANDS[config.command](config)
    except ERRORS + (ValueError, OSError) as e:
        print(f"decat: error: {e}", file=sys.stderr)
        return 2
    if config.output == "-":
        sys.stdout.write(write_report(report, None))
    else:
        if config.output is not None and config.command != "rep build":
            write_report(report, config.output)
        for line in summary_lines(report):
            print(line)
    return 1 if passed is False else 0
