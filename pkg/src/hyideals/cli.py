"""Command-line front end.

Usage:
    hyideals ring show "Z4 x GF(4)"
    hyideals hy check Z12 --y spec --ideal 6
    hyideals relative Z12 --y spec --ideal 4
    hyideals verify --corpus default --format json
    hyideals separation --corpus default

Environment:
    HYIDEALS_*  cap and sampling overrides, see hyideals.config
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import replace
from typing import Any

from hyideals import __version__
from hyideals.config import Config
from hyideals.report import CheckReport, RunReport
from hyideals.validation import ConsistencyError, ValidationError, validate_format
from hyideals.workbench import Workbench

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_INPUT = 2

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _names(labels: Sequence[str]) -> str:
    return ", ".join(labels) if labels else "-"


# -- Table renderers --


def _table_ring(data: dict[str, Any]) -> list[str]:
    lines = [f"{data['ring']} ({data['size']} elements)"]
    for key in ("elements", "units", "idempotents", "nilpotents"):
        lines.append(f"{key}: {_names(data[key])}")
    for key in ("local", "reduced", "regular", "root_property", "arithmetical"):
        lines.append(f"{key}: {_flag(data[key])}")
    return lines


def _table_ideals(data: dict[str, Any]) -> list[str]:
    lines = [f"{data['ring']}: {data['count']} ideals"]
    width = max(len(i["label"]) for i in data["ideals"])
    for ideal in data["ideals"]:
        lines.append(f"  {ideal['label']:<{width}}  {{{', '.join(ideal['members'])}}}")
    return lines


def _table_spectrum(data: dict[str, Any]) -> list[str]:
    keys = ("spec", "max", "min", "bourbaki", "affiliated")
    lines = [f"{key}: {_names(data[key])}" for key in keys]
    lines.append(f"jacobson: {data['jacobson']}")
    lines.append(f"nilradical: {data['nilradical']}")
    return lines


def _profile_lines(profile: dict[str, Any]) -> list[str]:
    return [f"  {name}: {_flag(v)}" for name, v in profile["verdicts"].items()]


def _table_hy_check(data: dict[str, Any]) -> list[str]:
    lines = [
        f"H_Y: {_flag(data['hy'])}, strong: {_flag(data['strong'])}, "
        f"fixed: {_flag(data['fixed'])}",
        f"ideal {data['ideal']['label']} = {{{', '.join(data['ideal']['members'])}}}"
        f" over Y={data['Y']}",
        "H_Y conditions:",
    ]
    lines += _profile_lines(data["profile"])
    lines.append("strong conditions:")
    lines += _profile_lines(data["strong_profile"])
    return lines


def _table_closure(data: dict[str, Any]) -> list[str]:
    return [
        f"closure: {data['closure']['label']}",
        f"strong closure: {data['strong_closure']['label']}",
        f"kh_Y: {data['kh']['label']}",
    ]


def _table_fixed(data: dict[str, Any]) -> list[str]:
    lines = [
        f"fixed: {_flag(data['fixed'])}",
        f"filter intersection: {_names(data['filter_intersection'])}",
        f"inverse image: {data['inverse_image']}",
        f"maximal fixed: {_names(data['maximal_fixed'])}",
    ]
    if "fixed_wrt" in data:
        lines.append(f"fixed w.r.t. {_names(data['wrt'])}: {_flag(data['fixed_wrt'])}")
    return lines


def _greatest(entry: dict[str, Any]) -> str:
    return entry["label"] + (" [trivial]" if entry["trivial"] else "")


def _table_relative(data: dict[str, Any]) -> list[str]:
    return [
        f"relative: {_flag(data['relative'])}; "
        f"greatest factor: {_greatest(data['greatest_factor'])}",
        f"relative strong: {_flag(data['relative_strong'])}; "
        f"greatest strong factor: {_greatest(data['strong_greatest_factor'])}",
        f"factors: {_names(data['factors'])}",
        f"minimal factors: {_names(data['minimal'])}",
        f"maximal factors: {_names(data['maximal'])}",
    ]


def _report_lines(r: CheckReport) -> list[str]:
    lines = [f"{r.verdict.value:<10} {r.id:<40} {r.instance.ring}/{r.instance.Y} ({r.examined})"]
    if r.witness is not None:
        lines.append(f"    witness: {json.dumps(r.witness, sort_keys=True)}")
    for note in r.notes:
        lines.append(f"    note: {note}")
    return lines


def _table_run(report: RunReport) -> list[str]:
    lines = []
    for r in report.results:
        lines += _report_lines(r)
    counts = " ".join(f"{k}={v}" for k, v in report.summary.items())
    lines.append(f"summary: {counts}")
    return lines


# -- Commands --


def _emit(data: Any, fmt: str, render: Callable[[Any], list[str]]) -> None:
    validate_format(fmt)
    if fmt == "json":
        if isinstance(data, RunReport):
            print(data.to_json())
        elif isinstance(data, CheckReport):
            print(data.model_dump_json(indent=2))
        else:
            print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print("\n".join(render(data)))


def _dispatch(args: argparse.Namespace, bench: Workbench) -> int:
    command = args.command
    if command == "ring":
        _emit(bench.ring_show(args.dsl), args.format, _table_ring)
    elif command == "ideals":
        _emit(bench.ideals(args.dsl), args.format, _table_ideals)
    elif command == "spec":
        _emit(bench.spectrum(args.dsl), args.format, _table_spectrum)
    elif command == "hy" and args.hy_command == "check":
        _emit(bench.hy_check(args.dsl, args.y, args.ideal), args.format, _table_hy_check)
    elif command == "hy":
        _emit(bench.hy_closure(args.dsl, args.y, args.ideal), args.format, _table_closure)
    elif command == "fixed":
        data = bench.fixed(args.dsl, args.y, args.ideal, args.wrt)
        _emit(data, args.format, _table_fixed)
    elif command == "relative":
        _emit(bench.relative(args.dsl, args.y, args.ideal), args.format, _table_relative)
    elif command == "verify":
        report = bench.verify(args.corpus, args.check or None)
        _emit(report, args.format, _table_run)
        return EXIT_FAILURES if report.failed else EXIT_OK
    elif command == "separation":
        found = bench.separation(args.corpus)
        _emit(found, args.format, _report_lines)
    return EXIT_OK


def _add_query(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("dsl", help="Ring in DSL syntax, e.g. 'Z12' or 'Z2 x GF(4)'")
    parser.add_argument("--y", default="spec", help="Subspace selector (default: spec)")
    parser.add_argument(
        "--ideal",
        nargs="+",
        required=True,
        metavar="GEN",
        help="Generators as element indices or labels such as (1,0)",
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default="table", help="table or json")
    common.add_argument("--seed", type=int, default=None, help="Sampling seed")
    common.add_argument("--workers", type=int, default=None, help="Verifier worker processes")

    parser = argparse.ArgumentParser(
        prog="hyideals",
        description="H_Y-ideals over Zariski spectra of finite commutative rings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="Ring-level facts")
    ring_sub = ring.add_subparsers(dest="ring_command", required=True)
    show = ring_sub.add_parser("show", parents=[common], help="Elements and ring predicates")
    show.add_argument("dsl")

    for name, text in (("ideals", "List the ideal lattice"), ("spec", "Prime spectrum")):
        sub.add_parser(name, parents=[common], help=text).add_argument("dsl")

    hy = sub.add_parser("hy", help="H_Y-ideal queries")
    hy_sub = hy.add_subparsers(dest="hy_command", required=True)
    _add_query(hy_sub.add_parser("check", parents=[common], help="Condition profiles"))
    _add_query(hy_sub.add_parser("closure", parents=[common], help="I_H, I_SH and kh_Y(I)"))

    fixed = sub.add_parser("fixed", parents=[common], help="Fixed and free ideals")
    _add_query(fixed)
    fixed.add_argument("--wrt", default=None, help="Subset S of Y as indices:[...]")

    relative = sub.add_parser("relative", parents=[common], help="Relative verdict and factors")
    _add_query(relative)

    verify = sub.add_parser("verify", parents=[common], help="Run the theorem checks")
    verify.add_argument("--corpus", default="default", help="Corpus file or 'default'")
    verify.add_argument(
        "--check", action="append", default=[], help="Restrict to a check id or label like T3.9"
    )

    separation = sub.add_parser(
        "separation", parents=[common], help="Search for H_Y-ideals that are not strong"
    )
    separation.add_argument("--corpus", default="default", help="Corpus file or 'default'")

    sub.add_parser("serve", parents=[common], help="Run the MCP tool server over stdio")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = Config.from_env()
        if args.seed is not None:
            config = replace(config, seed=args.seed)
        if args.workers is not None:
            config = replace(config, workers=args.workers)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    logging.basicConfig(level=config.log_level, format=LOG_FORMAT, stream=sys.stderr)

    if args.command == "serve":
        from hyideals.server import serve

        serve(config)
        return EXIT_OK

    try:
        return _dispatch(args, Workbench(config))
    except ValidationError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as e:
        logger.error("internal disagreement: %s", e)
        return EXIT_FAILURES


if __name__ == "__main__":
    sys.exit(main())
