"""Command-line surface.

    orbit analyze|chart|verify|classify --family sl --size 3 \
        --element FILE_OR_JSON [--seed 42] [--samples 10] [--out FILE]

stdout carries only JSON (stable key order, canonical rational strings);
diagnostics go to stderr. Exit codes: 0 success (for `verify`: all checks
passed), 1 failed verification checks, 2 parse error, 3 element not in the
algebra, 4 witness search failure, 5 zero element / zero semisimple part.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .charts import build_chart, chart_to_json
from .grading import WitnessNotFoundError
from .jordan import jordan_decompose, jordan_pair_to_json
from .liealg import LieAlgebra, LieElement, NotInAlgebraError, build_classical, centralizer_basis
from .linalg import RatMatrix, matrix_from_json, matrix_to_json
from .verify import (
    ZeroSemisimplePartError,
    class_id_to_json,
    hamiltonian_class,
    invariants,
    kostant_rep,
    redstab_suite,
    report_to_json,
    verify_chart,
)

EXIT_OK = 0
EXIT_CHECKS_FAILED = 1
EXIT_PARSE = 2
EXIT_NOT_IN_ALGEBRA = 3
EXIT_NO_WITNESS = 4
EXIT_ZERO_ELEMENT = 5


class ElementParseError(ValueError):
    pass


class ZeroElementError(ValueError):
    pass


@dataclass
class RunConfig:
    algebra_family: str
    size: int
    element_source: str
    seed: int = 42
    samples: int = 10
    output: Optional[str] = None


def _load_element_matrix(source: str) -> RatMatrix:
    text = source
    if not source.lstrip().startswith("{"):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise ElementParseError(f"cannot read element file {source!r}: {exc}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ElementParseError(f"element is not valid JSON: {exc}")
    if not isinstance(data, dict) or "matrix" not in data:
        raise ElementParseError('element JSON must be an object with a "matrix" key')
    try:
        return matrix_from_json(data["matrix"])
    except ValueError as exc:
        raise ElementParseError(str(exc))


def _resolve(config: RunConfig) -> tuple:
    algebra = build_classical(config.algebra_family, config.size)
    matrix = _load_element_matrix(config.element_source)
    if matrix.rows != config.size or matrix.cols != config.size:
        raise NotInAlgebraError(
            f"element is {matrix.rows}x{matrix.cols}, expected {config.size}x{config.size}"
        )
    element = algebra.element_from_matrix(matrix)
    return algebra, element


def _case_of(algebra: LieAlgebra, x: LieElement) -> tuple:
    pair = jordan_decompose(algebra, x)
    if x.is_zero():
        case = "zero"
    elif pair.semisimple.is_zero():
        case = "nilpotent"
    elif pair.nilpotent.is_zero():
        case = "semisimple"
    else:
        case = "mixed"
    return pair, case


def cmd_analyze(config: RunConfig) -> dict:
    algebra, x = _resolve(config)
    pair, case = _case_of(algebra, x)
    cdim = centralizer_basis(algebra, x).dim
    out = {
        "algebra": algebra.label,
        "case": case,
        "jordan": jordan_pair_to_json(pair),
        "centralizer_dim": cdim,
        "orbit_dim": algebra.dim - cdim,
    }
    if algebra.family == "sl" and not pair.semisimple.is_zero():
        out["class_id"] = class_id_to_json(invariants(algebra, pair.semisimple))
    return out


def cmd_chart(config: RunConfig) -> dict:
    algebra, x = _resolve(config)
    if x.is_zero():
        raise ZeroElementError("the zero element has no chart")
    chart = build_chart(algebra, x, config.seed)
    return chart_to_json(chart)


def cmd_verify(config: RunConfig) -> dict:
    algebra, x = _resolve(config)
    if x.is_zero():
        raise ZeroElementError("the zero element has no chart")
    chart = build_chart(algebra, x, config.seed)
    chart_report = verify_chart(algebra, x, chart, config.seed, config.samples)
    red_report = redstab_suite(algebra, x, config.seed)
    return {
        "chart_verification": report_to_json(chart_report),
        "redstab": report_to_json(red_report),
        "overall_pass": chart_report.overall_pass and red_report.overall_pass,
    }


def cmd_classify(config: RunConfig) -> dict:
    algebra, x = _resolve(config)
    cid = hamiltonian_class(algebra, x)
    rep = kostant_rep(config.size, cid)
    return {
        "class_id": class_id_to_json(cid),
        "kostant_representative": matrix_to_json(rep.matrix),
    }


_COMMANDS = {
    "analyze": cmd_analyze,
    "chart": cmd_chart,
    "verify": cmd_verify,
    "classify": cmd_classify,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbit",
        description="Exact charts and verification for adjoint orbits of "
                    "classical matrix Lie algebras over the rationals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("analyze", "Jordan split, case, centralizer and orbit dimensions"),
        ("chart", "build the orbit chart and print it as JSON"),
        ("verify", "build the chart and run the exact verification suites"),
        ("classify", "invariant class id and its semisimple representative"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--family", required=True, choices=("sl", "so", "sp"))
        p.add_argument("--size", required=True, type=int)
        p.add_argument("--element", required=True,
                       help="path to an element JSON file, or inline JSON "
                            '{"matrix": [["p/q", ...], ...]}')
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--samples", type=int, default=10)
        p.add_argument("--out", default=None, help="write JSON here instead of stdout")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    config = RunConfig(
        algebra_family=args.family,
        size=args.size,
        element_source=args.element,
        seed=args.seed,
        samples=args.samples,
        output=args.out,
    )
    try:
        result = _COMMANDS[args.command](config)
    except ElementParseError as exc:
        print(f"orbit: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotInAlgebraError as exc:
        print(f"orbit: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_ALGEBRA
    except WitnessNotFoundError as exc:
        print(f"orbit: {exc}", file=sys.stderr)
        return EXIT_NO_WITNESS
    except (ZeroElementError, ZeroSemisimplePartError) as exc:
        print(f"orbit: {exc}", file=sys.stderr)
        return EXIT_ZERO_ELEMENT
    except ValueError as exc:
        print(f"orbit: {exc}", file=sys.stderr)
        return EXIT_PARSE
    text = json.dumps(result, indent=2) + "\n"
    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not result["overall_pass"]:
        return EXIT_CHECKS_FAILED
    return EXIT_OK


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
