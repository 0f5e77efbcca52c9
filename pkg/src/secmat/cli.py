"""Command-line front end.

Subcommands: ``matrix`` prints the sectional matrix, ``analyze`` the full
report, ``rgin`` and ``lt`` the minimal generators of the generic initial
ideal and of a leading-term ideal.  Identical (file, --seed) pairs produce
byte-identical output.

Exit codes: 0 ok, 2 parse error, 3 semantic error, 4 genericity failure,
5 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    GenericityError,
    InvariantViolation,
    ParseError,
    PreconditionError,
    SecmatError,
    SemanticError,
)
from .gin import rgin
from .groebner import buchberger, leading_term_ideal, truncation_ideal
from .monomial_ideals import MonomialIdeal
from .parsing import parse_document
from .polynomials import Ideal
from .report import analyze, report_to_dict
from .rings import TermOrder
from .sectional import SectionalMatrix, sectional_matrix, sectional_matrix_direct_oracle

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_GENERICITY = 4
EXIT_INTERNAL = 5


def _load_ideal(path: str, truncate: int | None) -> Ideal:
    with open(path, encoding="utf-8") as handle:
        document = parse_document(handle.read())
    ideal = document.ideal()
    if truncate is not None:
        if not ideal.is_homogeneous:
            raise SemanticError("--truncate needs homogeneous generators")
        ideal = truncation_ideal(ideal, truncate)
    return ideal


def _format_matrix(matrix: SectionalMatrix) -> str:
    width = max(
        (len(str(v)) for row in matrix.rows for v in row), default=1
    )
    width = max(width, len(f"_{matrix.max_degree}"))
    header = " ".join(f"_{d}".rjust(width) for d in range(matrix.max_degree + 1))
    label = max(len(f"{matrix.arity}:"), 3)
    lines = [" " * label + " " + header]
    for i in range(1, matrix.arity + 1):
        cells = " ".join(str(v).rjust(width) for v in matrix.row(i))
        lines.append(f"{i}:".rjust(label) + " " + cells)
    return "\n".join(lines)


def _format_monomial_ideal(ideal: MonomialIdeal) -> str:
    return str(ideal)


def _print_json(payload: dict):
    print(json.dumps(payload, indent=2, sort_keys=True))


def _cmd_matrix(args) -> int:
    ideal = _load_ideal(args.file, args.truncate)
    extra = 1
    matrix = sectional_matrix(ideal, args.seed)
    if args.max_degree is not None and args.max_degree > matrix.max_degree:
        extra = args.max_degree - matrix.reg
        matrix = sectional_matrix(ideal, args.seed, extra_degrees=extra)
    if args.oracle:
        for i in range(1, matrix.arity + 1):
            for d in range(matrix.max_degree + 1):
                direct = sectional_matrix_direct_oracle(ideal, i, d, args.seed)
                if direct != matrix.entry(i, d):
                    raise InvariantViolation(
                        f"oracle disagrees at ({i}, {d}): "
                        f"{direct} vs {matrix.entry(i, d)}"
                    )
    if args.json:
        from .report import matrix_to_dict

        _print_json(matrix_to_dict(matrix))
        return EXIT_OK
    print(f"ring: {', '.join(matrix.ring.variables)}")
    print(f"seed: {args.seed}")
    print(f"regularity: {matrix.reg}")
    print(f"sectional matrix (degrees 0..{matrix.max_degree}):")
    print(_format_matrix(matrix))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    ideal = _load_ideal(args.file, args.truncate)
    report = analyze(ideal, args.seed)
    if args.json:
        _print_json(report_to_dict(report))
        return EXIT_OK
    print(f"ring: {', '.join(report.variables)}")
    print(f"seed: {args.seed}")
    print(f"regularity: {report.reg}")
    print(f"sectional matrix (degrees 0..{report.matrix.max_degree}):")
    print(_format_matrix(report.matrix))
    print(f"rgin: {_format_monomial_ideal(report.matrix.source)}")
    print(f"dim: {report.dim}")
    print(f"deg: {report.deg}")
    print(f"detection degree: {report.detection_degree}")
    if report.early_detection:
        delta, dim, deg = report.early_detection
        print(f"early detection: dim {dim}, deg {deg} already at degree {delta}")
    for s, value in report.reduction_numbers:
        print(f"reduction number r_{s}: {value}")
    if report.reduction_number is not None:
        print(f"reduction number r (s = dim): {report.reduction_number}")
    for delta, k in report.potential_gcd_degrees:
        print(f"potential GCD degree at {delta}: {k}")
    if report.gcd_polynomial is not None:
        print(f"gcd of first qualifying truncation: {report.gcd_polynomial}")
    print(f"saturated: {str(report.saturated).lower()}")
    for delta, flag in report.truncation_saturated:
        print(f"truncation({delta}) saturated: {str(flag).lower()}")
    for note in report.notes:
        print(f"note: {note}")
    return EXIT_OK


def _cmd_rgin(args) -> int:
    ideal = _load_ideal(args.file, args.truncate)
    result = rgin(ideal, args.seed)
    if args.json:
        _print_json(
            {
                "variables": list(ideal.ring.variables),
                "seed": result.seed,
                "trials_used": result.trials_used,
                "method": result.method,
                "rgin": sorted(list(t) for t in result.rgin.min_gens),
                "regularity": result.regularity,
            }
        )
        return EXIT_OK
    print(f"ring: {', '.join(ideal.ring.variables)}")
    print(f"seed: {args.seed}")
    print(f"rgin: {_format_monomial_ideal(result.rgin)}")
    print(f"regularity: {result.regularity}")
    print(f"method: {result.method} (trials used: {result.trials_used})")
    return EXIT_OK


def _cmd_lt(args) -> int:
    ideal = _load_ideal(args.file, args.truncate)
    if ideal.is_zero:
        raise SemanticError("the zero ideal has no leading terms")
    order = TermOrder.from_name(args.order)
    basis = buchberger(ideal, order)
    lt = leading_term_ideal(basis)
    if args.json:
        _print_json(
            {
                "variables": list(ideal.ring.variables),
                "order": order.value,
                "leading_term_ideal": sorted(list(t) for t in lt.min_gens),
            }
        )
        return EXIT_OK
    print(f"ring: {', '.join(ideal.ring.variables)}")
    print(f"order: {order.value}")
    print(f"leading term ideal: {_format_monomial_ideal(lt)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secmat",
        description="Sectional matrices of homogeneous ideals and their diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="ideal description file")
        p.add_argument("--seed", type=int, default=42, help="random seed (default 42)")
        p.add_argument("--truncate", type=int, default=None, metavar="DELTA",
                       help="replace the ideal by its degree-DELTA truncation")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p_matrix = sub.add_parser("matrix", help="print the sectional matrix")
    common(p_matrix)
    p_matrix.add_argument("--max-degree", type=int, default=None,
                          help="extend the column range beyond reg+1")
    p_matrix.add_argument("--oracle", action="store_true",
                          help="cross-check entries with the linear-algebra oracle")
    p_matrix.set_defaults(handler=_cmd_matrix)

    p_analyze = sub.add_parser("analyze", help="print the full analysis report")
    common(p_analyze)
    p_analyze.set_defaults(handler=_cmd_analyze)

    p_rgin = sub.add_parser("rgin", help="print the generic initial ideal")
    common(p_rgin)
    p_rgin.set_defaults(handler=_cmd_rgin)

    p_lt = sub.add_parser("lt", help="print a leading-term ideal")
    common(p_lt)
    p_lt.add_argument("--order", default="degrevlex",
                      choices=["degrevlex", "lex", "deglex"])
    p_lt.set_defaults(handler=_cmd_lt)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SemanticError, PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except GenericityError as exc:
        print(f"genericity failure: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except (InvariantViolation, SecmatError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
