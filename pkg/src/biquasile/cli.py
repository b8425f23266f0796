"""Command-line interface: ``biquasile <command> ...``.

Exit codes: 0 success, 1 domain failure, 2 parse or input error,
3 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import fixtures
from .algebra import Biquasile, alexander_biquasile, enumerate_biquasiles, parse_matrix, serialize_matrix
from .boltzmann import enhanced_invariant, load_weight
from .diagram import SCHEMAS, load_diagram, resolve, serialize_diagram, euler_check
from .errors import BiquasileError, BudgetExceededError, ExchangeAxiomError, ParseError
from .invariants import compare, invariant_table
from .solver import count_colorings, list_colorings, oracle_count

EXIT_DOMAIN, EXIT_PARSE, EXIT_BUDGET = 1, 2, 3


def resolve_algebra(spec: str) -> Biquasile:
    """An algebra from a file path, a built-in name, or ``alexander:N,d,s,n``."""
    if spec.startswith("alexander:"):
        try:
            N, d, s, n = (int(v) for v in spec.split(":", 1)[1].split(","))
        except ValueError:
            raise ParseError(f"bad Alexander spec {spec!r}; use alexander:N,d,s,n") from None
        return alexander_biquasile(N, d, s, n)
    p = Path(spec)
    if p.is_file():
        return parse_matrix(p.read_text(), name=p.stem)
    if spec in fixtures.algebra_names():
        return fixtures.algebra(spec)
    raise ParseError(f"no algebra file or built-in algebra named {spec!r}")


def resolve_diagram(spec: str):
    p = Path(spec)
    if p.is_file():
        return load_diagram(p)
    if spec in fixtures.diagram_names():
        return fixtures.diagram(spec)
    raise ParseError(f"no diagram file or fixture named {spec!r}")


def _algebra_from_args(args) -> Biquasile:
    if args.alexander is not None:
        return alexander_biquasile(*args.alexander)
    if args.algebra is None:
        raise ParseError("give an algebra file or --alexander N d s n")
    return resolve_algebra(args.algebra)


def _add_algebra(p: argparse.ArgumentParser):
    p.add_argument("algebra", nargs="?", help="algebra file, built-in name or alexander:N,d,s,n")
    p.add_argument("--alexander", nargs=4, type=int, metavar=("N", "d", "s", "n"),
                   help="use the Alexander biquasile with these parameters")


def cmd_check(args, out) -> int:
    text = Path(args.algebra).read_text()
    try:
        X = parse_matrix(text)
    except ExchangeAxiomError as e:
        print(f"fail: {e}", file=out)
        return EXIT_DOMAIN
    print(f"ok: biquasile of order {X.order}", file=out)
    return 0


def cmd_color(args, out) -> int:
    d = resolve_diagram(args.diagram)
    X = _algebra_from_args(args)
    for w in euler_check(d):
        print(f"warning: {w}", file=sys.stderr)
    if args.list:
        for f in list_colorings(d, X, args.schema):
            print(" ".join(str(c) for c in f.assignment), file=out)
        return 0
    if args.oracle:
        n = oracle_count(d, X, args.schema)
    else:
        n = count_colorings(d, X, args.schema, jobs=args.jobs)
    print(n, file=out)
    return 0


def cmd_invariant(args, out) -> int:
    d = resolve_diagram(args.diagram)
    X = _algebra_from_args(args)
    w = load_weight(args.weight, X)
    print(enhanced_invariant(d, X, w, args.schema).polynomial(), file=out)
    return 0


def cmd_enumerate(args, out) -> int:
    total = 0
    for total, X in enumerate(enumerate_biquasiles(args.order), 1):
        print(f"# biquasile {total}", file=out)
        out.write(serialize_matrix(X))
    print(f"# total {total}", file=out)
    return 0


def cmd_resolve(args, out) -> int:
    d = resolve_diagram(args.diagram)
    out.write(serialize_diagram(resolve(d, args.sign)))
    return 0


def cmd_compare(args, out) -> int:
    d1, d2 = resolve_diagram(args.first), resolve_diagram(args.second)
    algebras = [resolve_algebra(a) for a in args.algebras]
    weights = []
    for alg, wfile in args.weight or ():
        X = resolve_algebra(alg)
        weights.append(load_weight(wfile, X))
    out.write(compare(d1, d2, algebras, weights, args.schema).report())
    return 0


def cmd_table(args, out) -> int:
    diagrams = fixtures.load_corpus(args.corpus)
    algebras = [resolve_algebra(a) for a in args.algebras]
    table = invariant_table(diagrams, algebras, args.schema, jobs=args.jobs)
    if args.format == "lines":
        out.write("\n".join(table.lines()) + "\n")
    else:
        out.write(table.render())
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="biquasile",
                                 description="Biquasile colourings of marked graph diagrams.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--schema", choices=sorted(SCHEMAS), default="A",
                        help="marked-vertex colouring rule (default A)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="verify the biquasile axioms of an algebra file")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("color", parents=[common], help="count or list colourings of a diagram")
    p.add_argument("diagram")
    _add_algebra(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true", help="print the number of colourings (default)")
    g.add_argument("--list", action="store_true", help="print every colouring")
    p.add_argument("--oracle", action="store_true", help="count by brute force")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("invariant", parents=[common], help="Boltzmann-enhanced invariant as a polynomial")
    p.add_argument("diagram")
    _add_algebra(p)
    p.add_argument("weight", help="weight file")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("enumerate", parents=[common], help="list every biquasile of an order")
    p.add_argument("order", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("resolve", parents=[common], help="print the positive or negative resolution")
    p.add_argument("diagram")
    p.add_argument("sign", choices=["+", "-"])
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("compare", parents=[common], help="try to tell two diagrams apart")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--algebras", nargs="+", default=[])
    p.add_argument("--weight", nargs=2, action="append", metavar=("ALGEBRA", "WEIGHT"))
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("table", parents=[common], help="counting invariants of a corpus directory")
    p.add_argument("corpus", nargs="?", default=None,
                   help="directory of .mgd files (default: the bundled table corpus)")
    p.add_argument("--algebras", nargs="+", default=["X1", "X2", "X3"])
    p.add_argument("--format", choices=["table", "lines"], default="table")
    p.set_defaults(func=cmd_table)
    return ap


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args, out)
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except BiquasileError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
