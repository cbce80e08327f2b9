"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 validation failure, 3 methods disagree.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import formats
from .decompose import METHODS, LRResult, lr
from .formats import FORMAT_TAG, ParseError
from .graph import CrystalTooLarge, component_of
from .insertion import insertion_steps
from .kernels import weight
from .partitions import check_strict
from .ssdt import ShiftedTableau, build_crystal, violation
from .weyl import enumerate_highest
from .words import check_rank

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class ValidationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--rank", type=_positive, required=True, help="rank n of q(n)")
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1,
                        help="worker processes for large sweeps (default: all cores)")
    common.add_argument("--max-size", type=_positive, default=200_000,
                        help="refuse crystals with more vertices than this")

    parser = _Parser(prog="qcrystal", description="Crystals of the queer Lie superalgebra q(n).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("crystal", parents=[common], help="the crystal B(lambda)")
    p.add_argument("shape", help="strict partition, e.g. 3,1 (0 for the empty partition)")
    p.add_argument("--format", choices=("dot", "text", "json"), default="dot")
    p.add_argument("--ascii", action="store_true", help="write odd labels as i~")

    p = sub.add_parser("lr", parents=[common], help="decompose B(lambda) (x) B(mu)")
    p.add_argument("lam", metavar="lambda")
    p.add_argument("mu")
    p.add_argument("--method", choices=(*METHODS, "all"), default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("insert", parents=[common], help="trace T <- letters or T <- T'")
    p.add_argument("tableau", help="tableau literal, rows joined by '/'")
    p.add_argument("other", help="letters to insert, or a tableau literal containing '/'")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("hwv", parents=[common], help="highest weight words of B^(x)N")
    p.add_argument("length", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _partition(text: str, n: int):
    try:
        lam = formats.parse_partition(text)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    try:
        return check_strict(lam, n)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _tableau(text: str, n: int) -> ShiftedTableau:
    try:
        T = formats.parse_tableau(text, n)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise ValidationError(str(exc)) from None
    problem = violation(T)
    if problem is not None:
        raise ValidationError(f"{text!r} is not a semistandard decomposition tableau: {problem}")
    return T


def cmd_crystal(args, out) -> int:
    n = args.rank
    lam = _partition(args.shape, n)
    G = build_crystal(lam, n, max_vertices=args.max_size)
    name = f"B({formats.format_partition(lam)}) n={n}"
    if args.format == "dot":
        out.write(formats.to_dot(G, name=name, ascii=args.ascii))
    elif args.format == "text":
        out.write(formats.crystal_text(G, ascii=args.ascii))
    else:
        out.write(formats.dumps(formats.crystal_record(G)))
    return EXIT_OK


def _terms(res: LRResult):
    return [{"nu": list(nu), "multiplicity": m} for nu, m in res.items()]


def cmd_lr(args, out) -> int:
    n = args.rank
    lam = _partition(args.lam, n)
    mu = _partition(args.mu, n)
    methods = METHODS if args.method == "all" else (args.method,)
    sizes = [len(build_crystal(p, n, max_vertices=args.max_size)) for p in (lam, mu)]
    if "graph" in methods:
        projected = sizes[0] * sizes[1]
        if projected > args.max_size:
            raise CrystalTooLarge(f"tensor product has {projected} vertices (> --max-size {args.max_size})")
    results = {m: lr(lam, mu, n, m, workers=args.threads) for m in methods}
    first = results[methods[0]]
    agree = all(r == first for r in results.values())
    if args.format == "json":
        record = {
            "format": FORMAT_TAG, "kind": "lr", "rank": n,
            "lambda": list(lam), "mu": list(mu), "method": args.method,
            "terms": _terms(first), "agree": agree,
        }
        if not agree:
            record["by_method"] = {m: _terms(r) for m, r in results.items()}
        out.write(formats.dumps(record))
    else:
        lam_s, mu_s = formats.format_partition(lam), formats.format_partition(mu)
        out.write(f"B({lam_s}) x B({mu_s}), n={n}, method={args.method}\n")
        for nu, m in first.items():
            out.write(f"  ({formats.format_partition(nu)})  {m}\n")
        if len(methods) > 1:
            out.write(f"methods {'agree' if agree else 'DISAGREE'}: {', '.join(methods)}\n")
    if agree:
        return EXIT_OK
    for nu in sorted(set().union(*(r.coefficients for r in results.values())), reverse=True):
        counts = {m: r.coefficients.get(nu, 0) for m, r in results.items()}
        if len(set(counts.values())) > 1:
            witness = next((r.witnesses[nu][0] for r in results.values() if r.witnesses.get(nu)), None)
            print(f"disagreement at nu=({formats.format_partition(nu)}): {counts}; witness {witness}",
                  file=sys.stderr)
    return EXIT_DISAGREE


def cmd_insert(args, out) -> int:
    n = args.rank
    T = _tableau(args.tableau, n)
    if "/" in args.other:
        letters = _tableau(args.other, n).reading_word()
    else:
        try:
            letters = formats.parse_word(args.other, n)
        except ParseError as exc:
            raise UsageError(str(exc)) from None
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
    steps = list(insertion_steps(T, letters, check=False))
    for S in steps:
        problem = violation(S)
        if problem is not None:
            raise ValidationError(f"insertion produced an invalid tableau {S}: {problem}")
    if args.format == "json":
        out.write(formats.dumps({
            "format": FORMAT_TAG, "kind": "insert", "rank": n,
            "start": formats.format_tableau(T, n),
            "steps": [{"letter": x, "tableau": formats.format_tableau(S, n)}
                      for x, S in zip(letters, steps)],
            "result": formats.format_tableau(steps[-1] if steps else T, n),
        }))
    else:
        out.write(f"{formats.format_tableau(T, n)}\n")
        for x, S in zip(letters, steps):
            out.write(f"<- {x}  {formats.format_tableau(S, n)}\n")
    return EXIT_OK


def cmd_hwv(args, out) -> int:
    n = args.rank
    if args.length < 1:
        raise UsageError("length must be at least 1")
    rows = []
    for w in sorted(enumerate_highest(args.length, n)):
        size = len(component_of(w, n, max_vertices=args.max_size))
        rows.append((w, size))
    if args.format == "json":
        out.write(formats.dumps({
            "format": FORMAT_TAG, "kind": "hwv", "rank": n, "length": args.length,
            "vectors": [{"word": formats.format_word(w, n), "weight": list(weight(w, n)),
                         "component_size": s} for w, s in rows],
        }))
    else:
        for w, s in rows:
            out.write(f"{formats.format_word(w, n)} {formats.format_weight(weight(w, n))} {s}\n")
    return EXIT_OK


COMMANDS = {"crystal": cmd_crystal, "lr": cmd_lr, "insert": cmd_insert, "hwv": cmd_hwv}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        check_rank(args.rank)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"qcrystal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CrystalTooLarge as exc:
        print(f"qcrystal: refused: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"qcrystal: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
