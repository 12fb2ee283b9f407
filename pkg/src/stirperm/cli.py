"""Command-line interface.

Subcommands: enumerate, series, formula, biject, verify.  Output is
byte-deterministic for fixed flags: fixed orderings everywhere, decimal
strings for all numbers, and no timings unless asked for.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bijections, formulas, generation, series, verification
from .errors import (
    BadPattern,
    LimitExceeded,
    NotAvoider,
    StirpermError,
    UnknownEquation,
)
from .polynomials import Polynomial
from .trees import FCOrderedTree, OrderedTree, TernaryTree
from .words import format_word, parse_word, stats, validate_pattern

DEFAULT_LIMIT = 8


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stirperm",
        description="Enumerate pattern-avoiding Stirling permutations, evaluate "
        "their counting formulas and generating-function equations, and run "
        "the bijections between avoiders and trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list Stirling permutations")
    p_enum.add_argument("--n", type=int, required=True, help="order")
    p_enum.add_argument(
        "--avoid", action="append", default=[], metavar="PATTERN",
        help="pattern to avoid (repeatable), e.g. 213 or 1122",
    )
    p_enum.add_argument("--stats", action="store_true", help="append des,asc,plat columns")
    p_enum.add_argument("--format", choices=("lines", "json", "csv"), default=None)
    p_enum.add_argument("--force", action="store_true", help="override the size limit")
    p_enum.add_argument("--jobs", type=int, default=1, help="accepted for symmetry; enumeration is ordered")

    p_series = sub.add_parser("series", help="solve a generating-function equation")
    p_series.add_argument(
        "--eq", required=True,
        help="equation id: 213, 123, 132, R, prepend1:<chain>, prepend11:<chain>",
    )
    p_series.add_argument("--order", type=int, default=10, help="truncation order N")
    p_series.add_argument(
        "--spec", default=None, metavar="ASSIGN",
        help="specialization, e.g. p=1,q=1 or all=1, applied before printing",
    )
    p_series.add_argument("--format", choices=("lines", "json"), default="lines")

    p_formula = sub.add_parser("formula", help="evaluate a closed-form count")
    p_formula.add_argument("--id", required=True, dest="formula_id",
                           help="formula id, e.g. count-213 or plateaus-123")
    p_formula.add_argument("--n", type=int, required=True)
    p_formula.add_argument(
        "--param", action="append", default=[], metavar="NAME=VALUE",
        help="extra integer parameter, e.g. d=2 (repeatable)",
    )
    p_formula.add_argument("--format", choices=("lines", "json"), default="lines")
    p_formula.add_argument("--list", action="store_true", help="list formula ids and exit")

    p_biject = sub.add_parser("biject", help="run a bijection or verify one")
    p_biject.add_argument("map", choices=("phi", "psi", "rho", "fc", "verify"))
    p_biject.add_argument("--direction", choices=("fwd", "inv"), default="fwd")
    p_biject.add_argument("--input", default=None, help="word, tree string, or perm|s pair")
    p_biject.add_argument("--family", choices=("123", "132"), default="123",
                          help="avoidance class for psi")
    p_biject.add_argument("--map", dest="verify_map", default=None,
                          help="map name for the verify verb: phi, psi-123, psi-132, rho, fc")
    p_biject.add_argument("--n", type=int, default=None, help="order for the verify verb")

    p_verify = sub.add_parser("verify", help="run cross-validation suites")
    p_verify.add_argument("--suite", default="all",
                          help="suite name (see --list), default all")
    p_verify.add_argument("--n", default="1..5", metavar="RANGE",
                          help="order range, e.g. 1..5 or a single integer")
    p_verify.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p_verify.add_argument("--timings", action="store_true", help="include elapsed seconds")
    p_verify.add_argument("--list", action="store_true", help="list suites and exit")

    return parser


# -- enumerate ---------------------------------------------------------------


def cmd_enumerate(args):
    if args.n < 0:
        raise BadPattern("order must be nonnegative")
    if args.n > DEFAULT_LIMIT and not args.force:
        raise LimitExceeded(
            f"order {args.n} exceeds the default limit {DEFAULT_LIMIT} "
            f"({generation.double_factorial_odd(args.n)} permutations); "
            "pass --force to proceed"
        )
    patterns = tuple(validate_pattern(parse_word(p)) for p in args.avoid)
    fmt = args.format or ("csv" if args.stats else "lines")
    stream = generation.generate_avoiders(args.n, patterns)

    if fmt == "json":
        rows = []
        for word in stream:
            if args.stats:
                s = stats(word)
                rows.append(
                    {"word": format_word(word), "des": s.des, "asc": s.asc, "plat": s.plat}
                )
            else:
                rows.append(format_word(word))
        print(json.dumps(rows))
        return 0

    if fmt == "csv":
        print("word,des,asc,plat" if args.stats else "word")
        for word in stream:
            if args.stats:
                s = stats(word)
                print(f"{format_word(word)},{s.des},{s.asc},{s.plat}")
            else:
                print(format_word(word))
        return 0

    for word in stream:
        if args.stats:
            s = stats(word)
            print(f"{format_word(word)} {s.des} {s.asc} {s.plat}")
        else:
            print(format_word(word))
    return 0


# -- series ------------------------------------------------------------------


def _parse_spec(text, vars):
    values = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        name, _, value = piece.partition("=")
        name = name.strip()
        try:
            number = int(value)
        except ValueError as exc:
            raise BadPattern(f"bad specialization {piece!r}") from exc
        if name == "all":
            for v in vars:
                values[v] = number
        elif name in vars:
            values[name] = number
        else:
            raise BadPattern(f"unknown variable {name!r}; have {vars}")
    return values


def _resolve_series(eq, order):
    if eq == "213":
        return series.series_213(order)
    if eq == "123":
        return series.series_123(order)
    if eq == "132":
        return series.series_132(order)
    if eq == "R":
        return series.solve_R(order)
    if eq.startswith("prepend1:") or eq.startswith("prepend11:"):
        verb, _, chain = eq.partition(":")
        blocks = tuple(b.strip() for b in chain.split(",") if b.strip())
        if not blocks:
            raise UnknownEquation(f"empty chain in {eq!r}")
        expected_head = verb.removeprefix("prepend")
        if blocks[0] != expected_head:
            raise UnknownEquation(
                f"chain head {blocks[0]!r} does not match verb {verb!r}"
            )
        try:
            return series.pair_series(blocks, order)
        except ValueError as exc:
            raise UnknownEquation(str(exc)) from exc
    raise UnknownEquation(
        f"unknown equation {eq!r}; known: 213, 123, 132, R, prepend1:<chain>, prepend11:<chain>"
    )


def cmd_series(args):
    ser = _resolve_series(args.eq, args.order)
    if args.spec:
        ser = ser.specialize(_parse_spec(args.spec, ser.vars))
    if args.format == "json":
        print(json.dumps(ser.to_json_obj()))
        return 0
    print(", ".join(str(ser.coefficient(k)) for k in range(ser.order + 1)))
    return 0


# -- formula -----------------------------------------------------------------


def cmd_formula(args):
    if args.list:
        for name in sorted(formulas.FORMULAS):
            spec = formulas.FORMULAS[name]
            extra = ("; needs " + ",".join(spec.params)) if spec.params else ""
            print(f"{name}: {spec.summary}{extra}")
        return 0
    spec = formulas.FORMULAS.get(args.formula_id)
    if spec is None:
        raise UnknownEquation(
            f"unknown formula {args.formula_id!r}; known: {', '.join(sorted(formulas.FORMULAS))}"
        )
    params = {}
    for piece in args.param:
        name, _, value = piece.partition("=")
        try:
            params[name.strip()] = int(value)
        except ValueError as exc:
            raise BadPattern(f"bad parameter {piece!r}") from exc
    missing = [p for p in spec.params if p not in params]
    if missing:
        raise BadPattern(f"formula {args.formula_id} needs --param {','.join(missing)}")
    value = spec.func(args.n, *[params[p] for p in spec.params])
    if spec.kind == "poly":
        if args.format == "json":
            print(json.dumps(value.to_json_obj()))
        else:
            print(str(value))
    else:
        if args.format == "json":
            print(json.dumps({"value": str(value)}))
        else:
            print(value)
    return 0


# -- biject ------------------------------------------------------------------


def _parse_pair(text):
    perm_text, _, s_text = text.partition("|")
    perm = parse_word(perm_text)
    if not s_text:
        raise BadPattern("pair input must look like 'perm|s', e.g. 4,6,5,2,1,3|3,1,1")
    s = tuple(int(x) for x in s_text.split(","))
    return perm, s


def _format_pair(pair):
    perm, s = pair
    return f"{format_word(perm)}|{','.join(str(x) for x in s)}"


def cmd_biject(args):
    if args.map == "verify":
        name = args.verify_map
        if name is None or args.n is None:
            raise BadPattern("biject verify needs --map and --n")
        runners = {
            "phi": bijections.verify_phi,
            "psi-123": lambda n: bijections.verify_psi(n, "123"),
            "psi-132": lambda n: bijections.verify_psi(n, "132"),
            "rho": bijections.verify_rho,
            "fc": bijections.verify_fc,
        }
        if name not in runners:
            raise BadPattern(f"unknown map {name!r}; known: {', '.join(sorted(runners))}")
        report = runners[name](args.n)
        report = {"map": name, "n": args.n, **report}
        print(json.dumps(report))
        return 0 if report["failures"] == 0 and report["statistic_transport"]["failures"] == 0 else 1

    if args.input is None:
        raise BadPattern("biject needs --input")
    text = args.input
    if args.map == "phi":
        if args.direction == "fwd":
            print(bijections.phi(parse_word(text)).serialize())
        else:
            print(format_word(bijections.phi_inverse(TernaryTree.parse(text))))
    elif args.map == "psi":
        if args.direction == "fwd":
            word = parse_word(text)
            perm, s = bijections.psi(word)
            print(json.dumps({"perm": format_word(perm), "s": list(s)}))
        else:
            pair = _parse_pair(text)
            inverse = (
                bijections.psi_inverse_123
                if args.family == "123"
                else bijections.psi_inverse_132
            )
            print(format_word(inverse(pair)))
    elif args.map == "rho":
        if args.direction == "fwd":
            print(bijections.rho(parse_word(text)).serialize())
        else:
            print(format_word(bijections.rho_inverse(OrderedTree.parse(text))))
    elif args.map == "fc":
        if args.direction == "fwd":
            print(bijections.to_fc_tree(_parse_pair(text)).serialize())
        else:
            print(_format_pair(bijections.from_fc_tree(FCOrderedTree.parse(text))))
    return 0


# -- verify ------------------------------------------------------------------


def _parse_range(text):
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    n = int(text)
    return range(n, n + 1)


def cmd_verify(args):
    if args.list:
        for name in verification.SUITES:
            print(f"{name}: {', '.join(verification.SUITES[name])}")
        return 0
    jobs = args.jobs
    env_jobs = os.environ.get("STIRPERM_JOBS")
    if env_jobs:
        jobs = int(env_jobs)
    try:
        results = verification.run_checks(args.suite, _parse_range(args.n), jobs=jobs)
    except ValueError as exc:
        raise BadPattern(str(exc)) from exc
    width = max(len(r.check_id) for r in results)
    for r in results:
        line = f"{r.status.upper():4}  {r.check_id:<{width}}"
        if args.timings:
            line += f"  {r.elapsed:7.2f}s"
        if not r.ok:
            line += f"  expected {r.expected}; got {r.actual}"
            if r.counterexample:
                line += f"  [{r.counterexample}]"
        print(line)
    passed = sum(1 for r in results if r.ok)
    print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    handlers = {
        "enumerate": cmd_enumerate,
        "series": cmd_series,
        "formula": cmd_formula,
        "biject": cmd_biject,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (BadPattern, LimitExceeded, UnknownEquation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotAvoider, StirpermError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    raise SystemExit(main())


if __name__ == "__main__":
    run()
