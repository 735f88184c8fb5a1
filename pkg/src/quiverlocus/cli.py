"""Command-line interface: ``quiverlocus <command> ...``.

Exit codes: 0 success, 1 parse or validation failure, 2 invariant-suite failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .factorseq import distinct_array, factor_sequences, format_listing, standard_array
from .quiver import RankConditionError, RankConditions, coefficients
from .sampling import DEFAULT_SEED
from .schubert import Permutation, specialize_double, specialize_single, universal_expansion
from .symbols import format_partition, format_terms
from .verify import VerifyConfig, run_suites

EXIT_OK, EXIT_INPUT, EXIT_SUITE = 0, 1, 2


class InputError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _read_conditions(path: str) -> RankConditions:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        r = RankConditions.parse(text)
    except RankConditionError as exc:
        raise InputError(f"parse error: {exc}") from None
    ok, bad = r.validate()
    if not ok:
        raise InputError(f"invalid rank conditions: {bad.kind} inequality fails at {bad}")
    return r


def _terms_payload(poly) -> list[dict]:
    return [{"coeff": c, "lambda": [list(p) for p in key]} for key, c in poly.items()]


# commands: each returns (text, structured payload, exit code) -----------------

def cmd_coefficients(args):
    r = _read_conditions(args.file)
    poly = coefficients(r)
    return format_terms(poly), {"valid": True, "codim": r.codim(), "terms": _terms_payload(poly)}, EXIT_OK


def cmd_codim(args):
    r = _read_conditions(args.file)
    return str(r.codim()), {"valid": True, "codim": r.codim()}, EXIT_OK


def cmd_rectangles(args):
    r = _read_conditions(args.file)
    rows = []
    for d in range(1, r.n + 1):
        for i in range(r.n + 1 - d):
            rows.append((i, i + d, r.rectangle(i, i + d)))
    text = "\n".join(f"R[{i},{j}] {R}" for i, j, R in rows)
    payload = {"valid": True,
               "rectangles": [{"i": i, "j": j, "width": R.width, "height": R.height}
                              for i, j, R in rows]}
    return text, payload, EXIT_OK


def cmd_factor_sequences(args):
    r = _read_conditions(args.file)
    arr = distinct_array(r) if args.array == "distinct" else standard_array(r)
    buckets = factor_sequences(arr)
    shapes = sorted(buckets)
    lines = []
    payload = {"valid": True, "array": args.array, "counts": []}
    for shape in shapes:
        slots = " ".join(format_partition(p) for p in shape)
        lines.append(f"{len(buckets[shape])} {slots}")
        entry = {"count": len(buckets[shape]), "lambda": [list(p) for p in shape]}
        if args.shapes:
            entry["sequences"] = [[[list(row) for row in t.rows] for t in seq]
                                  for seq in sorted(buckets[shape], key=lambda s: tuple(t.rows for t in s))]
        payload["counts"].append(entry)
    if args.shapes:
        blocks = []
        for shape in shapes:
            slots = " ".join(format_partition(p) for p in shape)
            blocks.append(f"# {slots}\n\n{format_listing(buckets[shape])}")
        lines = ["\n\n".join(blocks)]
    return "\n".join(lines), payload, EXIT_OK


def cmd_schubert(args):
    try:
        w = Permutation.parse(args.perm)
    except ValueError as exc:
        raise InputError(f"parse error: {exc}") from None
    m = len(w) - 1
    if m < 1:
        raise InputError("the permutation must have at least two letters")
    poly = universal_expansion(w, m)
    if args.mode == "universal":
        return format_terms(poly), {"perm": str(w), "mode": "universal",
                                    "terms": _terms_payload(poly)}, EXIT_OK
    spec = specialize_single(poly, m) if args.mode == "single" else specialize_double(poly, m)
    payload = {"perm": str(w), "mode": args.mode,
               "monomials": [{"coeff": c, "exponents": list(e)} for e, c in spec.sorted_terms()]}
    return "\n".join(spec.format_lines()), payload, EXIT_OK


def cmd_verify(args):
    config = VerifyConfig(trials=args.trials, max_n=args.max_n, max_entry=args.max_entry,
                          seed=args.seed)
    results = run_suites(config)
    width = max(len(res.name) for res in results)
    lines = [f"{res.name:<{width}}  {res.passed}/{res.total}  {'PASS' if res.ok else 'FAIL'}"
             for res in results]
    for res in results:
        for bad in res.failures:
            lines.append(f"failure in {res.name}: {bad}")
    ok = all(res.ok for res in results)
    payload = {"seed": config.seed, "trials": config.trials, "max_n": config.max_n,
               "max_entry": config.max_entry, "suites": [res.as_dict() for res in results],
               "ok": ok}
    return "\n".join(lines), payload, EXIT_OK if ok else EXIT_SUITE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text",
                        help="plain text or JSON (default: text)")

    parser = argparse.ArgumentParser(
        prog="quiverlocus",
        description="Chern class formulas for quiver degeneracy loci.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_ in [
        ("coefficients", cmd_coefficients, "list the coefficients c_lambda(r)"),
        ("codim", cmd_codim, "print the expected codimension"),
        ("rectangles", cmd_rectangles, "print the rectangle array"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file", help="rank-conditions file, or - for stdin")
        p.set_defaults(func=func)

    p = sub.add_parser("factor-sequences", parents=[common],
                       help="count factor sequences by shape")
    p.add_argument("file", help="rank-conditions file, or - for stdin")
    p.add_argument("--shapes", action="store_true",
                   help="also list the sequences of each shape")
    p.add_argument("--array", choices=("standard", "distinct"), default="standard",
                   help="which fixed tableau array to use")
    p.set_defaults(func=cmd_factor_sequences)

    p = sub.add_parser("schubert", parents=[common], help="Schubert polynomial of a permutation")
    p.add_argument("perm", help="one-line notation, e.g. 3142 or 3,1,4,2")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--single", dest="mode", action="store_const", const="single")
    mode.add_argument("--double", dest="mode", action="store_const", const="double")
    mode.add_argument("--universal", dest="mode", action="store_const", const="universal")
    p.set_defaults(func=cmd_schubert, mode="single")

    p = sub.add_parser("verify", parents=[common], help="run the seeded invariant suites")
    p.add_argument("--trials", type=_positive, default=50)
    p.add_argument("--max-n", type=_positive, default=3)
    p.add_argument("--max-entry", type=_positive, default=4)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help=f"random seed (default {DEFAULT_SEED})")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; those are input errors here
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        text, payload, code = args.func(args)
    except InputError as exc:
        if args.format == "structured":
            print(json.dumps({"valid": False, "error": str(exc)}, sort_keys=True))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.format == "structured":
            print(json.dumps(payload, sort_keys=True))
        elif text:
            print(text)
        sys.stdout.flush()
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the shutdown flush
        sys.stdout = open(os.devnull, "w")
    return code


if __name__ == "__main__":
    sys.exit(main())
