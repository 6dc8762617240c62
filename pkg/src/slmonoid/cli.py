"""Command-line front end.

Exit status: 0 on success, 1 when the queried predicate is refuted, 2 on
input errors, 3 when ``is-unit`` cannot decide.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .braid import braid_equal, braid_inverse, format_word, parse_word, StrandCountError
from .invariants import PDError, format_pd, jones, parse_pd
from .laurent import format_terms
from .stringlink import (
    DiagramError,
    NotAStringLinkError,
    ParseError,
    SliceDiagram,
    closure,
    compose,
    delete_strands,
    format_slice,
    parse_slice,
    reflect,
    validate,
)
from .units import DEFAULT_BUDGET, NotUnit, Unit, decide_unit, format_verdict

FORMATS = """\
formats:
  braid word   [n=<int>] <letter> <letter> ...
               letters are nonzero integers; k is sigma_k, -k its inverse;
               without a header n = 1 + max|letter|.
  slice file   tangle n=<int>
               x <i> +     crossing of positions i, i+1 (+: strand from i+1 over)
               x <i> -
               birth <i>   new turnback at positions i, i+1
               death <i>   join positions i, i+1
               '#' starts a comment; positions are 1-based, bottom to top.
  PD code      X(a,b,c,d) per crossing, labels counterclockwise from the
               incoming under-arc; O(k) for k crossingless loops.
  polynomial   ascending exponents in A, e.g. -A^-4 + 1 + 2A^6
"""


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_slice(path: str) -> SliceDiagram:
    try:
        return parse_slice(_read(path))
    except ParseError as exc:
        raise InputError(f"{path}:{exc.line}:{exc.column}: {exc.message}") from None


def _load_word(text: str):
    try:
        return parse_word(text)
    except ValueError as exc:
        raise InputError(f"braid word {text!r}: {exc}") from None


def _link(path: str, scheme: str):
    text = _read(path)
    body = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    first = next((ln for ln in body if ln), "")
    if first.startswith("tangle"):
        return closure(_load_slice(path), scheme)
    try:
        return parse_pd(text)
    except PDError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_equal(args) -> int:
    b1, b2 = _load_word(args.w1), _load_word(args.w2)
    if b1.strands != b2.strands:
        # a word without a header may be read in a larger braid group
        n = max(b1.strands, b2.strands)
        explicit = [w.lstrip().startswith("n") for w in (args.w1, args.w2)]
        if all(explicit):
            raise InputError(f"strand counts differ: {b1.strands} != {b2.strands}")
        b1 = type(b1)(n, b1.letters) if not explicit[0] else b1
        b2 = type(b2)(n, b2.letters) if not explicit[1] else b2
        if b1.strands != b2.strands:
            raise InputError(f"strand counts differ: {b1.strands} != {b2.strands}")
    result = braid_equal(b1, b2)
    print("true" if result else "false")
    return 0 if result else 1


def cmd_invert(args) -> int:
    b = _load_word(args.w)
    print(format_word(braid_inverse(b), header=args.w.lstrip().startswith("n")))
    return 0


def cmd_compose(args) -> int:
    d1, d2 = _load_slice(args.f1), _load_slice(args.f2)
    if d1.boundary != d2.boundary:
        raise InputError(f"boundary counts differ: {d1.boundary} != {d2.boundary}")
    sys.stdout.write(format_slice(compose(d1, d2)))
    return 0


def cmd_validate(args) -> int:
    d = _load_slice(args.f)
    try:
        trace = validate(d)
    except DiagramError as exc:
        print(f"invalid {type(exc).__name__} {exc}")
        return 1
    kind = "string-link" if trace.is_string_link() else "tangle"
    print(f"valid n={d.boundary} components={len(trace)} {kind}")
    for k, s in enumerate(trace.strands, start=1):
        events = ",".join(str(e) for e in s.events) or "-"
        print(f"strand {k}: {s.start[0]}{s.start[1]} -> {s.end[0]}{s.end[1]} events={events}")
    return 0


def cmd_is_unit(args) -> int:
    v = decide_unit(_load_slice(args.f), budget=args.budget)
    print(format_verdict(v))
    if isinstance(v, Unit):
        return 0
    return 1 if isinstance(v, NotUnit) else 3


def cmd_closure(args) -> int:
    d = _load_slice(args.f)
    print(format_pd(closure(d, args.scheme)))
    return 0


def cmd_jones(args) -> int:
    v = jones(_link(args.f, args.scheme))
    if args.variable == "t":
        try:
            print(format_terms(v.substitute_t().items(), "t"))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        print(v)
    return 0


def cmd_delete(args) -> int:
    d = _load_slice(args.f)
    try:
        keep = {int(t) for t in args.keep.split(",") if t.strip()}
    except ValueError:
        raise InputError(f"bad --keep list {args.keep!r}") from None
    sys.stdout.write(format_slice(delete_strands(d, keep)))
    return 0


def cmd_reflect(args) -> int:
    sys.stdout.write(format_slice(reflect(_load_slice(args.f))))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="slmonoid",
        description="Braids, string links and their units.",
        epilog=FORMATS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("equal", help="decide equality of two braid words")
    s.add_argument("w1")
    s.add_argument("w2")
    s.set_defaults(func=cmd_equal)

    s = sub.add_parser("invert", help="inverse of a braid word")
    s.add_argument("w")
    s.set_defaults(func=cmd_invert)

    s = sub.add_parser("compose", help="f1 followed by f2")
    s.add_argument("f1")
    s.add_argument("f2")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("validate", help="check a slice file and trace its strands")
    s.add_argument("f")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("is-unit", help="decide whether a tangle is a unit")
    s.add_argument("f")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="rewrite search steps")
    s.set_defaults(func=cmd_is_unit)

    s = sub.add_parser("closure", help="PD code of a closure")
    s.add_argument("f")
    s.add_argument("--scheme", choices=("trace", "plait"), default="trace")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("jones", help="Jones polynomial of a closure or PD file")
    s.add_argument("f")
    s.add_argument("--scheme", choices=("trace", "plait"), default="trace")
    s.add_argument("--variable", choices=("A", "t"), default="A")
    s.set_defaults(func=cmd_jones)

    s = sub.add_parser("delete", help="keep only some strands")
    s.add_argument("f")
    s.add_argument("--keep", required=True, help="comma-separated left endpoints")
    s.set_defaults(func=cmd_delete)

    s = sub.add_parser("reflect", help="mirror across the middle plane")
    s.add_argument("f")
    s.set_defaults(func=cmd_reflect)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, DiagramError, NotAStringLinkError, PDError, StrandCountError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
