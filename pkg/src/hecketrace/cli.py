"""
Command-line interface.

    hecketrace trace "1 1"                  # Jones-Ocneanu trace of a braid word
    hecketrace homfly "1 1 1"               # HOMFLY of the closure
    hecketrace jones "1 1"                  # Jones polynomial of the closure
    hecketrace family lcb 5                 # generate a family word
    hecketrace verify-recursion --min 4 --max 8
    hecketrace selftest --seed 0 --samples 200

Exit status: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import braid as B
from . import invariants as inv
from .errors import DomainError, HeckeTraceError, ParseError
from .report import Check
from .trace import axiom_check, trace_of_braid

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="emit JSON instead of text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hecketrace",
        description="Exact Jones-Ocneanu traces, HOMFLY and Jones polynomials of braid closures.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("trace", "Jones-Ocneanu trace of a braid word"),
                        ("homfly", "HOMFLY polynomial of the braid closure"),
                        ("jones", "Jones polynomial of the braid closure")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("word", nargs="*", help='braid word, e.g. "1 -2 1" (signed generators)')
        p.add_argument("--rank", type=int, help="number of strands (required for the empty word)")
        _add_common(p)

    p = sub.add_parser("family", help="generate a coxeter or looped coxeter braid")
    p.add_argument("kind", choices=("coxeter", "lcb"))
    p.add_argument("n", type=int)
    _add_common(p)

    p = sub.add_parser("verify-recursion", help="check the looped coxeter trace recursion")
    p.add_argument("--min", dest="n_min", type=int, default=4)
    p.add_argument("--max", dest="n_max", type=int, default=8)
    _add_common(p)

    p = sub.add_parser("selftest", help="run the seeded property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200)
    _add_common(p)
    return parser


def _word(args) -> B.BraidWord:
    text = " ".join(args.word)
    if not text.strip() and args.rank is None:
        raise UsageError("the empty braid word needs an explicit --rank")
    return B.parse_braid_word(text, args.rank)


def _cmd_trace(args) -> tuple[int, object]:
    w = _word(args)
    value = trace_of_braid(w)
    if args.json:
        return EXIT_OK, {"word": w.to_json(), "trace": value.to_json()}
    return EXIT_OK, str(value)


def _cmd_homfly(args) -> tuple[int, object]:
    h = inv.homfly_of_braid(_word(args))
    return EXIT_OK, h.to_json() if args.json else str(h)


def _cmd_jones(args) -> tuple[int, object]:
    w = _word(args)
    v = inv.jones_of_braid(w)
    if args.json:
        return EXIT_OK, {"word": w.to_json(), "jones": v.to_json(),
                         "epsilon": inv.writhe_sign(), "mirrorBranch": inv.jones_branch()}
    return EXIT_OK, str(v)


def _cmd_family(args) -> tuple[int, object]:
    make = B.coxeter if args.kind == "coxeter" else B.looped_coxeter
    w = make(args.n)
    info = {"kind": args.kind, "n": args.n, "word": w.to_json(),
            "writhe": B.writhe(w), "components": B.closure_component_count(w)}
    if args.json:
        return EXIT_OK, info
    return EXIT_OK, (f"{args.kind} n={args.n} rank={w.rank}: {w}\n"
                     f"writhe {info['writhe']}, components {info['components']}")


def _cmd_verify(args) -> tuple[int, object]:
    checks = inv.verify_lcb_recursion(args.n_min, args.n_max)
    status = EXIT_OK if all(c.passed for c in checks) else EXIT_VERIFY
    if args.json:
        return status, {"pass": status == EXIT_OK, "checks": [c.to_json() for c in checks]}
    return status, "\n".join(c.line() for c in checks)


def _cmd_selftest(args) -> tuple[int, object]:
    if args.samples < 1:
        raise DomainError("--samples must be positive")
    seed, samples = args.seed, args.samples
    reports = [
        axiom_check(5, samples, seed),
        inv.markov_check(samples, seed),
        inv.split_union_check(max(1, samples // 4), seed),
        inv.skein_check(max(1, samples // 4), seed),
    ]
    checks = inv.verify_lcb_recursion(4, 8) + [inv.lcb_homfly_check(n) for n in range(2, 9)]
    for n in range(1, 8):
        w = B.coxeter(n)
        v = inv.jones_of_braid(w)
        ok = v == 1 and B.closure_component_count(w) == 1
        checks.append(Check("coxeter_unknot", n, ok, v, 1))
    ok = all(r.passed for r in reports) and all(c.passed for c in checks)
    status = EXIT_OK if ok else EXIT_VERIFY
    if args.json:
        return status, {"pass": ok, "epsilon": inv.writhe_sign(),
                        "mirrorBranch": inv.jones_branch(),
                        "reports": [r.to_json() for r in reports],
                        "checks": [c.to_json() for c in checks]}
    lines = [f"epsilon {inv.writhe_sign()}, jones branch {inv.jones_branch()}"]
    for r in reports:
        lines.extend(r.lines())
    lines.extend(c.line() for c in checks)
    lines.append("selftest " + ("PASS" if ok else "FAIL"))
    return status, "\n".join(lines)


COMMANDS = {
    "trace": _cmd_trace, "homfly": _cmd_homfly, "jones": _cmd_jones,
    "family": _cmd_family, "verify-recursion": _cmd_verify, "selftest": _cmd_selftest,
}


def _emit(payload: object, as_json: bool, stream) -> None:
    if as_json:
        stream.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        stream.write(f"{payload}\n")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        status, payload = COMMANDS[args.command](args)
    except (UsageError, ParseError) as exc:
        status, kind, msg = EXIT_USAGE, type(exc).__name__, str(exc)
    except HeckeTraceError as exc:
        status, kind, msg = EXIT_DOMAIN, type(exc).__name__, str(exc)
    else:
        _emit(payload, args.json, stdout)
        return status
    if args.json:
        _emit({"error": {"type": kind, "message": msg}}, True, stdout)
    else:
        stderr.write(f"error: {msg}\n")
    return status


def main() -> None:
    sys.exit(run())
