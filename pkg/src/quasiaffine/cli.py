"""Command-line surface. Every subcommand is a thin adapter over the
library: parse flags, call one function, render JSON (default) or plain
text (--plain). Exit status: 0 success (and agreement for verify),
1 verifier disagreement, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys

from .core import Params, Rational, format_rational, iterate_orbit, parse_rational
from .omega import OmegaLimit, classify_case, omega_limit
from .oracle import Window, cross_check, random_rational
from .periodic import IntegerSet, TwoCycleSet, fixed_points, two_cycles
from .sweep import SweepSpec, SweepTarget, grid_values, sweep, write_csv, write_jsonl


class _SubParser(argparse.ArgumentParser):
    """Subcommand parser that accepts "-p/q" and "-a..b" option values."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _LEADING_MINUS_VALUE


def _rational(text: str) -> Rational:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_range(text: str) -> tuple[Rational, Rational]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"malformed range {text!r} (expected 'A..B')")
    return _rational(lo), _rational(hi)


def _window(text: str) -> Window:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"malformed window {text!r} (expected 'LO..HI')")
    try:
        return Window(int(lo), int(hi))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"malformed window {text!r}: {exc}") from None


def _emit(args: argparse.Namespace, payload: dict, plain: str) -> None:
    if args.plain:
        print(plain)
    else:
        print(json.dumps(payload, separators=(",", ":")))


def _plain_integer_set(s: IntegerSet) -> str:
    if s.kind == "empty":
        return "empty"
    if s.kind == "range":
        return f"{{{s.lo}..{s.hi}}}"
    return "all integers"


def _plain_cycles(s: TwoCycleSet) -> str:
    if s.kind == "neg_one_family":
        return f"all pairs {{x, {s.c} - x}} over the integers (x != {s.c} - x)"
    if not s.pairs:
        return "none"
    return " ".join(f"{{{a}, {b}}}" for a, b in s.pairs)


def _plain_omega(o: OmegaLimit) -> str:
    if o.kind == "fixed":
        return f"fixed {o.z}"
    if o.kind == "two_cycle":
        return f"2-cycle {{{o.a}, {o.b}}}"
    return {"plus_inf": "+infinity", "minus_inf": "-infinity", "plus_minus_inf": "+-infinity"}[o.kind]


def _cmd_fix(args: argparse.Namespace) -> int:
    s = fixed_points(Params(args.lam, args.mu))
    _emit(args, s.to_json(), _plain_integer_set(s))
    return 0


def _cmd_cycles(args: argparse.Namespace) -> int:
    s = two_cycles(Params(args.lam, args.mu))
    if args.window is not None:
        s = TwoCycleSet.finite(s.clip(args.window.lo, args.window.hi))
    _emit(args, s.to_json(), _plain_cycles(s))
    return 0


def _cmd_omega(args: argparse.Namespace) -> int:
    p = Params(args.lam, args.mu)
    limit = omega_limit(p, args.x)
    tag = classify_case(p)
    payload = limit.to_json()
    payload["case"] = tag.value
    _emit(args, payload, f"{_plain_omega(limit)} [case {tag.value}]")
    return 0


def _cmd_orbit(args: argparse.Namespace) -> int:
    orbit = iterate_orbit(Params(args.lam, args.mu), args.x, args.steps)
    payload = {
        "start": format_rational(orbit.start),
        "tail": list(orbit.tail),
        "truncated": orbit.truncated,
    }
    _emit(args, payload, "\n".join(str(z) for z in orbit.tail))
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    tag = classify_case(Params(args.lam, args.mu))
    _emit(args, tag.to_json(), tag.value)
    return 0


def _cmd_scan(args: argparse.Namespace) -> int:
    spec = SweepSpec(
        lambda_from=args.lambda_range[0],
        lambda_to=args.lambda_range[1],
        lambda_step=args.lambda_step,
        mu_from=args.mu_range[0],
        mu_to=args.mu_range[1],
        mu_step=args.mu_step,
        x_window=args.x_window,
        target=SweepTarget(args.target),
    )
    writer = write_csv if args.format == "csv" else write_jsonl
    if args.out is None:
        writer(sweep(spec), sys.stdout)
    else:
        with open(args.out, "w", newline="") as out:
            writer(sweep(spec), out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    w = args.window
    checked = 0
    for lam in grid_values(args.lambda_range[0], args.lambda_range[1], args.lambda_step):
        for mu in grid_values(args.mu_range[0], args.mu_range[1], args.mu_step):
            samples = [random_rational(rng, w.lo, w.hi) for _ in range(args.samples)]
            verdict = cross_check(Params(lam, mu), w, samples)
            if not verdict.agrees:
                _emit(args, verdict.to_json(), f"disagree: {verdict.detail}")
                return 1
            checked += 1
    summary = {"agrees": True, "detail": ""}
    _emit(args, summary, f"agree ({checked} parameter pairs)")
    return 0


# stock argparse only lets plain negative numbers through as option values;
# widen the matcher so "-13/10" and "-2..2" parse (all our flags are words)
_LEADING_MINUS_VALUE = re.compile(r"^-\d")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasiaffine",
        description="Exact dynamics of f(x) = floor(lambda*x + mu) over rational parameters.",
    )
    parser._negative_number_matcher = _LEADING_MINUS_VALUE
    parser.add_argument("--plain", action="store_true", help="human-readable output instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_SubParser)

    def map_flags(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--lambda", dest="lam", type=_rational, required=True, metavar="P/Q")
        sp.add_argument("--mu", type=_rational, required=True, metavar="P/Q")

    sp = sub.add_parser("fix", help="fixed-point set")
    map_flags(sp)
    sp.set_defaults(handler=_cmd_fix)

    sp = sub.add_parser("cycles", help="2-cycle set (symbolic family unless --window)")
    map_flags(sp)
    sp.add_argument("--window", type=_window, metavar="LO..HI")
    sp.set_defaults(handler=_cmd_cycles)

    sp = sub.add_parser("omega", help="limit set of a start point, plus the case tag")
    map_flags(sp)
    sp.add_argument("--x", type=_rational, required=True, metavar="P/Q")
    sp.set_defaults(handler=_cmd_omega)

    sp = sub.add_parser("orbit", help="first N integer iterates of a start point")
    map_flags(sp)
    sp.add_argument("--x", type=_rational, required=True, metavar="P/Q")
    sp.add_argument("--steps", type=int, required=True)
    sp.set_defaults(handler=_cmd_orbit)

    sp = sub.add_parser("classify", help="which of the nine parameter regimes applies")
    map_flags(sp)
    sp.set_defaults(handler=_cmd_classify)

    sp = sub.add_parser("scan", help="bifurcation-diagram sweep to CSV/JSONL")
    sp.add_argument("--target", choices=[t.value for t in SweepTarget], required=True)
    sp.add_argument("--lambda-range", type=_rational_range, required=True, metavar="A..B")
    sp.add_argument("--lambda-step", type=_rational, required=True, metavar="P/Q")
    sp.add_argument("--mu-range", type=_rational_range, required=True, metavar="A..B")
    sp.add_argument("--mu-step", type=_rational, required=True, metavar="P/Q")
    sp.add_argument("--x-window", type=_window, required=True, metavar="LO..HI")
    sp.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    sp.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    sp.set_defaults(handler=_cmd_scan)

    sp = sub.add_parser("verify", help="closed forms vs brute force on a parameter grid")
    sp.add_argument("--lambda-range", type=_rational_range, required=True, metavar="A..B")
    sp.add_argument("--lambda-step", type=_rational, required=True, metavar="P/Q")
    sp.add_argument("--mu-range", type=_rational_range, required=True, metavar="A..B")
    sp.add_argument("--mu-step", type=_rational, required=True, metavar="P/Q")
    sp.add_argument("--window", type=_window, required=True, metavar="LO..HI")
    sp.add_argument("--samples", type=int, default=5, help="random start points per grid cell")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


def entrypoint() -> None:
    raise SystemExit(main())
