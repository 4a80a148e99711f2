"""Command-line entry point.

Exit codes: 0 verified, 1 a theorem or oracle check failed (the report holds
a replayable counterexample), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence

from . import io
from .extremal import LEMMAS, harness, run_lemma, star, triangle_config
from .geometry import Tolerance
from .intersection import analyze
from .render import RenderSpec, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _n_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")
    lo = int(m.group(1))
    return lo, int(m.group(2)) if m.group(2) else lo


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-geom", type=float, default=1e-9, help="classification tolerance")
    common.add_argument("--tol-strict", type=float, default=1e-12, help="consistency tolerance")
    common.add_argument("--seed", type=int, default=0)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    common.set_defaults(pretty=False)

    p = _Parser(prog="sidedisks", description="Side disks of a circle cut into arcs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common], help="count disjoint pairs and check both bounds")
    a.add_argument("config", help="JSON configuration file")

    h = sub.add_parser("harness", parents=[common], help="randomized check of the bounds and oracles")
    h.add_argument("--n", type=_n_range, default=(3, 12), metavar="A..B")
    h.add_argument("--trials", type=int, default=500)
    h.add_argument("--min-gap", type=float, default=1e-6)

    lm = sub.add_parser("lemma", parents=[common], help="run one numerical oracle")
    lm.add_argument("which", choices=LEMMAS)
    lm.add_argument("--trials", type=int, default=500)
    lm.add_argument("--samples", type=int, default=10_000, help="points per triple for lemma 1")
    lm.add_argument("--n", type=int, default=8, help="polygon size for step2")

    s = sub.add_parser("star", parents=[common], help="equal-arc configuration")
    s.add_argument("n", type=int)

    t = sub.add_parser("triangle", parents=[common], help="one-disk-meets-all configuration")
    t.add_argument("n", type=int)
    t.add_argument("--s", type=float, default=None, help="short arc length (radians)")

    r = sub.add_parser("render", parents=[common], help="draw a configuration as SVG")
    r.add_argument("config")
    r.add_argument("-o", "--output", required=True)
    r.add_argument("--size", type=int, default=800, help="canvas width and height in pixels")
    r.add_argument("--no-disks", dest="disks", action="store_false")
    r.add_argument("--no-chords", dest="chords", action="store_false")
    r.add_argument("--no-corners", dest="corners", action="store_false")
    r.add_argument("--no-labels", dest="labels", action="store_false")
    return p


def _emit(obj, pretty: bool) -> None:
    print(io.dumps(obj, pretty))


def _extremal(kind: str, poly, expected: int, tol: Tolerance, pretty: bool) -> int:
    rep = analyze(poly, tol)
    _emit({"preset": kind, "expected_d": expected, "config": io.config_dict(poly), "report": rep.to_dict()}, pretty)
    return EXIT_OK if rep.d == expected and rep.bounds_ok and rep.noncrossing_ok else EXIT_FAIL


def run(args: argparse.Namespace) -> int:
    tol = Tolerance(args.tol_geom, args.tol_strict)
    if args.command == "analyze":
        rep = analyze(io.load_config(args.config, tol), tol)
        _emit(rep.to_dict(), args.pretty)
        return EXIT_OK if rep.bounds_ok and rep.noncrossing_ok else EXIT_FAIL
    if args.command == "harness":
        lo, hi = args.n
        rep = harness(lo, hi, args.trials, args.seed, tol, args.min_gap)
        _emit(rep.to_dict(), args.pretty)
        return EXIT_OK if rep.ok else EXIT_FAIL
    if args.command == "lemma":
        rep = run_lemma(args.which, args.trials, args.seed, tol, samples=args.samples, n=args.n)
        _emit(rep.to_dict(), args.pretty)
        return EXIT_OK if rep.ok else EXIT_FAIL
    if args.command == "star":
        return _extremal("star", *star(args.n), tol, args.pretty)
    if args.command == "triangle":
        return _extremal("triangle", *triangle_config(args.n, args.s, tol), tol, args.pretty)
    if args.command == "render":
        spec = RenderSpec(args.output, args.size, args.size, args.disks, args.chords, args.corners, args.labels)
        path = render(io.load_config(args.config, tol), spec, tol)
        print(path, file=sys.stderr)
        return EXIT_OK
    raise AssertionError(args.command)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (ValueError, OSError) as exc:
        print(f"sidedisks: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
