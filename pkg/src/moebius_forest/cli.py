"""Command line interface.

Exit codes: 0 success (or "is a pair"), 1 not a pair / verification
mismatches, 2 bad input, 3 root-search guard exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import GuardExhaustedError, MoebiusError
from .exact import parse_fraction
from .forest import (
    DEFAULT_MAX_STEPS,
    ForestConfig,
    Mode,
    contraction_trace,
    descend,
    enumerate_tree,
    find_root,
)
from .moebius import Matrix, PathWord, slice_of
from .pairs import disjointness_oracle, is_left_right_pair, verify_pairs
from .render import RenderSpec, render_svg

EXIT_OK = 0
EXIT_NOT_PAIR = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

CW_LEFT = "1 1 0 1"
CW_RIGHT = "1 0 1 1"


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _matrix(text):
    try:
        return Matrix.parse(text)
    except MoebiusError as e:
        raise _Fail(EXIT_INPUT, str(e)) from None


def _config(args):
    try:
        return ForestConfig(_matrix(args.left), _matrix(args.right), Mode(args.mode))
    except MoebiusError as e:
        raise _Fail(EXIT_INPUT, str(e)) from None


def _max_steps(args):
    if args.max_steps is not None:
        return args.max_steps
    env = os.environ.get("MOEBIUS_MAX_STEPS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise _Fail(EXIT_INPUT, f"MOEBIUS_MAX_STEPS is not an integer: {env!r}") from None
        if n < 1:
            raise _Fail(EXIT_INPUT, "MOEBIUS_MAX_STEPS must be positive")
        return n
    return DEFAULT_MAX_STEPS


def _emit(obj, pretty, text=None):
    if pretty and text is not None:
        print(text)
    else:
        print(json.dumps(obj))


def cmd_check_pair(args):
    A, B = _matrix(args.A), _matrix(args.B)
    pair = is_left_right_pair(A, B)
    verdict = disjointness_oracle(A, B)
    sa, sb = slice_of(A), slice_of(B)
    out = {
        "A": str(A),
        "B": str(B),
        "pair": pair,
        "oracle": verdict.is_pair,
        "slices": [str(sa), str(sb)],
        "witness": None if verdict.witness is None else str(verdict.witness),
    }
    text = f"pair: {str(pair).lower()}\nslice A: {sa}\nslice B: {sb}"
    if verdict.witness is not None:
        text += f"\nwitness: {verdict.witness}"
    _emit(out, args.pretty, text)
    return EXIT_OK if pair else EXIT_NOT_PAIR


def cmd_slice(args):
    M = _matrix(args.M)
    s = slice_of(M)
    out = {"matrix": str(M), "slice": str(s), "lo": str(s.lo), "hi": str(s.hi), "diam": str(s.diam)}
    if args.trace:
        try:
            out["trace"] = [str(t) for t in contraction_trace(M, args.trace)]
        except MoebiusError as e:
            raise _Fail(EXIT_INPUT, str(e)) from None
    _emit(out, args.pretty, f"{M}: slice {s}, diam {s.diam}")
    return EXIT_OK


def cmd_root(args):
    cfg = _config(args)
    try:
        v = cfg.parse_vertex(args.vertex)
    except MoebiusError as e:
        raise _Fail(EXIT_INPUT, str(e)) from None
    try:
        res = find_root(cfg, v, _max_steps(args))
    except GuardExhaustedError as e:
        raise _Fail(EXIT_GUARD, str(e)) from None
    _emit(res.to_json(), args.pretty,
          f"root {res.root}, word {res.word or '(empty)'}, {res.steps} steps")
    return EXIT_OK


def cmd_descend(args):
    cfg = _config(args)
    try:
        v = cfg.parse_vertex(args.vertex)
        w = PathWord(args.word)
    except MoebiusError as e:
        raise _Fail(EXIT_INPUT, str(e)) from None
    out = descend(cfg, v, w)
    _emit({"vertex": str(out), "word": str(w)}, args.pretty, str(out))
    return EXIT_OK


def cmd_enumerate(args):
    cfg = _config(args)
    try:
        root = cfg.parse_vertex(args.root)
    except MoebiusError as e:
        raise _Fail(EXIT_INPUT, str(e)) from None
    for v, w in enumerate_tree(cfg, root, args.depth):
        if args.pretty:
            print(f"{w or '-':>{max(args.depth, 1)}}  {v}")
        else:
            print(json.dumps({"word": str(w), "vertex": str(v)}))
    return EXIT_OK


def cmd_verify(args):
    summary = verify_pairs(args.max_entry, workers=args.workers)
    for m in summary.mismatches:
        print(json.dumps(m.to_json()))
    s = summary.to_json()
    _emit(s, args.pretty,
          "{matrices} matrices, {pairs_checked} ordered pairs checked, "
          "{pairs_found} left-right pairs, {mismatches} mismatches".format(**s))
    return EXIT_OK if not summary.mismatches else EXIT_NOT_PAIR


def cmd_render(args):
    L, R = _matrix(args.left), _matrix(args.right)
    if not is_left_right_pair(L, R):
        raise _Fail(EXIT_INPUT, f"({L}), ({R}) is not a left-right pair")
    try:
        spec = RenderSpec(args.depth, _positive(args.x_max), _positive(args.y_max), args.out)
    except ValueError as e:
        raise _Fail(EXIT_INPUT, str(e)) from None
    svg = render_svg(L, R, spec)
    if args.out:
        with open(args.out, "w") as f:
            f.write(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def _positive(text) -> Fraction:
    try:
        return parse_fraction(text)
    except MoebiusError as e:
        raise ValueError(str(e)) from None


def _nonneg_int(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def _pos_int(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")

    gens = argparse.ArgumentParser(add_help=False)
    gens.add_argument("--left", default=CW_LEFT, metavar='"a b c d"',
                      help=f"left generator (default Calkin-Wilf {CW_LEFT!r})")
    gens.add_argument("--right", default=CW_RIGHT, metavar='"a b c d"',
                      help=f"right generator (default Calkin-Wilf {CW_RIGHT!r})")

    forest = argparse.ArgumentParser(add_help=False, parents=[gens])
    forest.add_argument("--mode", choices=[m.value for m in Mode], default="interior")

    p = argparse.ArgumentParser(prog="moebius-forest",
                                description="Left-right pairs of SL2(N0) Moebius maps and their forests.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-pair", parents=[common], help="decide whether (A, B) is a left-right pair")
    s.add_argument("A")
    s.add_argument("B")
    s.set_defaults(func=cmd_check_pair)

    s = sub.add_parser("slice", parents=[common], help="slice M(D) of a matrix")
    s.add_argument("M")
    s.add_argument("--trace", type=_pos_int, default=0, metavar="N",
                   help="also list diameters of M^1(D) .. M^N(D)")
    s.set_defaults(func=cmd_slice)

    s = sub.add_parser("root", parents=[common, forest], help="find the root above a vertex")
    s.add_argument("vertex")
    s.add_argument("--max-steps", type=_pos_int, default=None)
    s.set_defaults(func=cmd_root)

    s = sub.add_parser("descend", parents=[common, forest], help="apply a path word to a vertex")
    s.add_argument("vertex")
    s.add_argument("word")
    s.set_defaults(func=cmd_descend)

    s = sub.add_parser("enumerate", parents=[common, forest], help="list a subtree level by level")
    s.add_argument("root")
    s.add_argument("--depth", type=_nonneg_int, default=3)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", parents=[common], help="check the pair criterion against slice geometry")
    s.add_argument("--max-entry", type=_nonneg_int, default=8)
    s.add_argument("--workers", type=_pos_int, default=1)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", parents=[common, gens], help="draw the slices as SVG")
    s.add_argument("--depth", type=_nonneg_int, default=4)
    s.add_argument("--x-max", default="3")
    s.add_argument("--y-max", default="3/2")
    s.add_argument("--out", default=None, help="output file (default stdout)")
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Fail as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
