"""SVG pictures of the nested slices W(D) for short words W.

Geometry stays exact up to the last step; coordinates are printed as
fixed-point decimals with 20 significant digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from xml.sax.saxutils import quoteattr

from .exact import ExtendedRational
from .moebius import Matrix, PathWord, evaluate_word, slice_of

__all__ = ["RenderSpec", "level_words", "render_svg", "MAX_DEPTH"]

MAX_DEPTH = 12
WIDTH_PX = 800
MARGIN_PX = 20


@dataclass(frozen=True)
class RenderSpec:
    depth: int
    x_max: Fraction = Fraction(3)
    y_max: Fraction = Fraction(3, 2)
    out: str | None = None

    def __post_init__(self):
        if not 0 <= self.depth <= MAX_DEPTH:
            raise ValueError(f"depth must be in [0, {MAX_DEPTH}], got {self.depth}")
        object.__setattr__(self, "x_max", Fraction(self.x_max))
        object.__setattr__(self, "y_max", Fraction(self.y_max))
        if self.x_max <= 0 or self.y_max <= 0:
            raise ValueError("render window must be positive")


def level_words(depth: int) -> list[PathWord]:
    """Words of length 1..depth, level by level, L-child before R-child."""
    out = []
    level = [PathWord()]
    for _ in range(depth):
        level = [PathWord(ch + w) for w in level for ch in "LR"]
        out.extend(level)
    return out


def _dec(x: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 20
        d = Decimal(x.numerator) / Decimal(x.denominator)
    s = format(d, "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


class _Frame:
    def __init__(self, spec: RenderSpec):
        self.scale = Fraction(WIDTH_PX) / spec.x_max
        self.y_max = spec.y_max
        self.width = WIDTH_PX + 2 * MARGIN_PX
        self.height = spec.y_max * self.scale + 2 * MARGIN_PX

    def x(self, x: Fraction) -> str:
        return _dec(MARGIN_PX + x * self.scale)

    def y(self, y: Fraction) -> str:
        return _dec(MARGIN_PX + (self.y_max - y) * self.scale)

    def length(self, t: Fraction) -> str:
        return _dec(t * self.scale)


def _geodesic(frame: _Frame, word: PathWord, lo: ExtendedRational, hi: ExtendedRational) -> str:
    attrs = f'class="geodesic" data-word="{word}" data-slice={quoteattr(f"[{lo}, {hi})")}'
    x0 = lo.to_fraction()
    if hi.is_infinite:
        return (f'<line {attrs} x1="{frame.x(x0)}" y1="{frame.y(Fraction(0))}" '
                f'x2="{frame.x(x0)}" y2="{frame.y(frame.y_max)}"/>')
    x1 = hi.to_fraction()
    r = frame.length((x1 - x0) / 2)
    y0 = frame.y(Fraction(0))
    return (f'<path {attrs} d="M {frame.x(x0)} {y0} '
            f'A {r} {r} 0 0 1 {frame.x(x1)} {y0}"/>')


def render_svg(L: Matrix, R: Matrix, spec: RenderSpec) -> str:
    """SVG document with one geodesic element per word of length 1..depth."""
    frame = _Frame(spec)
    zero = Fraction(0)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_dec(Fraction(frame.width))}" '
        f'height="{_dec(frame.height)}" viewBox="0 0 {_dec(Fraction(frame.width))} {_dec(frame.height)}">',
        f'<title>slices of L = ({L}), R = ({R}), depth {spec.depth}</title>',
        '<defs><clipPath id="window">'
        f'<rect x="{frame.x(zero)}" y="{frame.y(spec.y_max)}" '
        f'width="{frame.length(spec.x_max)}" height="{frame.length(spec.y_max)}"/>'
        '</clipPath></defs>',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<line class="axis" x1="{frame.x(zero)}" y1="{frame.y(zero)}" '
        f'x2="{frame.x(spec.x_max)}" y2="{frame.y(zero)}" stroke="black"/>',
        f'<line class="axis" x1="{frame.x(zero)}" y1="{frame.y(zero)}" '
        f'x2="{frame.x(zero)}" y2="{frame.y(spec.y_max)}" stroke="black"/>',
        '<g clip-path="url(#window)" fill="none" stroke="#1f4e9c" stroke-width="1">',
    ]
    for w in level_words(spec.depth):
        s = slice_of(evaluate_word(w, L, R))
        lines.append(_geodesic(frame, w, s.lo, s.hi))
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
