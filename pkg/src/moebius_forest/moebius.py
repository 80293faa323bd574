"""SL2(N0) matrices acting as Moebius maps on the open first quadrant.

A matrix (a, b; c, d) with nonnegative integer entries and ad - bc = 1 acts
by z -> (az + b)/(cz + d). The image of the quadrant is the slice bounded by
the geodesic joining b/d and a/c, so slices are stored by their endpoints.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvalidMatrixError, ParseError, PoleError
from .exact import INF, ZERO, ExtendedRational, GaussianRational

__all__ = [
    "Matrix",
    "Slice",
    "PathWord",
    "IDENTITY",
    "mk_matrix",
    "compose",
    "power",
    "apply_boundary",
    "apply_interior",
    "inverse_apply",
    "inverse_apply_real",
    "slice_of",
    "diam",
    "contraction_bound",
    "contains_interior",
    "evaluate_word",
]


@dataclass(frozen=True)
class Matrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in "abcd":
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidMatrixError(f"entry {name}={v!r} is not an integer")
            if v < 0:
                raise InvalidMatrixError(f"entry {name}={v} is negative")
        det = self.a * self.d - self.b * self.c
        if det != 1:
            raise InvalidMatrixError(f"determinant of {self} is {det}, expected 1")
        assert self.a >= 1 and self.d >= 1

    def __str__(self):
        return f"{self.a} {self.b} {self.c} {self.d}"

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return compose(self, other)

    @property
    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    @property
    def is_translation(self) -> bool:
        return self.c == 0

    @property
    def pole(self) -> ExtendedRational:
        """The real point a/c sent to infinity by the map (inf when c = 0)."""
        return ExtendedRational(self.a, self.c)

    @classmethod
    def parse(cls, text: str) -> Matrix:
        """Parse ``"a b c d"``; commas and brackets are tolerated."""
        parts = [p for p in re.split(r"[\s,;()\[\]]+", text.strip()) if p]
        if len(parts) != 4 or not all(re.fullmatch(r"\d+", p) for p in parts):
            raise ParseError(f"expected four nonnegative integers, got {text!r}")
        return cls(*(int(p) for p in parts))


def mk_matrix(a: int, b: int, c: int, d: int) -> Matrix:
    return Matrix(a, b, c, d)


IDENTITY = Matrix(1, 0, 0, 1)


def compose(A: Matrix, B: Matrix) -> Matrix:
    """Matrix product A*B, i.e. the map z -> A(B(z))."""
    return Matrix(A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d,
                  A.c * B.a + A.d * B.c, A.c * B.b + A.d * B.d)


def power(M: Matrix, n: int) -> Matrix:
    # repeated composition; n stays small in every caller
    if n < 0:
        raise ValueError("negative powers leave SL2(N0)")
    P = IDENTITY
    for _ in range(n):
        P = compose(P, M)
    return P


def apply_boundary(M: Matrix, x: ExtendedRational) -> ExtendedRational:
    """Image of a boundary point of the quadrant (a point of [0, inf])."""
    return ExtendedRational(M.a * x.num + M.b * x.den, M.c * x.num + M.d * x.den)


def apply_interior(M: Matrix, z: GaussianRational) -> GaussianRational:
    if not z.in_quadrant:
        raise DomainError(f"{z} is not in the open first quadrant")
    w = (M.a * z + M.b) / (M.c * z + M.d)
    assert w.in_quadrant, (M, z, w)
    return w


def inverse_apply(M: Matrix, z: GaussianRational) -> GaussianRational:
    """Apply the inverse map, via the adjugate (d, -b; -c, a).

    Works on any point except the pole a/c. The result is not required to
    lie in the quadrant.
    """
    den = M.a - M.c * z
    if not den:
        raise PoleError(f"{z} is the pole of the inverse of {M}")
    return (M.d * z - M.b) / den


def inverse_apply_real(M: Matrix, x: Fraction) -> Fraction:
    """Inverse map restricted to finite real points."""
    den = M.a - M.c * x
    if den == 0:
        raise PoleError(f"{x} is the pole of the inverse of {M}")
    return (M.d * x - M.b) / den


@dataclass(frozen=True)
class Slice:
    """Open region of the quadrant cut off by the geodesic from lo to hi.

    ``lo`` is finite; ``hi`` may be infinite, in which case the geodesic is
    the vertical ray above ``lo``.
    """

    lo: ExtendedRational
    hi: ExtendedRational

    def __post_init__(self):
        if not self.lo.is_finite:
            raise ValueError("slice lower endpoint must be finite")
        if not self.lo < self.hi:
            raise ValueError(f"slice endpoints out of order: {self.lo} >= {self.hi}")

    @property
    def is_bounded(self) -> bool:
        return self.hi.is_finite

    @property
    def diam(self) -> ExtendedRational:
        return diam(self)

    @property
    def rad(self) -> ExtendedRational:
        return self.diam / 2

    @property
    def center(self) -> Fraction:
        """Center of the bounding semicircle."""
        if not self.is_bounded:
            raise ValueError("unbounded slice is bounded by a vertical ray")
        return (self.lo.to_fraction() + self.hi.to_fraction()) / 2

    def contains_real(self, x) -> bool:
        """Open-interval membership lo < x < hi on the real axis."""
        return self.lo < x < self.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi})"


def slice_of(M: Matrix) -> Slice:
    return Slice(ExtendedRational(M.b, M.d), ExtendedRational(M.a, M.c))


def diam(s: Slice) -> ExtendedRational:
    if s.hi.is_infinite:
        return INF
    return s.hi - s.lo


def contraction_bound(t, n: int) -> ExtendedRational:
    """n-fold iterate of t -> t/(t+1), which is t/(nt + 1)."""
    t = ExtendedRational.from_value(t)
    if t.is_infinite or t == ZERO:
        raise ValueError("contraction bound needs a finite positive t")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return ExtendedRational(t.num, n * t.num + t.den)


def contains_interior(M: Matrix, z: GaussianRational) -> bool:
    """Whether z lies in the open slice M(D)."""
    try:
        w = inverse_apply(M, z)
    except PoleError:
        return False
    return w.in_quadrant


class PathWord(str):
    """A word over {L, R}, outermost generator first.

    ``PathWord("RLR")`` stands for the composite R o L o R.
    """

    def __new__(cls, letters=""):
        if not isinstance(letters, str):
            letters = "".join(letters)
        letters = letters.upper()
        bad = set(letters) - {"L", "R"}
        if bad:
            raise ParseError(f"path words use only L and R, got {sorted(bad)}")
        return super().__new__(cls, letters)

    def runs(self) -> list[tuple[str, int]]:
        """Maximal runs of equal letters, outermost first."""
        out: list[tuple[str, int]] = []
        for ch in self:
            if out and out[-1][0] == ch:
                out[-1] = (ch, out[-1][1] + 1)
            else:
                out.append((ch, 1))
        return out


def evaluate_word(word, L: Matrix, R: Matrix) -> Matrix:
    M = IDENTITY
    for ch in PathWord(word):
        M = compose(M, L if ch == "L" else R)
    return M
