"""Navigation in the forest generated by a left-right pair (L, R).

Vertices are points of the open quadrant (interior mode), or positive
rationals on the real axis (boundary mode). Every vertex has at most one
parent, found by inverting whichever of L, R has it in its open image.
With L = (1 1; 0 1), R = (1 0; 1 1) the boundary mode is the Calkin-Wilf
tree and root finding is the Euclidean algorithm.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .errors import DomainError, GuardExhaustedError, InfiniteDiameterError, NotAPairError
from .exact import ExtendedRational, GaussianRational
from .moebius import (
    Matrix,
    PathWord,
    apply_boundary,
    apply_interior,
    compose,
    contains_interior,
    inverse_apply,
    inverse_apply_real,
    slice_of,
)
from .pairs import is_left_right_pair

__all__ = [
    "Mode",
    "ForestConfig",
    "Classification",
    "RootResult",
    "CALKIN_WILF",
    "classify_vertex",
    "find_root",
    "descend",
    "enumerate_tree",
    "contraction_trace",
    "DEFAULT_MAX_STEPS",
]

DEFAULT_MAX_STEPS = 2 ** 20

Vertex = Union[GaussianRational, ExtendedRational]


class Mode(str, enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class ForestConfig:
    L: Matrix
    R: Matrix
    mode: Mode = Mode.INTERIOR

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.L.is_identity or self.R.is_identity:
            raise NotAPairError("the identity cannot be a forest generator")
        if not is_left_right_pair(self.L, self.R):
            raise NotAPairError(f"({self.L}), ({self.R}) is not a left-right pair")

    def generator(self, letter: str) -> Matrix:
        return self.L if letter == "L" else self.R

    def check_vertex(self, v) -> Vertex:
        if self.mode is Mode.INTERIOR:
            if not isinstance(v, GaussianRational) or not v.in_quadrant:
                raise DomainError(f"interior vertex must lie in the open quadrant: {v}")
        else:
            if not isinstance(v, ExtendedRational) or not v.is_finite or v.num == 0:
                raise DomainError(f"boundary vertex must be a finite positive rational: {v}")
        return v

    def parse_vertex(self, text: str) -> Vertex:
        if self.mode is Mode.INTERIOR:
            v = GaussianRational.parse(text)
        else:
            v = ExtendedRational.parse(text)
        return self.check_vertex(v)

    def apply(self, M: Matrix, v: Vertex) -> Vertex:
        if self.mode is Mode.INTERIOR:
            return apply_interior(M, v)
        return apply_boundary(M, v)


CALKIN_WILF = ForestConfig(Matrix(1, 1, 0, 1), Matrix(1, 0, 1, 1), Mode.BOUNDARY)


class Classification(NamedTuple):
    """``letter`` is "L" or "R" for a child, None for a root."""

    letter: Optional[str]
    parent: Optional[Vertex]

    @property
    def is_root(self) -> bool:
        return self.letter is None


ROOT = Classification(None, None)


def _parent_via(cfg: ForestConfig, M: Matrix, v: Vertex) -> Optional[Vertex]:
    if cfg.mode is Mode.INTERIOR:
        if contains_interior(M, v):
            return inverse_apply(M, v)
        return None
    if slice_of(M).contains_real(v):
        return ExtendedRational.from_value(inverse_apply_real(M, v.to_fraction()))
    return None


def classify_vertex(cfg: ForestConfig, v: Vertex) -> Classification:
    cfg.check_vertex(v)
    from_l = _parent_via(cfg, cfg.L, v)
    from_r = _parent_via(cfg, cfg.R, v)
    if from_l is not None and from_r is not None:
        raise AssertionError(f"{v} lies in both L- and R-images; slices are not disjoint")
    if from_l is not None:
        return Classification("L", from_l)
    if from_r is not None:
        return Classification("R", from_r)
    return ROOT


@dataclass(frozen=True)
class RootResult:
    root: Vertex
    word: PathWord
    steps: int

    def to_json(self) -> dict:
        return {"root": str(self.root), "word": str(self.word), "steps": self.steps}


def find_root(cfg: ForestConfig, v: Vertex, max_steps: int = DEFAULT_MAX_STEPS) -> RootResult:
    """Climb parent links from v until a root is reached.

    The returned word satisfies ``descend(cfg, root, word) == v``. Running
    out of ``max_steps`` raises GuardExhaustedError; trees of a left-right
    forest are always rooted, so that only happens on a bug.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    cfg.check_vertex(v)
    letters = []
    cur = v
    for _ in range(max_steps):
        letter, parent = classify_vertex(cfg, cur)
        if letter is None:
            return RootResult(cur, PathWord(letters), len(letters))
        letters.append(letter)
        cur = parent
    if classify_vertex(cfg, cur).is_root:
        return RootResult(cur, PathWord(letters), len(letters))
    raise GuardExhaustedError(f"no root found for {v} within {max_steps} steps")


def descend(cfg: ForestConfig, v: Vertex, word) -> Vertex:
    """Apply a path word to v; the last letter acts first."""
    cfg.check_vertex(v)
    for ch in reversed(PathWord(word)):
        v = cfg.apply(cfg.generator(ch), v)
    return v


def enumerate_tree(cfg: ForestConfig, root: Vertex, depth: int) -> list[tuple[Vertex, PathWord]]:
    """Breadth-first listing of the subtree below ``root``, down to ``depth``.

    Within a level each node's L-child precedes its R-child, so level k lists
    the words ordered lexicographically as read from the root downward.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    cfg.check_vertex(root)
    level = [(root, PathWord())]
    out = list(level)
    for _ in range(depth):
        nxt = []
        for v, w in level:
            nxt.append((cfg.apply(cfg.L, v), PathWord("L" + w)))
            nxt.append((cfg.apply(cfg.R, v), PathWord("R" + w)))
        out.extend(nxt)
        level = nxt
    return out


def contraction_trace(M: Matrix, n: int) -> list[ExtendedRational]:
    """Diameters of the slices M(D), M^2(D), ..., M^n(D)."""
    if M.c == 0:
        raise InfiniteDiameterError(f"{M} is a translation; its image has infinite diameter")
    if n < 1:
        raise ValueError("n must be at least 1")
    out = []
    P = M
    for k in range(n):
        if k:
            P = compose(P, M)
        out.append(slice_of(P).diam)
    return out
