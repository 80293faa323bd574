"""Left-right pairs: the integer criterion, a geometric oracle, enumeration."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import WitnessSearchError
from .exact import GaussianRational
from .moebius import Matrix, contains_interior, slice_of

__all__ = [
    "PairVerdict",
    "is_left_right_pair",
    "disjointness_oracle",
    "enumerate_sl2n",
    "Mismatch",
    "VerifySummary",
    "verify_pairs",
    "MAX_HALVINGS",
]

MAX_HALVINGS = 512


@dataclass(frozen=True)
class PairVerdict:
    is_pair: bool
    witness: Optional[GaussianRational] = None


def is_left_right_pair(A: Matrix, B: Matrix) -> bool:
    """Decide whether A(D) and B(D) are disjoint.

    Holds iff a1*d2 <= b2*c1 or a2*d1 <= c2*b1, with A = (a1, b1; c1, d1)
    and B = (a2, b2; c2, d2). The test is symmetric in A and B.
    """
    return A.a * B.d <= B.b * A.c or B.a * A.d <= B.c * A.b


def disjointness_oracle(A: Matrix, B: Matrix) -> PairVerdict:
    """Decide the same question from the slices themselves.

    The slices are disjoint iff their boundary intervals share no interior
    point. Otherwise a point in both slices is returned as witness: above a
    real point m inside both intervals, m + eps*i is searched with eps
    halving from 1.
    """
    sa, sb = slice_of(A), slice_of(B)
    if sa.hi <= sb.lo or sb.hi <= sa.lo:
        return PairVerdict(True)

    lo = max(sa.lo, sb.lo).to_fraction()
    hi = min(sa.hi, sb.hi)
    if hi.is_infinite:
        m = lo + 1
    else:
        m = (lo + hi.to_fraction()) / 2

    eps = Fraction(1)
    for _ in range(MAX_HALVINGS + 1):
        z = GaussianRational(m, eps)
        if contains_interior(A, z) and contains_interior(B, z):
            return PairVerdict(False, z)
        eps /= 2
    raise WitnessSearchError(f"no witness for ({A}), ({B}) after {MAX_HALVINGS} halvings")


def enumerate_sl2n(max_entry: int) -> list[Matrix]:
    """All SL2(N0) matrices with entries in [0, max_entry], lexicographic."""
    out = []
    for a in range(1, max_entry + 1):
        for b in range(max_entry + 1):
            for c in range(max_entry + 1):
                q, r = divmod(1 + b * c, a)
                if r == 0 and q <= max_entry:
                    out.append(Matrix(a, b, c, q))
    return out


class Mismatch(NamedTuple):
    A: Matrix
    B: Matrix
    predicate: bool
    oracle: bool
    witness: Optional[GaussianRational]

    def to_json(self) -> dict:
        return {
            "A": str(self.A),
            "B": str(self.B),
            "predicate": self.predicate,
            "oracle": self.oracle,
            "witness": None if self.witness is None else str(self.witness),
        }


@dataclass
class VerifySummary:
    matrices: int
    pairs_checked: int
    pairs_found: int
    mismatches: list

    def to_json(self) -> dict:
        return {
            "matrices": self.matrices,
            "pairs_checked": self.pairs_checked,
            "pairs_found": self.pairs_found,
            "mismatches": len(self.mismatches),
        }


def _check_row(A: Matrix, matrices: list) -> tuple[int, list]:
    found = 0
    bad = []
    for B in matrices:
        pred = is_left_right_pair(A, B)
        verdict = disjointness_oracle(A, B)
        witness_ok = verdict.witness is None or (
            contains_interior(A, verdict.witness) and contains_interior(B, verdict.witness))
        if pred != verdict.is_pair or not witness_ok:
            bad.append(Mismatch(A, B, pred, verdict.is_pair, verdict.witness))
        found += pred
    return found, bad


def verify_pairs(max_entry: int, workers: int = 1) -> VerifySummary:
    """Check predicate against oracle on every ordered enumerated pair.

    Rows (one per left matrix) are independent; with ``workers > 1`` they
    run in a process pool. Results are merged in enumeration order, so the
    output does not depend on scheduling.
    """
    matrices = enumerate_sl2n(max_entry)
    if workers > 1 and len(matrices) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_check_row, matrices, [matrices] * len(matrices)))
    else:
        rows = [_check_row(A, matrices) for A in matrices]
    found = sum(r[0] for r in rows)
    mismatches = [m for r in rows for m in r[1]]
    return VerifySummary(len(matrices), len(matrices) ** 2, found, mismatches)

