"""Acceptance criteria, one test each. All comparisons are exact.

Run ``pytest tests/test_acceptance.py -s`` (or this file as a script) to see
one PASS/FAIL line per criterion.
"""

import json
import random
import time
import xml.etree.ElementTree as ET
from fractions import Fraction
from math import gcd

import pytest

from moebius_forest import (
    CALKIN_WILF,
    IDENTITY,
    ExtendedRational,
    ForestConfig,
    GaussianRational,
    Matrix,
    apply_boundary,
    classify_vertex,
    compose,
    contains_interior,
    contraction_bound,
    contraction_trace,
    descend,
    disjointness_oracle,
    enumerate_sl2n,
    enumerate_tree,
    find_root,
    is_left_right_pair,
    slice_of,
)
from moebius_forest.cli import main
from moebius_forest.forest import DEFAULT_MAX_STEPS

CW_L, CW_R = Matrix(1, 1, 0, 1), Matrix(1, 0, 1, 1)
FIVE_PAIRS = [
    (CW_L, CW_R),
    (Matrix(1, 2, 0, 1), Matrix(1, 0, 2, 1)),
    (Matrix(2, 1, 1, 1), Matrix(1, 0, 1, 1)),
    (Matrix(1, 1, 0, 1), Matrix(1, 1, 1, 2)),
    (Matrix(3, 1, 2, 1), Matrix(1, 0, 3, 1)),
]


def report(name, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
    assert ok, detail


def euclid_cf(p, q):
    out = []
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    return out


def test_ac1_classification_matches_geometry():
    t0 = time.perf_counter()
    ms = enumerate_sl2n(8)
    mismatches = bad_witness = non_pairs = 0
    for A in ms:
        for B in ms:
            v = disjointness_oracle(A, B)
            mismatches += is_left_right_pair(A, B) != v.is_pair
            if not v.is_pair:
                non_pairs += 1
                bad_witness += not (contains_interior(A, v.witness) and contains_interior(B, v.witness))
    elapsed = time.perf_counter() - t0
    report("AC1 predicate == oracle over enumerate_sl2n(8)",
           mismatches == 0 and bad_witness == 0 and elapsed < 60,
           f"{len(ms) ** 2} pairs, {mismatches} mismatches, {non_pairs} witnesses "
           f"({bad_witness} invalid), {elapsed:.2f}s")


def test_ac2_degenerate_pairs_and_symmetry():
    ms = enumerate_sl2n(8)
    self_ok = all(not is_left_right_pair(M, M) for M in ms)
    id_ok = all(not is_left_right_pair(IDENTITY, M) for M in ms)
    sym_ok = all(is_left_right_pair(A, B) == is_left_right_pair(B, A) for A in ms for B in ms)
    report("AC2 self/identity never pairs, predicate symmetric", self_ok and id_ok and sym_ok,
           f"self={self_ok} identity={id_ok} symmetric={sym_ok}")


def test_ac3_slice_transport_and_endpoints():
    ms = enumerate_sl2n(8)
    transport = all(
        slice_of(compose(M, N)).lo == apply_boundary(M, slice_of(N).lo)
        and slice_of(compose(M, N)).hi == apply_boundary(M, slice_of(N).hi)
        for M in ms for N in ms)
    endpoints = all(
        slice_of(M).lo == ExtendedRational(M.b, M.d)
        and slice_of(M).hi == ExtendedRational(M.a, M.c)
        and slice_of(M).lo < slice_of(M).hi
        for M in ms)
    report("AC3 slice_of(MN) = M(slice_of(N)); lo = b/d < hi = a/c", transport and endpoints,
           f"transport={transport} endpoints={endpoints}")


def test_ac4_contraction():
    rng = random.Random(4)
    pool = [M for M in enumerate_sl2n(10) if M.c != 0]
    sample = [rng.choice(pool) for _ in range(100)]
    ok = True
    for M in sample:
        tr = contraction_trace(M, 10)
        ok &= all(d <= contraction_bound(tr[0], k) for k, d in enumerate(tr))
        ok &= all(a > b for a, b in zip(tr, tr[1:]))
    exact = contraction_trace(CW_R, 10) == [ExtendedRational(1, n) for n in range(1, 11)]
    attained = all(d == contraction_bound(1, k) for k, d in enumerate(contraction_trace(CW_R, 10)))
    report("AC4 contraction traces within t/(nt+1), strictly decreasing",
           ok and exact and attained, f"random={ok} R-trace exact={exact} bound attained={attained}")


def test_ac5_roots_at_desk_scale():
    t0 = time.perf_counter()
    rng = random.Random(5)
    worst = 0
    ok = True
    for A, B in FIVE_PAIRS:
        cfg = ForestConfig(A, B)
        for _ in range(1000):
            v = GaussianRational(Fraction(rng.randint(1, 100), rng.randint(1, 100)),
                                 Fraction(rng.randint(1, 100), rng.randint(1, 100)))
            r = find_root(cfg, v, DEFAULT_MAX_STEPS)
            worst = max(worst, r.steps)
            ok &= classify_vertex(cfg, r.root).is_root
            ok &= descend(cfg, r.root, r.word) == v
    elapsed = time.perf_counter() - t0
    report("AC5 find_root terminates, root re-classifies, descend round-trips",
           ok and worst < DEFAULT_MAX_STEPS and elapsed < 30,
           f"5 pairs x 1000 vertices, longest word {worst}, {elapsed:.2f}s")


def test_ac6_calkin_wilf_ground_truth():
    tree = enumerate_tree(CALKIN_WILF, ExtendedRational(1), 10)
    values = [v for v, _ in tree]
    by_word = {w: v.to_fraction() for v, w in tree}
    distinct = len(values) == 2047 and len(set(values)) == 2047 and all(v > 0 for v in values)
    rule = all(
        by_word[w] == (by_word[w[1:]] + 1 if w[0] == "L" else by_word[w[1:]] / (by_word[w[1:]] + 1))
        for w in by_word if w)
    roots_ok = cf_ok = True
    checked = 0
    for p in range(1, 51):
        for q in range(1, 51):
            if gcd(p, q) != 1:
                continue
            checked += 1
            r = find_root(CALKIN_WILF, ExtendedRational(p, q))
            roots_ok &= r.root == ExtendedRational(1)
            cf = euclid_cf(p, q)
            cf[-1] -= 1
            runs_from_inner = [n for _, n in reversed(r.word.runs())]
            letters_from_outer = [ch for ch, _ in r.word.runs()]
            expected_letters = [("L" if j % 2 == 0 else "R") for j, a in enumerate(cf) if a]
            cf_ok &= runs_from_inner == [a for a in reversed(cf) if a]
            cf_ok &= letters_from_outer == expected_letters
    report("AC6 Calkin-Wilf tree depth 10 and continued-fraction paths",
           distinct and rule and roots_ok and cf_ok,
           f"2047 distinct={distinct} children rule={rule} "
           f"{checked} fractions: root 1={roots_ok} cf match={cf_ok}")


def test_ac7_cli_contract(capsys, tmp_path):
    def call(*argv):
        code = main(list(argv))
        return code, capsys.readouterr().out

    code, out = call("verify", "--max-entry", "1")
    s = json.loads(out.splitlines()[-1])
    verify_ok = code == 0 and s["matrices"] == 3 and s["mismatches"] == 0

    render_ok = True
    for k in range(0, 6):
        f = tmp_path / f"d{k}.svg"
        call("render", "--depth", str(k), "--out", str(f))
        n = sum(1 for e in ET.parse(f).getroot().iter() if e.get("class") == "geodesic")
        render_ok &= n == 2 ** (k + 1) - 2

    codes = {
        0: call("check-pair", "1 1 0 1", "1 0 1 1")[0],
        1: call("check-pair", "1 0 0 1", "1 0 0 1")[0],
        2: call("check-pair", "1 2 3 4", "1 0 1 1")[0],
        3: call("root", "3/5", "--mode", "boundary", "--max-steps", "1")[0],
    }
    codes_ok = all(k == v for k, v in codes.items())
    capsys.readouterr()
    report("AC7 CLI verify counts, render arc counts, exit codes",
           verify_ok and render_ok and codes_ok,
           f"verify={verify_ok} render={render_ok} exit codes={codes}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))
