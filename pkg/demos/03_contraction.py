"""
Slices shrink under iteration
=============================

For M with c != 0 the diameters of M^n(D) fall at least as fast as
t/(nt + 1), where t is the diameter of M(D). That is why no vertex can
have an infinite chain of ancestors, and why root finding stops.
"""

from moebius_forest import Matrix, contraction_bound, contraction_trace

for M in [Matrix(1, 0, 1, 1), Matrix(1, 1, 1, 2), Matrix(3, 1, 2, 1)]:
    trace = contraction_trace(M, 6)
    bounds = [contraction_bound(trace[0], k) for k in range(len(trace))]
    print(f"M = ({M})")
    for k, (d, b) in enumerate(zip(trace, bounds), start=1):
        print(f"   n={k}  diam={str(d):>12}  bound={str(b):>8}  ratio={float(d.to_fraction() / b.to_fraction()):.4f}")
