"""
Drawing the slices
==================

Each word W of length up to the depth gives a slice W(D); its bounding
geodesic is drawn as a semicircle (or a vertical ray for unbounded
slices). Writes calkin_wilf_slices.svg next to this script.
"""

from fractions import Fraction
from pathlib import Path

from moebius_forest import Matrix, RenderSpec, render_svg

out = Path("calkin_wilf_slices.svg")
svg = render_svg(Matrix(1, 1, 0, 1), Matrix(1, 0, 1, 1), RenderSpec(6, Fraction(4), Fraction(2)))
out.write_text(svg)
n = svg.count('class="geodesic"')
print(f"wrote {out} ({n} geodesics)")
