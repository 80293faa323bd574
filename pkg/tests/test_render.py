import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from moebius_forest import ExtendedRational, Matrix, RenderSpec, render_svg
from moebius_forest.render import level_words

from conftest import CW_L, CW_R, PAIRS

NS = {"svg": "http://www.w3.org/2000/svg"}


def geodesics(svg):
    root = ET.fromstring(svg)
    return [e for e in root.iter() if e.get("class") == "geodesic"]


def slice_bounds(e):
    lo, hi = e.get("data-slice").strip("[)").split(", ")
    return ExtendedRational.parse(lo), ExtendedRational.parse(hi)


@pytest.mark.parametrize("depth", range(0, 7))
def test_arc_count(depth):
    assert len(geodesics(render_svg(CW_L, CW_R, RenderSpec(depth)))) == 2 ** (depth + 1) - 2


def test_depth_one_calkin_wilf():
    els = geodesics(render_svg(CW_L, CW_R, RenderSpec(1)))
    assert [e.get("data-word") for e in els] == ["L", "R"]
    ray, arc = els
    assert ray.tag.endswith("line") and slice_bounds(ray) == (ExtendedRational(1), ExtendedRational(1, 0))
    assert ray.get("x1") == ray.get("x2")
    assert arc.tag.endswith("path") and slice_bounds(arc) == (ExtendedRational(0), ExtendedRational(1))


def test_depth_zero_has_axes_only():
    svg = render_svg(CW_L, CW_R, RenderSpec(0))
    root = ET.fromstring(svg)
    assert geodesics(svg) == []
    assert len([e for e in root.iter() if e.get("class") == "axis"]) == 2


def test_depth_two_nesting():
    els = geodesics(render_svg(CW_L, CW_R, RenderSpec(2)))
    assert [e.get("data-word") for e in els] == ["L", "R", "LL", "RL", "LR", "RR"]
    by_word = {e.get("data-word"): slice_bounds(e) for e in els}
    for w in ["LL", "RL", "LR", "RR"]:
        lo, hi = by_word[w]
        plo, phi = by_word[w[0]]
        assert plo <= lo and hi <= phi
    assert by_word["RL"][1] <= 1 and by_word["RR"][1] <= 1


def test_level_words():
    assert level_words(0) == []
    assert level_words(2) == ["L", "R", "LL", "RL", "LR", "RR"]


def test_coordinates_are_fixed_decimals():
    svg = render_svg(Matrix(3, 1, 2, 1), Matrix(1, 0, 3, 1), RenderSpec(3, Fraction(2), Fraction(1)))
    arc = geodesics(svg)[0]
    nums = arc.get("d").replace("M", "").replace("A", "").split()
    assert all("e" not in n.lower() for n in nums)
    # 20 significant digits at most
    assert all(len(n.replace("-", "").replace(".", "").lstrip("0")) <= 20 for n in nums)


def test_render_is_deterministic():
    A, B = PAIRS[3]
    assert render_svg(A, B, RenderSpec(4)) == render_svg(A, B, RenderSpec(4))


def test_render_spec_validation():
    with pytest.raises(ValueError):
        RenderSpec(13)
    with pytest.raises(ValueError):
        RenderSpec(2, Fraction(0), Fraction(1))
