from fractions import Fraction

import pytest

from koszul import ParseError, free_lie
from koszul import formats as fm
from koszul.fixtures import cp_infinity_coalgebra, hopf_map, hopf_model, sphere_coalgebra, truncated_polynomial
from koszul.hopf import QuadraticData
from koszul.simplicial import boundary_of_simplex, cyclic_group, direct_product


def roundtrip(to, frm, obj, *extra):
    text = fm.dump(to(obj))
    back = frm(fm.load(text), *extra)
    assert fm.dump(to(back)) == text
    return back


def test_scalars():
    assert fm.parse_scalar("3/4") == Fraction(3, 4)
    assert fm.parse_scalar(-2) == -2
    for bad in [0.5, True, "x", "1/0", None]:
        with pytest.raises(ParseError):
            fm.parse_scalar(bad)


def test_t_values():
    assert fm.parse_t_values("0,1/4, 1") == [0, Fraction(1, 4), 1]


def test_float_literal_rejected():
    with pytest.raises(ParseError):
        fm.load('{"x": 0.5}')


def test_invalid_json():
    with pytest.raises(ParseError):
        fm.load("{")


def test_simplicial_roundtrip():
    x = roundtrip(fm.simplicial_to_json, fm.simplicial_from_json, boundary_of_simplex(3))
    assert x.faces == boundary_of_simplex(3).faces


def test_group_roundtrip():
    g = direct_product(cyclic_group(2), cyclic_group(2))
    assert roundtrip(fm.group_to_json, fm.group_from_json, g) == g


def test_complex_roundtrip():
    c = sphere_coalgebra(2).complex
    back = roundtrip(fm.complex_to_json, fm.complex_from_json, c)
    assert back.module.basis == c.module.basis and back.d == c.d


def test_dga_roundtrip():
    a = truncated_polynomial(2, 3)
    back = roundtrip(fm.dga_to_json, fm.dga_from_json, a)
    assert back.mul == a.mul and back.module.basis == a.module.basis


def test_dgc_roundtrip():
    c = cp_infinity_coalgebra(6)
    back = roundtrip(fm.dgc_to_json, fm.dgc_from_json, c)
    assert back.comul == c.comul


def test_lie_roundtrip():
    l = free_lie([("x", 1), ("y", 2)], 4)
    back = roundtrip(fm.lie_to_json, fm.lie_from_json, l)
    assert fm.lie_equal(back, l)


def test_sphere_roundtrip():
    w = hopf_model()
    back = roundtrip(fm.sphere_to_json, fm.sphere_from_json, w)
    assert back.n == 3 and back.fundamental == w.fundamental


def test_words_roundtrip():
    terms = {("a", "a"): Fraction(-1), ("b",): Fraction(1, 2)}
    assert fm.words_from_json(fm.load(fm.dump(fm.words_to_json(terms)))) == terms


def test_map_roundtrip():
    f = hopf_map()
    back = roundtrip(fm.map_to_json, fm.map_from_json, f, f.source, f.target)
    assert back.images == f.images


def test_quadratic_roundtrip():
    a = hopf_model().algebra
    q = QuadraticData(a, ({"a": 1},), ({"a": 1},))
    back = roundtrip(fm.quadratic_to_json, fm.quadratic_from_json, q, a)
    assert back.xs == q.xs and back.ys == q.ys


@pytest.mark.parametrize("obj,kind", [
    ({"facets": []}, "simplicial"), ({"table": []}, "group"), ({"generators": []}, "generators"),
    ({"comul": {}}, "dgc"), ({"mul": {}}, "dga"), ({"basis": {}}, "complex"), ({"kind": "lie"}, "lie"),
])
def test_detect_kind(obj, kind):
    assert fm.detect_kind(obj) == kind


def test_detect_kind_unknown():
    with pytest.raises(ParseError):
        fm.detect_kind({"nothing": 1})
