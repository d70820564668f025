from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from koszul import (
    PreconditionError,
    TensorWord,
    bar,
    classifying_complex,
    cobar,
    counit_and_check,
    group_bar,
    harrison_complex,
    homology,
    shuffle_product,
    verify_dga,
    verify_dgc,
)
from koszul.barcobar import EMPTY
from koszul.dg import DgCoalgebra, GradedModule, Complex
from koszul.fixtures import (
    cp_infinity_coalgebra,
    exterior,
    ground_algebra,
    sphere_cochains,
    sphere_coalgebra,
    truncated_polynomial,
    wedge_of_spheres,
)
from koszul.simplicial import cyclic_group, direct_product
from oracles import brute_shuffles, complex_betti


def letter(name, deg):
    return TensorWord((name,), (deg,))


# shuffles


@pytest.mark.parametrize("p,q", [(1, 1), (1, 2), (2, 2), (3, 1)])
def test_one_one_shuffle_sign(p, q):
    out = shuffle_product(letter("x", p), letter("y", q))
    assert out == {TensorWord(("x", "y"), (p, q)): 1, TensorWord(("y", "x"), (q, p)): (-1) ** (p * q)}


def test_empty_word_is_unit():
    v = TensorWord(("y", "z"), (1, 2))
    assert shuffle_product(EMPTY, v) == {v: 1}
    assert shuffle_product(v, EMPTY) == {v: 1}


def test_one_into_two_has_three_terms():
    out = shuffle_product(letter("x", 2), TensorWord(("y", "z"), (2, 2)))
    assert len(out) == 3 and set(out.values()) == {1}


@given(st.integers(0, 3), st.integers(0, 3))
def test_shuffle_count_matches_brute_force(p, q):
    u = TensorWord(tuple(f"u{i}" for i in range(p)), (2,) * p)
    v = TensorWord(tuple(f"v{i}" for i in range(q)), (2,) * q)
    assert len(shuffle_product(u, v)) == len(brute_shuffles(p, q))


@given(st.lists(st.integers(1, 3), min_size=1, max_size=2), st.lists(st.integers(1, 3), min_size=1, max_size=2))
def test_shuffle_graded_commutative(du, dv):
    u = TensorWord(tuple(f"u{i}" for i in range(len(du))), tuple(du))
    v = TensorWord(tuple(f"v{i}" for i in range(len(dv))), tuple(dv))
    s = (-1) ** (u.degree * v.degree)
    assert shuffle_product(v, u) == {w: s * c for w, c in shuffle_product(u, v).items()}


# cobar


def test_cobar_of_s3_is_tensor_algebra():
    rep = homology(cobar(sphere_coalgebra(3), 8).complex)
    assert rep.ranks()[:5] == [1, 0, 1, 0, 1]


def test_cobar_of_cp_infinity():
    rep = homology(cobar(cp_infinity_coalgebra(8), 8).complex, range(7))
    assert rep.ranks() == [1, 1, 0, 0, 0, 0, 0]


def test_cobar_of_point():
    mod = GradedModule({0: ("p",)}, 0, "Q")
    pt = DgCoalgebra(Complex(mod, {}, -1), {"p": {("p", "p"): 1}}, {"p": 1}, "p")
    om = cobar(pt, 4)
    assert om.module.all_names() == [om.unit]


def test_cobar_rejects_non_one_reduced():
    mod = GradedModule({0: ("e",), 1: ("u",)}, 1, "Q")
    comul = {"e": {("e", "e"): 1}, "u": {("e", "u"): 1, ("u", "e"): 1}}
    with pytest.raises(PreconditionError):
        cobar(DgCoalgebra(Complex(mod, {}, -1), comul, {"e": 1}, "e"), 4)


@pytest.mark.parametrize("n", [2, 3])
def test_cobar_is_dga_and_weight_rises(n):
    om = cobar(sphere_coalgebra(n), 7)
    assert verify_dga(om)
    for name, w in om.words.items():
        for t in om.d({name: 1}):
            assert 0 <= om.words[t].weight - w.weight <= 1


@pytest.mark.parametrize("make", [lambda: sphere_coalgebra(2), lambda: cp_infinity_coalgebra(10)])
def test_cobar_window_invariance(make):
    c = make()
    small, big = cobar(c, 6), cobar(c, 8)
    assert homology(small.complex, range(5)) == homology(big.complex, range(5))


# bar


def test_bar_of_s2_cochains():
    assert homology(bar(sphere_cochains(2), 5).complex).ranks() == [1, 1, 1, 1, 1]


def test_bar_of_s3_cochains():
    assert homology(bar(exterior(3), 7).complex, range(7)).ranks() == [1, 0, 1, 0, 1, 0, 1]


def test_bar_of_ground_ring():
    b = bar(ground_algebra(), 4)
    assert b.module.all_names() == ["[]"]


def test_bar_ranks_match_dense_oracle():
    b = bar(truncated_polynomial(2, 3), 6)
    assert complex_betti(b.complex, range(6)) == homology(b.complex).ranks()[:6]


def test_bar_is_coalgebra_and_weight_drops():
    b = bar(truncated_polynomial(2, 3), 7)
    assert verify_dgc(b)
    for name, w in b.words.items():
        for t in b.d({name: 1}):
            assert 0 <= w.weight - b.words[t].weight <= 1


def test_bar_needs_weight_bound_for_degree_zero_letters():
    with pytest.raises(PreconditionError):
        bar(sphere_cochains(1), 3)


def test_bar_element_rejects_unknown_word():
    b = bar(sphere_cochains(2), 3)
    with pytest.raises(KeyError):
        b.element({("w", "w", "w", "w", "w"): 1})


@pytest.mark.parametrize("a", [lambda: sphere_cochains(2), lambda: wedge_of_spheres([2, 3])])
def test_bar_window_invariance(a):
    assert homology(bar(a(), 6).complex, range(5)) == homology(bar(a(), 8).complex, range(5))


# groups


@pytest.mark.parametrize("g", [cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                               direct_product(cyclic_group(2), cyclic_group(2))])
def test_group_bar_is_classifying_complex(g):
    b = group_bar(g, 6)
    c = classifying_complex(g, 6)
    assert b.module.basis == c.module.basis
    for n in range(1, 7):
        assert b.complex.matrix(n) == c.matrix(n)


def test_z4_differs_from_klein_group():
    h4 = homology(group_bar(cyclic_group(4), 3).complex, [1])
    hk = homology(group_bar(direct_product(cyclic_group(2), cyclic_group(2)), 3).complex, [1])
    assert h4.describe(1) == "Z/4"
    assert hk.describe(1) == "Z/2 + Z/2"


# counit


@pytest.mark.parametrize("a,ranks", [
    (lambda: sphere_cochains(2), (1, 0, 1)),
    (lambda: exterior(3), (1, 0, 0, 1)),
])
def test_counit_examples(a, ranks):
    rep = counit_and_check(a(), len(ranks))
    assert rep.target_ranks == ranks and rep.quasi_isomorphism


def test_counit_ground_ring():
    assert counit_and_check(ground_algebra(), 3).quasi_isomorphism


# Harrison


def test_harrison_s2():
    h = harrison_complex(sphere_cochains(2), 4)
    assert homology(h).ranks() == [1, 1, 1, 0]


def test_harrison_s3():
    h = harrison_complex(exterior(3), 5)
    assert homology(h).ranks() == [1, 0, 1, 0, 0]


def test_harrison_ground_ring():
    h = harrison_complex(ground_algebra(), 3)
    assert all(r == 0 for r in homology(h).ranks()[1:])


def test_harrison_kills_antisymmetric_word():
    h = harrison_complex(wedge_of_spheres([2, 2]), 4)
    b = h.bar
    x, y = b.word("[w1]"), b.word("[w2]")
    gamma = {b.name_of(w.letters): Fraction(c) for w, c in shuffle_product(x, y).items()}
    assert h.project(gamma) == {}


def test_harrison_rejects_noncommutative():
    from koszul import algebra_from_tables

    a = algebra_from_tables({0: ["1"], 2: ["x", "y"], 4: ["xy"]}, mul={("x", "y"): {"xy": 1}})
    with pytest.raises(PreconditionError):
        harrison_complex(a, 4)
