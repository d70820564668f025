from fractions import Fraction

import pytest

from koszul import (
    AlgebraMap,
    BarCocycle,
    PreconditionError,
    QuadraticData,
    VerificationError,
    bar,
    harrison_complex,
    hopf_invariant,
    integrate,
    parametrized_formula,
    weight_reduce,
)
from koszul.fixtures import (
    hopf_map,
    hopf_model,
    linked_map,
    linked_model,
    sphere_cochains,
    wedge_of_spheres,
)
from koszul.hopf import identity_map, lift_harrison_cycle, permute_basis

T_GRID = [Fraction(k, 4) for k in range(5)]


def test_weight_one_cocycle_is_its_own_reduction():
    w = hopf_model()
    red = weight_reduce(w, {("b",): 1})
    assert red.t == {"b": 1} and red.beta == {}


def test_hopf_model_reduction():
    w = hopf_model()
    red = weight_reduce(w, {("a", "a"): -1})
    assert red.t == {"b": 1}
    assert red.beta == {"[c|a]": -1}


def test_hopf_model_invariant_is_one():
    assert integrate(hopf_model(), {("a", "a"): -1}) == 1


def test_exact_weight_one_integrates_to_zero():
    assert integrate(linked_model(), {("c2a1",): 1, ("c1a2",): -1}) == 0


def test_not_a_cocycle():
    with pytest.raises(VerificationError):
        integrate(hopf_model(), {("c", "b"): 1})


def test_hopf_map_invariant():
    src = bar(sphere_cochains(2), 3)
    gamma = BarCocycle.from_words(src, {("w", "w"): -1})
    assert hopf_invariant(gamma, hopf_map(), hopf_model()) == 1


def test_identity_map_on_model():
    w = hopf_model()
    gamma = BarCocycle.from_words(bar(w.algebra, 3, max_weight=3), {("a", "a"): -1})
    assert hopf_invariant(gamma, identity_map(w.algebra), w) == 1


def test_zero_map_kills_decomposables():
    w = hopf_model()
    f = AlgebraMap(sphere_cochains(2), w.algebra, {"w": {}})
    gamma = BarCocycle.from_words(bar(sphere_cochains(2), 3), {("w", "w"): -1})
    assert hopf_invariant(gamma, f, w) == 0


def test_weight_one_pulls_back_and_evaluates():
    s3 = sphere_cochains(3)
    w = hopf_model()
    f = AlgebraMap(s3, w.algebra, {"w": {"b": 3}})
    gamma = BarCocycle.from_words(bar(s3, 3), {("w",): 1})
    assert hopf_invariant(gamma, f, w) == w.integrate_cochain({"b": 3}) == 3


def test_scaling_the_map_scales_quadratically():
    w = hopf_model()
    f = AlgebraMap(sphere_cochains(2), w.algebra, {"w": {"a": 2}})
    gamma = BarCocycle.from_words(bar(sphere_cochains(2), 3), {("w", "w"): -1})
    assert hopf_invariant(gamma, f, w) == 4


def test_basis_order_does_not_matter():
    w = linked_model()
    p = permute_basis(w, {1: ["c2", "c1"], 2: ["c1c2", "a2", "a1"], 3: ["c2a1", "c1a2"]})
    gamma = {("a1", "a2"): -1}
    assert integrate(w, gamma) == integrate(p, gamma) == 1


def test_linking_number():
    src = bar(wedge_of_spheres([2, 2]), 3)
    gamma = BarCocycle.from_words(src, {("w1", "w2"): -1})
    assert hopf_invariant(gamma, linked_map(), linked_model()) == 1


def test_antisymmetric_cocycle_is_zero():
    src = bar(wedge_of_spheres([2, 2]), 3)
    # shifted degrees are 1 and 1, so the sign (-1)^{1*1} makes it antisymmetric
    gamma = BarCocycle.from_words(src, {("w1", "w2"): 1, ("w2", "w1"): -1})
    assert hopf_invariant(gamma, linked_map(), linked_model()) == 0


def test_decomposable_cocycles_integrate_to_zero():
    for w in (hopf_model(), linked_model()):
        a = w.algebra
        closed = [x for d in range(1, w.n) for x in a.module.names(d) if not a.d({x: 1})]
        for x in closed:
            for y in closed:
                if a.module.degree(x) + a.module.degree(y) == w.n:
                    xy = a.product({x: 1}, {y: 1})
                    if not a.d(xy):
                        assert w.integrate_cochain(xy) == 0


def test_cocycle_degree_must_match_sphere():
    w = hopf_model()
    with pytest.raises(PreconditionError):
        weight_reduce(w, {("a",): 1})


# the t-family


def hopf_data(x):
    w = hopf_model()
    return w, QuadraticData(w.algebra, ({"a": x},), ({"a": 1},))


@pytest.mark.parametrize("t", T_GRID)
def test_formula_matches_integral_for_every_t(t):
    w, data = hopf_data(1)
    assert parametrized_formula(w, data, [t]) == integrate(w, data.cocycle_words()) == -1


@pytest.mark.parametrize("t", T_GRID)
def test_formula_gives_hopf_invariant_for_minus_a(t):
    w, data = hopf_data(-1)
    assert parametrized_formula(w, data, [t]) == 1


def test_formula_all_zero():
    w = hopf_model()
    assert parametrized_formula(w, QuadraticData(w.algebra, ({},), ({},)), [Fraction(1, 2)]) == 0


def test_formula_along_map():
    w = hopf_model()
    data = QuadraticData(sphere_cochains(2), ({"w": -1},), ({"w": 1},))
    values = {parametrized_formula(w, data, [t], hopf_map()) for t in T_GRID}
    assert values == {1}


def test_formula_linked_two_pairs():
    w = linked_model()
    src = wedge_of_spheres([2, 2])
    data = QuadraticData(src, ({"w1": -1}, {"w2": 1}), ({"w2": 1}, {"w1": 1}))
    for t1 in T_GRID:
        for t2 in T_GRID:
            assert parametrized_formula(w, data, [t1, t2], linked_map()) == 0


def test_bad_quadratic_data():
    w = hopf_model()
    with pytest.raises(PreconditionError):
        parametrized_formula(w, QuadraticData(w.algebra, ({"c": 1},), ({"a": 1},)), [0])


def test_harrison_lift_gives_same_invariant():
    w = hopf_model()
    h = harrison_complex(w.algebra, 3, max_weight=3)
    gamma = h.project(h.bar.element({("a", "a"): -1}))
    lifted = lift_harrison_cycle(h, gamma)
    terms = {h.bar.word(n).letters: c for n, c in lifted.items()}
    assert integrate(w, terms) == 1
