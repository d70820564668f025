"""Seeded random small fixtures and the structural checks run on each of them.

``check_seed(seed)`` builds one fixture from ``random.Random(seed)`` and
returns a list of violation strings; an empty list means every applicable
property held.
"""

from __future__ import annotations

import random
from fractions import Fraction

from koszul import (
    bar,
    chains_with_coproduct,
    classifying_complex,
    cobar,
    dualize,
    free_lie,
    group_bar,
    harrison_complex,
    homology,
    integrate,
    lie_quotient,
    primitives,
    tensor_hopf_algebra,
    verify_complex,
    verify_dga,
    verify_dgc,
)
from koszul.fixtures import exterior, hopf_model, linked_model, truncated_polynomial, wedge_of_spheres
from koszul.hopf import model_bar
from koszul.lie import chevalley_eilenberg
from koszul.simplicial import SimplicialComplex, cyclic_group, direct_product
from oracles import complex_betti

KINDS = ("algebra", "coalgebra", "hopf", "simplicial", "group", "lie", "sphere")


def random_algebra(rng: random.Random):
    choice = rng.randrange(3)
    if choice == 0:
        return truncated_polynomial(rng.choice([2, 4]), rng.randint(2, 4))
    if choice == 1:
        return exterior(rng.choice([3, 5]))
    return wedge_of_spheres(sorted(rng.choice([2, 3, 4]) for _ in range(rng.randint(1, 2))))


def _check(label, rep, out):
    if not rep:
        out.append(f"{label}: {rep.describe()}")


def _window_agrees(label, build, n, out):
    small, big = build(n), build(n + 2)
    degs = range(0, min(small.module.exact_top, n - 1) + 1)
    if homology(small.complex if hasattr(small, "complex") else small, degs) != homology(
        big.complex if hasattr(big, "complex") else big, degs
    ):
        out.append(f"{label}: homology changed when the window grew from {n} to {n + 2}")


def check_algebra(rng, out):
    a = random_algebra(rng)
    _check("dga", verify_dga(a), out)
    b = bar(a, 5)
    _check("bar", verify_dgc(b), out)
    _window_agrees("bar", lambda n: bar(a, n), 4, out)
    h = harrison_complex(a, 4)
    _check("harrison", verify_complex(h), out)


def check_coalgebra(rng, out):
    a = random_algebra(rng)
    c = dualize(a)
    _check("dgc", verify_dgc(c), out)
    om = cobar(c, 5)
    _check("cobar", verify_dga(om), out)
    _window_agrees("cobar", lambda n: cobar(c, n), 4, out)


def check_hopf(rng, out):
    k = rng.randint(1, 2)
    gens = [(f"g{i}", rng.randint(1, 3)) for i in range(k)]
    diff = {}
    # an extra generator one degree up killing an existing one
    if rng.random() < 0.5:
        name, deg = gens[0]
        gens.append(("e", deg + 1))
        diff["e"] = {(name,): rng.choice([1, -1, 2])}
    h = tensor_hopf_algebra(gens, 5, diff)
    _check("hopf-algebra", verify_dga(h.algebra), out)
    _check("hopf-coalgebra", verify_dgc(h.coalgebra), out)
    _check("hopf-compatibility", h.compatibility(), out)
    _check("primitives", verify_complex(primitives(h).complex), out)


def check_simplicial(rng, out):
    verts = list(range(5))
    facets = []
    for _ in range(rng.randint(1, 4)):
        f = tuple(sorted(rng.sample(verts, rng.randint(1, 4))))
        if f not in facets:
            facets.append(f)
    x = SimplicialComplex(verts, facets)
    c = chains_with_coproduct(x)
    _check("chains", verify_dgc(c), out)
    degs = range(0, c.module.top + 1)
    if homology(c.complex, degs).ranks() != complex_betti(c.complex, degs):
        out.append("simplicial: homology disagrees with the dense oracle")


def check_group(rng, out):
    g = rng.choice([cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                    direct_product(cyclic_group(2), cyclic_group(2))])
    n = rng.randint(2, 4)
    b = group_bar(g, n)
    c = classifying_complex(g, n)
    _check("group-bar", verify_complex(b.complex), out)
    if any(b.complex.matrix(k) != c.matrix(k) for k in range(1, n + 1)):
        out.append("group: bar and classifying complex differ")


def check_lie(rng, out):
    gens = [(f"x{i}", rng.randint(1, 3)) for i in range(rng.randint(1, 2))]
    top = 6
    l = free_lie(gens, top)
    if rng.random() < 0.5:
        a, b = rng.choice(gens)[0], rng.choice(gens)[0]
        l = lie_quotient(l, [f"[{a},{b}]"])
    _check("lie", l.verify(), out)
    _check("ce", verify_complex(chevalley_eilenberg(l, top + 1)), out)


def check_sphere(rng, out):
    w, base = rng.choice([(hopf_model(), {("a", "a"): -1}),
                          (linked_model(), {("a1", "a2"): -1})])
    value = integrate(w, base)
    b = model_bar(w, 3)
    names = b.module.names(w.n - 2)
    beta = {x: Fraction(rng.randint(-3, 3)) for x in rng.sample(names, min(len(names), 3))}
    gamma = {b.word(k).letters: v for k, v in b.element(base).items()}
    for k, v in b.d(beta).items():
        gamma[b.word(k).letters] = gamma.get(b.word(k).letters, 0) + v
    gamma = {k: v for k, v in gamma.items() if v}
    if integrate(w, gamma) != value:
        out.append("sphere: integral changed after adding a bar coboundary")


CHECKS = {
    "algebra": check_algebra,
    "coalgebra": check_coalgebra,
    "hopf": check_hopf,
    "simplicial": check_simplicial,
    "group": check_group,
    "lie": check_lie,
    "sphere": check_sphere,
}


def check_seed(seed: int) -> tuple[str, list[str]]:
    rng = random.Random(seed)
    kind = KINDS[seed % len(KINDS)]
    out: list[str] = []
    CHECKS[kind](rng, out)
    return kind, out
