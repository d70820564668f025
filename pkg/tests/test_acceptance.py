"""Acceptance criteria 1-10, one test each.

Each test prints ``criterion k: PASS`` or ``criterion k: FAIL`` with the
observed values and wall time, then asserts.  Run with ``-s`` to see the
lines inline; they are also repeated in the terminal summary.
"""

import time
from fractions import Fraction

import pytest

import acceptance_log
from koszul import (
    BarCocycle,
    QuadraticData,
    bar,
    chevalley_eilenberg,
    classifying_complex,
    cobar,
    counit_and_check,
    free_lie,
    group_bar,
    harrison_complex,
    homology,
    hopf_invariant,
    integrate,
    lie_quotient,
    parametrized_formula,
    primitives,
    tensor_hopf_algebra,
)
from koszul.fixtures import (
    cp_infinity_coalgebra,
    exterior,
    hopf_map,
    hopf_model,
    linked_map,
    linked_model,
    sphere_cochains,
    sphere_coalgebra,
    truncated_polynomial,
    wedge_of_spheres,
)
from koszul.simplicial import cyclic_group, direct_product
from oracles import free_lie_dims
from property_fixtures import check_seed

EXERCISE_GOLDEN = (1, 0, 0, 0, 3, 0, 0, 0, 1, 0)
T_GRID = [Fraction(k, 4) for k in range(5)]

GROUPS = {
    "Z/1": cyclic_group(1),
    "Z/2": cyclic_group(2),
    "Z/3": cyclic_group(3),
    "Z/4": cyclic_group(4),
    "Z/2xZ/2": direct_product(cyclic_group(2), cyclic_group(2)),
}


def report(k, ok, detail, elapsed, bound=None):
    within = bound is None or elapsed < bound
    verdict = "PASS" if ok and within else "FAIL"
    limit = f" (limit {bound} s)" if bound else ""
    line = f"criterion {k}: {verdict}  {detail}  [{elapsed:.2f} s{limit}]"
    acceptance_log.LINES[k] = line
    print(line)
    assert ok, line
    assert within, line


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_criterion_1_loop_space_of_spheres():
    def run():
        got = {}
        for n in (2, 3, 4):
            om = cobar(sphere_coalgebra(n), 9)
            got[n] = tuple(homology(om.complex, range(9)).ranks())
        return got

    got, dt = timed(run)
    want = {n: tuple(1 if k % (n - 1) == 0 else 0 for k in range(9)) for n in (2, 3, 4)}
    report(1, got == want, f"ranks through degree 8: {got}", dt, 10)


def test_criterion_2_cobar_of_cp_infinity():
    got, dt = timed(lambda: tuple(homology(cobar(cp_infinity_coalgebra(8), 8).complex, range(7)).ranks()))
    report(2, got == (1, 1, 0, 0, 0, 0, 0), f"ranks 0..6: {got}", dt, 10)


def test_criterion_3_group_homology():
    def run():
        out = {}
        for name in ("Z/2", "Z/3", "Z/4", "Z/2xZ/2"):
            rep = homology(group_bar(GROUPS[name], 7).complex, range(7))
            out[name] = tuple(rep.describe(n) for n in range(7))
        return out

    got, dt = timed(run)

    def cyclic(n):
        return ("Z",) + tuple(f"Z/{n}" if k % 2 else "0" for k in range(1, 7))

    ok = (
        got["Z/2"] == ("Z", "Z/2", "0", "Z/2", "0", "Z/2", "0")
        and got["Z/3"] == cyclic(3)
        and got["Z/4"] == cyclic(4)
        and got["Z/4"][1] != got["Z/2xZ/2"][1]
    )
    report(3, ok, "; ".join(f"{k}: {', '.join(v)}" for k, v in got.items()), dt, 30)


def test_criterion_4_counit():
    algebras = {
        "Q[w]/w^2": sphere_cochains(2),
        "exterior(3)": exterior(3),
        "Q[w]/w^3": truncated_polynomial(2, 3),
    }

    def run():
        return {k: counit_and_check(a, 5) for k, a in algebras.items()}

    got, dt = timed(run)
    ok = all(r.quasi_isomorphism and r.source_ranks == r.target_ranks for r in got.values())
    detail = "; ".join(f"{k}: {r.source_ranks} vs {r.target_ranks}" for k, r in got.items())
    report(4, ok, detail, dt, 60)


def test_criterion_5_group_bar_is_classifying_complex():
    def run():
        bad = []
        for name, g in GROUPS.items():
            b, c = group_bar(g, 6), classifying_complex(g, 6)
            if b.module.basis != c.module.basis:
                bad.append(f"{name} carrier")
            for n in range(1, 7):
                if b.complex.matrix(n) != c.matrix(n):
                    bad.append(f"{name} d_{n}")
        return bad

    bad, dt = timed(run)
    report(5, not bad, f"groups {', '.join(GROUPS)} degrees <= 6, mismatches: {bad or 'none'}", dt)


SETS = [
    [("x", 1)], [("x", 2)],
    [("x", 1), ("y", 1)], [("x", 1), ("y", 2)], [("x", 2), ("y", 2)],
    [("x", 1), ("y", 1), ("z", 1)], [("x", 1), ("y", 2), ("z", 3)], [("x", 2), ("y", 2), ("z", 2)],
]


def test_criterion_6_primitives_are_free_lie():
    def run():
        bad = []
        for gens in SETS:
            prim = {n: r for n, r in primitives(tensor_hopf_algebra(gens, 6)).ranks().items() if r}
            lie = {n: r for n, r in free_lie(gens, 6).dims().items() if r}
            witt = free_lie_dims([d for _, d in gens], 6)
            if not prim == lie == witt:
                bad.append((gens, prim, lie, witt))
        return bad

    bad, dt = timed(run)
    report(6, not bad, f"{len(SETS)} generator sets of sizes 1-3, degrees <= 6, mismatches: {bad or 'none'}", dt)


def test_criterion_7_chevalley_eilenberg():
    def run():
        spheres = {}
        for n in (3, 4, 5):
            l = free_lie([("x", n - 1)], 7)
            spheres[n] = tuple(homology(chevalley_eilenberg(l, 8), range(8)).ranks())
        q = lie_quotient(free_lie([("x", 3), ("y", 3), ("z", 3)], 9), ["[x,y] - [y,z]"])
        ex8 = tuple(homology(chevalley_eilenberg(q, 8), range(8)).ranks())
        ex10 = tuple(homology(chevalley_eilenberg(q, 10), range(10)).ranks())
        return spheres, ex8, ex10

    (spheres, ex8, ex10), dt = timed(run)
    ok = all(spheres[n] == tuple(1 if k in (0, n) else 0 for k in range(8)) for n in (3, 4, 5))
    ok = ok and ex8 == EXERCISE_GOLDEN[:8] and ex10 == EXERCISE_GOLDEN
    report(7, ok, f"spheres {spheres}; exercise N=8 {ex8}, N=10 {ex10}", dt)


def test_criterion_8_hopf_invariant():
    def run():
        w = hopf_model()
        gamma = BarCocycle.from_words(bar(sphere_cochains(2), 3), {("w", "w"): -1})
        inv = hopf_invariant(gamma, hopf_map(), w)
        family = {}
        for x in (1, -1):
            data = QuadraticData(w.algebra, ({"a": x},), ({"a": 1},))
            family[x] = {parametrized_formula(w, data, [t]) for t in T_GRID}
            family[x].add(integrate(w, data.cocycle_words()))
        anti = BarCocycle.from_words(bar(wedge_of_spheres([2, 2]), 3), {("w1", "w2"): 1, ("w2", "w1"): -1})
        zero = hopf_invariant(anti, linked_map(), linked_model())
        return inv, family, zero

    (inv, family, zero), dt = timed(run)
    ok = inv == 1 and all(len(v) == 1 for v in family.values()) and family[-1] == {1} and zero == 0
    fam = {x: sorted(str(v) for v in vals) for x, vals in family.items()}
    report(8, ok, f"invariant {inv}; t-family values by x-sign {fam}; antisymmetric {zero}", dt, 5)


def test_criterion_9_harrison():
    def run():
        s2 = tuple(homology(harrison_complex(sphere_cochains(2), 4), range(1, 4)).ranks())
        s3 = tuple(homology(harrison_complex(exterior(3), 5), range(1, 5)).ranks())
        return s2, s3

    (s2, s3), dt = timed(run)
    report(9, s2 == (1, 1, 0) and s3 == (0, 1, 0, 0), f"S^2 degrees 1..3 {s2}; S^3 degrees 1..4 {s3}", dt)


def test_criterion_10_property_suites():
    def run():
        bad = {}
        kinds = {}
        for seed in range(100):
            kind, violations = check_seed(seed)
            kinds[kind] = kinds.get(kind, 0) + 1
            if violations:
                bad[seed] = violations
        return bad, kinds

    (bad, kinds), dt = timed(run)
    report(10, not bad, f"100 fixtures {kinds}, violations: {len(bad)}", dt)
