"""Small standard models used by the tests, the CLI and the examples in the README."""

from __future__ import annotations

from fractions import Fraction

from .dg import Complex, DgAlgebra, DgCoalgebra, GradedModule, algebra_from_tables
from .hopf import AlgebraMap, SphereModel
from .simplicial import CollapsePair, boundary_of_simplex, closed_star, collapse_quotient


def truncated_polynomial(deg: int, k: int, name: str = "w") -> DgAlgebra:
    """Q[w]/w^k with |w| = deg, zero differential, cochain grading."""
    names = ["1"] + [name if i == 1 else f"{name}{i}" for i in range(1, k)]
    basis = {0: ["1"]}
    for i in range(1, k):
        basis.setdefault(i * deg, []).append(names[i])
    mul = {}
    for i in range(1, k):
        for j in range(1, k):
            if i + j < k:
                mul[(names[i], names[j])] = {names[i + j]: 1}
    return algebra_from_tables(basis, mul=mul, top=(k - 1) * deg)


def sphere_cochains(n: int, name: str = "w") -> DgAlgebra:
    """H*(S^n): one class in degree n with trivial square."""
    return truncated_polynomial(n, 2, name)


def exterior(deg: int, name: str = "u") -> DgAlgebra:
    """Exterior algebra on one odd class; the same carrier as ``sphere_cochains``."""
    if deg % 2 == 0:
        raise ValueError("exterior generator must have odd degree")
    return sphere_cochains(deg, name)


def wedge_of_spheres(dims, prefix: str = "w") -> DgAlgebra:
    """Cohomology of a wedge of spheres: one class per sphere, all products zero."""
    basis: dict[int, list[str]] = {0: ["1"]}
    for i, n in enumerate(dims, start=1):
        basis.setdefault(n, []).append(f"{prefix}{i}")
    return algebra_from_tables(basis, top=max(dims))


def hopf_model() -> SphereModel:
    """The four-dimensional model of S^3 that receives the Hopf map.

    Basis 1, c, a, b in degrees 0..3 with dc = a and ca = ac = b.
    """
    alg = algebra_from_tables(
        {0: ["1"], 1: ["c"], 2: ["a"], 3: ["b"]},
        d={"c": {"a": 1}},
        mul={("c", "a"): {"b": 1}, ("a", "c"): {"b": 1}},
    )
    return SphereModel(alg, 3, {"b": Fraction(1)}, "b")


def hopf_map() -> AlgebraMap:
    """Cochain shadow of the Hopf map: w -> a from H*(S^2) to the Hopf model."""
    return AlgebraMap(sphere_cochains(2), hopf_model().algebra, {"w": {"a": 1}})


def linked_model() -> SphereModel:
    """Model of S^3 receiving a map from S^2 v S^2 whose two classes link once.

    c1, c2 in degree 1 with d ci = ai; c1c2 in degree 2; c1a2, c2a1 span degree 3.
    """
    mul = {
        ("c1", "c2"): {"c1c2": 1},
        ("c2", "c1"): {"c1c2": -1},
        ("c1", "a2"): {"c1a2": 1},
        ("a2", "c1"): {"c1a2": 1},
        ("c2", "a1"): {"c2a1": 1},
        ("a1", "c2"): {"c2a1": 1},
    }
    alg = algebra_from_tables(
        {0: ["1"], 1: ["c1", "c2"], 2: ["a1", "a2", "c1c2"], 3: ["c1a2", "c2a1"]},
        d={"c1": {"a1": 1}, "c2": {"a2": 1}, "c1c2": {"c2a1": 1, "c1a2": -1}},
        mul=mul,
    )
    return SphereModel(alg, 3, {"c1a2": Fraction(1), "c2a1": Fraction(1)}, "c1a2")


def linked_map() -> AlgebraMap:
    return AlgebraMap(wedge_of_spheres([2, 2]), linked_model().algebra, {"w1": {"a1": 1}, "w2": {"a2": 1}})


def cp_infinity_coalgebra(top: int = 8) -> DgCoalgebra:
    """H_*(CP^inf) through degree ``top``: x_{2n} with Delta x_{2n} = sum x_{2i} (x) x_{2n-2i}."""
    evens = range(0, top + 1, 2)
    basis = {k: (f"x{k}",) for k in evens}
    comul = {f"x{n}": {(f"x{i}", f"x{n - i}"): 1 for i in range(0, n + 1, 2)} for n in evens}
    mod = GradedModule(basis, top, "Q", truncated=True)
    return DgCoalgebra(Complex(mod, {}, -1), comul, {"x0": 1}, "x0")


def sphere_coalgebra(n: int, ring: str = "Q") -> DgCoalgebra:
    """Collapsed chains of the boundary of the (n+1)-simplex: a model of S^n."""
    x = boundary_of_simplex(n + 1)
    return collapse_quotient(CollapsePair(x, closed_star(x, 0)), ring=ring)


def ground_algebra(ring: str = "Q") -> DgAlgebra:
    return algebra_from_tables({0: ["1"]}, ring=ring, top=0)
