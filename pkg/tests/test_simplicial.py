import pytest

from koszul import (
    CollapsePair,
    PreconditionError,
    SimplicialComplex,
    VerificationError,
    chains_with_coproduct,
    classifying_complex,
    collapse_quotient,
    homology,
    verify_dgc,
)
from koszul.simplicial import (
    BASEPOINT,
    GroupTable,
    boundary_of_simplex,
    closed_star,
    cyclic_group,
    direct_product,
    standard_simplex,
)
from oracles import complex_betti


def test_edge_coproduct():
    c = chains_with_coproduct(standard_simplex(1))
    assert c.comul["(0,1)"] == {("(0)", "(0,1)"): 1, ("(0,1)", "(1)"): 1}


def test_triangle_middle_term():
    c = chains_with_coproduct(standard_simplex(2))
    # (2) is not the basepoint, so (2) - (0) survives in the reduced part too
    assert c.reduced_coproduct("(0,1,2)") == {("(0,1)", "(1,2)"): 1, ("(0,1,2)", "(2)"): 1}


def test_boundary_tetrahedron_chains():
    c = chains_with_coproduct(boundary_of_simplex(3))
    assert [c.module.dim(n) for n in range(3)] == [4, 6, 4]
    assert verify_dgc(c)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_collapse_is_sphere(n):
    x = boundary_of_simplex(n + 1)
    c = collapse_quotient(CollapsePair(x, closed_star(x, 0)))
    assert c.module.dim(0) == 1 and c.module.dim(n) == 1
    assert all(c.module.dim(k) == 0 for k in range(1, n))
    assert all(not c.reduced_coproduct(name) for name in c.module.names(n))
    assert verify_dgc(c)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_collapse_preserves_homology(n):
    x = boundary_of_simplex(n + 1)
    c = collapse_quotient(CollapsePair(x, closed_star(x, 0)))
    assert homology(c.complex).ranks() == homology(x.chain_complex()).ranks()


def test_collapse_everything():
    x = standard_simplex(2)
    c = collapse_quotient(CollapsePair(x, x))
    assert c.module.all_names() == [BASEPOINT]


def test_collapse_needs_acyclic_sub():
    x = boundary_of_simplex(3)
    with pytest.raises(PreconditionError):
        # the 1-skeleton of a tetrahedron carries three loops
        edges = [f for f in x.faces[1]]
        collapse_quotient(CollapsePair(x, SimplicialComplex(x.vertices, edges)))


def test_collapse_needs_one_skeleton():
    x = boundary_of_simplex(3)
    with pytest.raises(PreconditionError):
        collapse_quotient(CollapsePair(x, SimplicialComplex(x.vertices, [(0, 1), (0, 2), (0, 3)])))


def test_z2_homology():
    rep = homology(classifying_complex(cyclic_group(2), 7), range(7))
    assert [rep.describe(n) for n in range(7)] == ["Z", "Z/2", "0", "Z/2", "0", "Z/2", "0"]


def test_z3_homology():
    rep = homology(classifying_complex(cyclic_group(3), 7), range(7))
    assert [rep.describe(n) for n in range(7)] == ["Z", "Z/3", "0", "Z/3", "0", "Z/3", "0"]


def test_trivial_group():
    rep = homology(classifying_complex(cyclic_group(1), 4), range(4))
    assert rep.ranks() == [1, 0, 0, 0]


@pytest.mark.parametrize("g", [cyclic_group(2), cyclic_group(3), direct_product(cyclic_group(2), cyclic_group(2))])
def test_reduced_carrier_sizes(g):
    c = classifying_complex(g, 4)
    assert [c.module.dim(k) for k in range(5)] == [(g.order - 1) ** k for k in range(5)]


@pytest.mark.parametrize("g", [cyclic_group(2), cyclic_group(3)])
def test_reduced_and_unreduced_agree(g):
    red = homology(classifying_complex(g, 5), range(5))
    full = homology(classifying_complex(g, 5, reduced=False), range(5))
    assert red == full


def test_rational_homology_of_finite_group_is_trivial():
    c = classifying_complex(cyclic_group(3), 5, ring="Q")
    assert complex_betti(c, range(5)) == [1, 0, 0, 0, 0]


def test_bad_group_table():
    with pytest.raises(VerificationError):
        GroupTable(((0, 1), (1, 1))).check()
