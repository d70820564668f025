"""Simplicial chains with the Alexander-Whitney diagonal, collapse quotients,
and the simplicial chain complex of the classifying space of a finite group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Hashable, Iterable, Sequence

from .dg import Complex, DgCoalgebra, GradedModule, add_into, homology, sign, word_name
from .errors import PreconditionError, VerificationError
from .linalg import check_ring


def simplex_name(simplex: Sequence) -> str:
    return "(" + ",".join(str(v) for v in simplex) + ")"


@dataclass(frozen=True)
class SimplicialComplex:
    """Finite simplicial complex given by its facets.

    Simplices are stored as tuples of vertices sorted by their position in
    ``vertices``; that order fixes every orientation.
    """

    vertices: tuple
    facets: tuple

    def __init__(self, vertices: Iterable[Hashable], facets: Iterable[Iterable[Hashable]]):
        verts = tuple(vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex labels")
        pos = {v: i for i, v in enumerate(verts)}
        seen = []
        for f in facets:
            f = tuple(sorted(set(f), key=lambda v: pos[v]))
            if not f:
                continue
            for v in f:
                if v not in pos:
                    raise ValueError(f"facet uses unknown vertex {v!r}")
            if f in seen:
                raise ValueError(f"repeated facet {f}")
            seen.append(f)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "facets", tuple(seen))

    @cached_property
    def _pos(self):
        return {v: i for i, v in enumerate(self.vertices)}

    def sort(self, simplex: Iterable) -> tuple:
        return tuple(sorted(simplex, key=lambda v: self._pos[v]))

    @cached_property
    def faces(self) -> dict[int, tuple[tuple, ...]]:
        """All faces by dimension, each dimension sorted lexicographically by vertex position."""
        out: dict[int, set] = {}
        for v in self.vertices:
            out.setdefault(0, set()).add((v,))
        for f in self.facets:
            for k in range(1, len(f) + 1):
                for sub in combinations(f, k):
                    out.setdefault(k - 1, set()).add(sub)
        key = lambda s: tuple(self._pos[v] for v in s)  # noqa: E731
        return {d: tuple(sorted(s, key=key)) for d, s in sorted(out.items())}

    @property
    def dimension(self) -> int:
        return max(self.faces) if self.faces else -1

    def contains(self, simplex: Iterable) -> bool:
        s = self.sort(simplex)
        return s in self._faceset

    @cached_property
    def _faceset(self) -> set:
        return {s for faces in self.faces.values() for s in faces}

    def is_subcomplex_of(self, other: SimplicialComplex) -> bool:
        return all(other.contains(s) for s in self._faceset)

    def chain_complex(self, top: int | None = None, ring: str = "Q") -> Complex:
        """Oriented simplicial chains, boundary sum of (-1)^i d_i."""
        top = self.dimension if top is None else top
        basis = {d: tuple(simplex_name(s) for s in faces) for d, faces in self.faces.items() if d <= top}
        d = {}
        for dim, faces in self.faces.items():
            if dim == 0 or dim > top:
                continue
            for s in faces:
                d[simplex_name(s)] = {simplex_name(s[:i] + s[i + 1:]): sign(i) for i in range(len(s))}
        return Complex(GradedModule(basis, max(top, 0), ring, truncated=top < self.dimension), d, -1)


def boundary_of_simplex(n: int) -> SimplicialComplex:
    """The boundary of the standard n-simplex on vertices 0..n."""
    verts = tuple(range(n + 1))
    return SimplicialComplex(verts, [tuple(v for v in verts if v != i) for i in verts])


def standard_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(range(n + 1), [tuple(range(n + 1))])


def closed_star(x: SimplicialComplex, vertex) -> SimplicialComplex:
    """Closed star of ``vertex``: every face ``s`` with ``s + {vertex}`` a face.

    This is a cone, hence acyclic, which makes it the default choice of
    subcomplex to collapse.
    """
    facets = [f for f in x.facets if vertex in f]
    verts = sorted({v for f in facets for v in f}, key=lambda v: x._pos[v])
    return SimplicialComplex(verts, facets)


def chains_with_coproduct(x: SimplicialComplex, N: int | None = None, ring: str = "Q") -> DgCoalgebra:
    """Simplicial chains through degree N with the Alexander-Whitney coproduct.

    The coaugmentation is the first vertex.
    """
    check_ring(ring)
    cx = x.chain_complex(N, ring)
    top = cx.module.top
    comul = {}
    for dim, faces in x.faces.items():
        if dim > top:
            continue
        for s in faces:
            comul[simplex_name(s)] = {(simplex_name(s[: i + 1]), simplex_name(s[i:])): 1 for i in range(len(s))}
    counit = {simplex_name((v,)): 1 for v in x.vertices}
    return DgCoalgebra(cx, comul, counit, simplex_name((x.vertices[0],)))


BASEPOINT = "(*)"


@dataclass(frozen=True)
class CollapsePair:
    """A complex together with an acyclic subcomplex containing its 1-skeleton."""

    total: SimplicialComplex
    sub: SimplicialComplex

    def check(self) -> None:
        if not self.sub.is_subcomplex_of(self.total):
            raise PreconditionError("sub is not a subcomplex of total")
        for dim in (0, 1):
            for s in self.total.faces.get(dim, ()):
                if not self.sub.contains(s):
                    raise PreconditionError(f"sub misses the {dim}-simplex {simplex_name(s)}")
        h = homology(self.sub.chain_complex(ring="Z"))
        for n in h.groups:
            r, tors = h.groups[n]
            if tors or r != (1 if n == 0 else 0):
                raise PreconditionError(f"sub is not acyclic: H_{n}(sub) = {h.describe(n)}")


def collapse_quotient(pair: CollapsePair, N: int | None = None, ring: str = "Q") -> DgCoalgebra:
    """Chains of ``total`` modulo the reduced chains of ``sub``.

    Every vertex becomes the single basepoint ``(*)``; simplices of ``sub`` in
    positive degree vanish.  The induced Alexander-Whitney coproduct makes
    the result a 1-reduced DG coalgebra.
    """
    pair.check()
    total = pair.total
    top = total.dimension if N is None else N
    basis: dict[int, list[str]] = {0: [BASEPOINT]}
    keep = {}
    for dim, faces in total.faces.items():
        if dim == 0 or dim > top:
            continue
        for s in faces:
            if not pair.sub.contains(s):
                keep[s] = simplex_name(s)
                basis.setdefault(dim, []).append(keep[s])

    def image(s):
        if len(s) == 1:
            return BASEPOINT
        return keep.get(s)

    d = {}
    comul = {BASEPOINT: {(BASEPOINT, BASEPOINT): 1}}
    for s, name in keep.items():
        ds: dict = {}
        for i in range(len(s)):
            t = image(s[:i] + s[i + 1:])
            if t is not None:
                add_into(ds, {t: 1}, sign(i))
        d[name] = ds
        cs: dict = {}
        for i in range(len(s)):
            l, r = image(s[: i + 1]), image(s[i:])
            if l is not None and r is not None:
                add_into(cs, {(l, r): 1}, 1)
        comul[name] = cs
    mod = GradedModule({k: tuple(v) for k, v in basis.items()}, max(top, 0), ring,
                       truncated=top < total.dimension)
    return DgCoalgebra(Complex(mod, d, -1), comul, {BASEPOINT: Fraction(1)}, BASEPOINT)


# --------------------------------------------------------------------------
# groups


@dataclass(frozen=True)
class GroupTable:
    """Finite group as a multiplication table on indices ``0..order-1``."""

    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        t = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", t)
        labels = tuple(str(i) for i in range(len(t))) if self.labels is None else tuple(map(str, self.labels))
        if len(labels) != len(t) or len(set(labels)) != len(labels):
            raise ValueError("labels must be distinct, one per element")
        object.__setattr__(self, "labels", labels)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def check(self) -> None:
        n = self.order
        t = self.table
        if n == 0 or any(len(row) != n for row in t):
            raise VerificationError("table must be square and nonempty")
        if any(not (0 <= v < n) for row in t for v in row):
            raise VerificationError("table entries out of range")
        e = self.identity
        for g in range(n):
            if t[e][g] != g or t[g][e] != g:
                raise VerificationError(f"{self.labels[e]} is not a two-sided identity at {self.labels[g]}")
            if not any(t[g][h] == e and t[h][g] == e for h in range(n)):
                raise VerificationError(f"{self.labels[g]} has no inverse")
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise VerificationError(f"not associative at ({self.labels[a]}, {self.labels[b]}, {self.labels[c]})")


def cyclic_group(n: int) -> GroupTable:
    return GroupTable(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    pairs = [(a, b) for a in range(g.order) for b in range(h.order)]
    idx = {p: i for i, p in enumerate(pairs)}
    table = tuple(tuple(idx[(g.mul(a, c), h.mul(b, d))] for (c, d) in pairs) for (a, b) in pairs)
    labels = tuple(f"{g.labels[a]}.{h.labels[b]}" for a, b in pairs)
    return GroupTable(table, idx[(g.identity, h.identity)], labels)


def classifying_complex(g: GroupTable, N: int, reduced: bool = True, ring: str = "Z") -> Complex:
    """Chains on the simplicial model of BG through degree N.

    n-simplices are tuples ``[g1|...|gn]``; the boundary is
    ``sum (-1)^i d_i`` with ``d_0`` dropping ``g1``, ``d_n`` dropping ``gn``
    and the middle faces multiplying neighbours.  In the reduced model
    tuples containing the identity are degenerate and vanish.
    """
    check_ring(ring)
    g.check()
    elems = [x for x in range(g.order) if not (reduced and x == g.identity)]
    lab = g.labels
    basis = {}
    for n in range(N + 1):
        basis[n] = tuple(word_name([lab[x] for x in t]) for t in product(elems, repeat=n))
    d = {}
    for n in range(1, N + 1):
        for t in product(elems, repeat=n):
            out: dict = {}
            for i in range(n + 1):
                if i == 0:
                    face = t[1:]
                elif i == n:
                    face = t[:-1]
                else:
                    face = t[: i - 1] + (g.mul(t[i - 1], t[i]),) + t[i + 1:]
                if reduced and g.identity in face:
                    continue
                add_into(out, {word_name([lab[x] for x in face]): 1}, sign(i))
            d[word_name([lab[x] for x in t])] = out
    return Complex(GradedModule(basis, N, ring, truncated=True), d, -1)
