"""Graded Lie algebras, free Lie algebras as primitives of tensor algebras,
Lie quotients, Chevalley-Eilenberg complexes and primitives of Hopf algebras.

Everything is over Q.  Lie algebras are homologically graded in degrees
``1..top`` and their differential, when present, has degree -1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .dg import (
    Complex,
    DgAlgebra,
    DgCoalgebra,
    GradedModule,
    VerificationReport,
    _fail,
    add_into,
    clean,
    dualize,
    format_element,
    lincomb,
    sign,
)
from .errors import (
    InvariantBreach,
    ParseError,
    PreconditionError,
    VerificationError,
    WindowTooSmall,
)
from .linalg import SparseMatrix, rank


class Echelon:
    """Incrementally grown echelon basis that remembers how each row was made.

    Vectors are sparse dicts with sortable keys.  ``coords`` writes a vector
    in terms of the labels passed to ``add``.
    """

    def __init__(self):
        self.rows: dict = {}  # pivot key -> (row, combo)
        self.labels: list = []

    def _reduce(self, vec: Mapping, combo: dict):
        v = {k: Fraction(c) for k, c in vec.items() if c}
        while True:
            hits = [k for k in v if k in self.rows]
            if not hits:
                return v, combo
            k = min(hits)
            row, rc = self.rows[k]
            f = v[k]
            add_into(v, row, -f)
            add_into(combo, rc, -f)

    def add(self, vec: Mapping, label) -> bool:
        """Add ``vec`` under ``label``; False (and nothing stored) if dependent."""
        v, combo = self._reduce(vec, {label: Fraction(1)})
        if not v:
            return False
        k = min(v)
        f = 1 / v[k]
        self.rows[k] = ({j: c * f for j, c in v.items()}, {j: c * f for j, c in combo.items()})
        self.labels.append(label)
        return True

    def coords(self, vec: Mapping) -> dict | None:
        v, combo = self._reduce(vec, {})
        if v:
            return None
        return {k: -c for k, c in combo.items() if c}

    def __len__(self):
        return len(self.rows)


# --------------------------------------------------------------------------
# Lie algebras


@dataclass(frozen=True)
class GradedLieAlgebra:
    """Finite-type graded Lie algebra known exactly through degree ``top``."""

    basis: Mapping[int, tuple[str, ...]]
    top: int
    bracket: Mapping[tuple[str, str], Mapping[str, Fraction]] = field(default_factory=dict)
    differential: Mapping[str, Mapping[str, Fraction]] = field(default_factory=dict)
    generators: tuple[str, ...] = ()

    def __post_init__(self):
        basis = {int(k): tuple(v) for k, v in self.basis.items() if v}
        if any(k < 1 for k in basis):
            raise ValueError("Lie algebras here live in positive degrees")
        object.__setattr__(self, "basis", dict(sorted(basis.items())))
        object.__setattr__(self, "bracket", {k: clean(v) for k, v in self.bracket.items() if clean(v)})
        object.__setattr__(self, "differential", {k: clean(v) for k, v in self.differential.items() if clean(v)})
        # validates names and degrees
        GradedModule(self.basis, self.top, "Q")

    @cached_property
    def _degree(self) -> dict[str, int]:
        return {n: d for d, names in self.basis.items() for n in names}

    def degree(self, name: str) -> int:
        return self._degree[name]

    def names(self, deg: int) -> tuple[str, ...]:
        return self.basis.get(deg, ())

    def dim(self, deg: int) -> int:
        return len(self.names(deg))

    def dims(self) -> dict[int, int]:
        return {n: self.dim(n) for n in range(1, self.top + 1)}

    def all_names(self) -> list[str]:
        return [n for names in self.basis.values() for n in names]

    def __contains__(self, name) -> bool:
        return name in self._degree

    def bracket_basis(self, x: str, y: str) -> dict:
        return dict(self.bracket.get((x, y), {}))

    def br(self, u: Mapping, v: Mapping) -> dict:
        out: dict = {}
        for x, cx in u.items():
            for y, cy in v.items():
                if self.degree(x) + self.degree(y) <= self.top:
                    add_into(out, self.bracket_basis(x, y), Fraction(cx) * Fraction(cy))
        return out

    def d(self, u: Mapping) -> dict:
        out: dict = {}
        for x, c in u.items():
            add_into(out, self.differential.get(x, {}), c)
        return out

    def element_degree(self, u: Mapping) -> int | None:
        degs = {self.degree(n) for n in u}
        if len(degs) > 1:
            raise PreconditionError(f"inhomogeneous Lie element {format_element(u)}")
        return degs.pop() if degs else None

    @property
    def is_abelian(self) -> bool:
        return not self.bracket

    def verify(self) -> VerificationReport:
        """Antisymmetry, Jacobi, and (if present) d^2 = 0 and the derivation rule."""
        names = self.all_names()
        deg = self.degree
        for x in names:
            for t in self.differential.get(x, {}):
                if deg(t) != deg(x) - 1:
                    return _fail("degree", (x,), f"d({x}) has {t} in degree {deg(t)}")
        for x in names:
            for y in names:
                if deg(x) + deg(y) > self.top:
                    continue
                for t in self.bracket.get((x, y), {}):
                    if deg(t) != deg(x) + deg(y):
                        return _fail("degree", (x, y), f"[{x},{y}] has {t} in the wrong degree")
                s = sign(deg(x) * deg(y))
                if lincomb((1, self.bracket_basis(x, y)), (s, self.bracket_basis(y, x))):
                    return _fail("antisymmetry", (x, y))
        for x in names:
            for y in names:
                for z in names:
                    if deg(x) + deg(y) + deg(z) > self.top:
                        continue
                    # [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
                    lhs = self.br({x: 1}, self.br({y: 1}, {z: 1}))
                    rhs = lincomb((1, self.br(self.br({x: 1}, {y: 1}), {z: 1})),
                                  (sign(deg(x) * deg(y)), self.br({y: 1}, self.br({x: 1}, {z: 1}))))
                    if lincomb((1, lhs), (-1, rhs)):
                        return _fail("jacobi", (x, y, z))
        for x in names:
            if self.d(self.d({x: 1})):
                return _fail("d^2", (x,))
        for x in names:
            for y in names:
                if deg(x) + deg(y) > self.top:
                    continue
                lhs = self.d(self.br({x: 1}, {y: 1}))
                rhs = lincomb((1, self.br(self.d({x: 1}), {y: 1})),
                              (sign(deg(x)), self.br({x: 1}, self.d({y: 1}))))
                if lincomb((1, lhs), (-1, rhs)):
                    return _fail("derivation", (x, y))
        return VerificationReport(True)


def abelian_lie(generators: Sequence[tuple[str, int]], top: int) -> GradedLieAlgebra:
    basis: dict[int, list[str]] = {}
    for name, deg in generators:
        if deg <= top:
            basis.setdefault(deg, []).append(name)
    return GradedLieAlgebra({k: tuple(v) for k, v in basis.items()}, top,
                            generators=tuple(n for n, _ in generators))


# --------------------------------------------------------------------------
# tensor algebras


Word = tuple  # of generator names


def _check_generators(generators: Sequence[tuple[str, int]]) -> dict[str, int]:
    degs: dict[str, int] = {}
    for name, deg in generators:
        if int(deg) < 1:
            raise PreconditionError(f"generator {name} must have positive degree")
        if name in degs:
            raise PreconditionError(f"duplicate generator {name}")
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", name):
            raise PreconditionError(f"generator name {name!r} is not a plain identifier")
        degs[name] = int(deg)
    return degs


def words_by_degree(gdeg: Mapping[str, int], top: int) -> dict[int, list[Word]]:
    out: dict[int, list[Word]] = {n: [] for n in range(top + 1)}

    def grow(w, d):
        out[d].append(w)
        for g, k in gdeg.items():
            if d + k <= top:
                grow(w + (g,), d + k)

    grow((), 0)
    order = {g: i for i, g in enumerate(gdeg)}
    for n in out:
        out[n].sort(key=lambda w: (len(w), [order[g] for g in w]))
    return out


def word_degree(w: Word, gdeg: Mapping[str, int]) -> int:
    return sum(gdeg[g] for g in w)


def unshuffles(w: Word, gdeg: Mapping[str, int], proper: bool = True):
    """Yield ``(left, right, sign)`` over all splittings of ``w`` into two subwords.

    The sign is the Koszul sign of moving the right-hand letters past the
    left-hand letters that follow them.  ``proper`` drops empty factors.
    """
    n = len(w)
    for k in range(n + 1):
        if proper and (k == 0 or k == n):
            continue
        for left in combinations(range(n), k):
            lset = set(left)
            s = 0
            for j in range(n):
                if j in lset:
                    continue
                for i in left:
                    if i > j:
                        s += gdeg[w[i]] * gdeg[w[j]]
            yield (tuple(w[i] for i in left), tuple(w[j] for j in range(n) if j not in lset), sign(s))


def tensor_commutator(u: Mapping, v: Mapping, gdeg: Mapping[str, int]) -> dict:
    out: dict = {}
    for a, ca in u.items():
        for b, cb in v.items():
            add_into(out, {a + b: 1}, ca * cb)
            add_into(out, {b + a: 1}, -ca * cb * sign(word_degree(a, gdeg) * word_degree(b, gdeg)))
    return out


def tensor_derivation(u: Mapping, dgen: Mapping[str, Mapping], gdeg: Mapping[str, int]) -> dict:
    """Extend ``dgen`` (generator -> tensor polynomial) to a degree -1 derivation."""
    out: dict = {}
    for w, c in u.items():
        s = 0
        for i, g in enumerate(w):
            for t, v in dgen.get(g, {}).items():
                add_into(out, {w[:i] + t + w[i + 1:]: 1}, c * v * sign(s))
            s += gdeg[g]
    return out


def reduced_coproduct_tensor(u: Mapping, gdeg: Mapping[str, int]) -> dict:
    out: dict = {}
    for w, c in u.items():
        for left, right, s in unshuffles(w, gdeg):
            add_into(out, {(left, right): 1}, c * s)
    return out


@dataclass(frozen=True, repr=False)
class FreeLieAlgebra(GradedLieAlgebra):
    """Free Lie algebra with each basis element's tensor-algebra polynomial kept."""

    generator_degrees: Mapping[str, int] = field(default_factory=dict)
    polynomials: Mapping[str, Mapping[Word, Fraction]] = field(default_factory=dict)
    tensor_differential: Mapping[str, Mapping[Word, Fraction]] = field(default_factory=dict)

    def polynomial(self, u: Mapping) -> dict:
        out: dict = {}
        for x, c in u.items():
            add_into(out, self.polynomials[x], c)
        return out


def primitive_rank(gdeg: Mapping[str, int], words: Sequence[Word]) -> int:
    """Dimension of the primitives among tensor words of one degree.

    The reduced coproduct preserves the multiset of letters, so the matrix
    splits into one block per letter content.
    """
    blocks: dict[tuple, list[Word]] = {}
    for w in words:
        blocks.setdefault(tuple(sorted(w)), []).append(w)
    total = 0
    for ws in blocks.values():
        rows: dict = {}
        entries: dict = {}
        for j, w in enumerate(ws):
            for left, right, s in unshuffles(w, gdeg):
                i = rows.setdefault((left, right), len(rows))
                entries[(i, j)] = entries.get((i, j), 0) + s
        m = SparseMatrix(len(rows), len(ws), {k: v for k, v in entries.items() if v})
        total += len(ws) - rank(m)
    return total


def lie_name(g: str, inner: str) -> str:
    return f"[{g},{inner}]"


def free_lie(generators: Sequence[tuple[str, int]], N: int,
             differential: Mapping[str, object] | None = None) -> FreeLieAlgebra:
    """Free graded Lie algebra on ``generators`` through degree N.

    The degree-n part is the space of primitives of the tensor algebra in
    degree n.  A basis is picked greedily from right-normed brackets
    ``[g,[h,...]]`` and checked to span the primitives.  ``differential``
    maps generators to bracket expressions (strings) or tensor polynomials.
    """
    gdeg = _check_generators(generators)
    words = words_by_degree(gdeg, N)
    polys: dict[str, dict] = {}
    basis: dict[int, list[str]] = {}
    for n in range(1, N + 1):
        ech = Echelon()
        names: list[str] = []
        cands: list[tuple[str, dict]] = []
        for g, k in gdeg.items():
            if k == n:
                cands.append((g, {(g,): Fraction(1)}))
        for g, k in gdeg.items():
            for inner in basis.get(n - k, ()):
                p = tensor_commutator({(g,): 1}, polys[inner], gdeg)
                cands.append((lie_name(g, inner), p))
        for name, p in cands:
            if p and ech.add(p, name):
                names.append(name)
                polys[name] = p
        expected = primitive_rank(gdeg, words[n])
        if len(names) != expected:
            raise InvariantBreach(f"bracket basis has {len(names)} elements, primitives {expected} in degree {n}")
        if names:
            basis[n] = names
    coords_by_deg = {}
    for n, names in basis.items():
        ech = Echelon()
        for x in names:
            ech.add(polys[x], x)
        coords_by_deg[n] = ech

    def coords(p: Mapping, n: int) -> dict:
        if not p:
            return {}
        c = coords_by_deg[n].coords(p) if n in coords_by_deg else None
        if c is None:
            raise InvariantBreach(f"element of degree {n} is not in the free Lie algebra")
        return c

    degree = {x: n for n, names in basis.items() for x in names}
    bracket = {}
    allnames = [x for names in basis.values() for x in names]
    for x in allnames:
        for y in allnames:
            n = degree[x] + degree[y]
            if n > N:
                continue
            bracket[(x, y)] = coords(tensor_commutator(polys[x], polys[y], gdeg), n)
    tdiff: dict[str, dict] = {}
    dl = {}
    if differential:
        skeleton = FreeLieAlgebra({k: tuple(v) for k, v in basis.items()}, N, bracket,
                                  generators=tuple(gdeg), generator_degrees=gdeg, polynomials=polys)
        for g, expr in differential.items():
            if g not in gdeg:
                raise PreconditionError(f"differential given on unknown generator {g}")
            if isinstance(expr, str):
                expr = skeleton.polynomial(parse_lie_expression(skeleton, expr))
            p = {tuple(k): Fraction(v) for k, v in expr.items()}
            if any(word_degree(w, gdeg) != gdeg[g] - 1 for w in p):
                raise PreconditionError(f"d({g}) must have degree {gdeg[g] - 1}")
            if reduced_coproduct_tensor(p, gdeg):
                raise PreconditionError(f"d({g}) is not a Lie element")
            tdiff[g] = clean(p)
        for x in allnames:
            dp = tensor_derivation(polys[x], tdiff, gdeg)
            dl[x] = coords(dp, degree[x] - 1)
    return FreeLieAlgebra({k: tuple(v) for k, v in basis.items()}, N, bracket, dl,
                          generators=tuple(gdeg), generator_degrees=gdeg, polynomials=polys,
                          tensor_differential=tdiff)


# --------------------------------------------------------------------------
# bracket expressions

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_']*)|(.))")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        num, name, ch = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        elif ch is not None and not ch.isspace():
            out.append(("sym", ch))
    return out


def parse_lie_expression(l: GradedLieAlgebra, text: str) -> dict:
    """Evaluate a bracket expression such as ``[x,y] - 2*[y,z]`` in ``l``.

    Atoms are generator or basis names; brackets are computed with the
    structure constants of ``l``.
    """
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(kind=None, value=None):
        nonlocal pos
        t = peek()
        if t[0] is None or (kind and t[0] != kind) or (value and t[1] != value):
            raise ParseError(f"unexpected {t[1]!r} in {text!r}")
        pos += 1
        return t

    def expr():
        out: dict = {}
        s = 1
        if peek() == ("sym", "-"):
            take()
            s = -1
        elif peek() == ("sym", "+"):
            take()
        add_into(out, term(), s)
        while peek() in (("sym", "+"), ("sym", "-")):
            s = 1 if take()[1] == "+" else -1
            add_into(out, term(), s)
        return out

    def term():
        c = Fraction(1)
        if peek()[0] == "num":
            c = Fraction(take()[1])
            if peek() == ("sym", "*"):
                take()
            else:
                raise ParseError(f"expected '*' after coefficient in {text!r}")
        a = atom()
        return {k: v * c for k, v in a.items()}

    def atom():
        t = peek()
        if t == ("sym", "["):
            take()
            u = expr()
            take("sym", ",")
            v = expr()
            take("sym", "]")
            return l.br(u, v)
        if t == ("sym", "("):
            take()
            u = expr()
            take("sym", ")")
            return u
        if t[0] == "name":
            take()
            if t[1] not in l:
                raise ParseError(f"unknown Lie basis element {t[1]!r}")
            return {t[1]: Fraction(1)}
        raise ParseError(f"unexpected {t[1]!r} in {text!r}")

    out = expr()
    if pos != len(toks):
        raise ParseError(f"trailing input in {text!r}")
    return clean(out)


# --------------------------------------------------------------------------
# quotients


@dataclass(frozen=True, repr=False)
class LieQuotient(GradedLieAlgebra):
    """``parent / ideal`` with the ideal kept as an echelon basis per degree."""

    parent: GradedLieAlgebra | None = None
    ideal: Mapping[int, Echelon] = field(default_factory=dict)

    def project(self, u: Mapping) -> dict:
        """Image in the quotient of a parent element."""
        n = self.parent.element_degree(u) if u else None
        if n is None:
            return {}
        index = {x: i for i, x in enumerate(self.parent.names(n))}
        v = {index[x]: Fraction(c) for x, c in u.items() if c}
        ech = self.ideal.get(n)
        if ech is not None:
            v, _ = ech._reduce(v, {})
        names = self.parent.names(n)
        out = {names[i]: c for i, c in v.items() if c}
        if any(x not in self for x in out):
            raise InvariantBreach("projection left a pivot coordinate")
        return out


def lie_quotient(l: GradedLieAlgebra, relations: Iterable, N: int | None = None) -> LieQuotient:
    """Quotient of ``l`` by the Lie ideal generated by ``relations`` (strings or elements).

    The ideal is built degree by degree: in degree n it is spanned by the
    relations of degree n and brackets of basis elements with the ideal in
    lower degrees.  A basis of the quotient is the set of parent basis
    elements that are not pivots of the ideal's echelon form.
    """
    N = l.top if N is None else min(N, l.top)
    rels_by_deg: dict[int, list[dict]] = {}
    for r in relations:
        u = parse_lie_expression(l, r) if isinstance(r, str) else clean(r)
        if not u:
            continue
        n = l.element_degree(u)
        rels_by_deg.setdefault(n, []).append(u)
    index = {x: (l.degree(x), i) for n in l.basis for i, x in enumerate(l.names(n))}
    ideal: dict[int, Echelon] = {}
    spans: dict[int, list[dict]] = {}

    def vec(u):
        return {index[x][1]: Fraction(c) for x, c in u.items() if c}

    for n in range(1, N + 1):
        ech = Echelon()
        members: list[dict] = []
        cands = list(rels_by_deg.get(n, ()))
        for m in range(1, n):
            for r in spans.get(m, ()):
                for b in l.names(n - m):
                    cands.append(l.br({b: 1}, r))
        for u in cands:
            if u and ech.add(vec(u), len(members)):
                members.append(u)
        # the ideal is closed under d when d kills relations into the ideal; checked below
        if members:
            ideal[n] = ech
            spans[n] = members
    basis = {}
    for n in range(1, N + 1):
        ech = ideal.get(n)
        pivots = set(ech.rows) if ech else set()
        keep = tuple(x for i, x in enumerate(l.names(n)) if i not in pivots)
        if keep:
            basis[n] = keep
    skeleton = LieQuotient(basis, N, parent=l, ideal=ideal, generators=l.generators)
    for n, members in spans.items():
        for u in members:
            du = l.d(u)
            if du and skeleton.project(du):
                raise VerificationError(f"differential does not preserve the ideal at {format_element(u)}")
    names = skeleton.all_names()
    bracket = {}
    for x in names:
        for y in names:
            if l.degree(x) + l.degree(y) <= N:
                bracket[(x, y)] = skeleton.project(l.bracket_basis(x, y))
    diff = {x: skeleton.project(l.d({x: 1})) for x in names}
    return LieQuotient(basis, N, bracket, diff, generators=l.generators, parent=l, ideal=ideal)


# --------------------------------------------------------------------------
# Chevalley-Eilenberg


def _sym_name(monomial: Sequence[str]) -> str:
    if not monomial:
        return "1"
    return ".".join(f"s({x})" for x in monomial)


def _sort_monomial(letters: Sequence[int], degs: Sequence[int]) -> tuple[tuple[int, ...], int] | None:
    """Sort a graded-symmetric monomial; returns (sorted, sign) or None if it vanishes."""
    items = list(letters)
    s = 0
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            s += degs[items[j - 1]] * degs[items[j]]
            items[j - 1], items[j] = items[j], items[j - 1]
            j -= 1
    for i in range(1, len(items)):
        if items[i] == items[i - 1] and degs[items[i]] % 2:
            return None
    return tuple(items), sign(s)


def ce_chains(l: GradedLieAlgebra, N: int) -> Complex:
    """Chevalley-Eilenberg chains: Sym(sL) through degree N with
    ``d(sx) = -s(dx)`` and ``d(sx.sy) = (-1)^{|x|} s[x,y]`` extended as a coderivation.
    """
    if l.top < N - 1:
        raise WindowTooSmall(f"CE through degree {N} needs the Lie algebra through degree {N - 1}")
    names = [x for n in sorted(l.basis) for x in l.names(n) if n <= N - 1]
    idx = {x: i for i, x in enumerate(names)}
    sdeg = [l.degree(x) + 1 for x in names]

    monos: dict[int, list[tuple[int, ...]]] = {m: [] for m in range(N + 1)}

    def grow(mono, d, start):
        monos[d].append(mono)
        for i in range(start, len(names)):
            if d + sdeg[i] > N:
                continue
            if mono and mono[-1] == i and sdeg[i] % 2:
                continue
            grow(mono + (i,), d + sdeg[i], i)

    grow((), 0, 0)
    basis = {m: tuple(_sym_name([names[i] for i in mo]) for mo in ms) for m, ms in monos.items()}

    def mono_elem(letters, coeff):
        r = _sort_monomial(letters, sdeg)
        if r is None:
            return {}
        mo, s = r
        return {_sym_name([names[i] for i in mo]): coeff * s}

    d = {}
    for m, ms in monos.items():
        for pos, mo in enumerate(ms):
            out: dict = {}
            k = len(mo)
            # linear part
            before = 0
            for i in range(k):
                for t, c in l.differential.get(names[mo[i]], {}).items():
                    letters = mo[:i] + (idx[t],) + mo[i + 1:]
                    add_into(out, mono_elem(letters, -c * sign(before)), 1)
                before += sdeg[mo[i]]
            # quadratic part
            for i in range(k):
                for j in range(i + 1, k):
                    a, b = mo[i], mo[j]
                    s = sdeg[a] * sum(sdeg[mo[p]] for p in range(i))
                    s += sdeg[b] * sum(sdeg[mo[p]] for p in range(j) if p != i)
                    rest = tuple(mo[p] for p in range(k) if p not in (i, j))
                    x, y = names[a], names[b]
                    for t, c in l.bracket_basis(x, y).items():
                        coeff = Fraction(c) * sign(s) * sign(l.degree(x))
                        add_into(out, mono_elem((idx[t],) + rest, coeff), 1)
            d[basis[m][pos]] = out
    cx = Complex(GradedModule(basis, N, "Q", truncated=True), d, -1)
    ok, where = cx.squares_to_zero()
    if not ok:
        raise InvariantBreach(f"CE differential does not square to zero at {where}")
    return cx


def chevalley_eilenberg(l: GradedLieAlgebra, N: int) -> Complex:
    """CE cochain complex: the dual of ``ce_chains``, a free graded-commutative
    algebra on the duals of ``sL`` with the dual bracket as differential.
    """
    rep = l.verify()
    if not rep:
        raise VerificationError(f"Lie algebra fails {rep.describe()}", rep)
    return dualize(ce_chains(l, N))


# --------------------------------------------------------------------------
# tensor Hopf algebras and primitives


def _tensor_name(w: Word) -> str:
    return "|".join(w) if w else "1"


@dataclass(frozen=True)
class HopfAlgebraData:
    """An algebra and a coalgebra on the same carrier."""

    algebra: DgAlgebra
    coalgebra: DgCoalgebra

    def __post_init__(self):
        if self.algebra.module.basis != self.coalgebra.module.basis:
            raise PreconditionError("algebra and coalgebra must share a carrier")

    @property
    def module(self) -> GradedModule:
        return self.algebra.module

    def compatibility(self) -> VerificationReport:
        """Check ``Delta(xy) = Delta(x) Delta(y)`` with the Koszul sign on basis pairs."""
        a, c = self.algebra, self.coalgebra
        names = a.module.all_names()
        deg = a.degree
        for x in names:
            for y in names:
                if deg(x) + deg(y) > a.module.top:
                    continue
                lhs = c.coproduct(a.basis_product(x, y))
                rhs: dict = {}
                for (x1, x2), cx in c.comul.get(x, {}).items():
                    for (y1, y2), cy in c.comul.get(y, {}).items():
                        s = sign(deg(x2) * deg(y1))
                        for p, cp in a.basis_product(x1, y1).items():
                            for q, cq in a.basis_product(x2, y2).items():
                                add_into(rhs, {(p, q): 1}, cx * cy * cp * cq * s)
                if lincomb((1, lhs), (-1, rhs)):
                    return _fail("hopf", (x, y))
        return VerificationReport(True)


def tensor_hopf_algebra(generators: Sequence[tuple[str, int]], N: int,
                        differential: Mapping[str, Mapping[Word, object]] | None = None) -> HopfAlgebraData:
    """Tensor algebra on primitive generators through degree N (homological grading).

    Basis words are named ``x|y|z``; the unit is ``1``.  ``differential``
    sends generators to tensor polynomials of one degree lower, which must be
    primitive for the result to be a DG Hopf algebra.
    """
    gdeg = _check_generators(generators)
    if "1" in gdeg:
        raise PreconditionError("'1' is reserved for the unit")
    words = words_by_degree(gdeg, N)
    basis = {n: tuple(_tensor_name(w) for w in ws) for n, ws in words.items()}
    allwords = [w for n in range(N + 1) for w in words[n]]
    tdiff = {g: {tuple(k): Fraction(v) for k, v in p.items()} for g, p in (differential or {}).items()}
    d = {}
    for w in allwords:
        dw = tensor_derivation({w: 1}, tdiff, gdeg)
        d[_tensor_name(w)] = {_tensor_name(k): v for k, v in dw.items()}
    mul = {}
    for u in allwords:
        du = word_degree(u, gdeg)
        for v in allwords:
            if du + word_degree(v, gdeg) <= N:
                mul[(_tensor_name(u), _tensor_name(v))] = {_tensor_name(u + v): 1}
    comul = {}
    for w in allwords:
        out: dict = {}
        for left, right, s in unshuffles(w, gdeg, proper=False):
            add_into(out, {(_tensor_name(left), _tensor_name(right)): 1}, s)
        comul[_tensor_name(w)] = out
    mod = GradedModule(basis, N, "Q", truncated=True)
    cx = Complex(mod, d, -1)
    alg = DgAlgebra(cx, mul, "1", {"1": 1})
    coalg = DgCoalgebra(cx, comul, {"1": 1}, "1")
    return HopfAlgebraData(alg, coalg)


@dataclass(frozen=True)
class PrimitiveComplex:
    """The primitive sub-complex with its inclusion into the ambient carrier."""

    complex: Complex
    inclusion: Mapping[str, Mapping[str, Fraction]]

    def ranks(self) -> dict[int, int]:
        return {n: self.complex.module.dim(n) for n in range(1, self.complex.module.top + 1)}


def _reduced_coproduct_matrix(c: DgCoalgebra, n: int):
    """Matrix of the reduced coproduct on degree n, rows indexed by reduced pairs."""
    rows: dict = {}
    entries = {}
    for j, x in enumerate(c.module.names(n)):
        if x == c.coaugmentation:
            continue
        for pair, v in c.reduced_coproduct(x).items():
            i = rows.setdefault(pair, len(rows))
            entries[(i, j)] = v
    return rows, SparseMatrix(len(rows), c.module.dim(n), entries)


def primitives(h: HopfAlgebraData, N: int | None = None, check: bool = True) -> PrimitiveComplex:
    """Kernel of the reduced coproduct in positive degrees, with the restricted differential."""
    from .linalg import kernel_basis

    if check:
        rep = h.compatibility()
        if not rep:
            raise VerificationError(f"not a Hopf algebra: {rep.describe()}", rep)
    c = h.coalgebra
    mod = c.module
    N = mod.top if N is None else min(N, mod.top)
    basis: dict[int, tuple[str, ...]] = {}
    incl: dict[str, dict] = {}
    echs: dict[int, Echelon] = {}
    for n in range(1, N + 1):
        if not mod.dim(n):
            continue
        _, m = _reduced_coproduct_matrix(c, n)
        vecs = kernel_basis(m)
        names = []
        ech = Echelon()
        for i, v in enumerate(vecs):
            name = f"p{n}_{i}"
            elem = mod.element(v, n)
            incl[name] = elem
            names.append(name)
            ech.add({mod.index(k): val for k, val in elem.items()}, name)
        if names:
            basis[n] = tuple(names)
            echs[n] = ech
    d = {}
    for n, names in basis.items():
        for p in names:
            dp = h.algebra.d(incl[p])
            if not dp:
                continue
            if n - 1 not in echs:
                raise VerificationError(f"d({p}) is not primitive")
            co = echs[n - 1].coords({mod.index(k): v for k, v in dp.items()})
            if co is None:
                raise VerificationError(f"d({p}) is not primitive")
            d[p] = co
    pmod = GradedModule(basis, N, "Q", truncated=mod.truncated or N < mod.top)
    return PrimitiveComplex(Complex(pmod, d, c.direction), incl)


def homology_primitive_ranks(h: HopfAlgebraData, degrees: Iterable[int]) -> dict[int, int]:
    """Rank of the primitives of the homology coalgebra in each degree.

    A class [z] is primitive when the reduced coproduct of z is a boundary in
    the reduced tensor square, so the rank is
    ``dim{(z, w): dz = 0, Dbar z = D w} - dim ker D - dim B_n``.
    """
    c = h.coalgebra
    mod = c.module
    e = c.direction
    out = {}
    for n in degrees:
        if n < 1 or n > mod.exact_top or n - e > mod.top:
            raise WindowTooSmall(f"degree {n} is outside the usable window")
        dim_n = mod.dim(n)
        # reduced tensor square in degrees n and n - e
        def pairs(m):
            out_pairs = []
            for p in range(1, m):
                for x in c.reduced_names(p):
                    for y in c.reduced_names(m - p):
                        out_pairs.append((x, y))
            return out_pairs

        tgt = pairs(n)
        src = pairs(n - e)
        tidx = {p: i for i, p in enumerate(tgt)}
        # D on (C_bar (x) C_bar)_{n-e} -> degree n
        dentries = {}
        for j, (x, y) in enumerate(src):
            for t, v in c.reduced_d(x).items():
                key = (t, y)
                dentries[(tidx[key], j)] = dentries.get((tidx[key], j), 0) + v
            for t, v in c.reduced_d(y).items():
                key = (x, t)
                dentries[(tidx[key], j)] = dentries.get((tidx[key], j), 0) + v * sign(c.degree(x))
        D = SparseMatrix(len(tgt), len(src), {k: v for k, v in dentries.items() if v})
        # block [[d_n, 0], [Dbar, -D]]
        dn_rows = mod.dim(n + e) if 0 <= n + e <= mod.top else 0
        entries = {}
        if dn_rows:
            for (i, j), v in c.complex.matrix(n).entries.items():
                entries[(i, j)] = v
        for j, x in enumerate(mod.names(n)):
            if x == c.coaugmentation:
                continue
            for pair, v in c.reduced_coproduct(x).items():
                entries[(dn_rows + tidx[pair], j)] = v
        for (i, j), v in D.entries.items():
            entries[(dn_rows + i, dim_n + j)] = -v
        block = SparseMatrix(dn_rows + len(tgt), dim_n + len(src), entries)
        ker_block = dim_n + len(src) - rank(block)
        ker_D = len(src) - rank(D)
        prev = n - e
        boundaries = rank(c.complex.matrix(prev)) if 0 <= prev <= mod.top and mod.dim(prev) else 0
        out[n] = ker_block - ker_D - boundaries
    return out
