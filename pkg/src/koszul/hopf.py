"""Hopf invariants from bar cocycles.

A bar cocycle of degree n-1 over a cochain model W of the n-sphere is
cohomologous to a weight-one word ``[t]``; its integral is the fundamental
functional applied to ``t``.  Cocycles over another algebra X are pushed to
W along an algebra map ``f: X -> W`` (the cochain shadow of a map
``S^n -> X``) before integrating.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .barcobar import BarComplex, HarrisonComplex, bar
from .dg import (
    Complex,
    DgAlgebra,
    GradedModule,
    VerificationReport,
    _fail,
    add_into,
    clean,
    format_element,
    homology,
    lincomb,
    sign,
    verify_dga,
    word_name,
)
from .errors import InvariantBreach, PreconditionError, VerificationError
from .linalg import SparseMatrix, solve_particular


@dataclass(frozen=True)
class SphereModel:
    """Cochain DGA of S^n with a fundamental functional in degree n."""

    algebra: DgAlgebra
    n: int
    fundamental: Mapping[str, Fraction]
    fundamental_cocycle: str

    def __post_init__(self):
        object.__setattr__(self, "fundamental", clean(self.fundamental))

    def integrate_cochain(self, element: Mapping) -> Fraction:
        return sum((Fraction(c) * self.fundamental.get(x, 0) for x, c in element.items()), Fraction(0))

    def check(self) -> None:
        a = self.algebra
        if a.direction != 1:
            raise PreconditionError("sphere models are cochain algebras")
        verify_dga(a).raise_for_failure()
        top = a.module.exact_top
        if top < self.n:
            raise PreconditionError(f"model window ends below degree {self.n}")
        h = homology(a.complex, range(0, top + 1))
        for k in range(top + 1):
            want = 1 if k in (0, self.n) else 0
            if h.rank(k) != want:
                raise PreconditionError(f"H^{k} of the model has rank {h.rank(k)}, expected {want}")
        for x in a.module.names(self.n - 1):
            if self.integrate_cochain(a.d({x: 1})):
                raise PreconditionError(f"fundamental functional does not vanish on d({x})")
        if a.d({self.fundamental_cocycle: 1}):
            raise PreconditionError("designated fundamental cocycle is not closed")
        if self.integrate_cochain({self.fundamental_cocycle: 1}) != 1:
            raise PreconditionError("fundamental functional is not 1 on the fundamental cocycle")


@dataclass(frozen=True)
class BarCocycle:
    """A closed element of a bar complex."""

    ambient: BarComplex
    element: Mapping[str, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "element", clean(self.element))
        for name in self.element:
            if name not in self.ambient.module:
                raise PreconditionError(f"word {name} is not in the bar complex")
        deg = self.degree
        if deg is not None and deg + self.ambient.direction > self.ambient.module.top:
            raise PreconditionError("bar window too small to check closedness")
        if self.ambient.d(self.element):
            raise VerificationError(f"not a bar cocycle: d = {format_element(self.ambient.d(self.element))}")

    @property
    def degree(self) -> int | None:
        return self.ambient.module.element_degree(self.element)

    @property
    def weight(self) -> int:
        return max((self.ambient.word(n).weight for n in self.element), default=0)

    @classmethod
    def from_words(cls, ambient: BarComplex, terms: Mapping[Sequence[str], object]) -> BarCocycle:
        return cls(ambient, ambient.element(terms))


@dataclass(frozen=True)
class AlgebraMap:
    """Map of augmented cochain algebras given on basis elements."""

    source: DgAlgebra
    target: DgAlgebra
    images: Mapping[str, Mapping[str, Fraction]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "images", {k: clean(v) for k, v in self.images.items()})

    def image(self, x: str) -> dict:
        if x == self.source.unit:
            return {self.target.unit: Fraction(1)}
        return dict(self.images.get(x, {}))

    def apply(self, element: Mapping) -> dict:
        out: dict = {}
        for x, c in element.items():
            add_into(out, self.image(x), c)
        return out

    def verify(self) -> VerificationReport:
        s, t = self.source, self.target
        for x in self.images:
            if x not in s.module:
                return _fail("map", (x,), "image given for an unknown basis element")
        top = min(s.module.top, t.module.top)
        for x in s.module.all_names():
            img = self.image(x)
            for y in img:
                if t.degree(y) != s.degree(x):
                    return _fail("degree", (x,), f"f({x}) has {y} in degree {t.degree(y)}")
            if s.augment({x: 1}) != t.augment(img):
                return _fail("augmentation", (x,))
            if s.degree(x) + s.direction <= top and lincomb((1, self.apply(s.d({x: 1}))), (-1, t.d(img))):
                return _fail("chain map", (x,))
        for x in s.module.all_names():
            for y in s.module.all_names():
                if s.degree(x) + s.degree(y) > top:
                    continue
                lhs = self.apply(s.basis_product(x, y))
                rhs = t.product(self.image(x), self.image(y))
                if lincomb((1, lhs), (-1, rhs)):
                    return _fail("multiplicative", (x, y))
        return VerificationReport(True)

    def then(self, g: AlgebraMap) -> AlgebraMap:
        """The composite ``g o self``."""
        if g.source is not self.target and g.source.module.basis != self.target.module.basis:
            raise PreconditionError("maps do not compose")
        return AlgebraMap(self.source, g.target,
                          {x: g.apply(self.image(x)) for x in self.source.module.all_names()})


def identity_map(a: DgAlgebra) -> AlgebraMap:
    return AlgebraMap(a, a, {x: {x: Fraction(1)} for x in a.module.all_names()})


def push_terms(terms: Mapping[tuple, object], f: AlgebraMap) -> dict[tuple, Fraction]:
    """Apply ``f`` letterwise to ``{letters: coeff}``, expanding multilinearly."""
    tgt = f.target
    out: dict = {}
    for word, c in terms.items():
        acc = {(): Fraction(c)}
        for letter in word:
            img = tgt.reduce(f.apply({letter: 1}))
            nxt: dict = {}
            for w, wc in acc.items():
                for y, yc in img.items():
                    add_into(nxt, {w + (y,): 1}, wc * yc)
            acc = nxt
            if not acc:
                break
        add_into(out, acc, 1)
    return out


def push_words(element: Mapping, source_bar: BarComplex, f: AlgebraMap) -> dict[tuple, Fraction]:
    """Apply ``f`` letterwise to a bar element; returns ``{letters: coeff}`` over the target."""
    return push_terms({source_bar.word(n).letters: c for n, c in element.items()}, f)


def model_bar(w: SphereModel, weight: int) -> BarComplex:
    """Bar complex of the sphere model through degree n and the given weight."""
    return bar(w.algebra, w.n, max_weight=weight, check=False)


@dataclass(frozen=True)
class WeightReduction:
    """``gamma = [t] + d(beta)`` with ``t`` a closed cochain of W."""

    t: Mapping[str, Fraction]
    beta: Mapping[str, Fraction]
    ambient: BarComplex


def _in_model_bar(w: SphereModel, gamma) -> tuple[BarComplex, dict]:
    """Coerce ``gamma`` into a bar complex of ``w`` with one weight of slack."""
    if isinstance(gamma, BarCocycle):
        amb = gamma.ambient
        if amb.source is not w.algebra and amb.source.module.basis != w.algebra.module.basis:
            raise PreconditionError("cocycle does not live over the sphere model")
        terms = {amb.word(n).letters: c for n, c in gamma.element.items()}
    else:
        terms = {tuple(k): Fraction(v) for k, v in gamma.items()}
    weight = max((len(k) for k in terms), default=1)
    b = model_bar(w, weight + 1)
    return b, b.element(terms)


def weight_reduce(w: SphereModel, gamma) -> WeightReduction:
    """Find ``t`` closed of degree n and ``beta`` with ``gamma - [t] = d(beta)``.

    ``gamma`` is a BarCocycle over ``w.algebra`` or a mapping from letter
    tuples to coefficients.  The solve uses the fixed pivot order of
    ``solve_particular``, so the answer is deterministic.
    """
    b, g = _in_model_bar(w, gamma)
    n = w.n
    mod = b.module
    if g:
        deg = mod.element_degree(g)
        if deg != n - 1:
            raise PreconditionError(f"cocycle has bar degree {deg}, expected {n - 1}")
    if b.d(g):
        raise VerificationError("not a bar cocycle")
    a = w.algebra
    tnames = list(a.reduced_names(n))
    rows_bar = mod.names(n - 1)
    ridx = {x: i for i, x in enumerate(rows_bar)}
    next_names = a.module.names(n + 1) if n + 1 <= a.module.top else ()
    nidx = {x: len(rows_bar) + i for i, x in enumerate(next_names)}
    entries: dict = {}
    for j, t in enumerate(tnames):
        entries[(ridx[word_name((t,))], j)] = Fraction(1)
        for y, v in a.d({t: 1}).items():
            entries[(nidx[y], j)] = v
    offset = len(tnames)
    beta_names = mod.names(n - 2) if n >= 2 else ()
    for j, x in enumerate(beta_names):
        for y, v in b.d({x: 1}).items():
            entries[(ridx[y], offset + j)] = v
    m = SparseMatrix(len(rows_bar) + len(next_names), offset + len(beta_names), entries)
    rhs = [Fraction(0)] * m.rows
    for x, c in g.items():
        rhs[ridx[x]] = Fraction(c)
    sol = solve_particular(m, rhs)
    if sol is None:
        raise PreconditionError("cocycle has no weight-one representative: the model is not a sphere model")
    t = {tnames[j]: sol[j] for j in range(offset) if sol[j]}
    beta = {beta_names[j]: sol[offset + j] for j in range(len(beta_names)) if sol[offset + j]}
    check = lincomb((1, g), (-1, {word_name((x,)): c for x, c in t.items()}), (-1, b.d(beta)))
    if check:
        raise InvariantBreach("weight reduction failed its own check")
    return WeightReduction(t, beta, b)


def integrate(w: SphereModel, gamma) -> Fraction:
    """The bar integral: fundamental functional on the weight-one representative."""
    return w.integrate_cochain(weight_reduce(w, gamma).t)


def pull_back(gamma: BarCocycle, f: AlgebraMap) -> dict[tuple, Fraction]:
    return push_words(gamma.element, gamma.ambient, f)


def hopf_invariant(gamma: BarCocycle, f: AlgebraMap, w: SphereModel) -> Fraction:
    """``eta(gamma)(f)``: push gamma along f into the bar complex of W and integrate."""
    rep = f.verify()
    if not rep:
        raise VerificationError(f"invalid algebra map: {rep.describe()}", rep)
    if f.target is not w.algebra and f.target.module.basis != w.algebra.module.basis:
        raise PreconditionError("map does not land in the sphere model")
    if gamma.ambient.source is not f.source and gamma.ambient.source.module.basis != f.source.module.basis:
        raise PreconditionError("cocycle does not live over the map's source")
    if gamma.element and gamma.degree != w.n - 1:
        raise PreconditionError(f"cocycle degree {gamma.degree} does not match sphere dimension {w.n}")
    return integrate(w, pull_back(gamma, f))


def _d_inverse(a: DgAlgebra, y: Mapping) -> dict:
    if not y:
        return {}
    n = a.module.element_degree(y)
    if n - 1 < 0 or not a.module.dim(n - 1):
        raise PreconditionError(f"{format_element(y)} is not exact")
    m = a.complex.matrix(n - 1)
    sol = solve_particular(m, a.module.vector(y, n))
    if sol is None:
        raise PreconditionError(f"{format_element(y)} is not exact")
    return a.module.element(sol, n - 1)


@dataclass(frozen=True)
class QuadraticData:
    """Closed cochains ``x_i, y_i`` and ``theta`` with ``d theta = sum (-1)^{|x_i|} x_i y_i``."""

    algebra: DgAlgebra
    xs: tuple
    ys: tuple
    theta: Mapping[str, Fraction] = field(default_factory=dict)

    def check(self) -> None:
        a = self.algebra
        if len(self.xs) != len(self.ys):
            raise PreconditionError("need as many x's as y's")
        want: dict = {}
        for x, y in zip(self.xs, self.ys):
            if a.d(x) or a.d(y):
                raise PreconditionError("x_i and y_i must be closed")
            if x and y:
                add_into(want, a.product(x, y), sign(a.module.element_degree(x)))
        if lincomb((1, a.d(self.theta)), (-1, want)):
            raise VerificationError("d(theta) differs from sum (-1)^|x| x y")

    def cocycle_words(self) -> dict[tuple, Fraction]:
        """``sum [x_i|y_i] + [theta]`` as letter tuples over reduced basis names."""
        a = self.algebra
        out: dict = {}
        for x, y in zip(self.xs, self.ys):
            for p, cp in a.reduce(x).items():
                for q, cq in a.reduce(y).items():
                    add_into(out, {(p, q): 1}, Fraction(cp) * Fraction(cq))
        for p, c in a.reduce(self.theta).items():
            add_into(out, {(p,): 1}, c)
        return out


def parametrized_formula(w: SphereModel, data: QuadraticData, t: Sequence, f: AlgebraMap | None = None) -> Fraction:
    """Evaluate the t-family of closed formulas for the invariant of
    ``gamma = sum [x_i|y_i] + [theta]`` along ``f`` (identity by default):

        int( f theta - sum( (-1)^{|x_i|} t_i d^-1(f x_i) f y_i + (1 - t_i) f x_i d^-1(f y_i) ) )
    """
    data.check()
    f = f or identity_map(data.algebra)
    if f.target is not w.algebra and f.target.module.basis != w.algebra.module.basis:
        raise PreconditionError("map does not land in the sphere model")
    if len(t) != len(data.xs):
        raise PreconditionError("one t value per pair")
    a = w.algebra
    total = dict(f.apply(data.theta))
    for x, y, ti in zip(data.xs, data.ys, t):
        ti = Fraction(ti)
        fx, fy = f.apply(x), f.apply(y)
        if not fx or not fy:
            continue
        s = sign(data.algebra.module.element_degree(x))
        if ti:
            add_into(total, a.product(_d_inverse(a, fx), fy), -s * ti)
        if ti != 1:
            add_into(total, a.product(fx, _d_inverse(a, fy)), -(1 - ti))
    return w.integrate_cochain(total)


def permute_basis(w: SphereModel, order: Mapping[int, Sequence[str]]) -> SphereModel:
    """Same model with the basis of some degrees listed in a different order."""
    a = w.algebra
    basis = dict(a.module.basis)
    for k, names in order.items():
        if sorted(names) != sorted(basis.get(k, ())):
            raise PreconditionError(f"order for degree {k} is not a permutation")
        basis[k] = tuple(names)
    mod = GradedModule(basis, a.module.top, a.ring, a.module.truncated)
    alg = DgAlgebra(Complex(mod, a.complex.d, a.direction), a.mul, a.unit, a.augmentation)
    return SphereModel(alg, w.n, w.fundamental, w.fundamental_cocycle)


def lift_harrison_cycle(h: HarrisonComplex, element: Mapping) -> dict:
    """A closed bar element mapping to the given Harrison cycle.

    The lift is ``element + s`` with ``s`` in the span of proper shuffles,
    found by an exact solve.
    """
    b = h.bar
    if h.differential(element):
        raise VerificationError("not a Harrison cycle")
    if not element:
        return {}
    deg = b.module.element_degree(element)
    rows, piv = h.shuffles.get(deg, ((), ()))
    names = b.module.names(deg)
    tgt = deg + b.direction
    if tgt > b.module.top:
        raise PreconditionError("window too small to lift")
    tnames = b.module.names(tgt)
    tidx = {x: i for i, x in enumerate(tnames)}
    entries = {}
    for j, row in enumerate(rows):
        img = b.d({names[k]: v for k, v in row.items()})
        for x, v in img.items():
            entries[(tidx[x], j)] = v
    m = SparseMatrix(len(tnames), len(rows), entries)
    rhs = [Fraction(0)] * len(tnames)
    for x, v in b.d(element).items():
        rhs[tidx[x]] = -v
    sol = solve_particular(m, rhs)
    if sol is None:
        raise InvariantBreach("Harrison cycle has no closed lift")
    out = dict(element)
    for j, row in enumerate(rows):
        if sol[j]:
            add_into(out, {names[k]: v for k, v in row.items()}, sol[j])
    return out
