"""Graded modules, complexes, DG algebras/coalgebras and their homology.

Conventions (recorded in :data:`CONVENTION`):

* every object lives in a finite window of degrees ``[0, top]``; a
  ``truncated`` carrier is only correct up to ``top`` and homology is then
  reported through ``top - 1``;
* ``direction = -1`` is homological (``d`` lowers degree), ``+1``
  cohomological;
* Koszul rule ``(a (x) b)(x (x) y) = (-1)^{|b||x|} ax (x) by``;
* dualizing transposes ``d`` with the sign ``(-1)^{k+1}`` where ``k`` is
  the lower of the two degrees involved, and (co)products with
  ``(-1)^{|x'||x''|}``, so dualizing twice is the identity on names.

Elements are plain ``dict[str, Fraction]`` keyed by basis name.  Basis
names are unique across all degrees of one module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product as iproduct
from typing import Iterable, Mapping

from .errors import PreconditionError, VerificationError, WindowTooSmall
from .linalg import SparseMatrix, check_ring, format_scalar, rank, smith_normal_form

CONVENTION = "koszul-signs/v1"

Element = dict  # name -> Fraction


# --------------------------------------------------------------------------
# element helpers


def add_into(target: dict, element: Mapping, coeff=1) -> dict:
    """``target += coeff * element`` in place, dropping zeros."""
    if not coeff:
        return target
    for k, v in element.items():
        new = target.get(k, 0) + coeff * v
        if new:
            target[k] = new
        else:
            target.pop(k, None)
    return target


def lincomb(*pairs) -> dict:
    """``lincomb((c1, e1), (c2, e2), ...)`` as a fresh element."""
    out: dict = {}
    for c, e in pairs:
        add_into(out, e, c)
    return out


def clean(element: Mapping) -> dict:
    return {k: Fraction(v) for k, v in element.items() if v}


def format_element(element: Mapping) -> str:
    if not element:
        return "0"
    parts = []
    for name in sorted(element):
        c = element[name]
        parts.append(f"{format_scalar(c)}*{name}")
    return " + ".join(parts)


def sign(k: int) -> int:
    return -1 if k % 2 else 1


def word_name(letters, open_="[", close="]") -> str:
    """Display name of a bar word; the empty word is ``[]``."""
    return open_ + "|".join(letters) + close


# --------------------------------------------------------------------------
# carriers


@dataclass(frozen=True)
class GradedModule:
    """Free module with a named basis in each degree of ``[0, top]``."""

    basis: Mapping[int, tuple[str, ...]]
    top: int
    ring: str = "Q"
    truncated: bool = False

    def __post_init__(self):
        check_ring(self.ring)
        basis = {}
        seen: set[str] = set()
        for deg, names in self.basis.items():
            deg = int(deg)
            names = tuple(names)
            if not names:
                continue
            if deg < 0 or deg > self.top:
                raise ValueError(f"degree {deg} outside window [0, {self.top}]")
            for n in names:
                if n in seen:
                    raise ValueError(f"duplicate basis name {n!r}")
                seen.add(n)
            basis[deg] = names
        object.__setattr__(self, "basis", dict(sorted(basis.items())))

    @cached_property
    def _degree(self) -> dict[str, int]:
        return {n: d for d, names in self.basis.items() for n in names}

    @cached_property
    def _index(self) -> dict[str, int]:
        return {n: i for names in self.basis.values() for i, n in enumerate(names)}

    def degree(self, name: str) -> int:
        try:
            return self._degree[name]
        except KeyError:
            raise KeyError(f"unknown basis element {name!r}") from None

    def index(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name) -> bool:
        return name in self._degree

    def names(self, deg: int) -> tuple[str, ...]:
        return self.basis.get(deg, ())

    def dim(self, deg: int) -> int:
        return len(self.basis.get(deg, ()))

    def all_names(self) -> list[str]:
        return [n for names in self.basis.values() for n in names]

    def degrees(self) -> range:
        return range(0, self.top + 1)

    @property
    def exact_top(self) -> int:
        """Highest degree whose homology the window determines."""
        return self.top - 1 if self.truncated else self.top

    def element_degree(self, element: Mapping) -> int | None:
        degs = {self.degree(n) for n in element}
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous element {format_element(element)}")
        return degs.pop() if degs else None

    def vector(self, element: Mapping, deg: int) -> list[Fraction]:
        v = [Fraction(0)] * self.dim(deg)
        for n, c in element.items():
            if self.degree(n) != deg:
                raise ValueError(f"{n!r} is not in degree {deg}")
            v[self.index(n)] = Fraction(c)
        return v

    def element(self, vec, deg: int) -> dict:
        names = self.names(deg)
        return {names[i]: Fraction(c) for i, c in enumerate(vec) if c}


@dataclass(frozen=True)
class Complex:
    """A (co)chain complex with ``d`` given on basis elements."""

    module: GradedModule
    d: Mapping[str, Mapping[str, Fraction]] = field(default_factory=dict)
    direction: int = -1

    def __repr__(self):
        dims = {k: len(v) for k, v in self.module.basis.items()}
        return f"{type(self).__name__}(dims={dims}, top={self.module.top}, direction={self.direction}, ring={self.ring})"

    def __post_init__(self):
        if self.direction not in (-1, 1):
            raise ValueError("direction must be -1 or +1")
        object.__setattr__(self, "d", {k: clean(v) for k, v in self.d.items() if clean(v)})

    @property
    def ring(self) -> str:
        return self.module.ring

    @property
    def top(self) -> int:
        return self.module.top

    def differential(self, element: Mapping) -> dict:
        out: dict = {}
        for n, c in element.items():
            add_into(out, self.d.get(n, {}), c)
        return out

    @cached_property
    def _matrices(self) -> dict:
        return {}

    def matrix(self, n: int) -> SparseMatrix:
        """Matrix of ``d`` from degree ``n`` to ``n + direction``."""
        if n in self._matrices:
            return self._matrices[n]
        m = self.module
        tgt = n + self.direction
        entries = {}
        for j, name in enumerate(m.names(n)):
            for t, c in self.d.get(name, {}).items():
                if m.degree(t) != tgt:
                    raise VerificationError(f"d({name}) has a term {t!r} in the wrong degree")
                entries[(m.index(t), j)] = c
        mat = SparseMatrix(m.dim(tgt), m.dim(n), entries, self.ring)
        self._matrices[n] = mat
        return mat

    def squares_to_zero(self) -> tuple[bool, str | None]:
        for name in self.module.all_names():
            dd = self.differential(self.d.get(name, {}))
            if dd:
                return False, name
        return True, None


# --------------------------------------------------------------------------
# algebras and coalgebras


@dataclass(frozen=True)
class DgAlgebra:
    """Augmented DG algebra given by structure constants on basis pairs."""

    complex: Complex
    mul: Mapping[tuple[str, str], Mapping[str, Fraction]]
    unit: str
    augmentation: Mapping[str, Fraction]

    def __repr__(self):
        dims = {k: len(v) for k, v in self.module.basis.items()}
        return f"{type(self).__name__}(dims={dims}, top={self.module.top}, direction={self.direction}, ring={self.ring})"

    def __post_init__(self):
        object.__setattr__(self, "mul", {k: clean(v) for k, v in self.mul.items() if clean(v)})
        object.__setattr__(self, "augmentation", clean(self.augmentation))

    @property
    def module(self) -> GradedModule:
        return self.complex.module

    @property
    def ring(self) -> str:
        return self.complex.ring

    @property
    def direction(self) -> int:
        return self.complex.direction

    def degree(self, name: str) -> int:
        return self.module.degree(name)

    def basis_product(self, x: str, y: str) -> dict:
        if x == self.unit:
            return {y: Fraction(1)}
        if y == self.unit:
            return {x: Fraction(1)}
        return dict(self.mul.get((x, y), {}))

    def product(self, a: Mapping, b: Mapping) -> dict:
        out: dict = {}
        for x, cx in a.items():
            for y, cy in b.items():
                add_into(out, self.basis_product(x, y), cx * cy)
        return out

    def d(self, element: Mapping) -> dict:
        return self.complex.differential(element)

    def augment(self, element: Mapping) -> Fraction:
        return sum((Fraction(c) * self.augmentation.get(n, 0) for n, c in element.items()), Fraction(0))

    def is_connected(self) -> bool:
        return self.module.names(0) == (self.unit,)

    def reduce(self, element: Mapping) -> dict:
        """Coordinates of an augmentation-ideal element in the basis ``b - eps(b) 1``."""
        return {n: c for n, c in element.items() if n != self.unit}

    def reduced_names(self, deg: int) -> tuple[str, ...]:
        return tuple(n for n in self.module.names(deg) if n != self.unit)

    def reduced_product(self, x: str, y: str) -> dict:
        """Product of reduced basis elements ``x_bar * y_bar`` in reduced coordinates."""
        ex = self.augmentation.get(x, 0)
        ey = self.augmentation.get(y, 0)
        out = self.basis_product(x, y)
        if ey:
            add_into(out, {x: 1}, -ey)
        if ex:
            add_into(out, {y: 1}, -ex)
        if ex and ey:
            add_into(out, {self.unit: 1}, ex * ey)
        return self.reduce(out)

    def reduced_d(self, x: str) -> dict:
        return self.reduce(self.complex.d.get(x, {}))

    def is_graded_commutative(self) -> tuple[bool, tuple[str, str] | None]:
        names = self.module.all_names()
        for x in names:
            for y in names:
                sgn = sign(self.degree(x) * self.degree(y))
                ab = self.basis_product(x, y)
                ba = self.basis_product(y, x)
                if lincomb((1, ab), (-sgn, ba)):
                    return False, (x, y)
        return True, None


@dataclass(frozen=True)
class DgCoalgebra:
    """Counital DG coalgebra; ``comul[x]`` maps ``(left, right)`` to a scalar."""

    complex: Complex
    comul: Mapping[str, Mapping[tuple[str, str], Fraction]]
    counit: Mapping[str, Fraction]
    coaugmentation: str | None = None

    def __repr__(self):
        dims = {k: len(v) for k, v in self.module.basis.items()}
        return f"{type(self).__name__}(dims={dims}, top={self.module.top}, direction={self.direction}, ring={self.ring})"

    def __post_init__(self):
        object.__setattr__(self, "comul", {k: clean(v) for k, v in self.comul.items() if clean(v)})
        object.__setattr__(self, "counit", clean(self.counit))

    @property
    def module(self) -> GradedModule:
        return self.complex.module

    @property
    def ring(self) -> str:
        return self.complex.ring

    @property
    def direction(self) -> int:
        return self.complex.direction

    def degree(self, name: str) -> int:
        return self.module.degree(name)

    def coproduct(self, element: Mapping) -> dict:
        out: dict = {}
        for n, c in element.items():
            add_into(out, self.comul.get(n, {}), c)
        return out

    def eps(self, element: Mapping) -> Fraction:
        return sum((Fraction(c) * self.counit.get(n, 0) for n, c in element.items()), Fraction(0))

    def reduced_names(self, deg: int) -> tuple[str, ...]:
        return tuple(n for n in self.module.names(deg) if n != self.coaugmentation)

    def _split(self, name: str) -> dict:
        """``name`` written as ``eps(name) * base + name_bar``; keys are ``None`` for base."""
        out = {}
        e = self.counit.get(name, 0)
        if name == self.coaugmentation:
            return {None: Fraction(1)}
        out[name] = Fraction(1)
        if e:
            out[None] = Fraction(e)
        return out

    def reduced_coproduct(self, x: str) -> dict:
        """Reduced coproduct of ``x_bar = x - eps(x) base`` in ``C_bar (x) C_bar``."""
        if self.coaugmentation is None:
            raise PreconditionError("reduced coproduct needs a coaugmentation")
        full = dict(self.comul.get(x, {}))
        e = self.counit.get(x, 0)
        if e:
            add_into(full, {(self.coaugmentation, self.coaugmentation): 1}, -e)
        out: dict = {}
        for (l, r), c in full.items():
            for lk, lc in self._split(l).items():
                if lk is None:
                    continue
                for rk, rc in self._split(r).items():
                    if rk is None:
                        continue
                    add_into(out, {(lk, rk): 1}, c * lc * rc)
        return out

    def reduced_d(self, x: str) -> dict:
        """``d`` on the reduced basis, in reduced coordinates."""
        out: dict = {}
        for n, c in self.complex.d.get(x, {}).items():
            for k, kc in self._split(n).items():
                if k is not None:
                    add_into(out, {k: 1}, c * kc)
        return out

    @property
    def one_reduced(self) -> bool:
        """Reduced part vanishes in degrees 0 and 1 (homological sense)."""
        if self.coaugmentation is None:
            return False
        return not self.reduced_names(0) and not self.reduced_names(1)

    def letters_positive(self) -> bool:
        """Every reduced generator gives a cobar letter of degree >= 1."""
        if self.coaugmentation is None:
            return False
        e = self.direction
        return all(
            d + e >= 1 for d in self.module.basis for n in self.reduced_names(d)
        )


# --------------------------------------------------------------------------
# homology


@dataclass(frozen=True)
class HomologyReport:
    """Per-degree Betti numbers and, over Z, torsion coefficients."""

    ring: str
    groups: Mapping[int, tuple[int, tuple[int, ...]]]

    def rank(self, n: int) -> int:
        return self.groups[n][0]

    def torsion(self, n: int) -> tuple[int, ...]:
        return self.groups[n][1]

    def ranks(self) -> list[int]:
        return [self.groups[n][0] for n in sorted(self.groups)]

    def describe(self, n: int) -> str:
        r, tors = self.groups[n]
        parts = []
        base = "Z" if self.ring == "Z" else "Q"
        if r == 1:
            parts.append(base)
        elif r > 1:
            parts.append(f"{base}^{r}")
        parts.extend(f"Z/{t}" for t in tors)
        return " + ".join(parts) if parts else "0"

    def lines(self, symbol: str = "H") -> list[str]:
        return [f"{symbol}_{n} = {self.describe(n)}" for n in sorted(self.groups)]

    def __str__(self):
        return "\n".join(self.lines())


def homology(c: Complex, degrees: Iterable[int] | None = None, check: bool = True) -> HomologyReport:
    """Homology of ``c`` in ``degrees`` (default: every degree the window determines).

    Over Q ranks come from exact elimination; over Z the incoming
    differential is put in Smith normal form to read off torsion.
    """
    mod = c.module
    if degrees is None:
        degrees = range(0, mod.exact_top + 1)
    degrees = list(degrees)
    for n in degrees:
        if n > mod.exact_top:
            raise WindowTooSmall(
                f"degree {n} needs data beyond the window (homology determined through {mod.exact_top})"
            )
    if check:
        ok, where = c.squares_to_zero()
        if not ok:
            raise VerificationError(f"d^2 != 0 on {where!r}")
    ranks: dict[int, int] = {}

    def rk(n):
        if n < 0 or n > mod.top or n + c.direction < 0 or n + c.direction > mod.top:
            return 0
        if n not in ranks:
            ranks[n] = rank(c.matrix(n))
        return ranks[n]

    groups = {}
    for n in degrees:
        dim = mod.dim(n)
        incoming = n - c.direction
        if c.ring == "Z" and 0 <= incoming <= mod.top and mod.dim(incoming) and dim:
            snf = smith_normal_form(c.matrix(incoming))
            ranks[incoming] = snf.rank
            tors = snf.torsion
        else:
            tors = ()
        betti = dim - rk(n) - rk(incoming)
        groups[n] = (betti, tuple(tors))
    return HomologyReport(c.ring, groups)


def euler_characteristic(c: Complex, top: int | None = None) -> int:
    top = c.module.top if top is None else top
    return sum(sign(n) * c.module.dim(n) for n in range(top + 1))


# --------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a structural check; ``where`` names the offending basis tuple."""

    ok: bool
    check: str | None = None
    where: tuple = ()
    detail: str = ""
    one_reduced: bool | None = None

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return f"{self.check} violated at {', '.join(map(str, self.where))}: {self.detail}"

    def raise_for_failure(self):
        if not self.ok:
            raise VerificationError(self.describe(), self)


def _fail(check, where, detail=""):
    return VerificationReport(False, check, tuple(where), detail)


def _check_differential(c: Complex):
    mod = c.module
    for x, dx in c.d.items():
        if x not in mod:
            return _fail("degree", (x,), "differential on unknown basis element")
        for t in dx:
            if t not in mod:
                return _fail("degree", (x,), f"d({x}) mentions unknown {t!r}")
            if mod.degree(t) != mod.degree(x) + c.direction:
                return _fail("degree", (x,), f"d({x}) has term {t} of degree {mod.degree(t)}")
    for x in mod.all_names():
        dd = c.differential(c.d.get(x, {}))
        if dd:
            return _fail("d^2=0", (x,), format_element(dd))
    if c.ring == "Z":
        for x, dx in c.d.items():
            if any(Fraction(v).denominator != 1 for v in dx.values()):
                return _fail("ring", (x,), "non-integral coefficient")
    return None


def verify_complex(c: Complex) -> VerificationReport:
    bad = _check_differential(c)
    return bad if bad is not None else VerificationReport(True)


def verify_dga(a: DgAlgebra) -> VerificationReport:
    """Check d^2 = 0, unit, associativity, Leibniz and augmentation on all basis tuples."""
    mod = a.module
    c = a.complex
    bad = _check_differential(c)
    if bad is not None:
        return bad
    if a.unit not in mod or mod.degree(a.unit) != 0:
        return _fail("unit", (a.unit,), "unit must be a degree-0 basis element")
    if c.d.get(a.unit):
        return _fail("unit", (a.unit,), "d(1) != 0")
    names = mod.all_names()
    for (x, y), xy in a.mul.items():
        if x not in mod or y not in mod:
            return _fail("degree", (x, y), "product of unknown basis elements")
        if x == a.unit or y == a.unit:
            if xy != ({y: 1} if x == a.unit else {x: 1}):
                return _fail("unit", (x, y), "unit product table disagrees with the unit")
        for t in xy:
            if t not in mod or mod.degree(t) != mod.degree(x) + mod.degree(y):
                return _fail("degree", (x, y), f"product term {t!r} has the wrong degree")
    top = mod.top
    deg = mod.degree
    for x, y, z in iproduct(names, repeat=3):
        if deg(x) + deg(y) + deg(z) > top or a.unit in (x, y, z):
            continue
        left = a.product(a.basis_product(x, y), {z: 1})
        right = a.product({x: 1}, a.basis_product(y, z))
        if lincomb((1, left), (-1, right)):
            return _fail("associativity", (x, y, z))
    e = c.direction
    for x, y in iproduct(names, repeat=2):
        s = deg(x) + deg(y)
        if s > top or s + e > top or s + e < 0:
            continue
        lhs = a.d(a.basis_product(x, y))
        rhs = lincomb(
            (1, a.product(a.d({x: 1}), {y: 1})),
            (sign(deg(x)), a.product({x: 1}, a.d({y: 1}))),
        )
        if lincomb((1, lhs), (-1, rhs)):
            return _fail("Leibniz", (x, y), format_element(lincomb((1, lhs), (-1, rhs))))
    aug = a.augmentation
    for n in aug:
        if n not in mod or deg(n) != 0:
            return _fail("augmentation", (n,), "augmentation must live in degree 0")
    if aug.get(a.unit) != 1:
        return _fail("augmentation", (a.unit,), "eps(1) != 1")
    zero = mod.names(0)
    for x, y in iproduct(zero, repeat=2):
        if a.augment(a.basis_product(x, y)) != aug.get(x, 0) * aug.get(y, 0):
            return _fail("augmentation", (x, y), "eps is not multiplicative")
    for x in mod.names(-e) if -e >= 0 else ():
        if a.augment(a.d({x: 1})):
            return _fail("augmentation", (x,), "eps(d x) != 0")
    return VerificationReport(True)


def verify_dgc(cg: DgCoalgebra) -> VerificationReport:
    """Check coassociativity, counit, co-Leibniz, coaugmentation; report 1-reducedness."""
    mod = cg.module
    c = cg.complex
    bad = _check_differential(c)
    if bad is not None:
        return bad
    deg = mod.degree
    names = mod.all_names()
    for x, terms in cg.comul.items():
        if x not in mod:
            return _fail("degree", (x,), "coproduct of unknown element")
        for (l, r) in terms:
            if l not in mod or r not in mod or deg(l) + deg(r) != deg(x):
                return _fail("degree", (x,), f"coproduct term {l} (x) {r} has the wrong degree")
    for n in cg.counit:
        if n not in mod or deg(n) != 0:
            return _fail("counit", (n,), "counit must live in degree 0")
    for x in names:
        dx = cg.comul.get(x, {})
        left: dict = {}
        right: dict = {}
        for (l, r), v in dx.items():
            add_into(left, {r: 1}, v * cg.counit.get(l, 0))
            add_into(right, {l: 1}, v * cg.counit.get(r, 0))
        if left != {x: 1} or right != {x: 1}:
            return _fail("counit", (x,), "(eps (x) 1) Delta != id")
    for x in names:
        dx = cg.comul.get(x, {})
        a: dict = {}
        b: dict = {}
        for (l, r), v in dx.items():
            for (ll, lr), w in cg.comul.get(l, {}).items():
                add_into(a, {(ll, lr, r): 1}, v * w)
            for (rl, rr), w in cg.comul.get(r, {}).items():
                add_into(b, {(l, rl, rr): 1}, v * w)
        if lincomb((1, a), (-1, b)):
            return _fail("coassociativity", (x,))
    e = c.direction
    for x in names:
        if not (0 <= deg(x) + e <= mod.top):
            continue
        lhs = cg.coproduct(c.d.get(x, {}))
        rhs: dict = {}
        for (l, r), v in cg.comul.get(x, {}).items():
            for t, w in c.d.get(l, {}).items():
                add_into(rhs, {(t, r): 1}, v * w)
            for t, w in c.d.get(r, {}).items():
                add_into(rhs, {(l, t): 1}, v * w * sign(deg(l)))
        if lincomb((1, lhs), (-1, rhs)):
            return _fail("co-Leibniz", (x,))
    for x in names:
        if cg.eps(c.d.get(x, {})):
            return _fail("counit", (x,), "eps(d x) != 0")
    base = cg.coaugmentation
    if base is not None:
        if base not in mod or deg(base) != 0:
            return _fail("coaugmentation", (base,), "coaugmentation must be a degree-0 basis element")
        if cg.comul.get(base) != {(base, base): 1} or cg.counit.get(base) != 1:
            return _fail("coaugmentation", (base,), "coaugmentation is not group-like")
        if c.d.get(base):
            return _fail("coaugmentation", (base,), "d(base) != 0")
    return VerificationReport(True, one_reduced=cg.one_reduced)


# --------------------------------------------------------------------------
# duality


def dual_name(name: str) -> str:
    return name[:-1] if name.endswith("*") else name + "*"


def _dual_module(mod: GradedModule) -> GradedModule:
    return GradedModule({d: tuple(dual_name(n) for n in names) for d, names in mod.basis.items()},
                        mod.top, mod.ring, mod.truncated)


def _dual_complex(c: Complex) -> Complex:
    mod = c.module
    d: dict = {}
    for x, dx in c.d.items():
        for y, v in dx.items():
            lower = min(mod.degree(x), mod.degree(y))
            add_into(d.setdefault(dual_name(y), {}), {dual_name(x): 1}, v * sign(lower + 1))
    return Complex(_dual_module(mod), d, -c.direction)


def dualize(obj):
    """Linear dual of a finite-type Complex, DgCoalgebra or DgAlgebra."""
    if isinstance(obj, Complex):
        return _dual_complex(obj)
    if isinstance(obj, DgCoalgebra):
        mod = obj.module
        cx = _dual_complex(obj.complex)
        mul: dict = {}
        for x, terms in obj.comul.items():
            for (l, r), v in terms.items():
                add_into(mul.setdefault((dual_name(l), dual_name(r)), {}), {dual_name(x): 1},
                         v * sign(mod.degree(l) * mod.degree(r)))
        counit = obj.counit
        if len(counit) != 1 or next(iter(counit.values())) != 1:
            raise PreconditionError("dual algebra needs the counit to be a single dual basis element")
        unit = dual_name(next(iter(counit)))
        if obj.coaugmentation is None:
            raise PreconditionError("dual algebra needs a coaugmentation")
        aug = {dual_name(obj.coaugmentation): Fraction(1)}
        return DgAlgebra(cx, mul, unit, aug)
    if isinstance(obj, DgAlgebra):
        mod = obj.module
        cx = _dual_complex(obj.complex)
        comul: dict = {}
        names = mod.all_names()
        for x in names:
            for y in names:
                for t, v in obj.basis_product(x, y).items():
                    add_into(comul.setdefault(dual_name(t), {}), {(dual_name(x), dual_name(y)): 1},
                             v * sign(mod.degree(x) * mod.degree(y)))
        aug = obj.augmentation
        if len(aug) != 1 or next(iter(aug.values())) != 1:
            raise PreconditionError("dual coalgebra needs the augmentation to be a single dual basis element")
        base = dual_name(next(iter(aug)))
        return DgCoalgebra(cx, comul, {dual_name(obj.unit): Fraction(1)}, base)
    raise TypeError(f"cannot dualize {type(obj).__name__}")


# --------------------------------------------------------------------------
# small constructors used throughout


def algebra_from_tables(basis: Mapping[int, Iterable[str]], *, d=None, mul=None, unit="1",
                        direction: int = 1, ring: str = "Q", top: int | None = None,
                        truncated: bool = False, augmentation=None) -> DgAlgebra:
    """Build a DGA from ``{deg: names}``, ``d`` as ``{x: {y: c}}`` and ``mul`` as ``{(x, y): {z: c}}``.

    Unit products are filled in automatically; the default augmentation is
    the coefficient of the unit.
    """
    basis = {int(k): tuple(v) for k, v in basis.items()}
    top = max(basis) if top is None else top
    mod = GradedModule(basis, top, ring, truncated)
    table = {k: dict(v) for k, v in (mul or {}).items()}
    for n in mod.all_names():
        table.setdefault((unit, n), {n: 1})
        table.setdefault((n, unit), {n: 1})
    aug = augmentation if augmentation is not None else {unit: 1}
    return DgAlgebra(Complex(mod, d or {}, direction), table, unit, aug)
