"""Bar and cobar constructions, the counit check, shuffles and Harrison homology.

Sign conventions.  A letter ``a`` of a bar word carries the shifted degree
``|a| - e`` where ``e`` is the degree of the algebra's differential, and a
cobar letter ``s`` carries ``|s| + e``.  With ``n_i`` the sum of the
shifted degrees of the first ``i`` letters,

    d[a1|...|ak] = sum_i (-1)^{n_(i-1)} [..|d a_i|..]
                 + sum_i (-1)^{n_i}     [..|a_i a_(i+1)|..]

which on the cochain algebra of a sphere gives ``d[c|a] = [a|a] + [c a]``
for ``dc = a``.  The cobar differential is the derivation extending

    d<s> = -<d s> + sum (-1)^{|x|} <x|y>,   Delta_bar(s) = sum x (x) y.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .dg import (
    Complex,
    DgAlgebra,
    DgCoalgebra,
    GradedModule,
    add_into,
    homology,
    lincomb,
    sign,
    verify_dga,
    verify_dgc,
    word_name,
)
from .errors import InvariantBreach, PreconditionError, VerificationError
from .linalg import SparseMatrix, rank, rref
from .simplicial import GroupTable


@dataclass(frozen=True, order=True)
class TensorWord:
    """A bar or cobar word: letter names with their shifted degrees."""

    letters: tuple[str, ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.letters) != len(self.degrees):
            raise ValueError("one degree per letter")

    @property
    def weight(self) -> int:
        return len(self.letters)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    def __add__(self, other: TensorWord) -> TensorWord:
        return TensorWord(self.letters + other.letters, self.degrees + other.degrees)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return word_name(self.letters)


EMPTY = TensorWord((), ())


def shuffle_product(u: TensorWord, v: TensorWord) -> dict[TensorWord, int]:
    """Signed sum over all (p, q)-shuffles of ``u`` and ``v``.

    Each transposition of a letter of ``v`` past a letter of ``u`` costs the
    product of their shifted degrees.
    """
    p, q = len(u), len(v)
    out: dict[TensorWord, int] = {}
    for pos in combinations(range(p + q), p):
        posset = set(pos)
        letters, degs = [], []
        iu = iv = 0
        crossed = 0
        for k in range(p + q):
            if k in posset:
                letters.append(u.letters[iu])
                degs.append(u.degrees[iu])
                # letters of v already placed sit before this u-letter
                crossed += u.degrees[iu] * sum(v.degrees[:iv])
                iu += 1
            else:
                letters.append(v.letters[iv])
                degs.append(v.degrees[iv])
                iv += 1
        w = TensorWord(tuple(letters), tuple(degs))
        new = out.get(w, 0) + sign(crossed)
        if new:
            out[w] = new
        else:
            out.pop(w, None)
    return out


def _enumerate_words(letters: Sequence[tuple[str, int]], top: int, max_weight: int | None,
                     low: int = 0) -> dict[int, list[TensorWord]]:
    """All words of total degree in ``[low, top]`` (and weight <= max_weight), grouped by degree."""
    out: dict[int, list[TensorWord]] = {m: [] for m in range(top + 1)}

    def grow(word: TensorWord):
        if word.degree >= low:
            out[word.degree].append(word)
        if max_weight is not None and word.weight >= max_weight:
            return
        for name, deg in letters:
            if word.degree + deg <= top:
                grow(word + TensorWord((name,), (deg,)))

    grow(EMPTY)
    return out


@dataclass(frozen=True, repr=False)
class BarComplex(DgCoalgebra):
    """Bar construction of an augmented DGA, as a DG coalgebra under deconcatenation."""

    source: DgAlgebra | None = None
    words: Mapping[str, TensorWord] = field(default_factory=dict)
    max_weight: int | None = None

    def name_of(self, letters: Sequence[str]) -> str:
        return word_name(letters)

    def word(self, name: str) -> TensorWord:
        return self.words[name]

    def element(self, terms: Mapping[Sequence[str], object]) -> dict:
        """Element from ``{(letter, ...): coeff}``; unknown words raise ``KeyError``."""
        out: dict = {}
        for letters, c in terms.items():
            name = self.name_of(tuple(letters))
            if name not in self.module:
                raise KeyError(f"word {name} is not in this bar complex")
            add_into(out, {name: 1}, Fraction(c))
        return out

    def d(self, element: Mapping) -> dict:
        return self.complex.differential(element)


def _letter_table(a: DgAlgebra, shift: int) -> list[tuple[str, int]]:
    letters = []
    for deg in a.module.basis:
        for n in a.reduced_names(deg):
            letters.append((n, deg + shift))
    return letters


def bar_word_differential(a: DgAlgebra, word: TensorWord) -> dict[tuple[str, ...], Fraction]:
    """Bar differential of one word, as ``{letters: coeff}``."""
    out: dict = {}
    letters = word.letters
    n = 0
    for i, x in enumerate(letters):
        prefix, suffix = letters[:i], letters[i + 1:]
        for t, c in a.reduced_d(x).items():
            add_into(out, {prefix + (t,) + suffix: 1}, c * sign(n))
        n += word.degrees[i]
        if i + 1 < len(letters):
            tail = letters[i + 2:]
            for t, c in a.reduced_product(x, letters[i + 1]).items():
                add_into(out, {prefix + (t,) + tail: 1}, c * sign(n))
    return out


def _exact_top(module: GradedModule, N: int, direction: int, construction: str) -> int:
    if not module.truncated:
        return N
    T = module.top
    if construction == "bar":
        return min(N, T - 1 if direction == 1 else T + 1)
    return min(N, T if direction == 1 else T - 1)


def bar(a: DgAlgebra, N: int, max_weight: int | None = None, check: bool = True) -> BarComplex:
    """Normalized bar construction through total degree N.

    Letters come from the augmentation ideal, in the basis ``b - eps(b) 1``.
    When some letter has shifted degree 0 each degree is infinite
    dimensional and ``max_weight`` must bound the weight; the weight-bounded
    part is a subcomplex since the differential never raises weight.
    """
    if not a.augmentation or a.augmentation.get(a.unit) != 1:
        raise PreconditionError("bar construction needs an augmented algebra")
    if check:
        verify_dga(a).raise_for_failure()
    e = a.direction
    letters = _letter_table(a, -e)
    if any(deg < 0 for _, deg in letters):
        raise PreconditionError("augmentation ideal has letters of negative shifted degree")
    if max_weight is None and any(deg == 0 for _, deg in letters):
        raise PreconditionError("letters of shifted degree 0: pass max_weight to bound the weight")
    top = _exact_top(a.module, N, e, "bar")
    if top < 0:
        raise PreconditionError("window too small for the bar construction")
    by_deg = _enumerate_words(letters, top, max_weight)
    order = {name: (deg, i) for i, (name, deg) in enumerate(letters)}
    basis, words = {}, {}
    for m, ws in by_deg.items():
        ws = sorted(ws, key=lambda w: tuple(order[x] for x in w.letters))
        basis[m] = tuple(word_name(w.letters) for w in ws)
        for w in ws:
            words[word_name(w.letters)] = w
    d = {}
    for name, w in words.items():
        if not 0 <= w.degree + e <= top:
            continue
        dw = bar_word_differential(a, w)
        d[name] = {word_name(k): v for k, v in dw.items()}
    comul = {}
    for name, w in words.items():
        comul[name] = {
            (word_name(w.letters[:i]), word_name(w.letters[i:])): 1 for i in range(w.weight + 1)
        }
    empty = word_name(())
    mod = GradedModule(basis, top, a.ring, truncated=True)
    return BarComplex(Complex(mod, d, e), comul, {empty: Fraction(1)}, empty,
                      source=a, words=words, max_weight=max_weight)


# --------------------------------------------------------------------------
# cobar


def cobar_name(letters: Sequence[str]) -> str:
    return word_name(letters, "<", ">")


@dataclass(frozen=True, repr=False)
class CobarComplex(DgAlgebra):
    """Cobar construction: tensor algebra on desuspended reduced generators.

    The product is concatenation, computed on demand rather than tabulated.
    """

    source: DgCoalgebra | None = None
    words: Mapping[str, TensorWord] = field(default_factory=dict)

    def basis_product(self, x: str, y: str) -> dict:
        w = self.words[x] + self.words[y]
        if w.degree > self.module.top:
            return {}
        return {cobar_name(w.letters): Fraction(1)}

    def name_of(self, letters: Sequence[str]) -> str:
        return cobar_name(letters)


def cobar(c: DgCoalgebra, N: int, check: bool = True) -> CobarComplex:
    """Cobar construction through total degree N.

    Requires every reduced generator to desuspend to positive degree; for a
    chain coalgebra that is exactly 1-reducedness.
    """
    if c.coaugmentation is None:
        raise PreconditionError("cobar construction needs a coaugmented coalgebra")
    if check:
        verify_dgc(c).raise_for_failure()
    if not c.letters_positive():
        raise PreconditionError(
            "coalgebra is not 1-reduced: some reduced generator has non-positive cobar degree"
        )
    e = c.direction
    letters = [(n, deg + e) for deg in c.module.basis for n in c.reduced_names(deg)]
    top = _exact_top(c.module, N, e, "cobar")
    if top < 0:
        raise PreconditionError("window too small for the cobar construction")
    by_deg = _enumerate_words(letters, top, None)
    order = {name: (deg, i) for i, (name, deg) in enumerate(letters)}
    letter_deg = dict(letters)

    # differential on single letters, as {letters tuple: coeff}
    delta: dict[str, dict] = {}
    for name, deg in letters:
        out: dict = {}
        for t, v in c.reduced_d(name).items():
            add_into(out, {(t,): 1}, -v)
        for (x, y), v in c.reduced_coproduct(name).items():
            add_into(out, {(x, y): 1}, v * sign(c.degree(x)))
        delta[name] = out

    basis, words = {}, {}
    for m, ws in by_deg.items():
        ws = sorted(ws, key=lambda w: tuple(order[x] for x in w.letters))
        basis[m] = tuple(cobar_name(w.letters) for w in ws)
        for w in ws:
            words[cobar_name(w.letters)] = w
    d = {}
    for name, w in words.items():
        if not 0 <= w.degree + e <= top:
            continue
        out: dict = {}
        n = 0
        for i, x in enumerate(w.letters):
            prefix, suffix = w.letters[:i], w.letters[i + 1:]
            for mid, v in delta[x].items():
                add_into(out, {cobar_name(prefix + mid + suffix): 1}, v * sign(n))
            n += letter_deg[x]
        d[name] = out
    empty = cobar_name(())
    mod = GradedModule(basis, top, c.ring, truncated=True)
    return CobarComplex(Complex(mod, d, e), {}, empty, {empty: Fraction(1)}, source=c, words=words)


# --------------------------------------------------------------------------
# group rings


def group_ring(g: GroupTable, ring: str = "Z") -> DgAlgebra:
    """k[G] in degree 0 with the augmentation sending every group element to 1."""
    g.check()
    lab = g.labels
    mul = {(lab[x], lab[y]): {lab[g.mul(x, y)]: 1} for x in range(g.order) for y in range(g.order)}
    mod = GradedModule({0: lab}, 0, ring)
    return DgAlgebra(Complex(mod, {}, -1), mul, lab[g.identity], {l: 1 for l in lab})


def group_bar(g: GroupTable, N: int, ring: str = "Z") -> BarComplex:
    """Bar construction of the group ring; carrier and differential match ``classifying_complex``."""
    return bar(group_ring(g, ring), N)


# --------------------------------------------------------------------------
# counit of the bar-cobar adjunction


@dataclass(frozen=True)
class CounitReport:
    """Outcome of checking the counit ``Omega B A -> A`` on a window."""

    chain_map: bool
    algebra_map: bool
    degrees: tuple[int, ...]
    source_ranks: tuple[int, ...]
    target_ranks: tuple[int, ...]
    surjective_on_homology: bool

    @property
    def ranks_agree(self) -> bool:
        return self.source_ranks == self.target_ranks

    @property
    def quasi_isomorphism(self) -> bool:
        return self.chain_map and self.algebra_map and self.ranks_agree and self.surjective_on_homology


def counit_map(omega_b: CobarComplex, a: DgAlgebra) -> dict[str, dict]:
    """The counit on basis words: weight-one bar letters go to their element of A."""
    images: dict[str, dict] = {}
    for name, w in omega_b.words.items():
        img: dict = {a.unit: Fraction(1)}
        for letter in w.letters:
            bw = omega_b.source.words[letter]
            if bw.weight != 1:
                img = {}
                break
            img = a.product(img, {bw.letters[0]: 1})
        images[name] = img
    return images


def counit_and_check(a: DgAlgebra, N: int) -> CounitReport:
    """Build ``Omega B A`` through degree N, the counit, and compare homology.

    Homology ranks are compared in degrees ``0 .. N-1``.
    """
    if not a.is_connected():
        raise PreconditionError("counit check needs a connected algebra")
    b = bar(a, N + 1)
    ob = cobar(b, N)
    f = counit_map(ob, a)
    top = min(ob.module.top, a.module.top if not a.module.truncated else a.module.top - 1)

    def apply(element):
        out: dict = {}
        for n, c in element.items():
            add_into(out, f[n], c)
        return out

    chain = True
    for name, w in ob.words.items():
        if w.degree + a.direction > ob.module.top or w.degree + a.direction < 0:
            continue
        if lincomb((1, apply(ob.d({name: 1}))), (-1, a.d(f[name]))):
            chain = False
            break
    alg = True
    names = list(ob.words)
    for x in names:
        for y in names:
            if ob.words[x].degree + ob.words[y].degree > top:
                continue
            if lincomb((1, apply(ob.basis_product(x, y))), (-1, a.product(f[x], f[y]))):
                alg = False
                break
        if not alg:
            break
    degrees = tuple(range(0, N))
    hs = homology(ob.complex, degrees)
    ha_degrees = [n for n in degrees if n <= a.module.exact_top]
    ha = homology(a.complex, ha_degrees)
    target = tuple(ha.rank(n) if n in ha.groups else 0 for n in degrees)
    surj = all(_hits_homology(ob, a, f, n) for n in ha_degrees)
    return CounitReport(chain, alg, degrees, tuple(hs.ranks()), target, surj)


def _hits_homology(ob: CobarComplex, a: DgAlgebra, f: Mapping, n: int) -> bool:
    """Whether f(cycles of degree n) together with boundaries spans the cycles of A."""
    from .linalg import kernel_basis

    amod = a.module
    if amod.dim(n) == 0:
        return True
    e = a.direction

    def cycles(cx: Complex, deg):
        mod = cx.module
        if mod.dim(deg) == 0:
            return []
        if 0 <= deg + e <= mod.top and mod.dim(deg + e):
            return kernel_basis(cx.matrix(deg))
        return [[Fraction(int(i == j)) for j in range(mod.dim(deg))] for i in range(mod.dim(deg))]

    za = cycles(a.complex, n)
    vecs = []
    for z in cycles(ob.complex, n):
        img: dict = {}
        for i, c in enumerate(z):
            if c:
                add_into(img, f[ob.module.names(n)[i]], c)
        vecs.append(amod.vector(img, n))
    prev = n - e
    if 0 <= prev <= amod.top and amod.dim(prev):
        m = a.complex.matrix(prev)
        cols = m.column_dicts()
        for col in cols:
            vecs.append([col.get(i, Fraction(0)) for i in range(amod.dim(n))])
    if not vecs:
        return not za
    span = SparseMatrix(amod.dim(n), len(vecs), {(i, j): v[i] for j, v in enumerate(vecs) for i in range(amod.dim(n)) if v[i]})
    return rank(span) == len(za)


# --------------------------------------------------------------------------
# Harrison complex


@dataclass(frozen=True, repr=False)
class HarrisonComplex(Complex):
    """Bar complex of a commutative DGA modulo proper shuffle products."""

    bar: BarComplex | None = None
    shuffles: Mapping[int, tuple] = field(default_factory=dict)

    def project(self, element: Mapping) -> dict:
        """Image in the quotient of a bar element (keys are bar word names)."""
        if not element:
            return {}
        deg = self.bar.module.element_degree(element)
        rows, pivots = self.shuffles.get(deg, ((), ()))
        vec = dict(element)
        names = self.bar.module.names(deg)
        for row, p in zip(rows, pivots):
            c = vec.get(names[p])
            if c:
                for j, v in row.items():
                    add_into(vec, {names[j]: 1}, -c * v)
        return {k: v for k, v in vec.items() if k in self.module}


def harrison_complex(a: DgAlgebra, N: int, max_weight: int | None = None) -> HarrisonComplex:
    """Harrison complex: the bar complex modulo the span of shuffles of nonempty words."""
    verify_dga(a).raise_for_failure()
    ok, where = a.is_graded_commutative()
    if not ok:
        raise PreconditionError(f"algebra is not graded-commutative at {where}")
    b = bar(a, N, max_weight=max_weight, check=False)
    mod = b.module
    words_by_deg = {m: [b.words[n] for n in mod.names(m)] for m in mod.basis}
    shuffles = {}
    quotient_basis = {}
    for m in range(mod.top + 1):
        names = mod.names(m)
        if not names:
            continue
        idx = {n: i for i, n in enumerate(names)}
        rows = []
        for p in range(1, m + 1):
            for u in words_by_deg.get(p, ()):
                if u.weight == 0:
                    continue
                for v in words_by_deg.get(m - p, ()):
                    if v.weight == 0:
                        continue
                    if max_weight is not None and u.weight + v.weight > max_weight:
                        continue
                    sh = shuffle_product(u, v)
                    row = {idx[word_name(w.letters)]: c for w, c in sh.items()}
                    if row:
                        rows.append(row)
        # words of shifted degree 0 can shuffle from degree 0 pieces too
        for u in words_by_deg.get(0, ()):
            for v in words_by_deg.get(m, ()):
                if u.weight and v.weight and (max_weight is None or u.weight + v.weight <= max_weight):
                    sh = shuffle_product(u, v)
                    row = {idx[word_name(w.letters)]: c for w, c in sh.items()}
                    if row:
                        rows.append(row)
        if rows:
            mat = SparseMatrix(len(rows), len(names), {(i, j): v for i, r in enumerate(rows) for j, v in r.items()})
            red, piv = rref(mat)
        else:
            red, piv = [], []
        shuffles[m] = (tuple(red), tuple(piv))
        pivset = set(piv)
        quotient_basis[m] = tuple(n for i, n in enumerate(names) if i not in pivset)
    qmod = GradedModule(quotient_basis, mod.top, a.ring, truncated=True)
    skeleton = HarrisonComplex(qmod, {}, a.direction, bar=b, shuffles=shuffles)
    d = {}
    for m in range(mod.top + 1):
        if not 0 <= m + a.direction <= mod.top:
            continue
        names = mod.names(m)
        rows, piv = shuffles.get(m, ((), ()))
        for row in rows:
            img = skeleton.project(b.d({names[j]: v for j, v in row.items()}))
            if img:
                raise InvariantBreach(f"bar differential does not preserve shuffles in degree {m}")
        for n in quotient_basis.get(m, ()):
            d[n] = skeleton.project(b.d({n: 1}))
    return HarrisonComplex(qmod, d, a.direction, bar=b, shuffles=shuffles)
