"""Exact sparse linear algebra over Q and Z.

Everything here works with :class:`fractions.Fraction` (ring ``"Q"``) or
Python ``int`` (ring ``"Z"``).  There is no floating point anywhere.

Pivoting is deterministic: columns are processed left to right and the
pivot for a column is the lowest-indexed remaining row with a nonzero entry
there.  Downstream "choose a cobounding cochain" steps rely on this to be
reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import ParseError

RINGS = ("Q", "Z")


def check_ring(ring: str) -> str:
    if ring not in RINGS:
        raise ParseError(f"unknown ring {ring!r}; expected one of {RINGS}")
    return ring


def scalar(value, ring: str = "Q"):
    """Coerce ``value`` (int, Fraction or ``"p/q"`` string) into ``ring``."""
    if isinstance(value, str):
        try:
            value = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar {value!r}") from exc
    elif isinstance(value, float):
        raise TypeError("floating point scalars are not allowed")
    q = Fraction(value)
    if ring == "Z":
        if q.denominator != 1:
            raise ParseError(f"{value!r} is not an integer")
        return int(q)
    return q


def format_scalar(value) -> str:
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class SparseMatrix:
    """Immutable sparse matrix stored as ``{(row, col): value}``.

    Zero entries are never stored.  ``ring`` tags the coefficient ring; a
    ``"Z"`` matrix holds Python ints.
    """

    __slots__ = ("rows", "cols", "ring", "_entries", "_row_cache")

    def __init__(self, rows: int, cols: int, entries: Mapping | None = None, ring: str = "Q"):
        if rows < 0 or cols < 0:
            raise ValueError("negative shape")
        check_ring(ring)
        self.rows = rows
        self.cols = cols
        self.ring = ring
        clean = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside shape {rows}x{cols}")
            v = scalar(v, ring)
            if v:
                clean[(i, j)] = v
        self._entries = clean
        self._row_cache = None

    @classmethod
    def from_dense(cls, data: Sequence[Sequence], ring: str = "Q", cols: int | None = None):
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        entries = {(i, j): v for i, row in enumerate(data) for j, v in enumerate(row) if v}
        return cls(rows, cols, entries, ring)

    @classmethod
    def zeros(cls, rows: int, cols: int, ring: str = "Q"):
        return cls(rows, cols, {}, ring)

    @classmethod
    def identity(cls, n: int, ring: str = "Q"):
        return cls(n, n, {(i, i): 1 for i in range(n)}, ring)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    def __getitem__(self, key):
        i, j = key
        return self._entries.get((i, j), 0 if self.ring == "Z" else Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={len(self._entries)}, ring={self.ring})"

    def nnz(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def to_dense(self) -> list[list]:
        zero = 0 if self.ring == "Z" else Fraction(0)
        out = [[zero] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def row_dicts(self) -> list[dict[int, object]]:
        if self._row_cache is None:
            rows: list[dict] = [{} for _ in range(self.rows)]
            for (i, j), v in self._entries.items():
                rows[i][j] = v
            self._row_cache = rows
        return [dict(r) for r in self._row_cache]

    def column_dicts(self) -> list[dict[int, object]]:
        cols: list[dict] = [{} for _ in range(self.cols)]
        for (i, j), v in self._entries.items():
            cols[j][i] = v
        return cols

    def transpose(self) -> SparseMatrix:
        return SparseMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self._entries.items()}, self.ring)

    def scale(self, c) -> SparseMatrix:
        return SparseMatrix(self.rows, self.cols, {k: v * c for k, v in self._entries.items()}, self.ring)

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other: SparseMatrix) -> SparseMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, 0) + v
        return SparseMatrix(self.rows, self.cols, out, _join(self.ring, other.ring))

    def __sub__(self, other: SparseMatrix) -> SparseMatrix:
        return self + (-other)

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        other_rows = other.row_dicts()
        out: dict = {}
        for (i, k), a in self._entries.items():
            for j, b in other_rows[k].items():
                out[(i, j)] = out.get((i, j), 0) + a * b
        return SparseMatrix(self.rows, other.cols, out, _join(self.ring, other.ring))

    def apply(self, vec: Sequence) -> list:
        """Matrix-vector product with a dense vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        zero = 0 if self.ring == "Z" else Fraction(0)
        out = [zero] * self.rows
        for (i, j), v in self._entries.items():
            if vec[j]:
                out[i] += v * vec[j]
        return out

    def as_ring(self, ring: str) -> SparseMatrix:
        return SparseMatrix(self.rows, self.cols, self._entries, ring)


def _join(r1: str, r2: str) -> str:
    return "Z" if r1 == r2 == "Z" else "Q"


# --------------------------------------------------------------------------
# elimination over Q


class _RowReducer:
    """Gaussian elimination on a list of sparse rows with a column index."""

    def __init__(self, rows: Iterable[Mapping[int, object]]):
        self.rows: dict[int, dict[int, Fraction]] = {}
        self.colidx: dict[int, set[int]] = {}
        for i, row in enumerate(rows):
            r = {j: Fraction(v) for j, v in row.items() if v}
            self.rows[i] = r
            for j in r:
                self.colidx.setdefault(j, set()).add(i)

    def _axpy(self, target: int, factor: Fraction, source: dict[int, Fraction]):
        row = self.rows[target]
        for j, v in source.items():
            new = row.get(j, 0) - factor * v
            if new:
                if j not in row:
                    self.colidx.setdefault(j, set()).add(target)
                row[j] = new
            else:
                if j in row:
                    del row[j]
                    self.colidx[j].discard(target)

    def reduce(self, columns: Iterable[int], full: bool = True) -> list[tuple[int, int]]:
        """Eliminate over ``columns`` in order; return ``[(col, row_id)]`` pivots.

        With ``full`` the result is reduced row echelon form on the pivot
        columns (entries above pivots cleared too).
        """
        pivots: list[tuple[int, int]] = []
        used: set[int] = set()
        for c in columns:
            cands = [i for i in self.colidx.get(c, ()) if i not in used]
            if not cands:
                continue
            r = min(cands)
            used.add(r)
            prow = self.rows[r]
            inv = 1 / prow[c]
            if inv != 1:
                for j in prow:
                    prow[j] *= inv
            targets = self.colidx[c] if full else [i for i in self.colidx[c] if i not in used]
            for i in sorted(targets):
                if i == r:
                    continue
                self._axpy(i, self.rows[i][c], dict(prow))
            pivots.append((c, r))
        return pivots


def rank(m: SparseMatrix) -> int:
    """Rank over Q."""
    if m.is_zero():
        return 0
    if m.ring == "Z":
        return len(smith_normal_form(m).diagonal)
    # eliminate along the smaller dimension
    mat = m if m.rows >= m.cols else m.transpose()
    red = _RowReducer(mat.row_dicts())
    return len(red.reduce(range(mat.cols), full=False))


def rref(m: SparseMatrix) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows in pivot order, pivot columns)."""
    red = _RowReducer(m.row_dicts())
    piv = red.reduce(range(m.cols), full=True)
    return [red.rows[r] for _, r in piv], [c for c, _ in piv]


def kernel_basis(m: SparseMatrix) -> list[list[Fraction]]:
    """Basis of ``ker m`` as dense vectors; one vector per free column."""
    rows, pivcols = rref(m)
    pivset = set(pivcols)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, p in zip(rows, pivcols):
            c = row.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def solve_particular(m: SparseMatrix, b: Sequence) -> list[Fraction] | None:
    """Some ``x`` with ``m @ x == b``, or ``None`` when the system is inconsistent.

    Free variables are set to zero, so the answer depends only on the input
    and the fixed pivot order.
    """
    if len(b) != m.rows:
        raise ValueError("right-hand side has wrong length")
    rows = m.row_dicts()
    aug = m.cols
    for i, v in enumerate(b):
        if v:
            rows[i][aug] = Fraction(v)
    red = _RowReducer(rows)
    piv = red.reduce(range(m.cols), full=True)
    pivrows = {r for _, r in piv}
    for i, row in red.rows.items():
        if i not in pivrows and row.get(aug):
            return None
    x = [Fraction(0)] * m.cols
    for c, r in piv:
        x[c] = red.rows[r].get(aug, Fraction(0))
    return x


def is_in_span(vectors: Sequence[Sequence], target: Sequence) -> bool:
    """True when ``target`` lies in the span of ``vectors`` (dense, same length)."""
    n = len(target)
    m = SparseMatrix(n, len(vectors), {(i, j): v[i] for j, v in enumerate(vectors) for i in range(n) if v[i]})
    return solve_particular(m, target) is not None


# --------------------------------------------------------------------------
# Smith normal form over Z


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors ``d1 | d2 | ...`` (nonzero ones only) and optional transforms.

    When transforms were requested, ``left @ original @ right`` is the
    ``rows x cols`` matrix with ``diagonal`` down its main diagonal.
    """

    diagonal: tuple[int, ...]
    rows: int
    cols: int
    left: SparseMatrix | None = None
    right: SparseMatrix | None = None

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)

    def diagonal_matrix(self) -> SparseMatrix:
        return SparseMatrix(self.rows, self.cols, {(i, i): d for i, d in enumerate(self.diagonal)}, "Z")


def _integer_rows(m: SparseMatrix) -> list[dict[int, int]]:
    out = []
    for row in m.row_dicts():
        r = {}
        for j, v in row.items():
            q = Fraction(v)
            if q.denominator != 1:
                raise ValueError("Smith normal form needs integer entries")
            r[j] = int(q)
        out.append(r)
    return out


def _eliminate_units(rows: list[dict[int, int]]) -> tuple[int, list[dict[int, int]]]:
    """Strip off unit pivots with sparse row operations.

    A +-1 entry at (r, c) lets us clear column c by row operations and then
    row r by column operations that touch nothing else, so each such pivot
    contributes one invariant factor 1 and row r, column c disappear.
    """
    live = {i: r for i, r in enumerate(rows) if r}
    colidx: dict[int, set[int]] = {}
    for i, r in live.items():
        for j in r:
            colidx.setdefault(j, set()).add(i)
    units = 0
    progress = True
    while progress:
        progress = False
        for i in sorted(live):
            row = live.get(i)
            if not row:
                continue
            cand = [j for j, v in row.items() if v == 1 or v == -1]
            if not cand:
                continue
            c = min(cand, key=lambda j: (len(colidx[j]), j))
            u = row[c]
            for k in sorted(colidx[c]):
                if k == i:
                    continue
                target = live[k]
                f = target[c] * u
                for j, v in row.items():
                    new = target.get(j, 0) - f * v
                    if new:
                        if j not in target:
                            colidx.setdefault(j, set()).add(k)
                        target[j] = new
                    else:
                        target.pop(j, None)
                        colidx[j].discard(k)
                if not target:
                    del live[k]
            for j in row:
                colidx[j].discard(i)
            del live[i]
            units += 1
            progress = True
    return units, [r for _, r in sorted(live.items()) if r]


def _dense_snf(a: list[list[int]], left=None, right=None) -> list[int]:
    """In-place Smith reduction of a dense integer matrix; returns the diagonal.

    ``left``/``right`` (dense, square) are updated alongside when given.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if left is not None:
            left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if right is not None:
            for row in right:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        ra, rs = a[dst], a[src]
        for k in range(n):
            if rs[k]:
                ra[k] += f * rs[k]
        if left is not None:
            la, ls = left[dst], left[src]
            for k in range(len(la)):
                if ls[k]:
                    la[k] += f * ls[k]

    def add_col(dst, src, f):  # col_dst += f * col_src
        for row in a:
            if row[src]:
                row[dst] += f * row[src]
        if right is not None:
            for row in right:
                if row[src]:
                    row[dst] += f * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if left is not None:
            left[i] = [-x for x in left[i]]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    add_row(i, t, -q)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    add_col(j, t, -q)
                    if a[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover in row/column t to the pivot
                best = (abs(p), t, t)
                for i in range(t + 1, m):
                    if a[i][t] and abs(a[i][t]) < best[0]:
                        best = (abs(a[i][t]), i, t)
                for j in range(t + 1, n):
                    if a[t][j] and abs(a[t][j]) < best[0]:
                        best = (abs(a[t][j]), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            negate_row(t)
        diag.append(a[t][t])
        t += 1
    return diag


def smith_normal_form(m: SparseMatrix, transforms: bool = False) -> SmithForm:
    """Smith normal form of an integer matrix.

    Without ``transforms`` a sparse pass first removes unit pivots, which is
    what keeps bar-complex matrices with thousands of columns tractable.
    """
    rows = _integer_rows(m)
    if not transforms:
        units, rest = _eliminate_units(rows)
        diag = [1] * units
        if rest:
            cols = sorted({j for r in rest for j in r})
            pos = {c: k for k, c in enumerate(cols)}
            dense = [[0] * len(cols) for _ in rest]
            for i, r in enumerate(rest):
                for j, v in r.items():
                    dense[i][pos[j]] = v
            diag.extend(_dense_snf(dense))
        return SmithForm(tuple(diag), m.rows, m.cols)
    dense = [[r.get(j, 0) for j in range(m.cols)] for r in rows]
    left = [[int(i == j) for j in range(m.rows)] for i in range(m.rows)]
    right = [[int(i == j) for j in range(m.cols)] for i in range(m.cols)]
    diag = _dense_snf(dense, left, right)
    return SmithForm(
        tuple(diag),
        m.rows,
        m.cols,
        SparseMatrix.from_dense(left, "Z", cols=m.rows),
        SparseMatrix.from_dense(right, "Z", cols=m.cols),
    )


def elementary_gcd(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
