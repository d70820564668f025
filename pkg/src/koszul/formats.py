"""JSON readers and writers.

Scalars are written as ``"p/q"`` strings (integers as ``"n"``) and read
from strings or JSON integers; JSON floats are rejected.  Every writer is
the inverse of the matching reader, so ``load(dump(x)) == x``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping

from .dg import Complex, DgAlgebra, DgCoalgebra, GradedModule
from .errors import ParseError
from .hopf import AlgebraMap, QuadraticData, SphereModel
from .lie import GradedLieAlgebra
from .linalg import check_ring, format_scalar
from .simplicial import CollapsePair, GroupTable, SimplicialComplex


def parse_scalar(value: Any) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"scalar {value!r} must be an integer or a 'p/q' string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad scalar {value!r}") from None
    raise ParseError(f"bad scalar {value!r}")


def parse_t_values(text: str) -> list[Fraction]:
    """Comma-separated exact scalars, e.g. ``0,1/4,1/2``."""
    return [parse_scalar(part) for part in text.split(",") if part.strip()]


def _element_in(obj: Mapping) -> dict:
    if not isinstance(obj, Mapping):
        raise ParseError(f"expected an element object, got {obj!r}")
    return {str(k): parse_scalar(v) for k, v in obj.items() if parse_scalar(v)}


def _element_out(e: Mapping) -> dict:
    return {k: format_scalar(v) for k, v in sorted(e.items())}


def _need(obj: Mapping, key: str):
    if not isinstance(obj, Mapping) or key not in obj:
        raise ParseError(f"missing key {key!r}")
    return obj[key]


# --------------------------------------------------------------------------
# simplicial and groups


def simplicial_from_json(obj: Mapping) -> SimplicialComplex:
    try:
        return SimplicialComplex(_need(obj, "vertices"), _need(obj, "facets"))
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None


def simplicial_to_json(x: SimplicialComplex) -> dict:
    return {"vertices": list(x.vertices), "facets": [list(f) for f in x.facets]}


def collapse_pair_from_json(total: Mapping, sub: Mapping) -> CollapsePair:
    return CollapsePair(simplicial_from_json(total), simplicial_from_json(sub))


def group_from_json(obj: Mapping) -> GroupTable:
    table = _need(obj, "table")
    order = obj.get("order", len(table))
    if not isinstance(table, list) or len(table) != order:
        raise ParseError("group table must have 'order' rows")
    try:
        return GroupTable(tuple(tuple(row) for row in table), int(obj.get("identity", 0)), obj.get("labels"))
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None


def group_to_json(g: GroupTable) -> dict:
    return {"order": g.order, "table": [list(r) for r in g.table], "identity": g.identity,
            "labels": list(g.labels)}


# --------------------------------------------------------------------------
# complexes, algebras, coalgebras


def _module_from_json(obj: Mapping) -> GradedModule:
    basis_raw = _need(obj, "basis")
    if not isinstance(basis_raw, Mapping):
        raise ParseError("'basis' must map degrees to name lists")
    try:
        basis = {int(k): tuple(str(n) for n in v) for k, v in basis_raw.items()}
    except (TypeError, ValueError):
        raise ParseError("basis degrees must be integers") from None
    ring = check_ring(obj.get("ring", "Q"))
    top = int(obj.get("top", max(basis) if basis else 0))
    try:
        return GradedModule(basis, top, ring, bool(obj.get("truncated", False)))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _module_to_json(mod: GradedModule) -> dict:
    return {"ring": mod.ring, "top": mod.top, "truncated": mod.truncated,
            "basis": {str(k): list(v) for k, v in mod.basis.items()}}


def _d_from_json(rows, mod: GradedModule) -> dict:
    d: dict = {}
    for row in rows or ():
        if len(row) != 3:
            raise ParseError(f"differential entries are [from, to, scalar], got {row!r}")
        x, y, c = row
        for n in (x, y):
            if n not in mod:
                raise ParseError(f"unknown basis element {n!r} in 'd'")
        d.setdefault(x, {})[y] = d.get(x, {}).get(y, 0) + parse_scalar(c)
    return d


def _d_to_json(d: Mapping) -> list:
    return [[x, y, format_scalar(c)] for x in sorted(d) for y, c in sorted(d[x].items())]


def complex_from_json(obj: Mapping) -> Complex:
    mod = _module_from_json(obj)
    direction = int(obj.get("direction", -1))
    if direction not in (-1, 1):
        raise ParseError("direction must be -1 or 1")
    return Complex(mod, _d_from_json(obj.get("d"), mod), direction)


def complex_to_json(c: Complex) -> dict:
    out = {"kind": "complex", "direction": c.direction}
    out.update(_module_to_json(c.module))
    out["d"] = _d_to_json(c.d)
    return out


def dga_from_json(obj: Mapping) -> DgAlgebra:
    cx = complex_from_json({"direction": 1, **obj})
    mod = cx.module
    unit = obj.get("unit", "1")
    if unit not in mod:
        raise ParseError(f"unit {unit!r} is not a basis element")
    mul: dict = {}
    for row in obj.get("mul", ()):
        if len(row) != 4:
            raise ParseError(f"product entries are [a, b, c, scalar], got {row!r}")
        a, b, c, s = row
        for n in (a, b, c):
            if n not in mod:
                raise ParseError(f"unknown basis element {n!r} in 'mul'")
        mul.setdefault((a, b), {})[c] = mul.get((a, b), {}).get(c, 0) + parse_scalar(s)
    for n in mod.all_names():
        mul.setdefault((unit, n), {n: Fraction(1)})
        mul.setdefault((n, unit), {n: Fraction(1)})
    aug = _element_in(obj.get("augmentation", {unit: "1"}))
    return DgAlgebra(cx, mul, unit, aug)


def dga_to_json(a: DgAlgebra) -> dict:
    out = complex_to_json(a.complex)
    out["kind"] = "dga"
    out["unit"] = a.unit
    out["augmentation"] = _element_out(a.augmentation)
    out["mul"] = [[x, y, z, format_scalar(c)]
                  for (x, y) in sorted(a.mul) for z, c in sorted(a.mul[(x, y)].items())
                  if a.unit not in (x, y)]
    return out


def dgc_from_json(obj: Mapping) -> DgCoalgebra:
    cx = complex_from_json(obj)
    mod = cx.module
    comul: dict = {}
    for row in obj.get("comul", ()):
        if len(row) != 4:
            raise ParseError(f"coproduct entries are [x, left, right, scalar], got {row!r}")
        x, l, r, s = row
        for n in (x, l, r):
            if n not in mod:
                raise ParseError(f"unknown basis element {n!r} in 'comul'")
        comul.setdefault(x, {})[(l, r)] = comul.get(x, {}).get((l, r), 0) + parse_scalar(s)
    counit = _element_in(_need(obj, "counit"))
    coaug = obj.get("coaugmentation")
    if coaug is not None and coaug not in mod:
        raise ParseError(f"coaugmentation {coaug!r} is not a basis element")
    return DgCoalgebra(cx, comul, counit, coaug)


def dgc_to_json(c: DgCoalgebra) -> dict:
    out = complex_to_json(c.complex)
    out["kind"] = "dgc"
    out["counit"] = _element_out(c.counit)
    out["coaugmentation"] = c.coaugmentation
    out["comul"] = [[x, l, r, format_scalar(v)]
                    for x in sorted(c.comul) for (l, r), v in sorted(c.comul[x].items())]
    return out


# --------------------------------------------------------------------------
# Lie algebras


def lie_from_json(obj: Mapping) -> GradedLieAlgebra:
    basis_raw = _need(obj, "basis")
    try:
        basis = {int(k): tuple(v) for k, v in basis_raw.items()}
    except (TypeError, ValueError, AttributeError):
        raise ParseError("'basis' must map degrees to name lists") from None
    names = {n for v in basis.values() for n in v}
    bracket: dict = {}
    for row in obj.get("bracket", ()):
        if len(row) != 4:
            raise ParseError(f"bracket entries are [x, y, z, scalar], got {row!r}")
        x, y, z, s = row
        if not {x, y, z} <= names:
            raise ParseError(f"unknown basis element in bracket entry {row!r}")
        bracket.setdefault((x, y), {})[z] = bracket.get((x, y), {}).get(z, 0) + parse_scalar(s)
    diff: dict = {}
    for row in obj.get("d", ()):
        x, y, s = row
        if not {x, y} <= names:
            raise ParseError(f"unknown basis element in d entry {row!r}")
        diff.setdefault(x, {})[y] = diff.get(x, {}).get(y, 0) + parse_scalar(s)
    top = int(obj.get("top", max(basis) if basis else 1))
    try:
        return GradedLieAlgebra(basis, top, bracket, diff, tuple(obj.get("generators", ())))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def lie_to_json(l: GradedLieAlgebra) -> dict:
    return {
        "kind": "lie",
        "top": l.top,
        "generators": list(l.generators),
        "basis": {str(k): list(v) for k, v in l.basis.items()},
        "bracket": [[x, y, z, format_scalar(c)]
                    for (x, y) in sorted(l.bracket) for z, c in sorted(l.bracket[(x, y)].items())],
        "d": _d_to_json(l.differential),
    }


def lie_equal(a: GradedLieAlgebra, b: GradedLieAlgebra) -> bool:
    return (a.basis == b.basis and a.top == b.top and a.bracket == b.bracket
            and a.differential == b.differential)


def generators_from_json(obj: Mapping) -> list[tuple[str, int]]:
    gens = _need(obj, "generators")
    out = []
    for g in gens:
        if not isinstance(g, (list, tuple)) or len(g) != 2 or not isinstance(g[1], int):
            raise ParseError(f"generators are [name, degree] pairs, got {g!r}")
        out.append((str(g[0]), int(g[1])))
    return out


# --------------------------------------------------------------------------
# Hopf invariant jobs


def sphere_from_json(obj: Mapping) -> SphereModel:
    alg = dga_from_json(obj)
    sph = _need(obj, "sphere")
    return SphereModel(alg, int(_need(sph, "n")), _element_in(_need(sph, "fundamental")),
                       str(_need(sph, "cocycle")))


def sphere_to_json(w: SphereModel) -> dict:
    out = dga_to_json(w.algebra)
    out["sphere"] = {"n": w.n, "fundamental": _element_out(w.fundamental), "cocycle": w.fundamental_cocycle}
    return out


def words_from_json(rows) -> dict[tuple, Fraction]:
    """Bar elements as ``[[letters...], scalar]`` pairs."""
    out: dict = {}
    for row in rows or ():
        if not isinstance(row, (list, tuple)) or len(row) != 2 or not isinstance(row[0], list):
            raise ParseError(f"bar terms are [[letters...], scalar], got {row!r}")
        key = tuple(str(x) for x in row[0])
        out[key] = out.get(key, 0) + parse_scalar(row[1])
    return {k: v for k, v in out.items() if v}


def words_to_json(terms: Mapping) -> list:
    return [[list(k), format_scalar(v)] for k, v in sorted(terms.items())]


def map_from_json(obj: Mapping, source: DgAlgebra, target: DgAlgebra) -> AlgebraMap:
    return AlgebraMap(source, target, {str(k): _element_in(v) for k, v in obj.items()})


def map_to_json(f: AlgebraMap) -> dict:
    return {k: _element_out(v) for k, v in sorted(f.images.items())}


def quadratic_from_json(obj: Mapping, algebra: DgAlgebra) -> QuadraticData:
    xs = tuple(_element_in(x) for x in obj.get("xs", ()))
    ys = tuple(_element_in(y) for y in obj.get("ys", ()))
    theta = _element_in(obj.get("theta", {}))
    for e in (*xs, *ys, theta):
        for n in e:
            if n not in algebra.module:
                raise ParseError(f"unknown basis element {n!r} in quadratic data")
    return QuadraticData(algebra, xs, ys, theta)


def quadratic_to_json(q: QuadraticData) -> dict:
    return {"xs": [_element_out(x) for x in q.xs], "ys": [_element_out(y) for y in q.ys],
            "theta": _element_out(q.theta)}


# --------------------------------------------------------------------------


def load(text: str) -> Any:
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def _reject_float(text):
    raise ParseError(f"floating point literal {text} is not allowed; write scalars as 'p/q'")


def dump(obj: Any) -> str:
    return json.dumps(obj, indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def detect_kind(obj: Mapping) -> str:
    """Guess what a JSON object describes, honouring an explicit ``kind``."""
    if not isinstance(obj, Mapping):
        raise ParseError("top-level JSON value must be an object")
    if "kind" in obj:
        return str(obj["kind"])
    if "facets" in obj:
        return "simplicial"
    if "table" in obj:
        return "group"
    if "bracket" in obj:
        return "lie"
    if "generators" in obj:
        return "generators"
    if "comul" in obj or "counit" in obj:
        return "dgc"
    if "sphere" in obj:
        return "sphere"
    if "mul" in obj or "unit" in obj:
        return "dga"
    if "basis" in obj:
        return "complex"
    if "model" in obj:
        return "hopf"
    raise ParseError("cannot tell what kind of object this JSON describes")
