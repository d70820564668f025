"""Command-line front end.

Every command writes a plain ``key = value`` report.  Exit codes: 0 ok,
1 parse error, 2 verification failure, 3 precondition violation,
4 internal error.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from pathlib import Path

from . import formats
from .barcobar import bar, cobar, group_bar, harrison_complex
from .dg import (
    CONVENTION,
    Complex,
    DgAlgebra,
    DgCoalgebra,
    GradedModule,
    HomologyReport,
    VerificationReport,
    _fail,
    homology,
    verify_complex,
    verify_dga,
    verify_dgc,
)
from .errors import KoszulError, ParseError, PreconditionError, VerificationError
from .hopf import BarCocycle, hopf_invariant, identity_map, integrate, parametrized_formula, push_terms
from .lie import chevalley_eilenberg, free_lie, lie_quotient
from .simplicial import chains_with_coproduct, classifying_complex, collapse_quotient

COMMANDS = ("homology", "cobar", "bar", "group-homology", "harrison", "ce", "free-lie", "hopf", "verify")


class Job:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.command = args.command
        if args.window < 1:
            raise ParseError("--window must be at least 1")
        self.window = args.window
        self.raw: list[bytes] = []
        self.lines: list[str] = []

    def read(self, path: str):
        try:
            data = Path(path).read_bytes()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from None
        self.raw.append(data)
        try:
            return formats.load(data.decode("utf-8"))
        except UnicodeDecodeError:
            raise ParseError(f"{path} is not UTF-8") from None

    def ring(self, default: str) -> str:
        return self.args.ring or default

    def header(self, ring: str) -> list[str]:
        digest = hashlib.sha256(b"\0".join(self.raw)).hexdigest()
        return [
            f"command = {self.command}",
            f"convention = {CONVENTION}",
            f"input-sha256 = {digest}",
            f"window = {self.window}",
            f"ring = {ring}",
        ]

    def degrees(self, c: Complex) -> range:
        return range(0, min(c.module.exact_top, self.window - 1) + 1)


def _homology_lines(report: HomologyReport, symbol: str = "H") -> list[str]:
    return report.lines(symbol)


def _as_ring(obj, ring: str):
    """Re-tag a complex with another coefficient ring."""
    if isinstance(obj, Complex) and obj.ring != ring:
        mod = obj.module
        return Complex(GradedModule(mod.basis, mod.top, ring, mod.truncated), obj.d, obj.direction)
    return obj


def _load_complex(job: Job, obj) -> tuple[Complex, str]:
    kind = formats.detect_kind(obj)
    if kind == "simplicial":
        x = formats.simplicial_from_json(obj)
        ring = job.ring("Z")
        if job.args.sub:
            pair = formats.collapse_pair_from_json(obj, job.read(job.args.sub))
            return collapse_quotient(pair, job.window, ring).complex, ring
        return x.chain_complex(job.window, ring), ring
    if kind == "group":
        ring = job.ring("Z")
        return classifying_complex(formats.group_from_json(obj), job.window, ring=ring), ring
    if kind in ("dga", "sphere"):
        a = formats.dga_from_json(obj)
        verify_dga(a).raise_for_failure()
        c = a.complex
    elif kind == "dgc":
        cg = formats.dgc_from_json(obj)
        verify_dgc(cg).raise_for_failure()
        c = cg.complex
    elif kind == "complex":
        c = formats.complex_from_json(obj)
        verify_complex(c).raise_for_failure()
    else:
        raise PreconditionError(f"homology does not accept {kind} input")
    ring = job.ring(c.ring)
    return _as_ring(c, ring), ring


def _load_coalgebra(job: Job, obj) -> DgCoalgebra:
    kind = formats.detect_kind(obj)
    if kind == "simplicial":
        if not job.args.sub:
            x = formats.simplicial_from_json(obj)
            return chains_with_coproduct(x, None, "Q")
        pair = formats.collapse_pair_from_json(obj, job.read(job.args.sub))
        return collapse_quotient(pair, None, "Q")
    if kind != "dgc":
        raise PreconditionError(f"expected a coalgebra, got {kind} input")
    return formats.dgc_from_json(obj)


def _load_algebra(obj) -> DgAlgebra:
    kind = formats.detect_kind(obj)
    if kind not in ("dga", "sphere"):
        raise PreconditionError(f"expected an algebra, got {kind} input")
    return formats.dga_from_json(obj)


def _load_lie(job: Job, obj):
    kind = formats.detect_kind(obj)
    if kind == "lie":
        return formats.lie_from_json(obj)
    if kind == "generators":
        gens = formats.generators_from_json(obj)
        l = free_lie(gens, max(job.window - 1, 1), obj.get("differential"))
        rels = obj.get("relations", [])
        if rels:
            l = lie_quotient(l, rels)
        return l
    raise PreconditionError(f"expected a Lie algebra or generator list, got {kind} input")


def cmd_homology(job: Job) -> None:
    c, ring = _load_complex(job, job.read(job.args.input))
    rep = homology(c, job.degrees(c))
    job.lines = job.header(ring) + _homology_lines(rep)


def cmd_cobar(job: Job) -> None:
    cg = _load_coalgebra(job, job.read(job.args.input))
    ob = cobar(cg, job.window)
    rep = homology(ob.complex, job.degrees(ob.complex))
    job.lines = job.header("Q") + [f"one-reduced = {'yes' if cg.one_reduced else 'no'}"] + _homology_lines(rep)


def cmd_bar(job: Job) -> None:
    a = _load_algebra(job.read(job.args.input))
    b = bar(a, job.window, max_weight=job.args.max_weight)
    rep = homology(b.complex, job.degrees(b.complex))
    lines = job.header(a.ring)
    if job.args.max_weight is not None:
        lines.append(f"max-weight = {job.args.max_weight}")
    job.lines = lines + _homology_lines(rep)


def cmd_group(job: Job) -> None:
    obj = job.read(job.args.input)
    if formats.detect_kind(obj) != "group":
        raise PreconditionError("group-homology needs a group table")
    g = formats.group_from_json(obj)
    ring = job.ring("Z")
    c = classifying_complex(g, job.window, ring=ring)
    rep = homology(c, job.degrees(c))
    gb = group_bar(g, job.window, ring)
    same = all(gb.complex.matrix(n) == c.matrix(n) for n in range(1, job.window + 1))
    if not same:
        raise VerificationError("bar construction of the group ring differs from the classifying complex")
    job.lines = job.header(ring) + [f"order = {g.order}", "bar-equals-classifying = yes"] + _homology_lines(rep)


def cmd_harrison(job: Job) -> None:
    a = _load_algebra(job.read(job.args.input))
    h = harrison_complex(a, job.window, max_weight=job.args.max_weight)
    rep = homology(h, job.degrees(h))
    job.lines = job.header(a.ring) + _homology_lines(rep, "Harr")


def cmd_ce(job: Job) -> None:
    l = _load_lie(job, job.read(job.args.input))
    cx = chevalley_eilenberg(l, job.window)
    rep = homology(cx, job.degrees(cx))
    dims = [f"dim L_{n} = {l.dim(n)}" for n in range(1, min(l.top, job.window - 1) + 1)]
    job.lines = job.header("Q") + dims + _homology_lines(rep)


def cmd_free_lie(job: Job) -> None:
    obj = job.read(job.args.input)
    if formats.detect_kind(obj) != "generators":
        raise PreconditionError("free-lie needs a generator list")
    gens = formats.generators_from_json(obj)
    l = free_lie(gens, job.window, obj.get("differential"))
    if obj.get("relations"):
        l = lie_quotient(l, obj["relations"])
    rep = l.verify()
    if not rep:
        raise VerificationError(rep.describe(), rep)
    lines = job.header("Q")
    for n in range(1, job.window + 1):
        lines.append(f"dim L_{n} = {l.dim(n)}")
    for n in range(1, job.window + 1):
        if l.dim(n):
            lines.append(f"basis L_{n} = {' '.join(l.names(n))}")
    job.lines = lines
    if job.args.emit:
        Path(job.args.emit).write_text(formats.dump(formats.lie_to_json(l)), encoding="utf-8")


def cmd_hopf(job: Job) -> None:
    obj = job.read(job.args.input)
    model = formats.sphere_from_json(formats._need(obj, "model"))
    model.check()
    if "source" in obj:
        source = formats.dga_from_json(obj["source"])
        f = formats.map_from_json(formats._need(obj, "map"), source, model.algebra)
    else:
        source = model.algebra
        f = identity_map(source)
    lines = job.header("Q") + [f"sphere-dimension = {model.n}"]
    base = len(lines)
    terms = formats.words_from_json(obj.get("cocycle"))
    if terms:
        weight = max(len(k) for k in terms)
        b = bar(source, model.n, max_weight=weight + 1)
        gamma = BarCocycle.from_words(b, terms)
        lines.append(f"cocycle-weight = {gamma.weight}")
        lines.append(f"invariant = {formats.format_scalar(hopf_invariant(gamma, f, model))}")
    if "quadratic" in obj:
        q = formats.quadratic_from_json(obj["quadratic"], source)
        ts = formats.parse_t_values(job.args.t_values) if job.args.t_values else [0]
        gamma_value = integrate(model, push_terms(q.cocycle_words(), f))
        lines.append(f"quadratic-invariant = {formats.format_scalar(gamma_value)}")
        for t in ts:
            v = parametrized_formula(model, q, [t] * len(q.xs), f)
            lines.append(f"formula(t={formats.format_scalar(t)}) = {formats.format_scalar(v)}")
    if len(lines) == base:
        raise PreconditionError("hopf job needs a 'cocycle' or 'quadratic' entry")
    job.lines = lines


def cmd_verify(job: Job) -> None:
    obj = job.read(job.args.input)
    kind = formats.detect_kind(obj)
    if kind in ("dga", "sphere"):
        rep = verify_dga(formats.dga_from_json(obj))
    elif kind == "dgc":
        rep = verify_dgc(formats.dgc_from_json(obj))
    elif kind == "complex":
        rep = verify_complex(formats.complex_from_json(obj))
    elif kind == "lie":
        rep = formats.lie_from_json(obj).verify()
    elif kind == "group":
        g = formats.group_from_json(obj)
        try:
            g.check()
            rep = VerificationReport(True)
        except VerificationError as exc:
            rep = _fail("group", (), str(exc))
    elif kind == "simplicial":
        cg = chains_with_coproduct(formats.simplicial_from_json(obj))
        rep = verify_dgc(cg)
    else:
        raise PreconditionError(f"cannot verify {kind} input")
    lines = job.header(job.ring("Q")) + [f"kind = {kind}", f"ok = {'yes' if rep.ok else 'no'}"]
    if rep.one_reduced is not None:
        lines.append(f"one-reduced = {'yes' if rep.one_reduced else 'no'}")
    if not rep.ok:
        lines.append(f"check = {rep.check}")
        lines.append(f"where = {', '.join(map(str, rep.where))}")
        if rep.detail:
            lines.append(f"detail = {rep.detail}")
    job.lines = lines
    if not rep.ok:
        raise VerificationError(rep.describe(), rep)


HANDLERS = {
    "homology": cmd_homology,
    "cobar": cmd_cobar,
    "bar": cmd_bar,
    "group-homology": cmd_group,
    "harrison": cmd_harrison,
    "ce": cmd_ce,
    "free-lie": cmd_free_lie,
    "hopf": cmd_hopf,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="koszul", description="Exact bar/cobar, group homology, CE, Harrison and Hopf invariants.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", required=True, help="JSON input file")
    p.add_argument("--window", type=int, default=8, help="degree window N (default 8)")
    p.add_argument("--ring", choices=("Q", "Z"), help="coefficient ring")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--sub", help="subcomplex JSON to collapse (simplicial input)")
    p.add_argument("--t-values", help="comma-separated t values for the parametrized formula")
    p.add_argument("--max-weight", type=int, help="bound on bar word weight")
    p.add_argument("--emit", help="free-lie: also write the Lie algebra as JSON here")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    job = None
    try:
        job = Job(args)
        HANDLERS[args.command](job)
        status = 0
        message = None
    except KoszulError as exc:
        status = exc.exit_code
        message = f"error: {exc}"
    except RecursionError:
        status = 4
        message = "error: recursion limit reached"
    except Exception as exc:  # noqa: BLE001 - last-resort mapping to exit 4
        status = 4
        message = f"internal error: {type(exc).__name__}: {exc}"
    lines = list(job.lines) if job else []
    if status and job and not lines:
        lines = job.header(args.ring or "Q")
    if status:
        lines.append(f"status = {status}")
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if message:
        sys.stderr.write(message + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
