"""Command-line front end.

Problem files are plain ``key = value`` text, one entry per line, ``#``
starting a comment::

    case = surface
    field = qq
    asserted_lci = true
    p1 = t1*X1 + t2*X2 + t3*X3
    p2 = -t1*X2 + 2*t2*X3 - t3*X1
    p3 = t1*t3*X1 + t1*t2*X2 + t2*t3*X3 + t2^2*X4

Curves give ``u1 u2 u3``; monoid hypersurfaces give ``n``, ``f_top`` and
``f_deg``; surfaces give either ``u1 .. u4`` or the moving planes
``p1 p2 p3``.  Results are written to standard output as JSON with sorted
keys, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field

from . import oracle
from .errors import Degenerate, DegenerateSurface, ParseError, PreconditionError, ReesError
from .reesgen import (
    Generator,
    curve_generators,
    generators,
    hypersurface_generators,
    implicit_equation,
    monoid_parametrization,
    sample_inverse,
)
from .ring import QQ, Bidegree, MultiPoly, parse_field
from .syzygy import CASES, CURVE, MONOID, SURFACE, MuBasis, Parametrization, u_from_mu_basis

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DEGENERATE = 2

POLY_KEYS = {f"u{k}" for k in range(1, 11)} | {"p1", "p2", "p3", "f_top", "f_deg"}
KNOWN_KEYS = POLY_KEYS | {"case", "field", "n", "asserted_lci"}


@dataclass
class ProblemFile:
    case: str
    field: object = QQ
    n: int | None = None
    u: tuple = ()
    f_top: MultiPoly | None = None
    f_deg: MultiPoly | None = None
    mu_basis: MuBasis | None = None
    asserted_lci: bool = False
    raw: dict = dc_field(default_factory=dict)

    def parametrization(self):
        if self.case == MONOID and self.f_top is not None:
            return monoid_parametrization(self.f_top, self.f_deg)
        if self.mu_basis is not None:
            u = tuple(u_from_mu_basis(self.mu_basis.elements))
        else:
            u = self.u
        return Parametrization(u, self.case, self.asserted_lci)

    def echo(self):
        return {k: self.raw[k] for k in sorted(self.raw)}


def _parse_bool(text, line, col):
    low = text.lower()
    if low in ("true", "yes", "1"):
        return True
    if low in ("false", "no", "0"):
        return False
    raise ParseError(f"expected true or false, found {text!r}", line, col)


def parse_problem(text, field_override=None):
    """Parse a problem file into a ProblemFile; errors carry line and column."""
    entries = {}
    where = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        if "=" not in body:
            col = len(body) - len(body.lstrip()) + 1
            raise ParseError("expected 'key = value'", lineno, col)
        key_part, value_part = body.split("=", 1)
        key = key_part.strip()
        if key not in KNOWN_KEYS:
            raise ParseError(f"unknown key {key!r}", lineno, len(key_part) - len(key_part.lstrip()) + 1)
        if key in entries:
            raise ParseError(f"duplicate key {key!r}", lineno, 1)
        value = value_part.strip()
        vcol = len(key_part) + 2 + (len(value_part) - len(value_part.lstrip()))
        entries[key] = value
        where[key] = (lineno, vcol)

    if "case" not in entries:
        raise ParseError("missing key 'case'")
    case = entries["case"]
    if case not in CASES:
        raise ParseError(f"unknown case {case!r}", *where["case"])
    if field_override is not None:
        fld = field_override
    elif "field" in entries:
        try:
            fld = parse_field(entries["field"])
        except (ValueError, ReesError) as exc:
            raise ParseError(str(exc), *where["field"]) from None
    else:
        fld = QQ

    if "n" in entries:
        try:
            n = int(entries["n"])
        except ValueError:
            raise ParseError(f"n must be an integer, found {entries['n']!r}", *where["n"]) from None
    else:
        n = {CURVE: 2, SURFACE: 3}.get(case)
        if n is None:
            raise ParseError("monoid problems need the key 'n'")
    if case == CURVE and n != 2 or case == SURFACE and n != 3:
        raise ParseError(f"case {case} needs n = {2 if case == CURVE else 3}", *where.get("n", (None, None)))
    if not 2 <= n <= 9:
        raise ParseError("n must lie between 2 and 9", *where.get("n", (None, None)))

    def poly(key):
        line, col = where[key]
        try:
            return MultiPoly.parse(entries[key], n, fld)
        except ParseError as exc:
            c = None if exc.column is None else col + exc.column - 1
            raise ParseError(f"{key}: {exc.message}", line, c) from None

    asserted = False
    if "asserted_lci" in entries:
        if case != SURFACE:
            raise ParseError("asserted_lci only applies to surfaces", *where["asserted_lci"])
        asserted = _parse_bool(entries["asserted_lci"], *where["asserted_lci"])

    u_keys = [f"u{k}" for k in range(1, n + 2)]
    given_u = sorted(k for k in entries if k.startswith("u"))
    styles = {
        "u": bool(given_u),
        "mu_basis": any(k in entries for k in ("p1", "p2", "p3")),
        "monoid": any(k in entries for k in ("f_top", "f_deg")),
    }
    chosen = [s for s, present in styles.items() if present]
    if len(chosen) != 1:
        raise ParseError(f"give exactly one input style, found {chosen or 'none'}")
    style = chosen[0]
    prob = ProblemFile(case, fld, n, asserted_lci=asserted, raw=dict(entries))
    if style == "u":
        if set(given_u) != set(u_keys):
            raise ParseError(f"expected keys {', '.join(u_keys)}, found {', '.join(given_u)}")
        prob.u = tuple(poly(k) for k in u_keys)
    elif style == "mu_basis":
        if case != SURFACE:
            raise ParseError("the p1, p2, p3 input style is for surfaces")
        for k in ("p1", "p2", "p3"):
            if k not in entries:
                raise ParseError(f"missing key {k!r}")
        elems = tuple(poly(k) for k in ("p1", "p2", "p3"))
        for k, e in zip(("p1", "p2", "p3"), elems):
            if not e or not e.is_bihomogeneous():
                raise ParseError(f"{k} is not bihomogeneous", *where[k])
        prob.mu_basis = MuBasis(elems, tuple(e.bidegree.t_deg for e in elems))
    else:
        if case != MONOID:
            raise ParseError("f_top and f_deg are for monoid problems")
        for k in ("f_top", "f_deg"):
            if k not in entries:
                raise ParseError(f"missing key {k!r}")
        prob.f_top, prob.f_deg = poly("f_top"), poly("f_deg")
    return prob


# ---------------------------------------------------------------------------
# result documents
# ---------------------------------------------------------------------------


def _scalar(field, c):
    return None if c is None else field.to_str(c)


def _construct(prob):
    if prob.case == MONOID and prob.f_top is not None:
        return hypersurface_generators(prob.f_top, prob.f_deg)
    p = prob.parametrization()
    if prob.case == CURVE:
        return curve_generators(p)
    return generators(p, prob.mu_basis)


def _header(prob, p=None):
    doc = {
        "case": prob.case,
        "field": str(prob.field),
        "input": prob.echo(),
        "n": prob.n,
    }
    if p is not None:
        doc["d"] = p.d
        doc["u"] = [str(f) for f in p.u]
    return doc


def generator_document(prob, gs, samples=10, seed=0):
    field = gs.parametrization.field
    doc = _header(prob, gs.parametrization)
    cert = sample_inverse(gs.parametrization, gs.inverse, samples, seed)
    doc.update(
        status="ok",
        generators=[
            {
                "label": g.label,
                "bidegree": list(g.bidegree),
                "provenance": g.provenance,
                "poly": str(g.poly),
                "to_E": _scalar(field, g.to_E),
            }
            for g in gs.generators
        ],
        implicit_equation=str(gs.E),
        inverse_map=_inverse_document(gs.inverse, cert),
        cross_checks={k: _scalar(field, v) for k, v in gs.cross_checks.items()},
        warnings=list(gs.warnings),
    )
    return doc


def _inverse_document(sub, cert):
    return {
        "M": [str(m) for m in sub.M],
        "rendering": sub.render(),
        "certificate": {
            "field": cert.field,
            "samples": cert.samples,
            "passed": cert.passed,
            "skipped": cert.skipped,
            "seed": cert.seed,
            "failures": [list(t) for t in cert.failures],
            "ok": cert.ok,
        },
    }


def degenerate_document(prob, exc):
    doc = _header(prob)
    doc["status"] = "degenerate"
    doc["message"] = str(exc)
    if isinstance(exc, DegenerateSurface):
        doc["minors"] = {f"M{j + 1}": str(m) for j, m in enumerate(exc.minors)}
        doc["vanishing"] = [f"M{j + 1}" for j, m in enumerate(exc.minors) if m.is_zero()]
        doc["candidate_equation"] = str(exc.candidate)
        doc["candidate_degree"] = exc.candidate.total_degree()
    return doc


def load_result_document(doc):
    """(Parametrization, [Generator]) from a result document (dict or JSON text)."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        fld = parse_field(doc["field"])
        n = int(doc["n"])
        u = tuple(MultiPoly.parse(s, n, fld) for s in doc["u"])
        gens = []
        for k, g in enumerate(doc["generators"]):
            poly = MultiPoly.parse(g["poly"], n, fld)
            gens.append(Generator(poly, poly.bidegree, g.get("provenance", "syzygy"), g.get("label", f"g{k + 1}")))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed result document: {exc}") from None
    return Parametrization(u, doc.get("case")), gens


def emit(doc, out):
    out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_problem(args):
    field = parse_field(args.field) if args.field else None
    return parse_problem(_read(args.path), field)


def cmd_generators(args, out):
    prob = _load_problem(args)
    try:
        gs = _construct(prob)
    except Degenerate as exc:
        emit(degenerate_document(prob, exc), out)
        return EXIT_DEGENERATE
    emit(generator_document(prob, gs, args.samples, args.seed), out)
    return EXIT_OK


def cmd_implicitize(args, out):
    prob = _load_problem(args)
    try:
        if prob.case == MONOID and prob.f_top is not None:
            p = monoid_parametrization(prob.f_top, prob.f_deg)
            E = implicit_equation(p, None, prob.f_top, prob.f_deg)
        else:
            E = implicit_equation(prob.parametrization(), prob.mu_basis)
    except Degenerate as exc:
        emit(degenerate_document(prob, exc), out)
        return EXIT_DEGENERATE
    doc = _header(prob)
    doc.update(status="ok", implicit_equation=str(E), degree=E.total_degree())
    emit(doc, out)
    return EXIT_OK


def cmd_invert(args, out):
    prob = _load_problem(args)
    try:
        gs = _construct(prob)
    except Degenerate as exc:
        emit(degenerate_document(prob, exc), out)
        return EXIT_DEGENERATE
    cert = sample_inverse(gs.parametrization, gs.inverse, args.samples, args.seed)
    doc = _header(prob, gs.parametrization)
    doc.update(status="ok", inverse_map=_inverse_document(gs.inverse, cert))
    emit(doc, out)
    return EXIT_OK if cert.ok else EXIT_ERROR


def cmd_verify(args, out):
    text = _read(args.path)
    ofield = parse_field(args.field) if args.field else oracle.oracle_field()
    if text.lstrip().startswith("{"):
        p, gens = load_result_document(text)
        header = {"source": "result document", "case": p.case_hint, "d": p.d, "n": p.n}
    else:
        prob = parse_problem(text)
        try:
            gs = _construct(prob)
        except Degenerate as exc:
            emit(degenerate_document(prob, exc), out)
            return EXIT_DEGENERATE
        p, gens = gs.parametrization, list(gs.generators)
        header = _header(prob, p)
        header["source"] = "problem file"
    for g in gens:
        if not p.is_member(g.poly):
            raise PreconditionError(f"{g.label} = {g.poly} does not vanish on the parametrization")
    report = oracle.verify_generation(gens, p, args.bound, ofield, args.monomial_cap)
    report = report.merge(oracle.verify_minimality(gens, ofield, args.monomial_cap))
    doc = dict(header)
    doc["status"] = "ok"
    doc["report"] = report.to_dict()
    failure = report.first_failure()
    doc["report"]["first_failure"] = list(failure) if failure else None
    emit(doc, out)
    for line in report.lines()[-1:]:
        print(line, file=sys.stderr)
    return EXIT_OK if report.certified else EXIT_ERROR


COMMANDS = {
    "generators": (cmd_generators, "minimal generators of the Rees kernel"),
    "implicitize": (cmd_implicitize, "the implicit equation only"),
    "invert": (cmd_invert, "the rational inverse with a sampling certificate"),
    "verify": (cmd_verify, "brute-force certification of generation and minimality"),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="monoidrees",
        description="Rees-algebra generators, implicit equations and inverses of monoid-type parametrizations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("path", help="problem file ('-' for standard input); verify also accepts a result document")
        sp.add_argument("--field", help="qq or fp:<p>; for verify, the oracle field (default fp:32003)")
        sp.add_argument("--bound", type=int, default=None, help="verify: maximal i + j (default d + 3)")
        sp.add_argument("--seed", type=int, default=0, help="seed for inverse sampling (default 0)")
        sp.add_argument("--samples", type=int, default=10, help="number of inverse samples (default 10)")
        sp.add_argument(
            "--monomial-cap", type=int, default=oracle.DEFAULT_CAP, help="maximal monomials per oracle slice"
        )
    return parser


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        return handler(args, out)
    except ParseError as exc:
        print(f"{args.path}: parse error: {exc}", file=sys.stderr)
    except (ReesError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
