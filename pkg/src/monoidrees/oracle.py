"""Brute-force certification of generator sets, one bidegree at a time.

Everything here is computed from the definition of the kernel (substitute
X -> u and take a null space) and from plain spans of monomial multiples; no
step reuses the descent construction it is meant to check.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field as dc_field

from .errors import FieldMismatch, ResourceLimit
from .exactla import kernel_of_rows, rank_of_rows
from .ring import GF, Bidegree, MultiPoly, count_monomials, monomials_of_bidegree, monomials_of_degree
from .syzygy import KernelSlice, vector_to_poly

DEFAULT_PRIME = 32003
DEFAULT_CAP = 20000


def oracle_field(field=None):
    return GF(DEFAULT_PRIME) if field is None else field


def _polys_of(gens):
    if hasattr(gens, "generators"):
        return [g.poly for g in gens.generators]
    return [g.poly if hasattr(g, "poly") else g for g in gens]


def _to_field(polys, field):
    return [f.change_field(field) if f.field != field else f for f in polys]


def slice_size(n, i, j):
    return count_monomials(n, i) * count_monomials(n + 1, j)


def _check_cap(count, cap, what):
    if count > cap:
        raise ResourceLimit(f"{what}: {count} monomials exceed the cap of {cap}")


# ---------------------------------------------------------------------------
# K_{i,j} from the definition
# ---------------------------------------------------------------------------


def _substitution_matrix(p, i, j):
    """Matrix of P(t, X) -> P(t, u(t)) on bidegree (i, j), rows = t-monomials of degree i + d j."""
    n, d = p.n, p.d
    columns = monomials_of_bidegree(n, i, j)
    targets = monomials_of_degree(n, i + d * j)
    tindex = {m: r for r, m in enumerate(targets)}
    powers = {(0,) * (n + 1): {(0,) * n: 1}}
    red = p.field.reduce
    ut = [{m[:n]: c for m, c in f.items()} for f in p.u]

    def upow(b):
        # u^b as a dict over t-monomials, built one factor at a time
        if b not in powers:
            k = next(k for k, e in enumerate(b) if e)
            rest = upow(b[:k] + (b[k] - 1,) + b[k + 1 :])
            out = {}
            for m1, c1 in rest.items():
                for m2, c2 in ut[k].items():
                    m = tuple(x + y for x, y in zip(m1, m2))
                    out[m] = out.get(m, 0) + c1 * c2
            powers[b] = {m: red(c) for m, c in out.items() if red(c)}
        return powers[b]

    mat = [[0] * len(columns) for _ in targets]
    for c, mono in enumerate(columns):
        a, b = mono[:n], mono[n:]
        for m, coef in upow(b).items():
            mat[tindex[tuple(x + y for x, y in zip(a, m))]][c] = coef
    return mat, columns


def kernel_slice(p, i, j, field=None, cap=DEFAULT_CAP):
    """Basis of K_{i,j}, computed over ``field`` (default: the field of p)."""
    if i < 0 or j < 0:
        raise ValueError("negative bidegree")
    if field is not None and field != p.field:
        p = p.change_field(field)
    _check_cap(slice_size(p.n, i, j), cap, f"slice ({i},{j})")
    mat, columns = _substitution_matrix(p, i, j)
    basis = kernel_of_rows(mat, len(columns), p.field)
    polys = tuple(vector_to_poly(v, columns, p.n, p.field).normalized() for v in basis)
    return KernelSlice(Bidegree(i, j), polys)


def kernel_dim(p, i, j, field=None, cap=DEFAULT_CAP):
    if field is not None and field != p.field:
        p = p.change_field(field)
    _check_cap(slice_size(p.n, i, j), cap, f"slice ({i},{j})")
    mat, columns = _substitution_matrix(p, i, j)
    return len(columns) - rank_of_rows(mat, len(columns), p.field)


# ---------------------------------------------------------------------------
# ideal slices
# ---------------------------------------------------------------------------


def _ideal_rows(polys, i, j, n, cap):
    columns = monomials_of_bidegree(n, i, j)
    _check_cap(len(columns), cap, f"ideal slice ({i},{j})")
    index = {m: c for c, m in enumerate(columns)}
    rows = []
    target = Bidegree(i, j)
    for g in polys:
        for bd in g.bidegrees():
            if not bd <= target:
                continue
            shifts = monomials_of_bidegree(n, *(target - bd))
            if len(rows) + len(shifts) > 4 * cap:
                raise ResourceLimit(f"ideal slice ({i},{j}): too many products")
            piece = {m: c for m, c in g.items() if Bidegree(sum(m[:n]), sum(m[n:])) == bd}
            for s in shifts:
                row = [0] * len(columns)
                for m, c in piece.items():
                    row[index[tuple(x + y for x, y in zip(m, s))]] = c
                rows.append(row)
    return rows, columns


def ideal_slice_dim(gens, i, j, field=None, cap=DEFAULT_CAP):
    """dim of the bidegree-(i,j) part of the ideal generated by ``gens``."""
    polys = [g for g in _polys_of(gens) if g]
    if not polys:
        return 0
    if field is not None:
        polys = _to_field(polys, field)
    fld = polys[0].field
    if any(g.field != fld for g in polys):
        raise FieldMismatch("generators over different fields")
    rows, columns = _ideal_rows(polys, i, j, polys[0].n, cap)
    return rank_of_rows(rows, len(columns), fld)


def ideal_contains(gens, f, field=None, cap=DEFAULT_CAP):
    """Membership of a bihomogeneous f, by comparing ranks of ideal slices."""
    if not f:
        return True
    polys = [g for g in _polys_of(gens) if g]
    if field is not None:
        polys = _to_field(polys, field)
        f = f.change_field(field)
    i, j = f.bidegree
    rows, columns = _ideal_rows(polys, i, j, f.n, cap)
    index = {m: c for c, m in enumerate(columns)}
    frow = [0] * len(columns)
    for m, c in f.items():
        frow[index[m]] = c
    return rank_of_rows(rows + [frow], len(columns), f.field) == rank_of_rows(rows, len(columns), f.field)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass
class SliceRecord:
    i: int
    j: int
    dim_kernel: int
    dim_ideal: int

    @property
    def equal(self):
        return self.dim_kernel == self.dim_ideal


@dataclass
class MinimalityRecord:
    label: str
    bidegree: tuple
    dim_with: int
    dim_without: int

    @property
    def drop(self):
        return self.dim_with - self.dim_without


@dataclass
class VerificationReport:
    bound: int | None
    field: str
    slices: list = dc_field(default_factory=list)
    minimality: list = dc_field(default_factory=list)
    note: str = ""

    @property
    def failures(self):
        out = [f"({r.i},{r.j}): dim K = {r.dim_kernel}, dim ideal = {r.dim_ideal}" for r in self.slices if not r.equal]
        out += [f"{r.label} at {r.bidegree} is redundant" for r in self.minimality if r.drop < 1]
        return out

    @property
    def certified(self):
        return not self.failures

    @property
    def verdict(self):
        return "Certified" if self.certified else "Failed"

    def first_failure(self):
        for r in self.slices:
            if not r.equal:
                return (r.i, r.j)
        return None

    def merge(self, other):
        return VerificationReport(
            self.bound if self.bound is not None else other.bound,
            self.field,
            self.slices + other.slices,
            self.minimality + other.minimality,
            "; ".join(x for x in (self.note, other.note) if x),
        )

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "bound": self.bound,
            "field": self.field,
            "note": self.note,
            "slices": [dict(asdict(r), equal=r.equal) for r in self.slices],
            "minimality": [dict(asdict(r), bidegree=list(r.bidegree), drop=r.drop) for r in self.minimality],
            "failures": self.failures,
        }

    def lines(self):
        out = []
        for r in self.slices:
            mark = "ok" if r.equal else "FAIL"
            out.append(f"K_({r.i},{r.j}) dim {r.dim_kernel} ideal {r.dim_ideal} {mark}")
        for r in self.minimality:
            mark = "ok" if r.drop >= 1 else "REDUNDANT"
            out.append(f"{r.label} {r.bidegree} drop {r.drop} {mark}")
        out.append(f"verdict: {self.verdict}")
        return out


def _labels(gens):
    if hasattr(gens, "generators"):
        return [g.label for g in gens.generators]
    return [getattr(g, "label", f"g{k + 1}") for k, g in enumerate(gens)]


def verify_generation(gens, p, bound=None, field=None, cap=DEFAULT_CAP):
    """Compare dim K_{i,j} with the ideal slice for all i + j <= bound."""
    field = oracle_field(field)
    bound = p.d + 3 if bound is None else bound
    polys = _to_field(_polys_of(gens), field)
    pf = p.change_field(field) if p.field != field else p
    report = VerificationReport(
        bound,
        str(field),
        note=f"partial certificate: generation checked for all bidegrees with i + j <= {bound}",
    )
    for total in range(bound + 1):
        for i in range(total, -1, -1):
            j = total - i
            report.slices.append(
                SliceRecord(i, j, kernel_dim(pf, i, j, cap=cap), ideal_slice_dim(polys, i, j, cap=cap))
            )
    return report


def verify_minimality(gens, field=None, cap=DEFAULT_CAP):
    """Each generator must raise the ideal slice dimension at its own bidegree."""
    field = oracle_field(field)
    polys = _to_field(_polys_of(gens), field)
    labels = _labels(gens)
    report = VerificationReport(None, str(field), note="minimality by dimension drop")
    for k, g in enumerate(polys):
        i, j = g.bidegree
        others = polys[:k] + polys[k + 1 :]
        report.minimality.append(
            MinimalityRecord(
                labels[k],
                (i, j),
                ideal_slice_dim(polys, i, j, cap=cap),
                ideal_slice_dim(others, i, j, cap=cap),
            )
        )
    return report


def verify_high_degree_containment(p, mb, bound_j, i_values=None, field=None, cap=DEFAULT_CAP):
    """For i >= d - 1, K_{i,j} equals the slice of the ideal of the mu-basis."""
    field = oracle_field(field)
    pf = p.change_field(field) if p.field != field else p
    elems = mb.elements if hasattr(mb, "elements") else mb
    polys = _to_field(list(elems), field)
    if i_values is None:
        i_values = range(p.d - 1, p.d + 1)
    report = VerificationReport(
        bound_j, str(field), note=f"containment in the mu-basis ideal for t-degrees {list(i_values)}, j <= {bound_j}"
    )
    for i in i_values:
        for j in range(bound_j + 1):
            report.slices.append(
                SliceRecord(i, j, kernel_dim(pf, i, j, cap=cap), ideal_slice_dim(polys, i, j, cap=cap))
            )
    return report


# ---------------------------------------------------------------------------
# structural checks used by the property tests
# ---------------------------------------------------------------------------


def random_member(p, i, j, rng=None, field=None):
    """A random element of K_{i,j} (zero if the slice is empty)."""
    rng = rng if rng is not None else random.Random(0)
    sl = kernel_slice(p, i, j, field)
    fld = field if field is not None else p.field
    out = MultiPoly.zero(p.n, fld)
    for b in sl.basis:
        out = out + b.scale(fld.random_element(rng))
    return out


def specialization_divisible(F, M, E):
    """F(M, X) is a polynomial multiple of E (checked by exact division)."""
    specialized = F.substitute(list(M), None)
    try:
        specialized.exact_div(E)
    except ValueError:
        return False
    return True


def division_identity_holds(F, q1, M, field=None):
    """M_2^i F(t, X) - t_2^i F(M, X) lies in <q1>, for the degree-1 moving line q1 of a curve."""
    i, _ = F.bidegree
    t2 = MultiPoly.t(2, F.n, F.field)
    G = M[1] ** i * F - t2**i * F.substitute(list(M), None)
    return ideal_contains([q1], G, field)
