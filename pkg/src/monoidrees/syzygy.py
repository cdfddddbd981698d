"""Moving hyperplanes: the (i, 1) slices of the Rees kernel, mu-bases, case detection."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field

from .errors import (
    DegenerateInput,
    InternalError,
    MuNotOne,
    NotSaturatedSuspect,
    PreconditionError,
    ShapeMismatch,
)
from .exactla import _rref_rows, kernel_of_rows, rank_of_rows, reduce_against
from .ring import (
    QQ,
    Bidegree,
    MultiPoly,
    is_coprime_probabilistic,
    monomials_of_bidegree,
    monomials_of_degree,
)

CURVE = "curve"
MONOID = "monoid"
SURFACE = "surface"
CASES = (CURVE, MONOID, SURFACE)


@dataclass(frozen=True)
class Parametrization:
    """phi = (u_1 : ... : u_{n+1}) with u_i forms of degree d in t1..tn."""

    u: tuple
    case_hint: str | None = None
    asserted_lci: bool = False

    def __post_init__(self):
        u = tuple(self.u)
        object.__setattr__(self, "u", u)
        if len(u) < 3:
            raise PreconditionError("need at least three forms")
        n = u[0].n
        if len(u) != n + 1:
            raise PreconditionError(f"{len(u)} forms given for n = {n} t-variables; need {n + 1}")
        field = u[0].field
        degs = set()
        for k, f in enumerate(u, 1):
            if f.n != n or f.field != field:
                raise PreconditionError("all forms must live in the same ring")
            if not f:
                raise PreconditionError(f"u{k} is zero")
            if not f.is_t_only():
                raise PreconditionError(f"u{k} involves X-variables")
            bds = f.bidegrees()
            if len(bds) != 1:
                raise PreconditionError(f"u{k} = {f} is not homogeneous")
            degs.add(next(iter(bds)).t_deg)
        if len(degs) != 1:
            raise PreconditionError(f"forms have different degrees {sorted(degs)}")
        if self.case_hint is not None and self.case_hint not in CASES:
            raise PreconditionError(f"unknown case {self.case_hint!r}")

    @property
    def n(self):
        return self.u[0].n

    @property
    def d(self):
        return self.u[0].total_degree()

    @property
    def field(self):
        return self.u[0].field

    @classmethod
    def from_strings(cls, texts, n, field=QQ, **kw):
        return cls(tuple(MultiPoly.parse(s, n, field) for s in texts), **kw)

    def change_field(self, field):
        return Parametrization(
            tuple(f.change_field(field) for f in self.u), self.case_hint, self.asserted_lci
        )

    def X_images(self):
        return list(self.u)

    def is_member(self, f):
        """True if f(t, u(t)) = 0."""
        return f.substitute(None, self.u).is_zero()

    def evaluate(self, t0):
        return [f.evaluate(t0) for f in self.u]


@dataclass(frozen=True)
class KernelSlice:
    bidegree: Bidegree
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)


@dataclass(frozen=True)
class MuBasis:
    elements: tuple
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "degrees", tuple(self.degrees))


# ---------------------------------------------------------------------------
# vector <-> polynomial plumbing shared with the oracle
# ---------------------------------------------------------------------------


def poly_to_vector(f, index):
    v = [0] * len(index)
    for m, c in f.items():
        try:
            v[index[m]] = c
        except KeyError:
            raise PreconditionError(f"monomial {m} of {f} outside the slice") from None
    return v


def vector_to_poly(v, columns, n, field):
    return MultiPoly._raw(n, field, {m: c for m, c in zip(columns, v) if c})


def t_multiples(elements, i, n, field):
    """All m * e with m a t-monomial and bideg(m * e) having t-degree i."""
    out = []
    zeros = (0,) * (n + 1)
    for e in elements:
        k = e.bidegree.t_deg
        if k > i:
            continue
        for tm in monomials_of_degree(n, i - k):
            out.append(e.shift(tm + zeros))
    return out


# ---------------------------------------------------------------------------
# slices
# ---------------------------------------------------------------------------


def syzygy_matrix(p, i):
    """Columns indexed by t^a X_k (bidegree (i, 1)); entry rows by t-monomials of degree i + d."""
    n, d = p.n, p.d
    columns = monomials_of_bidegree(n, i, 1)
    targets = monomials_of_degree(n, i + d)
    tindex = {m: r for r, m in enumerate(targets)}
    mat = [[0] * len(columns) for _ in targets]
    for c, mono in enumerate(columns):
        a, x = mono[:n], mono[n:]
        k = x.index(1)
        for m, coef in p.u[k].items():
            r = tindex[tuple(s + t for s, t in zip(a, m[:n]))]
            mat[r][c] = coef
    return mat, columns


def moving_hyperplane_slice(p, i):
    """Basis of K_{i,1}: moving hyperplanes sum_k a_k(t) X_k with deg a_k = i."""
    if i < 0:
        raise PreconditionError("negative degree")
    mat, columns = syzygy_matrix(p, i)
    basis = kernel_of_rows(mat, len(columns), p.field)
    polys = tuple(vector_to_poly(v, columns, p.n, p.field).normalized() for v in basis)
    return KernelSlice(Bidegree(i, 1), polys)


def span_rank(elements, i, n, field):
    """Dimension of the K[t]-span of moving hyperplanes at t-degree i."""
    columns = monomials_of_bidegree(n, i, 1)
    index = {m: c for c, m in enumerate(columns)}
    rows = [poly_to_vector(g, index) for g in t_multiples(elements, i, n, field)]
    return rank_of_rows(rows, len(columns), field)


def _new_generator(p, i, known, expected_quotient=1):
    """Canonical element of K_{i,1} modulo the t-multiples of ``known``.

    Returns (element or None, dim of the quotient).  The element is the
    reduction of a slice vector against the RREF of the known span, so it is
    independent of the basis chosen for the slice.
    """
    n, field = p.n, p.field
    columns = monomials_of_bidegree(n, i, 1)
    index = {m: c for c, m in enumerate(columns)}
    sl = moving_hyperplane_slice(p, i)
    rows = [poly_to_vector(g, index) for g in t_multiples(known, i, n, field)]
    if rows:
        red, pivots = _rref_rows(rows, len(columns), field)
        red = red[: len(pivots)]
    else:
        red, pivots = [], []
    quotient = sl.dim - len(pivots)
    for g in sl.basis:
        v = reduce_against(red, pivots, poly_to_vector(g, index), field)
        if any(v):
            return vector_to_poly(v, columns, n, field).normalized(), quotient
    return None, quotient


def check_coprime(p, trials=8, seed=0):
    verdict = is_coprime_probabilistic(p.u, trials, random.Random(seed))
    if not verdict.coprime:
        raise DegenerateInput(f"the forms u_i are not coprime ({verdict.note})")
    return verdict


def curve_mu(p, limit=None):
    """Least i with a nonzero moving line of degree i."""
    limit = p.d if limit is None else limit
    for i in range(limit + 1):
        if moving_hyperplane_slice(p, i).dim:
            return i
    return None


def curve_mu_basis(p):
    """mu-basis (q1, q2) of degrees (1, d-1) for a plane curve with mu = 1."""
    if p.n != 2:
        raise PreconditionError("curve_mu_basis needs n = 2")
    if p.d < 2:
        raise PreconditionError("curves need d >= 2")
    check_coprime(p)
    s1 = moving_hyperplane_slice(p, 1)
    if moving_hyperplane_slice(p, 0).dim:
        raise MuNotOne(0, "mu = 0: the forms u_i are linearly dependent")
    if not s1.dim:
        raise MuNotOne(curve_mu(p, p.d // 2))
    q1 = s1.basis[0]
    q2, quotient = _new_generator(p, p.d - 1, [q1])
    if q2 is None or quotient != 1:
        raise InternalError(f"expected one new moving line at degree {p.d - 1}, found {quotient}")
    return MuBasis((q1, q2), (1, p.d - 1))


def free_dimension(degrees, i, n):
    """dim of the degree-i part of a free K[t]-module with generators in ``degrees``."""
    return sum(math.comb(i - e + n - 1, n - 1) for e in degrees if i >= e)


@dataclass
class ShapeReport:
    degrees: tuple
    rows: list = dc_field(default_factory=list)  # (i, dim slice, dim span, free prediction)


def check_generation(p, mb, top):
    """Compare slice, span and free-module dimensions for 0 <= i <= top."""
    report = ShapeReport(mb.degrees)
    for i in range(top + 1):
        report.rows.append(
            (
                i,
                moving_hyperplane_slice(p, i).dim,
                span_rank(mb.elements, i, p.n, p.field),
                free_dimension(mb.degrees, i, p.n),
            )
        )
    return report


def surface_mu_shape(p, candidate=None):
    """Validate or find a mu-basis of type (1, 1, d-2) for a surface parametrization."""
    if p.n != 3:
        raise PreconditionError("surface_mu_shape needs n = 3")
    d = p.d
    if d < 3:
        raise PreconditionError("surfaces need d >= 3")
    expected = (1, 1, d - 2)
    if candidate is not None:
        elems = tuple(candidate.elements if isinstance(candidate, MuBasis) else candidate)
        if len(elems) != 3:
            raise ShapeMismatch(f"need 3 moving planes, got {len(elems)}")
        for k, e in enumerate(elems, 1):
            if e.n != 3 or e.field != p.field:
                raise ShapeMismatch(f"p{k} lives in a different ring")
            if not e or not e.is_bihomogeneous() or e.bidegree != Bidegree(expected[k - 1], 1):
                raise ShapeMismatch(f"p{k} = {e} does not have bidegree ({expected[k - 1]},1)")
            if not p.is_member(e):
                raise ShapeMismatch(f"p{k} = {e} is not a syzygy of u")
        mb = MuBasis(elems, expected)
    else:
        if moving_hyperplane_slice(p, 0).dim:
            raise ShapeMismatch("a syzygy of degree 0 exists (u_i linearly dependent)")
        s1 = moving_hyperplane_slice(p, 1)
        if s1.dim < 2:
            raise ShapeMismatch(f"only {s1.dim} moving planes of degree 1; need 2")
        if d > 3 and s1.dim != 2:
            raise ShapeMismatch(f"{s1.dim} moving planes of degree 1; mu-type is not (1,1,{d - 2})")
        p1, p2 = s1.basis[0], s1.basis[1]
        p3, quotient = _new_generator(p, d - 2, [p1, p2])
        if p3 is None or quotient != 1:
            raise ShapeMismatch(f"{quotient} new moving planes at degree {d - 2}; expected 1")
        mb = MuBasis((p1, p2, p3), expected)
    report = check_generation(p, mb, d + 1)
    for i, sl, sp, free in report.rows:
        if sp != free:
            raise ShapeMismatch(
                f"t-multiples of the candidate are dependent at degree {i} ({sp} != {free})"
            )
        if sl != sp:
            raise NotSaturatedSuspect(
                f"moving planes of degree {i}: slice has dimension {sl}, "
                f"the candidate generates only {sp}"
            )
    return mb


def x_coefficients(e):
    """Coefficients (t-polynomials) of X_1..X_{n+1} in a moving hyperplane."""
    n, field = e.n, e.field
    parts = [{} for _ in range(n + 1)]
    for m, c in e.items():
        x = m[n:]
        if sum(x) != 1:
            raise PreconditionError(f"{e} is not linear in X")
        k = x.index(1)
        parts[k][m[:n] + (0,) * (n + 1)] = c
    return [MultiPoly._raw(n, field, q) for q in parts]


def _det(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = None
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = a * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rows[0][0] * 0
    return total


def signed_maximal_minors(matrix):
    """Signed maximal minors of a (k+1) x k matrix of polynomials, by deleted row."""
    out = []
    for i in range(len(matrix)):
        m = _det([r for j, r in enumerate(matrix) if j != i])
        out.append(-m if i % 2 else m)
    return out


def u_from_mu_basis(elements):
    """Recover u from a Hilbert-Burch matrix whose columns are the moving planes."""
    cols = [x_coefficients(e) for e in elements]
    matrix = [[col[i] for col in cols] for i in range(len(cols[0]))]
    return signed_maximal_minors(matrix)


def is_monoid_form(u):
    """If u = (t_1 f, ..., t_n f, g), return (f, g); else None."""
    n = u[0].n
    tops = []
    for k in range(n):
        t = MultiPoly.t(k + 1, n, u[0].field)
        try:
            tops.append(u[k].exact_div(t))
        except ValueError:
            return None
    if any(f != tops[0] for f in tops):
        return None
    return tops[0], u[n]


def classify(p):
    """Case tag: the hint if given, else inferred from n and the shape of u."""
    if p.case_hint is not None:
        return p.case_hint
    if p.n == 2:
        return CURVE
    if is_monoid_form(p.u) is not None:
        return MONOID
    if p.n == 3:
        return SURFACE
    raise PreconditionError(f"no construction for n = {p.n} outside the monoid case")
