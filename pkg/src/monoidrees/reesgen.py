"""Minimal generators of the Rees kernel for monoid-type parametrizations.

All three constructions share one step, ``descend``: split F on t as
sum_k A_k t_k and recombine as sum_k A_k M_k, where M realises the rational
inverse of the parametrization.  Starting from a moving hyperplane of top
t-degree, repeated descent walks down to the implicit equation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .errors import (
    CommonFactor,
    CrossCheckMismatch,
    DegenerateCurve,
    DegenerateSurface,
    InternalError,
    PreconditionError,
)
from .ring import GF, QQ, Bidegree, MultiPoly, forms_coprime_probabilistic, is_coprime_probabilistic
from .syzygy import (
    CURVE,
    MONOID,
    SURFACE,
    MuBasis,
    Parametrization,
    classify,
    curve_mu_basis,
    is_monoid_form,
    surface_mu_shape,
)

ORACLE_PRIME = 32003


@dataclass(frozen=True)
class InverseSubstitution:
    """M = (M_1, ..., M_n), forms in X only; t -> M inverts the parametrization."""

    M: tuple
    source: str

    def render(self):
        return "(" + " : ".join(str(m) for m in self.M) + ")"


@dataclass(frozen=True)
class Generator:
    poly: MultiPoly
    bidegree: Bidegree
    provenance: str  # "syzygy", "descent" or "p_ij"
    label: str
    # c with poly(M, X) == c * E; None when poly vanishes under t -> M
    to_E: object = None


@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple
    case: str
    E: MultiPoly
    inverse: InverseSubstitution
    parametrization: Parametrization
    mu_basis: MuBasis | None = None
    cross_checks: dict = dc_field(default_factory=dict)
    warnings: tuple = ()

    def polys(self):
        return [g.poly for g in self.generators]

    def bidegrees(self):
        return [g.bidegree for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def descent_chain(self):
        """The F_j generators, ordered by j."""
        chain = [g for g in self.generators if g.label.startswith("F_")]
        return sorted(chain, key=lambda g: int(g.label[2:]))


# ---------------------------------------------------------------------------
# inverse substitution and descent
# ---------------------------------------------------------------------------


def _linear_forms(p1):
    """Split a bidegree-(1,1) moving hyperplane into its X-linear forms L_k."""
    if p1.bidegree != Bidegree(1, 1):
        raise PreconditionError(f"{p1} is not of bidegree (1,1)")
    return p1.split_on_t()


def inverse_substitution(mb, case):
    """The tuple M realising t -> M for a validated mu-basis (or monoid data)."""
    if case == CURVE:
        A, B = _linear_forms(mb.elements[0])
        if A.ratio_to(B) is not None or not A or not B:
            raise DegenerateCurve(
                f"the linear forms {A} and {B} of the degree-1 moving line are dependent"
            )
        return InverseSubstitution((-B, A), CURVE)
    if case == SURFACE:
        L1 = _linear_forms(mb.elements[0])
        L2 = _linear_forms(mb.elements[1])
        minors = (
            L1[1] * L2[2] - L1[2] * L2[1],
            -(L1[0] * L2[2] - L1[2] * L2[0]),
            L1[0] * L2[1] - L1[1] * L2[0],
        )
        if any(m.is_zero() for m in minors):
            nonzero = [m for m in minors if m]
            if not nonzero:
                raise InternalError("all signed minors vanish; p1, p2 are proportional")
            raise DegenerateSurface(minors, nonzero[0].normalized())
        return InverseSubstitution(minors, SURFACE)
    if case == MONOID:
        n = mb.elements[0].n
        field = mb.elements[0].field
        return InverseSubstitution(tuple(MultiPoly.X(k, n, field) for k in range(1, n + 1)), MONOID)
    raise PreconditionError(f"unknown case {case!r}")


def monoid_inverse(n, field=QQ):
    return InverseSubstitution(tuple(MultiPoly.X(k, n, field) for k in range(1, n + 1)), MONOID)


def descend(F, sub, p=None):
    """F_{j-1} = sum_k A_k M_k where F_j = sum_k A_k t_k (canonical split).

    When ``p`` is given, membership of the result in the kernel is checked.
    """
    if not F or not F.is_bihomogeneous():
        raise PreconditionError(f"{F} is not a nonzero bihomogeneous polynomial")
    if F.bidegree.t_deg < 1:
        raise PreconditionError(f"{F} has t-degree 0; nothing to descend")
    parts = F.split_on_t()
    out = MultiPoly.zero(F.n, F.field)
    for a, m in zip(parts, sub.M):
        if a:
            out = out + a * m
    if not out:
        raise InternalError(f"descent of {F} vanished")
    if p is not None and not p.is_member(out):
        raise InternalError(f"descent of {F} is not in the kernel; input was not a member")
    return out


def _chain(top, top_index, sub, p, top_provenance):
    """Descend from F_{top_index} = top down to F_0, normalising along the way.

    Returns Generators F_top..F_0 and E; the to_E scalars are exact.
    """
    polys = [top]
    F = top
    for _ in range(top_index):
        F, _s = descend(F, sub, p).normalize()
        polys.append(F)
    E = polys[-1]
    gens = []
    for k, f in enumerate(polys):
        j = top_index - k
        specialized = f.substitute(list(sub.M), None)
        c = specialized.ratio_to(E)
        if c is None:
            raise CrossCheckMismatch(f"F_{j}(M, X) is not a scalar multiple of F_0")
        gens.append(
            Generator(f, f.bidegree, top_provenance if k == 0 else "descent", f"F_{j}", c)
        )
    return gens, E


# ---------------------------------------------------------------------------
# the three constructions
# ---------------------------------------------------------------------------


def curve_generators(p, mb=None):
    """{q1, F_{d-1} = q2, F_{d-2}, ..., F_0} for a plane curve with mu = 1."""
    if p.n != 2:
        raise PreconditionError("curve_generators needs n = 2")
    mb = mb if mb is not None else curve_mu_basis(p)
    sub = inverse_substitution(mb, CURVE)
    q1, q2 = mb.elements
    chain, E = _chain(q2, p.d - 1, sub, p, "syzygy")
    gens = (Generator(q1, q1.bidegree, "syzygy", "q1"),) + tuple(chain)
    lemma = chain[0].to_E
    return GeneratorSet(
        gens,
        CURVE,
        E,
        sub,
        p,
        mb,
        {"F_{d-1}(M,X) / E": lemma},
    )


def monoid_parametrization(f_top, f_deg):
    n = f_top.n
    u = tuple(MultiPoly.t(k, n, f_top.field) * f_top for k in range(1, n + 1)) + (f_deg,)
    return Parametrization(u, MONOID)


def hypersurface_generators(f_top, f_deg, trials=8, seed=0):
    """{p_ij, F_{d-1}, ..., F_0} for the monoid parametrization (t_k f_top, f_deg)."""
    n, field = f_top.n, f_top.field
    if f_deg.n != n or f_deg.field != field:
        raise PreconditionError("f_top and f_deg must live in one ring")
    for name, f in (("f_top", f_top), ("f_deg", f_deg)):
        if not f or not f.is_t_only() or len(f.bidegrees()) != 1:
            raise PreconditionError(f"{name} = {f} is not a nonzero form in t")
    d = f_deg.total_degree()
    if f_top.total_degree() != d - 1:
        raise PreconditionError(f"deg f_top = {f_top.total_degree()} but deg f_deg = {d}")
    verdict = is_coprime_probabilistic([f_top, f_deg], trials, random.Random(seed))
    if not verdict.coprime:
        raise CommonFactor(f"f_top and f_deg share a factor ({verdict.note})")
    p = monoid_parametrization(f_top, f_deg)
    sub = monoid_inverse(n, field)
    t = [MultiPoly.t(k, n, field) for k in range(1, n + 1)]
    X = [MultiPoly.X(k, n, field) for k in range(1, n + 2)]
    pij = []
    for i, j in combinations(range(n), 2):
        g = t[i] * X[j] - t[j] * X[i]
        pij.append(Generator(g, g.bidegree, "p_ij", f"p_{{{i + 1},{j + 1}}}"))
    top = f_top * X[n]
    for a, x in zip(f_deg.split_on_t(), X):
        top = top - a * x
    top = top.normalized()
    if not p.is_member(top):
        raise InternalError("F_{d-1} is not a syzygy")
    warnings = () if n == 2 else (f"coprimality of f_top, f_deg is probabilistic: {verdict.note}",)
    chain, E = _chain(top, d - 1, sub, p, "syzygy")
    expected = (f_top.substitute(list(sub.M), None) * X[n] - f_deg.substitute(list(sub.M), None))
    ratio = expected.ratio_to(E)
    if ratio is None:
        raise CrossCheckMismatch("F_0 differs from f_top(X) X_{n+1} - f_deg(X)")
    return GeneratorSet(
        tuple(pij) + tuple(chain),
        MONOID,
        E,
        sub,
        p,
        None,
        {"(f_top(X) X_{n+1} - f_deg(X)) / E": ratio},
        warnings,
    )


def surface_generators(p, mb=None):
    """{p1, p2, F_{d-2} = p3, ..., F_0} for a surface with mu-type (1, 1, d-2)."""
    if p.n != 3:
        raise PreconditionError("surface_generators needs n = 3")
    mb = surface_mu_shape(p, mb)
    sub = inverse_substitution(mb, SURFACE)
    if not p.asserted_lci:
        raise PreconditionError(
            "the surface construction requires asserted_lci = true (local complete intersection)"
        )
    p1, p2, p3 = mb.elements
    d = p.d
    chain, E = _chain(p3, d - 2, sub, p, "syzygy")
    warnings = []
    if E.total_degree() != 2 * d - 3:
        raise CrossCheckMismatch(f"deg E = {E.total_degree()}, expected {2 * d - 3}")
    gcd_check = _minors_coprime(sub.M)
    if not gcd_check.coprime:
        warnings.append(f"gcd(M1, M2, M3) may be nontrivial: {gcd_check.note}")
    gens = (
        Generator(p1, p1.bidegree, "syzygy", "p1"),
        Generator(p2, p2.bidegree, "syzygy", "p2"),
    ) + tuple(chain)
    return GeneratorSet(
        gens,
        SURFACE,
        E,
        sub,
        p,
        mb,
        {"p3(M,X) / E": chain[0].to_E},
        tuple(warnings),
    )


def _minors_coprime(M):
    return forms_coprime_probabilistic(list(M), "X", 8, random.Random(0))


def generators(p, mb=None, f_top=None, f_deg=None):
    """Dispatch on the case of ``p``."""
    case = classify(p)
    if case == CURVE:
        return curve_generators(p, mb)
    if case == MONOID:
        if f_top is None:
            split = is_monoid_form(p.u)
            if split is None:
                raise PreconditionError("u is not of the form (t_k f_top, f_deg)")
            f_top, f_deg = split
        return hypersurface_generators(f_top, f_deg)
    return surface_generators(p, mb)


def implicit_equation(p, mb=None, f_top=None, f_deg=None):
    """Normalised implicit equation F_0, cross-checked against a closed form."""
    gs = generators(p, mb, f_top, f_deg)
    E = gs.E
    M = list(gs.inverse.M)
    if gs.case == CURVE:
        # E is, up to scalar, the degree-(d-1) moving line evaluated at t = M
        check = gs.mu_basis.elements[1].substitute(M, None)
    elif gs.case == SURFACE:
        check = gs.mu_basis.elements[2].substitute(M, None)
    else:
        n = p.n
        X = MultiPoly.X(n + 1, n, p.field)
        f_top, f_deg = is_monoid_form(p.u) if f_top is None else (f_top, f_deg)
        check = f_top.substitute(M, None) * X - f_deg.substitute(M, None)
    if check.ratio_to(E) is None:
        raise CrossCheckMismatch(f"closed-form cross-check failed for the {gs.case} case")
    return E


# ---------------------------------------------------------------------------
# rational inverse
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InverseCertificate:
    field: str
    samples: int
    passed: int
    skipped: int
    seed: int
    failures: tuple = ()

    @property
    def ok(self):
        return self.passed == self.samples and not self.failures


def sample_inverse(p, sub, samples=10, seed=0, prime=ORACLE_PRIME, max_tries=None):
    """Check M(u(t0)) is projectively t0 at random points over GF(prime)."""
    field = p.field if p.field != QQ else GF(prime)
    pp = p.change_field(field)
    M = [m.change_field(field) for m in sub.M]
    rng = random.Random(seed)
    passed = skipped = 0
    failures = []
    max_tries = max_tries or 50 * samples
    tries = 0
    while passed + len(failures) < samples and tries < max_tries:
        tries += 1
        t0 = [field.random_element(rng) for _ in range(p.n)]
        if not any(t0):
            skipped += 1
            continue
        x0 = pp.evaluate(t0)
        if not any(x0):
            skipped += 1
            continue
        image = [m.evaluate([0] * p.n, x0) for m in M]
        if not any(image):
            skipped += 1
            continue
        parallel = all(
            field.reduce(image[a] * t0[b] - image[b] * t0[a]) == 0
            for a in range(p.n)
            for b in range(a + 1, p.n)
        )
        if parallel:
            passed += 1
        else:
            failures.append(tuple(t0))
    return InverseCertificate(str(field), samples, passed, skipped, seed, tuple(failures))


def inverse_map(p, mb=None, samples=10, seed=0, prime=ORACLE_PRIME):
    """The inverse X -> (M_1 : ... : M_n) together with a sampling certificate."""
    case = classify(p)
    if case == CURVE:
        sub = inverse_substitution(mb if mb is not None else curve_mu_basis(p), CURVE)
    elif case == MONOID:
        sub = monoid_inverse(p.n, p.field)
    else:
        sub = inverse_substitution(surface_mu_shape(p, mb), SURFACE)
    return sub, sample_inverse(p, sub, samples, seed, prime)
