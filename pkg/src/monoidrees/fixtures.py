"""Worked instances and random generators for the three cases."""

from __future__ import annotations

import random

from .ring import QQ, MultiPoly, is_coprime_probabilistic, monomials_of_degree
from .syzygy import MuBasis, Parametrization, u_from_mu_basis

CONIC_U = ("t1^2", "t1*t2", "t2^2")

# d = 4 surface with mu-type (1, 1, 2) and its printed implicit equation
SURFACE_MU = (
    "t1*X1 + t2*X2 + t3*X3",
    "-t1*X2 + 2*t2*X3 - t3*X1",
    "t1*t3*X1 + t1*t2*X2 + t2*t3*X3 + t2^2*X4",
)
SURFACE_E = (
    "X1^4*X4 + 2*X1^3*X3^2 - 2*X1^3*X2*X3 - 4*X1^2*X3^3 - 2*X1*X2^2*X3^2"
    " - 2*X1^2*X2*X3^2 - 2*X1*X2*X3^3 + X1*X2^3*X3 - X2^3*X3^2 - X1^2*X2^3"
    " + X2^2*X3^2*X4 - X1^3*X2^2 - 2*X1^2*X2*X3*X4 + 2*X2^2*X3^3 + X1^2*X2^2*X3"
)

# saturated, mu-type (1, 1, 2), but the image is a quadric
QUADRIC_MU = (
    "t1*X1 + t1*X2 + 2*t2*X3 + t2*X4",
    "2*t1*X1 + t2*X2 + t1*X3 + 3*t2*X4",
    "t2*t3*X1 + t1^2*X2 + t2^2*X3 + t1*t3*X4",
)

MONOID_TOP = "t1"
MONOID_DEG = "t2^2 + t1*t3"


def conic(field=QQ):
    return Parametrization.from_strings(CONIC_U, 2, field)


def mu_basis_from_strings(texts, n=3, field=QQ):
    elems = tuple(MultiPoly.parse(s, n, field) for s in texts)
    degrees = tuple(e.bidegree.t_deg for e in elems)
    return MuBasis(elems, degrees)


def surface(field=QQ, asserted_lci=True):
    mb = mu_basis_from_strings(SURFACE_MU, 3, field)
    return Parametrization(tuple(u_from_mu_basis(mb.elements)), "surface", asserted_lci), mb


def quadric_surface(field=QQ):
    mb = mu_basis_from_strings(QUADRIC_MU, 3, field)
    return Parametrization(tuple(u_from_mu_basis(mb.elements)), "surface", False), mb


def quadric_m3(field=QQ):
    X = [MultiPoly.X(k, 3, field) for k in range(1, 5)]
    return (X[0] + X[1]) * (X[1] + 3 * X[3]) - (2 * X[2] + X[3]) * (2 * X[0] + X[2])


def monoid_example(field=QQ):
    return MultiPoly.parse(MONOID_TOP, 3, field), MultiPoly.parse(MONOID_DEG, 3, field)


def surface_E(field=QQ):
    return MultiPoly.parse(SURFACE_E, 3, field)


# ---------------------------------------------------------------------------
# random instances
# ---------------------------------------------------------------------------


def random_form(n, deg, field, rng, block="t", bound=5, density=1.0):
    """Random form of degree ``deg`` in the t-block (or linear-in-X coefficients)."""
    terms = {}
    zeros = (0,) * (n + 1)
    for m in monomials_of_degree(n, deg):
        if rng.random() <= density:
            terms[m + zeros] = field.random_element(rng, bound)
    return MultiPoly(n, field, terms)


def random_moving_hyperplane(n, deg, field, rng, bound=5):
    out = MultiPoly.zero(n, field)
    for k in range(1, n + 2):
        out = out + random_form(n, deg, field, rng, bound=bound) * MultiPoly.X(k, n, field)
    return out


def random_mu1_curve(d, field, rng, max_tries=100):
    """Random plane curve parametrization with mu = 1 and coprime u.

    u is the cross product of the coefficient vectors of a random moving line
    of degree 1 and one of degree d - 1.
    """
    from .syzygy import x_coefficients

    for _ in range(max_tries):
        p = random_moving_hyperplane(2, 1, field, rng)
        q = random_moving_hyperplane(2, d - 1, field, rng)
        a, b = x_coefficients(p), x_coefficients(q)
        u = (
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        )
        if any(not f for f in u):
            continue
        if not is_coprime_probabilistic(u).coprime:
            continue
        return Parametrization(u, "curve")
    raise RuntimeError("could not draw a coprime mu = 1 curve")


def random_monoid(n, d, field, rng, max_tries=100):
    for _ in range(max_tries):
        f_top = random_form(n, d - 1, field, rng, density=0.7)
        f_deg = random_form(n, d, field, rng, density=0.7)
        if not f_top or not f_deg:
            continue
        if is_coprime_probabilistic([f_top, f_deg], rng=random.Random(rng.random())).coprime:
            return f_top, f_deg
    raise RuntimeError("could not draw coprime monoid data")


def transform_X(p, A):
    """The parametrization A * u for an invertible matrix A (list of rows)."""
    u = p.u
    field = p.field
    out = []
    for row in A:
        f = MultiPoly.zero(p.n, field)
        for a, g in zip(row, u):
            if a:
                f = f + g.scale(a)
        out.append(f)
    return Parametrization(tuple(out), p.case_hint, p.asserted_lci)
