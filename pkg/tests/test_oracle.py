import random

import pytest

from monoidrees import fixtures
from monoidrees.errors import ResourceLimit
from monoidrees.oracle import (
    division_identity_holds,
    ideal_contains,
    ideal_slice_dim,
    kernel_dim,
    kernel_slice,
    random_member,
    specialization_divisible,
    verify_generation,
    verify_high_degree_containment,
    verify_minimality,
)
from monoidrees.reesgen import Generator, curve_generators, surface_generators
from monoidrees.ring import GF, QQ, Bidegree, MultiPoly
from monoidrees.syzygy import Parametrization

from conftest import P

LINE = P("t1*X2 - t2*X1")


def test_kernel_slice_conic_02(conic):
    sl = kernel_slice(conic, 0, 2)
    assert sl.dim == 1 and sl.basis[0] == P("X1*X3 - X2^2")


def test_kernel_slice_conic_01_empty(conic):
    assert kernel_slice(conic, 0, 1).dim == 0


def test_low_degree_slices_are_multiples_of_line():
    p = Parametrization.from_strings(("t1^3", "t1^2*t2 - t2^3", "t1*t2^2"), 2)
    q1 = curve_generators(p).generators[0].poly
    for i in range(p.d):
        for j in range(p.d - i):
            assert kernel_dim(p, i, j) == ideal_slice_dim([q1], i, j)


def test_ideal_slice_dim_examples(conic):
    assert ideal_slice_dim([LINE], 1, 1) == 1
    assert ideal_slice_dim([LINE], 2, 1) == 2
    assert ideal_slice_dim(curve_generators(conic), 0, 2) == 1


def test_ideal_slice_bounded_by_kernel(surface):
    p, mb = surface
    gs = surface_generators(p, mb)
    for i in range(4):
        for j in range(4):
            assert ideal_slice_dim(gs, i, j, GF(32003)) <= kernel_dim(p, i, j, GF(32003))


def test_verify_conic(conic):
    rep = verify_generation(curve_generators(conic), conic, 6)
    assert rep.verdict == "Certified" and rep.bound == 6
    assert "partial certificate" in rep.note
    assert [(r.i, r.j) for r in rep.slices[:4]] == [(0, 0), (1, 0), (0, 1), (2, 0)]


def test_verify_conic_over_qq(conic):
    assert verify_generation(curve_generators(conic), conic, 5, QQ).certified


def test_verify_surface(surface):
    p, mb = surface
    assert verify_generation(surface_generators(p, mb), p, 7).verdict == "Certified"


def test_verify_default_bound(conic):
    assert verify_generation(curve_generators(conic), conic).bound == conic.d + 3


def test_missing_F0_fails_at_0d():
    p = Parametrization.from_strings(("t1^3", "t1^2*t2 - t2^3", "t1*t2^2"), 2)
    gens = [g for g in curve_generators(p) if g.label != "F_0"]
    rep = verify_generation(gens, p, 5)
    assert rep.verdict == "Failed" and rep.first_failure() == (0, 3)


def test_minimality_conic(conic):
    rep = verify_minimality(curve_generators(conic))
    assert rep.certified and all(r.drop >= 1 for r in rep.minimality) and len(rep.minimality) == 3


def test_minimality_flags_redundant(conic):
    gens = list(curve_generators(conic)) + [P("t1^2*X2 - t1*t2*X1")]
    rep = verify_minimality(gens)
    assert not rep.certified
    assert [r.drop for r in rep.minimality][-1] == 0


def test_minimality_surface(surface):
    p, mb = surface
    rep = verify_minimality(surface_generators(p, mb))
    assert rep.certified and len(rep.minimality) == 5


def test_high_degree_containment_surface(surface):
    p, mb = surface
    rep = verify_high_degree_containment(p, mb, 3, i_values=[3])
    assert rep.certified


def test_high_degree_containment_conic(conic):
    gs = curve_generators(conic)
    assert verify_high_degree_containment(conic, gs.mu_basis, 3, i_values=[2]).certified


def test_resource_limit(surface):
    p, _ = surface
    with pytest.raises(ResourceLimit):
        kernel_slice(p, 3, 4, cap=100)


def test_slice_dims_field_stable(conic, surface):
    p, _ = surface
    for q in (conic, p):
        for i, j in ((0, 2), (1, 1), (1, 3), (2, 2)):
            assert kernel_dim(q, i, j, QQ) == kernel_dim(q, i, j, GF(32003))


def test_membership_criterion(surface):
    p, mb = surface
    gs = surface_generators(p, mb)
    rng = random.Random(2)
    F = GF(32003)
    M = [m.change_field(F) for m in gs.inverse.M]
    E = gs.E.change_field(F)
    for i, j in ((1, 2), (2, 2), (1, 3)):
        f = random_member(p, i, j, rng, F)
        assert f and specialization_divisible(f, M, E)


def test_division_identity(conic):
    p = Parametrization.from_strings(("t1^3", "t1^2*t2 - t2^3", "t1*t2^2"), 2)
    gs = curve_generators(p)
    q1 = gs.generators[0].poly
    rng = random.Random(4)
    for i, j in ((1, 2), (2, 1), (2, 2)):
        f = random_member(p, i, j, rng)
        assert division_identity_holds(f, q1, gs.inverse.M)


def test_ideal_contains(conic):
    gs = curve_generators(conic)
    assert ideal_contains(gs, P("t1*X1*X3 - t1*X2^2"))
    assert not ideal_contains(gs, P("t1*X1*X3 + t1*X2^2"))
