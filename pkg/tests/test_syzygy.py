import pytest

from monoidrees import fixtures
from monoidrees.errors import DegenerateInput, MuNotOne, PreconditionError, ShapeMismatch
from monoidrees.oracle import kernel_dim
from monoidrees.ring import GF, QQ, Bidegree, MultiPoly
from monoidrees.syzygy import (
    MuBasis,
    Parametrization,
    classify,
    curve_mu_basis,
    free_dimension,
    moving_hyperplane_slice,
    span_rank,
    surface_mu_shape,
    u_from_mu_basis,
)

from conftest import P


def span_dim(polys, i, j=1, n=2):
    from monoidrees.oracle import ideal_slice_dim

    return ideal_slice_dim(polys, i, j)


def test_parametrization_validation():
    with pytest.raises(PreconditionError):
        Parametrization.from_strings(("t1^2", "t1", "t2^2"), 2)
    with pytest.raises(PreconditionError):
        Parametrization.from_strings(("t1^2", "0", "t2^2"), 2)
    with pytest.raises(PreconditionError):
        Parametrization.from_strings(("t1^2", "t1*X1", "t2^2"), 2)
    with pytest.raises(PreconditionError):
        Parametrization.from_strings(("t1^2", "t2^2"), 2)


def test_conic_slice_degree_one(conic):
    sl = moving_hyperplane_slice(conic, 1)
    assert sl.bidegree == Bidegree(1, 1) and sl.dim == 2
    assert span_dim(list(sl.basis), 1) == span_dim([P("t1*X2 - t2*X1"), P("t1*X3 - t2*X2")], 1) == 2
    assert span_dim(list(sl.basis) + [P("t1*X2 - t2*X1"), P("t1*X3 - t2*X2")], 1) == 2


def test_conic_slice_degree_zero_empty(conic):
    assert moving_hyperplane_slice(conic, 0).dim == 0


def test_monoid_slice_contains_pij(monoid):
    from monoidrees.reesgen import monoid_parametrization

    p = monoid_parametrization(*monoid)
    sl = list(moving_hyperplane_slice(p, 1).basis)
    for a, b in ((1, 2), (1, 3), (2, 3)):
        pij = MultiPoly.t(a, 3) * MultiPoly.X(b, 3) - MultiPoly.t(b, 3) * MultiPoly.X(a, 3)
        assert span_dim(sl + [pij], 1) == span_dim(sl, 1)


def test_slice_elements_are_syzygies(surface):
    p, _ = surface
    for i in range(4):
        assert all(p.is_member(e) for e in moving_hyperplane_slice(p, i).basis)


def test_conic_mu_basis(conic):
    mb = curve_mu_basis(conic)
    assert mb.degrees == (1, 1)
    assert set(mb.elements) == {P("t1*X2 - t2*X1"), P("t1*X3 - t2*X2")}


def test_cubic_mu_question():
    # (t1^3, t1^2 t2 + t1 t2^2, t2^3): accept the verdict of the (1,1) slice
    p = Parametrization.from_strings(("t1^3", "t1^2*t2 + t1*t2^2", "t2^3"), 2)
    if kernel_dim(p, 1, 1):
        assert curve_mu_basis(p).degrees == (1, 2)
    else:
        with pytest.raises(MuNotOne):
            curve_mu_basis(p)


def test_mu_two_rejected():
    p = Parametrization.from_strings(("t1^4", "t1^2*t2^2 + t1*t2^3", "t2^4 + t1^3*t2"), 2)
    with pytest.raises(MuNotOne) as err:
        curve_mu_basis(p)
    assert err.value.mu == 2


def test_common_factor_rejected():
    p = Parametrization.from_strings(("t1^2", "t1*t2", "t1^2 + t1*t2"), 2)
    with pytest.raises(DegenerateInput):
        curve_mu_basis(p)


def test_curve_slice_dimensions_are_free():
    p = Parametrization.from_strings(("t1^3", "t1^2*t2 - t2^3", "t1*t2^2"), 2)
    mb = curve_mu_basis(p)
    for i in range(p.d + 1):
        assert moving_hyperplane_slice(p, i).dim == free_dimension(mb.degrees, i, 2)
        assert moving_hyperplane_slice(p, i).dim == kernel_dim(p, i, 1)
    # q2 is not a polynomial multiple of q1
    q1, q2 = mb.elements
    assert not q1.divides(q2)


def test_surface_candidate_accepted(surface):
    p, mb = surface
    out = surface_mu_shape(p, mb)
    assert out.degrees == (1, 1, 2)
    assert out.elements == mb.elements


def test_surface_without_candidate(surface):
    p, mb = surface
    out = surface_mu_shape(p)
    assert out.degrees == (1, 1, 2)
    for i in range(p.d + 2):
        assert span_rank(out.elements, i, 3, QQ) == span_rank(mb.elements, i, 3, QQ)
        assert moving_hyperplane_slice(p, i).dim == free_dimension((1, 1, 2), i, 3)


def test_quadric_shape_accepted(quadric):
    p, mb = quadric
    assert surface_mu_shape(p, mb).degrees == (1, 1, 2)


def test_non_syzygy_candidate(surface):
    p, mb = surface
    bad = MuBasis((mb.elements[0], mb.elements[1], mb.elements[2] + P("t1^2*X1", 3)), (1, 1, 2))
    with pytest.raises(ShapeMismatch):
        surface_mu_shape(p, bad)


def test_u_from_mu_basis_annihilated(surface):
    p, mb = surface
    for e in mb.elements:
        assert e.substitute(None, p.u).is_zero()
    assert p.d == 4


def test_classify(conic, surface, monoid):
    from monoidrees.reesgen import monoid_parametrization

    assert classify(conic) == "curve"
    assert classify(monoid_parametrization(*monoid)) == "monoid"
    assert classify(Parametrization(surface[0].u)) == "surface"


def test_field_stable_slices(surface):
    p, _ = surface
    for i in range(4):
        assert moving_hyperplane_slice(p, i).dim == moving_hyperplane_slice(p.change_field(GF(32003)), i).dim
