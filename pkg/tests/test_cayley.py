import pytest

from sextactic.arrangements import nodal_catalog
from sextactic.cayley import (
    INFINITE,
    BranchSeries,
    CayleyData,
    InflectionPointError,
    NotOnCurveError,
    SingularPointError,
    cayley_conic_literal,
    contact_order,
    hessian,
    omega,
    osculating_conic,
    osculating_conic_via_series,
    psi,
    second_hessian,
    sextactic_points,
)
from sextactic.checks import points_on_fermat, points_on_nodal
from sextactic.exactfield import K
from sextactic.polyring import HomPoly, ProjPoint

P = HomPoly.parse
E = P("x^3 + y^3 - x*y*z")
F = P("x^3 + y^3 + z^3")
Q1 = P("21*(x^2+y^2) - 22*x*y - 6*(x+y)*z + z^2")
SEED = P("(x - y)^2 - z*(a^2*x + a^2*y + 2*a*z)")


def test_hessians():
    assert hessian(F) == P("216*x*y*z")
    assert hessian(P("x^2 + y^2 + z^2")) == HomPoly.constant(8)
    assert hessian(E) == P("-2*(3*x^3 + 3*y^3 + x*y*z)")


def test_degree_bookkeeping():
    for f in (E, F, P("x*y*z"), P("x^4 + y^4 + z^4 + x*y^2*z")):
        d = f.degree
        h = hessian(f)
        assert h.degree == 3 * (d - 2)
        assert omega(f, h).degree == (2 * d - 4) + (3 * d - 8)
        assert psi(f, h).degree == 8 * d - 18


def test_degree_two_covariants_vanish():
    q = P("x^2 + 2*y^2 - z^2 + x*y")
    h = hessian(q)
    assert omega(q, h).is_zero()
    assert psi(q, h).is_zero()


def test_lambda_identity():
    data = CayleyData(E)
    assert data.lam == data.omega * data.h * (-3) + data.psi * 4


def test_second_hessian_fermat():
    h2 = second_hessian(F)
    assert h2.degree == 9
    target = P("(x^3 - y^3)*(y^3 - z^3)*(x^3 - z^3)")
    assert h2.proportional(target)
    # the exact scalar obtained by this implementation
    assert h2 == target.scale(K(65303470080))


def test_second_hessian_nodal():
    h2 = second_hessian(E)
    assert h2.degree == 9
    for s in nodal_catalog().sextactic:
        assert h2.evaluate(s).is_zero()


def test_osculating_conic_examples():
    assert osculating_conic(E, ProjPoint.parse("(2:4:9)")).proportional(
        P("2961*x^2 - 2664*x*y + 2394*y^2 - 1104*x*z - 321*y*z + 32*z^2"))
    assert osculating_conic(E, ProjPoint.parse("(1:1:2)")).proportional(Q1)
    assert osculating_conic(F, ProjPoint.parse("(1:1:-a)")).proportional(SEED)


def test_series_oracle_examples():
    assert osculating_conic_via_series(E, ProjPoint.parse("(1:1:2)")).proportional(Q1)
    assert osculating_conic_via_series(F, ProjPoint.parse("(1:1:-a)")).proportional(SEED)


def test_generic_point_contact_exactly_five():
    p = ProjPoint.parse("(3:9:28)")
    q = osculating_conic_via_series(E, p)
    assert contact_order(E, q, p) == 5


def test_literal_formula_is_not_osculating():
    # the verbatim closed form lacks the normalization of the Lambda term
    p = ProjPoint.parse("(2:4:9)")
    assert contact_order(E, cayley_conic_literal(E, p), p) == 4


@pytest.mark.parametrize("f,pts", [(E, points_on_nodal(5)), (F, points_on_fermat(5))])
def test_formula_matches_series(f, pts):
    for p in pts:
        q = osculating_conic(f, p)
        assert q.proportional(osculating_conic_via_series(f, p))
        assert contact_order(f, q, p) >= 5


def test_quartic_formula_matches_series():
    f = P("x^4 + 2*y^4 - 4*z^4 + x*y*z^2")
    p = ProjPoint.parse("(1:1:1)")
    assert f.evaluate(p).is_zero()
    assert osculating_conic(f, p).proportional(osculating_conic_via_series(f, p))


def test_contact_orders():
    s1 = ProjPoint.parse("(1:1:2)")
    assert contact_order(E, Q1, s1) == 6
    infl = ProjPoint.parse("(1:-1:0)")
    assert contact_order(F, P("x + y"), infl) == 3


def test_contact_shared_component():
    f = P("x^3 + y^3 + z^3")
    assert contact_order(f, f * P("x"), ProjPoint.parse("(1:-1:0)")) == INFINITE


def test_errors():
    with pytest.raises(NotOnCurveError):
        osculating_conic(E, ProjPoint.parse("(1:0:0)"))
    with pytest.raises(SingularPointError):
        osculating_conic(E, ProjPoint.parse("(0:0:1)"))
    with pytest.raises(InflectionPointError):
        osculating_conic(F, ProjPoint.parse("(1:-1:0)"))


def test_branch_series_vanishes():
    p = ProjPoint.parse("(2:4:9)")
    br = BranchSeries.expand(E, p, 12)
    assert all(c.is_zero() for c in br.along(E))


def test_sextactic_points():
    assert set(sextactic_points(E)) == set(nodal_catalog().sextactic)
    assert len(sextactic_points(F)) == 27
    assert sextactic_points(P("x^3 - y^2*z")) == []


def test_equivariance_under_g_second():
    from sextactic.arrangements import group_elements
    from sextactic.polyring import act

    p = ProjPoint.parse("(1:1:-a)")
    base = osculating_conic(F, p)
    for t in group_elements("Gsecond"):
        assert osculating_conic(act(F, t), t.apply(p)).proportional(act(base, t))
