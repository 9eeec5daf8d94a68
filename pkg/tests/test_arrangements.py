import pytest

from sextactic.arrangements import (
    ArrangementError,
    ConicId,
    acts_freely,
    build,
    catalog_json,
    coolidge_count,
    fermat_catalog,
    g1,
    g2,
    group_elements,
    nodal_arrangement,
    nodal_catalog,
    nodal_symmetry,
    orbit,
    pair_orbits,
    partition,
)
from sextactic.cayley import contact_order
from sextactic.exactfield import ONE, W
from sextactic.polyring import HomPoly, LinearChange, ProjPoint, act

P = HomPoly.parse


def test_nodal_catalog():
    cat = nodal_catalog()
    assert cat.E == P("x^3 + y^3 - x*y*z")
    assert cat.conics[1] == P("21*(w*x^2 + w^2*y^2) - 22*x*y - 6*(w^2*x + w*y)*z + z^2")
    for s, q in zip(cat.sextactic, cat.conics):
        assert contact_order(cat.E, q, s) == 6


def test_nodal_symmetry():
    cat = nodal_catalog()
    w = nodal_symmetry()
    assert act(cat.E, w).proportional(cat.E)
    assert w.apply(cat.sextactic[0]) == cat.sextactic[1]
    assert act(cat.conics[0], w).proportional(cat.conics[1])


def projective(t):
    flat = [c for row in t.m for c in row]
    lead = next(c for c in flat if not c.is_zero()).inv()
    return tuple(c * lead for c in flat)


def test_group_orders_and_closure():
    # the groups act on P^2, so closure holds up to scalars
    for name, order in (("G", 9), ("Gprime", 27), ("Gsecond", 54)):
        elems = group_elements(name)
        s = {projective(t) for t in elems}
        assert len(s) == order
        assert all(projective(a @ b) in s for a in elems for b in elems)


def test_g1g2():
    t = g1() @ g2()
    assert t == LinearChange.diagonal(W, W, ONE)


def test_group_fixes_fermat():
    F = P("x^3 + y^3 + z^3")
    assert all(act(F, t).proportional(F) for t in group_elements("Gsecond"))


def test_orbits():
    assert len(orbit(ProjPoint.parse("(1:1:-a)"), "Gprime")) == 27
    base = set(fermat_catalog().base_points)
    assert set(orbit(ProjPoint.parse("(1:1:0)"), "Gprime")) == base
    t = g1() @ g2()
    cyc = orbit(fermat_catalog().conics[ConicId(1, 0)], [LinearChange.identity(), t, t @ t])
    assert {fermat_catalog().id_of(q) for q in cyc} == {ConicId(1, s) for s in range(3)}


def test_stabilizer_of_p1():
    p1 = fermat_catalog().base_points[0]
    stab = [t for t in group_elements("Gprime") if t.apply(p1) == p1]
    t = g1() @ g2()
    assert set(stab) == {LinearChange.identity(), t, t @ t}


def test_fermat_catalog():
    cat = fermat_catalog()
    assert len(cat.conics) == 27
    q = cat.conics[ConicId(1, 0)]
    p1 = cat.base_points[0]
    assert q.evaluate(p1).is_zero()
    # tangent to z = 0 at p1: restricted to z = 0 the conic is a square
    assert all(c.evaluate(p1).is_zero() for c in (q.partial(0), q.partial(1)))
    seed = P("(x - y)^2 - z*(a^2*x + a^2*y + 2*a*z)")
    image = act(seed, g2())
    assert image.proportional(P("(x - w^2*y)^2 - z*(a^2*x + a^2*w^2*y + 2*a*z)"))
    assert fermat_catalog().id_of(image)


def test_fiber_over_p1():
    cat = fermat_catalog()
    fiber = {cat.conics[ConicId(1, s)] for s in range(3)}
    expected = {P(f"(x - y)^2 - z*(({b})^2*x + ({b})^2*y + 2*({b})*z)").normalize() for b in ("a", "w*a", "w^2*a")}
    assert fiber == expected


def test_partition_and_pairs():
    part = partition()
    assert sorted(set(part.values())) == list(range(1, 10))
    orbs = pair_orbits()
    assert len(orbs) == 13 and all(o.size == 27 for o in orbs)
    assert sum(o.same_fiber for o in orbs) == 1
    assert acts_freely() == (True, True)


def test_coolidge():
    assert coolidge_count(3, 1, 0, 0) == 3
    assert coolidge_count(3, 0, 0, 1) == 27
    assert coolidge_count(3, 0, 1, 0) == 0


def test_build():
    cat = nodal_catalog()
    assert build([cat.E, cat.conics[0]]).degree == 5
    fc = fermat_catalog()
    assert build([fc.F] + [fc.conics[ConicId(1, s)] for s in range(3)]).degree == 9
    with pytest.raises(ArrangementError):
        build([cat.E, cat.E])
    with pytest.raises(ArrangementError):
        build([cat.E, cat.E * P("x")])
    with pytest.raises(ArrangementError):
        build([P("x^2")])
    with pytest.raises(ArrangementError):
        nodal_arrangement([1, 1])


def test_conic_id_parse():
    assert ConicId.parse("P3:2") == ConicId(3, 2)
    for bad in ("P0:1", "P3:3", "3-2", "Px:1"):
        with pytest.raises(ValueError):
            ConicId.parse(bad)


def test_catalog_json():
    import json

    d = json.loads(catalog_json("fermat"))
    assert len(d["conics"]) == 27 and d["conics"][0]["id"] == "P1:0"
    assert len(json.loads(catalog_json("nodal"))["conics"]) == 3
