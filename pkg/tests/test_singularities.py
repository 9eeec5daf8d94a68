import pytest

from sextactic.arrangements import fermat_arrangement, fermat_catalog, nodal_arrangement, nodal_catalog
from sextactic.polyring import HomPoly, ProjPoint
from sextactic.singularities import (
    CommonComponentError,
    NotSingularError,
    arrangement_census,
    classify,
    conic_pair_type,
    local_milnor,
    local_numbers,
    local_tjurina,
    singular_points,
)
from sextactic.syzygy import total_tjurina

P = HomPoly.parse
E = nodal_catalog().E
S1 = ProjPoint.parse("(1:1:2)")


def test_singular_points():
    assert list(singular_points(E)) == [ProjPoint.parse("(0:0:1)")]
    assert list(singular_points(P("x^3 + y^3 + z^3"))) == []
    arr = nodal_arrangement([1])
    expected = {ProjPoint.parse("(0:0:1)"), S1}
    assert set(singular_points(arr.product)) == expected
    assert set(singular_points(arr.product, arr.components)) == expected


def test_local_numbers():
    f = nodal_arrangement([1]).product
    assert local_tjurina(f, S1) == 11
    assert local_tjurina(E, ProjPoint.parse("(0:0:1)")) == 1
    assert local_milnor(E, ProjPoint.parse("(0:0:1)")) == 1


def test_not_singular():
    with pytest.raises(NotSingularError):
        local_tjurina(E, S1)


def test_double_point_method_agrees_with_truncation_a3():
    arr = fermat_arrangement(["P1:0", "P1:1"])
    p = fermat_catalog().base_points[0]
    assert local_numbers(arr.product, p, "truncation") == local_numbers(arr.product, p, "double-point") == (3, 3)


def test_truncation_method_on_cusp_and_tacnode():
    cusp = P("y^2*z - x^3")
    o = ProjPoint.parse("(0:0:1)")
    assert local_numbers(cusp, o, "truncation") == local_numbers(cusp, o) == (2, 2)
    # non quasi-homogeneous germ: tau < mu
    g = P("x^5*z^0 + y^5 + x^2*y^2*z")
    assert local_numbers(g, o, "truncation") == (10, 11)


def test_j20_triple_point():
    arr = fermat_arrangement(["P1:0", "P1:1", "P1:2"])
    rep = classify(arr.product, fermat_catalog().base_points[0])
    assert (rep.multiplicity, rep.tjurina, rep.milnor, rep.type_tag) == (3, 10, 10, "J_2_0")


def test_classify_a11_and_json():
    rep = classify(nodal_arrangement([1]).product, S1)
    assert rep.type_tag == "A11"
    assert rep.to_dict() == {"point": "(1 : 1 : 2)", "tjurina": 11, "milnor": 11, "multiplicity": 2, "type": "A11"}


def test_conic_pair_types():
    cat = fermat_catalog()
    c = cat.conics
    from sextactic.arrangements import ConicId as C

    assert conic_pair_type(c[C(1, 0)], c[C(1, 1)]).summary == "TacnodePlusTwoNodes"
    assert conic_pair_type(c[C(1, 0)], c[C(2, 0)]).multiplicity_pattern == (1, 1, 1, 1)
    q = nodal_catalog().conics
    assert conic_pair_type(q[0], q[1]).summary == "FourNodes"


def test_conic_pair_common_component():
    q = nodal_catalog().conics[0]
    with pytest.raises(CommonComponentError):
        conic_pair_type(q, q.scale(2))


def test_census_equals_global_tjurina():
    for arr in (nodal_arrangement([1, 2]), fermat_arrangement(["P1:0", "P4:2"])):
        assert arrangement_census(arr.components).tjurina_sum == total_tjurina(arr.product)


def test_local_tjurina_equivariant():
    from sextactic.arrangements import group_elements
    from sextactic.polyring import act

    arr = fermat_arrangement(["P1:0", "P1:1"])
    p = fermat_catalog().base_points[0]
    for t in group_elements("Gprime")[::5]:
        assert local_tjurina(act(arr.product, t), t.apply(p)) == 3
