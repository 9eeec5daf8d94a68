import pytest

from sextactic.arrangements import fermat_arrangement, nodal_arrangement, nodal_catalog
from sextactic.exactfield import W, K
from sextactic.linalg import nullspace
from sextactic.polyring import HomPoly, dim_s
from sextactic.syzygy import (
    _exact_matrix,
    ar_basis,
    ar_dimension,
    certify,
    criterion_lhs,
    generator_degrees,
    is_syzygy,
    jacobian_hilbert,
    koszul_triples,
    mdr,
    never_free_scan,
    saito_determinant,
    total_tjurina,
)

P = HomPoly.parse
F = P("x^3 + y^3 + z^3")
E = nodal_catalog().E
EQ1 = nodal_arrangement([1]).product


def exact_ar_dimension(f, k):
    return len(nullspace(_exact_matrix(f.gradient(), k, f.degree), 3 * dim_s(k)))


@pytest.mark.parametrize("f,k", [(F, 1), (F, 2), (E, 2), (EQ1, 1), (EQ1, 2), (EQ1, 3)])
def test_certified_dimension_matches_exact_nullspace(f, k):
    assert ar_dimension(f, k) == exact_ar_dimension(f, k)


def test_fermat_has_no_linear_syzygy():
    assert ar_dimension(F, 1) == 0
    assert mdr(F) == 2


def test_koszul_bound():
    for f in (F, E, EQ1):
        for t in koszul_triples(f):
            assert is_syzygy(f, t)
        assert ar_dimension(f, f.degree - 1) >= 2


def test_mdr_examples():
    assert ar_dimension(EQ1, 1) == 0 and ar_dimension(EQ1, 2) >= 1
    assert mdr(nodal_arrangement([1, 2]).product) == 3
    assert mdr(fermat_arrangement(["P1:0", "P1:1", "P1:2"]).product) == 3


def test_basis_elements_are_syzygies():
    b = ar_basis(EQ1, 4)
    assert b.dimension == ar_dimension(EQ1, 4)
    assert all(is_syzygy(EQ1, t) for t in b.basis)


def test_jacobian_hilbert():
    assert all(jacobian_hilbert(F, k) == 0 for k in range(4, 8))
    assert jacobian_hilbert(E, 6) == jacobian_hilbert(E, 7) == 1
    assert jacobian_hilbert(EQ1, 9) == jacobian_hilbert(EQ1, 10) == 12


def test_total_tjurina():
    assert total_tjurina(nodal_arrangement([1, 2]).product) == 27
    assert total_tjurina(F) == 0
    assert total_tjurina(E) == 1


def test_generator_degrees():
    assert generator_degrees(EQ1) == [2, 2]
    assert generator_degrees(fermat_arrangement(["P1:0"]).product) == [2, 3, 3]


def test_certificates():
    c = certify(nodal_arrangement([1, 2]).product)
    assert (c.verdict, c.exponents, c.degree, c.mdr, c.tjurina) == ("Free", (3, 3), 7, 3, 27)
    c = certify(fermat_arrangement(["P1:0", "P2:0"]).product)
    assert (c.verdict, c.exponents, c.tjurina) == ("NearlyFree", (3, 4), 26)


def test_smooth_cubic_is_msyzygy():
    c = certify(F)
    assert c.verdict == "MSyzygy" and c.tjurina == 0


def test_certificate_consistency():
    for f in (EQ1, nodal_arrangement([1, 2]).product, fermat_arrangement(["P3:1"]).product):
        c = certify(f)
        d = c.degree
        assert c.mdr == min(c.generator_degrees)
        if c.verdict == "Free":
            d1, d2 = c.generator_degrees
            assert d1 + d2 == d - 1 and c.tjurina == (d - 1) ** 2 - d1 * d2
            assert 2 * c.mdr <= d - 1 and criterion_lhs(d, c.mdr) == c.tjurina
        if c.verdict == "NearlyFree":
            d1, d2, d3 = c.generator_degrees
            assert d2 == d3 and d1 + d2 == d
            assert criterion_lhs(d, c.mdr) == c.tjurina + 1


def test_saito_criterion_for_free_arrangement():
    from sextactic.syzygy import engine

    f = nodal_arrangement([1, 3]).product
    certify(f)
    g1, g2 = [t for _, t in engine(f).generators]
    assert saito_determinant(f, g1, g2).proportional(f)


def test_scalar_invariance():
    f = nodal_arrangement([2]).product
    assert certify(f.scale(W + K(3))).to_dict() == certify(f).to_dict()


def test_json_shape():
    import json

    d = json.loads(certify(EQ1).to_json())
    assert set(d) == {"degree", "mdr", "tjurina", "verdict", "exponents", "generator_degrees", "hilbert_tail"}


def test_never_free_scan():
    assert never_free_scan(2) == {"predicted_tjurina": 26, "discriminant": -4, "free_possible": False}
    assert never_free_scan(1)["predicted_tjurina"] == 11 and never_free_scan(1)["discriminant"] == -4
    assert never_free_scan(9) == {"predicted_tjurina": 243, "discriminant": -228, "free_possible": False}
    with pytest.raises(ValueError):
        never_free_scan(0)
