"""Hessian, second Hessian, osculating conics, contact orders and sextactic points."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exactfield import ONE, ZERO, K
from .linalg import nullspace
from .polyring import (
    HomPoly,
    ProjPoint,
    det3,
    intersection_points,
    monomials,
    resultant,
)

INFINITE = float("inf")


class NotOnCurveError(ValueError):
    pass


class SingularPointError(ValueError):
    pass


class InflectionPointError(ValueError):
    pass


class ContactCapError(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"contact order not determined below truncation cap {cap}")
        self.cap = cap


# covariants -------------------------------------------------------------------


def second_partials(f: HomPoly) -> list[list[HomPoly]]:
    g = f.gradient()
    return [[g[i].partial(j) for j in range(3)] for i in range(3)]


def hessian(f: HomPoly) -> HomPoly:
    if f.degree < 2:
        raise ValueError("the Hessian needs degree at least 2")
    return det3(second_partials(f))


def _adjugate_entries(H):
    (fxx, fxy, fxz), (_, fyy, fyz), (_, _, fzz) = H
    return [
        fyy * fzz - fyz * fyz,
        fxx * fzz - fxz * fxz,
        fxx * fyy - fxy * fxy,
        fxy * fxz - fxx * fyz,
        fxy * fyz - fyy * fxz,
        fxz * fyz - fzz * fxy,
    ]


def _pairing_vector(Hh):
    (hxx, hxy, hxz), (_, hyy, hyz), (_, _, hzz) = Hh
    return [hxx, hyy, hzz, hyz * 2, hxz * 2, hxy * 2]


def _dot(u, v) -> HomPoly:
    total = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        total = total + a * b
    return total


def omega(f: HomPoly, h: HomPoly) -> HomPoly:
    """Trace pairing of the adjugate Hessian of f with the Hessian matrix of h."""
    return _dot(_adjugate_entries(second_partials(f)), _pairing_vector(second_partials(h)))


def psi(f: HomPoly, h: HomPoly) -> HomPoly:
    """Minus the determinant of the Hessian matrix of f bordered by grad h."""
    # -det [[0, b^T], [b, H]] = b^T adj(H) b
    A = _adjugate_entries(second_partials(f))
    hx, hy, hz = h.gradient()
    return (
        A[0] * hx * hx + A[1] * hy * hy + A[2] * hz * hz
        + (A[5] * hx * hy + A[4] * hx * hz + A[3] * hy * hz) * 2
    )


def _omega_triples(f: HomPoly, h: HomPoly):
    A = _adjugate_entries(second_partials(f))
    V = _pairing_vector(second_partials(h))
    omega_f = [_dot([a.partial(w) for a in A], V) for w in range(3)]
    omega_h = [_dot(A, [v.partial(w) for v in V]) for w in range(3)]
    return omega_f, omega_h


def second_hessian(f: HomPoly) -> HomPoly:
    """Cayley's second Hessian, a form of degree 12d - 27."""
    d = f.degree
    if d < 3:
        raise ValueError("the second Hessian needs degree at least 3")
    h = hessian(f)
    omega_f, omega_h = _omega_triples(f, h)
    gf, gh = f.gradient(), h.gradient()
    jac_oh = det3([gf, gh, omega_h])
    jac_of = det3([gf, gh, omega_f])
    jac_psi = det3([gf, gh, psi(f, h).gradient()])
    return (
        h * jac_oh * (12 * d * d - 54 * d + 57)
        + h * jac_of * ((d - 2) * (12 * d - 27))
        - jac_psi * (20 * (d - 2) ** 2)
    )


@dataclass(frozen=True)
class CayleyData:
    f: HomPoly

    @cached_property
    def h(self) -> HomPoly:
        return hessian(self.f)

    @cached_property
    def omega(self) -> HomPoly:
        return omega(self.f, self.h)

    @cached_property
    def psi(self) -> HomPoly:
        return psi(self.f, self.h)

    @cached_property
    def lam(self) -> HomPoly:
        return self.omega * self.h * (-3) + self.psi * 4


# local branches ---------------------------------------------------------------


def _chart(p: ProjPoint) -> tuple[int, tuple[int, int], tuple[K, K]]:
    c = p.chart()
    others = tuple(i for i in range(3) if i != c)
    inv = p.coords[c].inv()
    q = tuple(p.coords[i] * inv for i in others)
    return c, others, q


def local_germ(f: HomPoly, p: ProjPoint) -> dict:
    """Dehomogenize at the chart of p and translate p to the origin.

    Returns {(i, j): coeff} for the affine polynomial in (s, t), where s and
    t are the two non-chart coordinates in increasing index order.
    """
    c, (i, j), (qi, qj) = _chart(p)
    s, t, z = HomPoly.var(0), HomPoly.var(1), HomPoly.var(2)
    forms = [None, None, None]
    forms[i] = s + z.scale(qi)
    forms[j] = t + z.scale(qj)
    forms[c] = z
    g = f.compose(forms)
    return {(m[0], m[1]): v for m, v in g.terms.items()}


def _series_mul(a: list, b: list, n: int) -> list:
    out = [ZERO] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j in range(min(len(b), n - i)):
                if b[j]:
                    out[i + j] = out[i + j] + x * b[j]
    return out


def _series_inv(a: list, n: int) -> list:
    inv0 = a[0].inv()
    out = [ZERO] * n
    out[0] = inv0
    for k in range(1, n):
        acc = ZERO
        for j in range(1, min(k, len(a) - 1) + 1):
            if a[j] and out[k - j]:
                acc = acc + a[j] * out[k - j]
        out[k] = -acc * inv0
    return out


def _eval_along(germ: dict, s_series: list, t_series: list, n: int) -> list:
    """germ(s(param), t(param)) truncated to n terms."""
    max_a = max((a for a, _ in germ), default=0)
    max_b = max((b for _, b in germ), default=0)
    spow = [[ONE] + [ZERO] * (n - 1)]
    for _ in range(max_a):
        spow.append(_series_mul(spow[-1], s_series, n))
    tpow = [[ONE] + [ZERO] * (n - 1)]
    for _ in range(max_b):
        tpow.append(_series_mul(tpow[-1], t_series, n))
    out = [ZERO] * n
    for (a, b), v in germ.items():
        prod = _series_mul(spow[a], tpow[b], n)
        for k in range(n):
            if prod[k]:
                out[k] = out[k] + v * prod[k]
    return out


def _partial_germ(germ: dict, var: int) -> dict:
    out = {}
    for (a, b), v in germ.items():
        e = (a, b)[var]
        if e:
            key = (a - 1, b) if var == 0 else (a, b - 1)
            out[key] = v * e
    return out


def implicit_series(germ: dict, n: int) -> list:
    """phi with germ(x, phi(x)) = O(x^n), given germ(0,0) = 0 and d/dt germ(0,0) != 0.

    Newton iteration on truncated power series, doubling the precision.
    """
    x = [ZERO, ONE] + [ZERO] * (n - 2)
    dg = _partial_germ(germ, 1)
    phi = [ZERO] * n
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        val = _eval_along(germ, x[:prec], phi[:prec], prec)
        der = _eval_along(dg, x[:prec], phi[:prec], prec)
        corr = _series_mul(val, _series_inv(der, prec), prec)
        phi = [phi[k] - corr[k] if k < prec else phi[k] for k in range(n)]
    return phi


@dataclass
class BranchSeries:
    """Local parametrization (param, phi(param)) of a smooth branch at ``center``.

    ``param_var`` says which chart coordinate is the parameter (0 for s, 1 for
    t); ``s`` and ``t`` hold the two affine coordinate series.
    """

    center: ProjPoint
    order: int
    param_var: int
    s: list
    t: list

    @classmethod
    def expand(cls, f: HomPoly, p: ProjPoint, order: int) -> "BranchSeries":
        germ = local_germ(f, p)
        if germ.get((0, 0), ZERO):
            raise NotOnCurveError(f"{p} is not on the curve")
        gs, gt = germ.get((1, 0), ZERO), germ.get((0, 1), ZERO)
        if not gs and not gt:
            raise SingularPointError(f"{p} is a singular point of the curve")
        if gt:
            param_var, germ_o = 0, germ
        else:
            param_var, germ_o = 1, {(b, a): v for (a, b), v in germ.items()}
        n = order + 1
        x = [ZERO, ONE] + [ZERO] * (n - 2)
        phi = implicit_series(germ_o, n)
        if param_var == 0:
            return cls(p, order, 0, x, phi)
        return cls(p, order, 1, phi, x)

    def along(self, g: HomPoly) -> list:
        germ = local_germ(g, self.center)
        return _eval_along(germ, self.s, self.t, self.order + 1)


def _order(series: list) -> int | None:
    return next((k for k, v in enumerate(series) if v), None)


def _check_smooth_point(f: HomPoly, p: ProjPoint):
    if f.evaluate(p):
        raise NotOnCurveError(f"{p} is not on the curve")
    if all(not g.evaluate(p) for g in f.gradient()):
        raise SingularPointError(f"{p} is a singular point of the curve")


def contact_order(f: HomPoly, g: HomPoly, p: ProjPoint, start: int = 8, cap: int = 64):
    """Intersection multiplicity at p of g with the smooth branch of f through p.

    Returns ``INFINITE`` when g contains the branch.
    """
    _check_smooth_point(f, p)
    n = start
    while True:
        br = BranchSeries.expand(f, p, n)
        k = _order(br.along(g))
        if k is not None:
            return k
        if n >= cap:
            if _share_factor(f, g):
                return INFINITE
            raise ContactCapError(cap)
        n = min(2 * n, cap)


def _share_factor(f: HomPoly, g: HomPoly) -> bool:
    from .polyring import seeded_changes

    for T in seeded_changes():
        F, G = f.substitute(T), g.substitute(T)
        if F.evaluate((0, 0, 1)) or G.evaluate((0, 0, 1)):
            return resultant(F, G, 2).is_zero()
    raise RuntimeError("no admissible projection")


# osculating conics -------------------------------------------------------------


def _linear_form(vals) -> HomPoly:
    return HomPoly(1, {(1, 0, 0): vals[0], (0, 1, 0): vals[1], (0, 0, 1): vals[2]})


def polar_conic(f: HomPoly, p: ProjPoint) -> HomPoly:
    H = second_partials(f)
    terms = {}
    for i in range(3):
        for j in range(3):
            e = [0, 0, 0]
            e[i] += 1
            e[j] += 1
            e = tuple(e)
            terms[e] = terms.get(e, ZERO) + H[i][j].evaluate(p)
    return HomPoly(2, terms)


def _osculation_checks(f: HomPoly, p: ProjPoint, h: HomPoly):
    _check_smooth_point(f, p)
    if h.evaluate(p).is_zero():
        raise InflectionPointError(f"{p} is an inflection point")


def cayley_conic_literal(f: HomPoly, p: ProjPoint, data: CayleyData | None = None) -> HomPoly:
    """The printed closed form D2 - (2 D_h / (3 h) + Lambda(p) D_f) D_f, taken verbatim."""
    data = data or CayleyData(f)
    _osculation_checks(f, p, data.h)
    hp = data.h.evaluate(p)
    Df = _linear_form([g.evaluate(p) for g in f.gradient()])
    Dh = _linear_form([g.evaluate(p) for g in data.h.gradient()])
    lin = Dh.scale(K(2) / (hp * 3)) + Df.scale(data.lam.evaluate(p))
    return polar_conic(f, p) - lin * Df


def osculating_conic(f: HomPoly, p: ProjPoint, data: CayleyData | None = None) -> HomPoly:
    """Closed form D2 - (2 D_h / (3 h) + Lambda D_f / (9 h^2)) D_f at p, normalized.

    Taken verbatim, the printed expression multiplies D_f by Lambda(p) with no
    normalizing factor; that is not homogeneous in the representative of p and
    fails the contact test (contact 4).  Fitting against the series oracle at
    cubic, quartic and quintic points gives the factor 1/(9 h(p)^3) on the
    Lambda D_f^2 term, which has the right weight and yields contact >= 5.
    """
    data = data or CayleyData(f)
    _osculation_checks(f, p, data.h)
    hp = data.h.evaluate(p)
    Df = _linear_form([g.evaluate(p) for g in f.gradient()])
    Dh = _linear_form([g.evaluate(p) for g in data.h.gradient()])
    lin = Dh.scale(K(2) / (hp * 3)) + Df.scale(data.lam.evaluate(p) / (hp * hp * hp * 9))
    return (polar_conic(f, p) - lin * Df).normalize()


def osculating_conic_via_series(f: HomPoly, p: ProjPoint, h: HomPoly | None = None) -> HomPoly:
    """The unique conic with contact >= 5, from the branch expansion."""
    h = h if h is not None else hessian(f)
    _osculation_checks(f, p, h)
    br = BranchSeries.expand(f, p, 6)
    cols = []
    for m in monomials(2):
        cols.append(br.along(HomPoly(2, {m: ONE}))[:5])
    rows = [[cols[j][k] for j in range(6)] for k in range(5)]
    ker = nullspace(rows, 6)
    if len(ker) != 1:
        raise AssertionError(f"osculating conic system has kernel of dimension {len(ker)}")
    return HomPoly.from_vector(2, ker[0]).normalize()


# sextactic points --------------------------------------------------------------


def sextactic_points(f: HomPoly) -> list[ProjPoint]:
    """K-rational sextactic points: smooth, non-inflection points of f = 0 on
    the second Hessian whose osculating conic has contact at least 6."""
    if f.degree != 3:
        raise ValueError("sextactic point search is implemented for cubics")
    data = CayleyData(f)
    h2 = second_hessian(f)
    if h2.is_zero():
        return []
    grad = f.gradient()
    out = []
    for p in intersection_points(f, h2):
        if all(g.evaluate(p).is_zero() for g in grad) or data.h.evaluate(p).is_zero():
            continue
        q = osculating_conic(f, p, data)
        if contact_order(f, q, p) >= 6:
            out.append(p)
    return out
