"""Singular points, local Tjurina and Milnor numbers, type recognition and
conic-pair intersection patterns."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .cayley import local_germ
from .exactfield import ZERO, K
from .polyring import (
    HomPoly,
    ProjPoint,
    common_zeros,
    dehomogenize_binary,
    intersection_points,
    resultant,
    roots_in_field,
    seeded_changes,
    squarefree_decomposition,
)


class NonIsolatedError(RuntimeError):
    pass


class CommonComponentError(ValueError):
    pass


class NotSingularError(ValueError):
    pass


N_START, N_STEP, N_CAP = 8, 4, 40


# local algebra ------------------------------------------------------------------


def _germ_partial(germ: dict, var: int) -> dict:
    out = {}
    for (a, b), v in germ.items():
        e = (a, b)[var]
        if e:
            out[(a - 1, b) if var == 0 else (a, b - 1)] = v * e
    return out


def _local_key(m):
    # degree first, then prefer powers of s; lowest key is the pivot
    return (m[0] + m[1], m[1])


def _truncated_colength(gens: list[dict], N: int) -> int:
    """dim K[s,t] / (gens + m^N) by sparse exact elimination."""
    gens = [{m: c for m, c in g.items() if m[0] + m[1] < N} for g in gens]
    gens = [g for g in gens if g]
    pivots: dict = {}
    rows = []
    for g in gens:
        order = min(m[0] + m[1] for m in g)
        for deg in range(N - order):
            for i in range(deg + 1):
                sh = (deg - i, i)
                row = {}
                for (a, b), c in g.items():
                    if a + b + deg < N:
                        row[(a + sh[0], b + sh[1])] = c
                rows.append(row)
    rows.sort(key=lambda r: min(map(_local_key, r)))
    for row in rows:
        while row:
            lead = min(row, key=_local_key)
            prow = pivots.get(lead)
            if prow is None:
                inv = row[lead].inv()
                pivots[lead] = {m: c * inv for m, c in row.items()}
                break
            fac = row[lead]
            for m, c in prow.items():
                v = row.get(m, ZERO) - fac * c
                if v:
                    row[m] = v
                else:
                    row.pop(m, None)
    return N * (N + 1) // 2 - len(pivots)


def _stabilized(gens: list[dict]) -> int:
    prev = None
    N = N_START
    while N <= N_CAP:
        val = _truncated_colength(gens, N)
        if val == prev:
            return val
        prev = val
        N += N_STEP
    raise NonIsolatedError(f"local algebra dimension did not stabilize by N = {N_CAP}")


# double points: restriction to the smooth curve g_u = 0 --------------------------


def _shear(germ: dict, lam: K) -> dict:
    """g(s + lam t, t)."""
    from math import comb

    out: dict = {}
    for (a, b), c in germ.items():
        for i in range(a + 1):
            key = (i, b + a - i)
            v = c * comb(a, i) * lam ** (a - i) if a - i else c
            out[key] = out.get(key, ZERO) + v
    return {m: c for m, c in out.items() if c}


def _series_order(series: list):
    return next((k for k, v in enumerate(series) if v), None)


def _double_point_numbers(germ: dict) -> tuple[int, int]:
    """(tau, mu) at a point of multiplicity 2.

    With the quadratic part brought to a*u^2, g_u = 0 is a smooth curve
    u = phi(v), so K{u,v}/(g_u, g_v) and K{u,v}/(g, g_u, g_v) are quotients
    of K{v}: mu = ord g_v(phi, v) and tau = min(ord g(phi, v), mu).
    """
    from .cayley import _eval_along, implicit_series

    a = germ.get((2, 0), ZERO)
    b = germ.get((1, 1), ZERO)
    c = germ.get((0, 2), ZERO)
    if b * b - a * c * 4:
        return 1, 1
    if not a:
        germ = {(j, i): v for (i, j), v in germ.items()}
        a, b = c, ZERO
    g = _shear(germ, -b / (a * 2)) if b else germ
    gu = _germ_partial(g, 0)
    gv = _germ_partial(g, 1)
    swapped = {(j, i): v for (i, j), v in gu.items()}
    n = 16
    while n <= 64:
        phi = implicit_series(swapped, n)
        v = [ZERO, K(1)] + [ZERO] * (n - 2)
        mu = _series_order(_eval_along(gv, phi, v, n))
        if mu is not None:
            og = _series_order(_eval_along(g, phi, v, n))
            return (mu if og is None else min(og, mu)), mu
        n *= 2
    raise NonIsolatedError("the singular point is not isolated")


# public local invariants -------------------------------------------------------------


def _singular_germ(f: HomPoly, p: ProjPoint) -> dict:
    germ = local_germ(f, p)
    if any(a + b < 2 for (a, b) in germ):
        raise NotSingularError(f"{p} is not a singular point")
    return germ


def local_numbers(f: HomPoly, p: ProjPoint, method: str = "auto") -> tuple[int, int]:
    """(tau, mu) at p.  ``method`` is "auto", "truncation" or "double-point"."""
    g = _singular_germ(f, p)
    mult = min(a + b for (a, b) in g)
    if method == "double-point" or (method == "auto" and mult == 2):
        if mult != 2:
            raise ValueError("the double-point method needs multiplicity 2")
        return _double_point_numbers(g)
    gs, gt = _germ_partial(g, 0), _germ_partial(g, 1)
    return _stabilized([g, gs, gt]), _stabilized([gs, gt])


def local_tjurina(f: HomPoly, p: ProjPoint, method: str = "auto") -> int:
    return local_numbers(f, p, method)[0]


def local_milnor(f: HomPoly, p: ProjPoint, method: str = "auto") -> int:
    return local_numbers(f, p, method)[1]


def multiplicity(f: HomPoly, p: ProjPoint) -> int:
    return min(a + b for (a, b) in local_germ(f, p))


@dataclass(frozen=True)
class SingularityReport:
    point: ProjPoint
    tjurina: int
    milnor: int
    multiplicity: int
    type_tag: str

    def to_dict(self) -> dict:
        return {
            "point": str(self.point),
            "tjurina": self.tjurina,
            "milnor": self.milnor,
            "multiplicity": self.multiplicity,
            "type": self.type_tag,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def type_tag(tau: int, mu: int, mult: int) -> str:
    if mult == 2 and tau == mu:
        return f"A{tau}"
    if mult == 3 and tau == mu == 10:
        return "J_2_0"
    return "Unrecognized"


def classify(f: HomPoly, p: ProjPoint, method: str = "auto") -> SingularityReport:
    tau, mu = local_numbers(f, p, method)
    m = multiplicity(f, p)
    return SingularityReport(p, tau, mu, m, type_tag(tau, mu, m))


def census(reports) -> Counter:
    return Counter(r.type_tag for r in reports)


# singular points -----------------------------------------------------------------


@dataclass(frozen=True)
class SingularLocus:
    points: tuple[ProjPoint, ...]
    residual_degree: int  # intersection points (with multiplicity) not solved over K

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def _admissible(f: HomPoly, g: HomPoly):
    for T in seeded_changes():
        F, G = f.substitute(T), g.substitute(T)
        if F.evaluate((0, 0, 1)) or G.evaluate((0, 0, 1)):
            yield T, F, G


def _finest_resultant(f: HomPoly, g: HomPoly, limit: int = 4) -> HomPoly:
    """Resultant in the seeded chart separating the most intersection points."""
    best, best_count = None, -1
    for n, (_, F, G) in enumerate(_admissible(f, g)):
        R = resultant(F, G, 2)
        if R.is_zero():
            raise CommonComponentError("components share a factor")
        u, inf = dehomogenize_binary(R, (0, 1))
        count = sum(a.deg for a, _ in squarefree_decomposition(u)) + (1 if inf else 0)
        if count > best_count:
            best, best_count = R, count
        if n + 1 >= limit:
            break
    return best


def unsolved_pattern(f: HomPoly, g: HomPoly) -> list[int]:
    """Multiplicities of the intersection points of f and g lying outside K."""
    R = _finest_resultant(f, g)
    u, _ = dehomogenize_binary(R, (0, 1))
    out = []
    for a, mult in squarefree_decomposition(u):
        out.extend([mult] * (a.deg - len(roots_in_field(a))))
    return sorted(out, reverse=True)


def _unsolved_degree(f: HomPoly, g: HomPoly) -> int:
    return sum(unsolved_pattern(f, g))


def singular_points(f: HomPoly, components=None) -> SingularLocus:
    """K-rational singular points of f = 0.

    With ``components`` (the irreducible factors of f) the candidates are the
    singular points of each component and all pairwise intersections; without
    them, the common zeros of the partial derivatives are solved directly.
    """
    grad = f.gradient()
    found: set[ProjPoint] = set()
    residual = 0
    if components:
        comps = list(components)
        for c in comps:
            if c.degree >= 2:
                found.update(_critical_points(c))
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                found.update(intersection_points(comps[i], comps[j]))
                residual += _unsolved_degree(comps[i], comps[j])
    else:
        found.update(_critical_points(f))
    pts = [p for p in found if all(g.evaluate(p).is_zero() for g in grad) and f.evaluate(p).is_zero()]
    return SingularLocus(tuple(sorted(pts, key=lambda p: p.sort_key())), residual)


def _critical_points(f: HomPoly) -> list[ProjPoint]:
    grad = [g for g in f.gradient() if not g.is_zero()]
    if f.degree == 2:
        # a conic: the singular locus is the projectivized kernel of its matrix
        from .linalg import nullspace

        rows = [[g.coefficient(m) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1))] for g in grad]
        return [ProjPoint(*v) for v in nullspace(rows, 3)] if len(nullspace(rows, 3)) == 1 else []
    pairs = [(0, 1), (0, 2), (1, 2)]
    for i, j in pairs:
        if max(i, j) >= len(grad):
            continue
        try:
            pts = common_zeros([grad[i], grad[j]] + [g for k, g in enumerate(grad) if k not in (i, j)])
        except ValueError:
            continue
        return [p for p in pts if f.evaluate(p).is_zero()]
    raise NonIsolatedError("partial derivatives share a common factor")


# conic pairs ----------------------------------------------------------------------


@dataclass(frozen=True)
class PairIntersectionType:
    multiplicity_pattern: tuple[int, ...]
    summary: str

    def to_dict(self) -> dict:
        return {"pattern": list(self.multiplicity_pattern), "summary": self.summary}


def _summary(pattern: tuple[int, ...]) -> str:
    if pattern == (1, 1, 1, 1):
        return "FourNodes"
    if pattern == (2, 1, 1):
        return "TacnodePlusTwoNodes"
    return "Other"


def conic_pair_type(q1: HomPoly, q2: HomPoly, charts: int = 2) -> PairIntersectionType:
    """Intersection multiplicity pattern of two conics.

    A projection can merge two intersection points lying on a line through
    the projection center, so the pattern is computed in several seeded
    coordinate systems; the finest pattern is kept and must be observed in at
    least ``charts`` of them.
    """
    from .polyring import multiplicity_pattern

    seen: Counter = Counter()
    for _, F, G in _admissible(q1, q2):
        R = resultant(F, G, 2)
        if R.is_zero():
            raise CommonComponentError("the conics share a component")
        seen[tuple(multiplicity_pattern(R, (0, 1)))] += 1
    finest = max(seen, key=len)
    if seen[finest] < charts:
        raise RuntimeError(f"pattern {finest} not confirmed in {charts} charts")
    if sum(finest) != q1.degree * q2.degree:
        raise AssertionError("Bezout violated")
    return PairIntersectionType(finest, _summary(finest))


# arrangement census -----------------------------------------------------------------


@dataclass(frozen=True)
class Census:
    reports: tuple[SingularityReport, ...]
    residual_nodes: int  # simple intersections of two components outside K
    residual_other: tuple[int, ...]  # non-simple intersections outside K

    @property
    def tjurina_sum(self) -> int:
        return sum(r.tjurina for r in self.reports) + self.residual_nodes + sum(self.residual_other)

    def counts(self) -> Counter:
        c = census(self.reports)
        if self.residual_nodes:
            c["A1"] += self.residual_nodes
        return c

    def to_dict(self) -> dict:
        return {
            "points": [r.to_dict() for r in self.reports],
            "residual_nodes": self.residual_nodes,
            "types": dict(sorted(self.counts().items())),
        }


def arrangement_census(components) -> Census:
    """Local reports at the K-rational singular points plus the transversal
    intersections that are not K-rational.  An unsolved simple intersection of
    two smooth components counts as a node; the residual is complete only when
    ``tjurina_sum`` matches the global Tjurina number."""
    comps = list(components)
    f = comps[0]
    for c in comps[1:]:
        f = f * c
    locus = singular_points(f, comps)
    reports = tuple(classify(f, p) for p in locus)
    simple, other = 0, []
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            for m in unsolved_pattern(comps[i], comps[j]):
                if m == 1:
                    simple += 1
                else:
                    other.append(m)
    return Census(reports, simple, tuple(other))
