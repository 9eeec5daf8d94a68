"""Catalog curves, their hyperosculating conics, the monomial group actions on
the Fermat cubic, orbits, the 9-set partition and arrangement assembly."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

from .exactfield import ONE, ZERO, W, K
from .polyring import HomPoly, LinearChange, ProjPoint, act

# catalog data ---------------------------------------------------------------------

NODAL_CUBIC = "x^3 + y^3 - x*y*z"
NODAL_POINTS = ("(1:1:2)", "(w:w^2:2)", "(w^2:w:2)")
NODAL_CONICS = (
    "21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2",
    "21*(w*x^2 + w^2*y^2) - 22*x*y - 6*(w^2*x + w*y)*z + z^2",
    "21*(w^2*x^2 + w*y^2) - 22*x*y - 6*(w*x + w^2*y)*z + z^2",
)
FERMAT_CUBIC = "x^3 + y^3 + z^3"
FERMAT_SEED_POINT = "(1:1:-a)"
FERMAT_SEED_CONIC = "(x - y)^2 - z*(a^2*x + a^2*y + 2*a*z)"
BASE_POINTS = (
    "(1:1:0)", "(1:w:0)", "(1:w^2:0)",
    "(0:1:1)", "(0:1:w)", "(0:1:w^2)",
    "(1:0:1)", "(w:0:1)", "(w^2:0:1)",
)


class ArrangementError(ValueError):
    pass


@dataclass(frozen=True)
class NodalCatalog:
    E: HomPoly
    sextactic: tuple[ProjPoint, ...]
    conics: tuple[HomPoly, ...]


@lru_cache(maxsize=None)
def nodal_catalog() -> NodalCatalog:
    return NodalCatalog(
        HomPoly.parse(NODAL_CUBIC),
        tuple(ProjPoint.parse(s) for s in NODAL_POINTS),
        tuple(HomPoly.parse(q) for q in NODAL_CONICS),
    )


def nodal_symmetry() -> LinearChange:
    """(x:y:z) -> (w x : w^2 y : z), an automorphism of the nodal cubic."""
    return LinearChange.diagonal(W, W * W, ONE)


# groups -------------------------------------------------------------------------------


def g1() -> LinearChange:
    return LinearChange.diagonal(W, ONE, ONE)


def g2() -> LinearChange:
    return LinearChange.diagonal(ONE, W, ONE)


def gamma() -> LinearChange:
    """The 3-cycle (x:y:z) -> (z:x:y)."""
    return LinearChange([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


@lru_cache(maxsize=None)
def group_elements(which: str = "Gprime") -> tuple[LinearChange, ...]:
    """Exhaustive enumeration of G (order 9), G' (27) or G'' (54)."""
    roots = [ONE, W, W * W]
    diag = [LinearChange.diagonal(a, b, ONE) for a in roots for b in roots]
    if which == "G":
        perms = [(0, 1, 2)]
    elif which == "Gprime":
        perms = [(0, 1, 2), (2, 0, 1), (1, 2, 0)]
    elif which == "Gsecond":
        perms = list(itertools.permutations(range(3)))
    else:
        raise ValueError(f"unknown group {which!r}")
    out = []
    for perm in perms:
        P = _perm_matrix(perm)
        for D in diag:
            out.append(D @ P)
    if len(set(out)) != len(out):
        raise AssertionError("duplicate group elements")
    return tuple(out)


def _perm_matrix(perm) -> LinearChange:
    rows = [[ZERO] * 3 for _ in range(3)]
    for i, j in enumerate(perm):
        rows[i][j] = ONE
    return LinearChange(rows)


def conic_key(q: HomPoly):
    """Canonical up-to-scalar key, also the grlex comparison key."""
    n = q.normalize()
    return tuple((m, c.sort_key()) for m, c in n.sorted_terms())


def apply_to(x, t: LinearChange):
    if isinstance(x, ProjPoint):
        return t.apply(x)
    return act(x, t).normalize()


def orbit(x, group) -> list:
    """Closure of x (a point or a polynomial up to scalar) under the group."""
    elems = group_elements(group) if isinstance(group, str) else group
    seen: dict = {}
    for t in elems:
        y = apply_to(x, t)
        seen.setdefault(y.normalize() if isinstance(y, HomPoly) else y, None)
    key = (lambda p: p.sort_key()) if isinstance(x, ProjPoint) else conic_key
    return sorted(seen, key=key)


# Fermat catalog -----------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class ConicId:
    j: int  # base point index 1..9
    slot: int  # 0..2

    def __str__(self):
        return f"P{self.j}:{self.slot}"

    @classmethod
    def parse(cls, text: str) -> "ConicId":
        try:
            left, right = text.strip().upper().lstrip("P").split(":")
            cid = cls(int(left), int(right))
        except ValueError:
            raise ValueError(f"bad conic id {text!r}; expected Pj:slot") from None
        if not (1 <= cid.j <= 9 and 0 <= cid.slot <= 2):
            raise ValueError(f"conic id {text!r} out of range")
        return cid


@dataclass(frozen=True)
class FermatCatalog:
    F: HomPoly
    base_points: tuple[ProjPoint, ...]
    conics: dict  # ConicId -> HomPoly (normalized)
    sextactic: dict  # ConicId -> ProjPoint (the point of contact 6)

    def ids(self) -> list[ConicId]:
        return sorted(self.conics)

    def id_of(self, q: HomPoly) -> ConicId:
        key = conic_key(q)
        for cid, c in self.conics.items():
            if conic_key(c) == key:
                return cid
        raise KeyError("not a catalog conic")

    def permutation(self, t: LinearChange) -> dict:
        """ConicId -> ConicId induced by t."""
        return {cid: self.id_of(act(q, t)) for cid, q in self.conics.items()}


@lru_cache(maxsize=None)
def fermat_catalog() -> FermatCatalog:
    F = HomPoly.parse(FERMAT_CUBIC)
    seed_q = HomPoly.parse(FERMAT_SEED_CONIC)
    seed_p = ProjPoint.parse(FERMAT_SEED_POINT)
    base = tuple(ProjPoint.parse(s) for s in BASE_POINTS)
    pairs: dict = {}
    for t in group_elements("Gprime"):
        q = act(seed_q, t).normalize()
        pairs.setdefault(conic_key(q), (q, t.apply(seed_p)))
    if len(pairs) != 27:
        raise AssertionError(f"expected 27 conics, got {len(pairs)}")
    fibers: dict = {j: [] for j in range(1, 10)}
    for q, s in pairs.values():
        hits = [j for j, p in enumerate(base, 1) if q.evaluate(p).is_zero()]
        if len(hits) != 1:
            raise AssertionError("conic does not pass through exactly one base point")
        fibers[hits[0]].append((q, s))
    conics, points = {}, {}
    for j, members in fibers.items():
        if len(members) != 3:
            raise AssertionError(f"fiber P{j} has {len(members)} conics")
        for slot, (q, s) in enumerate(sorted(members, key=lambda m: conic_key(m[0]))):
            conics[ConicId(j, slot)] = q
            points[ConicId(j, slot)] = s
    return FermatCatalog(F, base, conics, points)


def partition() -> dict:
    """ConicId -> index j of the base point p_j the conic passes through."""
    return {cid: cid.j for cid in fermat_catalog().conics}


def validate_partition() -> bool:
    """Same fiber <=> tacnode pattern, checked on every pair-orbit representative."""
    from .singularities import conic_pair_type

    cat = fermat_catalog()
    for rep in pair_orbits():
        a, b = rep.pair
        summary = conic_pair_type(cat.conics[a], cat.conics[b]).summary
        expected = "TacnodePlusTwoNodes" if a.j == b.j else "FourNodes"
        if summary != expected:
            raise ArrangementError(f"pair {a}, {b}: {summary}, expected {expected}")
    return True


@dataclass(frozen=True)
class PairOrbit:
    pair: tuple[ConicId, ConicId]
    size: int
    same_fiber: bool


@lru_cache(maxsize=None)
def pair_orbits(group: str = "Gprime") -> tuple[PairOrbit, ...]:
    cat = fermat_catalog()
    perms = [cat.permutation(t) for t in group_elements(group)]
    ids = cat.ids()
    remaining = set(itertools.combinations(ids, 2))
    out = []
    while remaining:
        first = min(remaining)
        orb = {tuple(sorted((p[first[0]], p[first[1]]))) for p in perms}
        remaining -= orb
        rep = min(orb)
        out.append(PairOrbit(rep, len(orb), rep[0].j == rep[1].j))
    return tuple(sorted(out, key=lambda o: o.pair))


def acts_freely(group: str = "Gprime") -> tuple[bool, bool]:
    """(free on the 27 conics, free on the 351 unordered pairs)."""
    cat = fermat_catalog()
    ids = cat.ids()
    on_conics = on_pairs = True
    for t in group_elements(group):
        p = cat.permutation(t)
        if all(p[c] == c for c in ids):
            continue  # identity
        if any(p[c] == c for c in ids):
            on_conics = False
        if any({p[a], p[b]} == {a, b} for a, b in itertools.combinations(ids, 2)):
            on_pairs = False
    return on_conics, on_pairs


def coolidge_count(d: int, n: int, k: int, g: int) -> int:
    """Number of sextactic points of an irreducible curve of degree d with n nodes,
    k cusps and genus g."""
    return 3 * (d * d - 2 * n - 3 * k + 6 * (g - 1))


# arrangements ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Arrangement:
    components: tuple[HomPoly, ...]
    product: HomPoly

    @property
    def degree(self) -> int:
        return self.product.degree


def _share_factor(f: HomPoly, g: HomPoly) -> bool:
    from .cayley import _share_factor as share

    return share(f, g)


def _squarefree(c: HomPoly) -> bool:
    gx, gy, gz = c.gradient()
    for a, b, e in ((1, 2, 3), (2, -1, 5)):
        direction = gx.scale(K(a)) + gy.scale(K(b)) + gz.scale(K(e))
        if not direction.is_zero() and not _share_factor(c, direction):
            return True
    return False


def build(components) -> Arrangement:
    comps = tuple(components)
    if not comps:
        raise ArrangementError("empty arrangement")
    for i, c in enumerate(comps):
        if c.degree < 1:
            raise ArrangementError("components must have positive degree")
        for d_ in comps[:i]:
            if c.degree == d_.degree and c.proportional(d_):
                raise ArrangementError("repeated component")
            if _share_factor(c, d_):
                raise ArrangementError("components share a common factor")
        if c.degree > 1 and not _squarefree(c):
            raise ArrangementError("component is not squarefree")
    product = comps[0]
    for c in comps[1:]:
        product = product * c
    return Arrangement(comps, product)


def nodal_arrangement(indices) -> Arrangement:
    cat = nodal_catalog()
    idx = list(indices)
    if len(set(idx)) != len(idx) or any(i not in (1, 2, 3) for i in idx):
        raise ArrangementError("nodal conic indices must be distinct values in 1..3")
    return build([cat.E] + [cat.conics[i - 1] for i in idx])


def fermat_arrangement(ids) -> Arrangement:
    cat = fermat_catalog()
    ids = [ConicId.parse(i) if isinstance(i, str) else i for i in ids]
    if len(set(ids)) != len(ids):
        raise ArrangementError("duplicate conic selection")
    return build([cat.F] + [cat.conics[i] for i in ids])


def catalog_json(curve: str) -> str:
    from .polyring import format_poly

    if curve == "nodal":
        cat = nodal_catalog()
        data = {
            "curve": format_poly(cat.E),
            "conics": [
                {"id": str(i), "equation": format_poly(q), "sextactic_point": str(s)}
                for i, (q, s) in enumerate(zip(cat.conics, cat.sextactic), 1)
            ],
        }
    elif curve == "fermat":
        cat = fermat_catalog()
        data = {
            "curve": format_poly(cat.F),
            "base_points": [str(p) for p in cat.base_points],
            "conics": [
                {"id": str(cid), "equation": format_poly(cat.conics[cid]),
                 "sextactic_point": str(cat.sextactic[cid])}
                for cid in cat.ids()
            ],
        }
    else:
        raise ValueError(f"unknown curve {curve!r}")
    return json.dumps(data, indent=2)


