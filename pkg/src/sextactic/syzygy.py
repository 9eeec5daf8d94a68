"""Jacobian syzygies: AR(f), mdr, generator degrees, total Tjurina number and
the free / nearly free certification.

Dimensions of AR(f)_k are certified from both sides.  Reduction modulo a split
prime can only lower the rank of the map (a, b, c) -> a f_x + b f_y + c f_z, so
the modular kernel dimension U_k is an upper bound.  Exact syzygies, multiplied
by monomials and shown independent modulo p (hence over K), give a lower bound
L_k.  When L_k < U_k the missing generators are taken from an exact kernel
computation over K at that degree.  Every dimension reported is exact.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

import flint
import numpy as np

from .exactfield import K
from .linalg import BadPrimeError, Reducer, nullspace, rank_mod_p, split_primes
from .polyring import HomPoly, det3, dim_s, monomial_index, monomials


class CertificationError(RuntimeError):
    """The certified bounds could not be closed, or two certificates disagree."""


class NonReducedError(ValueError):
    pass


Triple = tuple[HomPoly, HomPoly, HomPoly]


@dataclass(frozen=True)
class GradedKernelBasis:
    degree: int
    basis: tuple[Triple, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def is_syzygy(f: HomPoly, triple: Triple) -> bool:
    fx, fy, fz = f.gradient()
    a, b, c = triple
    return (a * fx + b * fy + c * fz).is_zero()


def koszul_triples(f: HomPoly) -> list[Triple]:
    fx, fy, fz = f.gradient()
    z = HomPoly.zero(f.degree - 1)
    return [(fy, -fx, z), (fz, z, -fx), (z, fz, -fy)]


def _exact_matrix(grad, k: int, d: int) -> list[list[K]]:
    """Rows indexed by monomials of degree k + d - 1, columns by (i, m)."""
    rows_idx = monomial_index(k + d - 1)
    ncols = 3 * dim_s(k)
    mat = [[K(0)] * ncols for _ in range(len(rows_idx))]
    for i, g in enumerate(grad):
        for j, m in enumerate(monomials(k)):
            col = i * dim_s(k) + j
            for e, c in g.terms.items():
                mat[rows_idx[(m[0] + e[0], m[1] + e[1], m[2] + e[2])]][col] = c
    return mat


def _triple_from_vector(vec, k: int) -> Triple:
    n = dim_s(k)
    return tuple(HomPoly.from_vector(k, vec[i * n:(i + 1) * n]) for i in range(3))


def _integral(triple: Triple) -> Triple:
    den = math.lcm(1, *(c.d for t in triple for c in t.terms.values()))
    return tuple(t.scale(K(den)) for t in triple)


class SyzygyEngine:
    """Degree-by-degree certified computation of AR(f) and its minimal generators."""

    def __init__(self, f: HomPoly, n_primes: int = 3):
        if f.degree < 1:
            raise ValueError("f must have positive degree")
        self.f = f
        self.d = f.degree
        self.grad = f.gradient()
        self.reducers = []
        for p in split_primes(2 * n_primes + 2):
            red = Reducer(p, len(self.reducers) % 6)
            try:
                for g in self.grad:
                    for c in g.terms.values():
                        red(c)
            except BadPrimeError:
                continue
            self.reducers.append(red)
            if len(self.reducers) == n_primes:
                break
        self.generators: list[tuple[int, Triple]] = []
        self._gen_mod: dict[int, list[list[dict]]] = {}
        self.dims: dict[int, int] = {}

    # modular assembly -------------------------------------------------------

    def _matrix_mod(self, k: int, r: int) -> np.ndarray:
        red = self.reducers[r]
        rows_idx = monomial_index(k + self.d - 1)
        n = dim_s(k)
        mat = np.zeros((len(rows_idx), 3 * n), dtype=np.int64)
        for i, g in enumerate(self.grad):
            terms = [(e, red(c)) for e, c in g.terms.items()]
            for j, m in enumerate(monomials(k)):
                col = i * n + j
                for e, c in terms:
                    mat[rows_idx[(m[0] + e[0], m[1] + e[1], m[2] + e[2])], col] = c
        return mat

    def _reduce_generator(self, triple: Triple, r: int) -> list[dict]:
        red = self.reducers[r]
        return [{m: red(c) for m, c in t.terms.items()} for t in triple]

    def _generator_mod(self, index: int, r: int) -> list[dict]:
        cache = self._gen_mod.setdefault(r, [])
        while len(cache) <= index:
            cache.append(self._reduce_generator(self.generators[len(cache)][1], r))
        return cache[index]

    def _multiples_mod(self, k: int, r: int, extra: list[Triple] = ()) -> np.ndarray:
        cols_idx = monomial_index(k)
        n = dim_s(k)
        rows = []
        for gi, (j, _) in enumerate(self.generators):
            if j > k:
                continue
            comps = self._generator_mod(gi, r)
            for m in monomials(k - j):
                row = np.zeros(3 * n, dtype=np.int64)
                for i, comp in enumerate(comps):
                    for e, c in comp.items():
                        row[i * n + cols_idx[(m[0] + e[0], m[1] + e[1], m[2] + e[2])]] = c
                rows.append(row)
        for triple in extra:
            comps = self._reduce_generator(triple, r)
            row = np.zeros(3 * n, dtype=np.int64)
            for i, comp in enumerate(comps):
                for e, c in comp.items():
                    row[i * n + cols_idx[e]] = c
            rows.append(row)
        if not rows:
            return np.zeros((0, 3 * n), dtype=np.int64)
        return np.vstack(rows)

    # certified steps --------------------------------------------------------

    def _upper(self, k: int, r: int) -> int:
        p = self.reducers[r].p
        return 3 * dim_s(k) - rank_mod_p(self._matrix_mod(k, r), p)

    def _lower(self, k: int, r: int, extra=()) -> int:
        return rank_mod_p(self._multiples_mod(k, r, extra), self.reducers[r].p)

    def step(self, k: int) -> int:
        """Certify dim AR(f)_k and record new minimal generators of degree k."""
        if k in self.dims:
            return self.dims[k]
        for j in range(k):
            self.step(j)
        lower = self._lower(k, 0)
        upper = self._upper(k, 0)
        for r in range(1, len(self.reducers)):
            if lower == upper:
                break
            upper = min(upper, self._upper(k, r))
        if lower > upper:
            raise CertificationError(f"degree {k}: independent syzygies exceed the kernel bound")
        if lower < upper:
            self._extract_new_generators(k)
        else:
            self.dims[k] = upper
        return self.dims[k]

    def _extract_new_generators(self, k: int):
        kernel = nullspace(_exact_matrix(self.grad, k, self.d), 3 * dim_s(k))
        exact_dim = len(kernel)
        candidates = [_integral(_triple_from_vector(v, k)) for v in kernel]
        for r in range(len(self.reducers)):
            chosen: list[Triple] = []
            base = self._lower(k, r)
            for cand in candidates:
                if base + len(chosen) == exact_dim:
                    break
                if self._lower(k, r, chosen + [cand]) == base + len(chosen) + 1:
                    chosen.append(cand)
            if base + len(chosen) == exact_dim:
                for triple in chosen:
                    assert is_syzygy(self.f, triple)
                    self.generators.append((k, triple))
                self.dims[k] = exact_dim
                return
        raise CertificationError(f"degree {k}: could not certify new generators")

    def run(self, cap: int):
        for k in range(cap + 1):
            self.step(k)

    def basis(self, k: int) -> GradedKernelBasis:
        """Explicit basis of AR(f)_k chosen among monomial multiples of generators."""
        self.step(k)
        if self.dims[k] == 0:
            return GradedKernelBasis(k, ())
        p = self.reducers[0].p
        mult = self._multiples_mod(k, 0)
        rref, rk = flint.nmod_mat(mult.T.tolist(), p).rref()
        pivots, row = [], 0
        for c in range(mult.shape[0]):
            if row < rk and int(rref[row, c]) != 0:
                pivots.append(c)
                row += 1
        exact = []
        for j, triple in self.generators:
            if j > k:
                continue
            for m in monomials(k - j):
                mono = HomPoly(k - j, {m: K(1)})
                exact.append(tuple(t * mono for t in triple))
        return GradedKernelBasis(k, tuple(exact[c] for c in pivots))


@lru_cache(maxsize=64)
def engine(f: HomPoly) -> SyzygyEngine:
    return SyzygyEngine(f)


# public operations --------------------------------------------------------------


def ar_dimension(f: HomPoly, k: int) -> int:
    if k < 0:
        return 0
    return engine(f).step(k)


def ar_basis(f: HomPoly, k: int) -> GradedKernelBasis:
    return engine(f).basis(k)


def mdr(f: HomPoly) -> int:
    eng = engine(f)
    for k in range(0, f.degree):
        if eng.step(k) > 0:
            return k
    raise CertificationError("no syzygy found below the Koszul bound")


def jacobian_hilbert(f: HomPoly, k: int) -> int:
    """dim (S/J_f)_k."""
    j = k - (f.degree - 1)
    if j < 0:
        return dim_s(k)
    return dim_s(k) - (3 * dim_s(j) - ar_dimension(f, j))


def hilbert_tail(f: HomPoly) -> list[int]:
    d = f.degree
    k0 = 3 * (d - 2)
    values = [jacobian_hilbert(f, k0)]
    k = k0 + 1
    while True:
        values.append(jacobian_hilbert(f, k))
        if values[-1] == values[-2]:
            return values
        if k >= k0 + d:
            raise NonReducedError("Hilbert function of the Jacobian ring does not stabilize")
        k += 1


def total_tjurina(f: HomPoly) -> int:
    return hilbert_tail(f)[-1]


def generator_degrees(f: HomPoly, cap: int | None = None) -> list[int]:
    """Degrees of a minimal generating set of AR(f), certified up to ``cap`` (default 3d)."""
    cap = 3 * f.degree if cap is None else cap
    eng = engine(f)
    eng.run(cap)
    return sorted(j for j, _ in eng.generators)


def saito_determinant(f: HomPoly, g1: Triple, g2: Triple) -> HomPoly:
    x, y, z = HomPoly.var(0), HomPoly.var(1), HomPoly.var(2)
    return det3([[x, y, z], list(g1), list(g2)])


VERDICTS = ("Free", "NearlyFree", "MSyzygy")


@dataclass(frozen=True)
class FreenessCertificate:
    degree: int
    mdr: int
    tjurina: int
    verdict: str
    exponents: tuple[int, ...]
    generator_degrees: tuple[int, ...]
    hilbert_tail: tuple[int, ...]
    criterion_lhs: int = field(default=0)

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "mdr": self.mdr,
            "tjurina": self.tjurina,
            "verdict": self.verdict,
            "exponents": list(self.exponents),
            "generator_degrees": list(self.generator_degrees),
            "hilbert_tail": list(self.hilbert_tail),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def criterion_lhs(d: int, r: int) -> int:
    return r * r - r * (d - 1) + (d - 1) ** 2


def certify(f: HomPoly, cap: int | None = None) -> FreenessCertificate:
    d = f.degree
    r = mdr(f)
    tail = hilbert_tail(f)
    tau = tail[-1]
    lhs = criterion_lhs(d, r)
    gens = tuple(generator_degrees(f, cap))
    if 2 * r <= d - 1 and lhs == tau:
        verdict, exps = "Free", (r, d - 1 - r)
        ok = len(gens) == 2 and gens == exps
        if ok:
            gs = [t for _, t in engine(f).generators]
            ok = saito_determinant(f, gs[0], gs[1]).proportional(f)
    elif lhs == tau + 1:
        verdict, exps = "NearlyFree", (r, d - r)
        ok = len(gens) == 3 and gens == (r, d - r, d - r)
    else:
        verdict, exps = "MSyzygy", gens
        ok = len(gens) >= 3 or tau == 0
    if not ok or (gens and gens[0] != r):
        raise CertificationError(
            f"criterion verdict {verdict} disagrees with generator degrees {gens}"
        )
    return FreenessCertificate(d, r, tau, verdict, exps, gens, tuple(tail), lhs)


def never_free_scan(k: int) -> dict:
    """Closed forms for a smooth cubic plus k hyperosculating conics meeting only in nodes."""
    if k < 1:
        raise ValueError("k must be positive")
    tau = 2 * k * (k - 1) + 11 * k
    disc = -4 * k * k + 12 * k - 12
    d1 = 2 * k + 2
    free_possible = False
    if disc >= 0 and math.isqrt(disc) ** 2 == disc:
        s = math.isqrt(disc)
        for num in (d1 - s, d1 + s):
            if num % 2 == 0 and 1 <= num // 2 and 2 * (num // 2) <= d1:
                free_possible = True
    return {"predicted_tjurina": tau, "discriminant": disc, "free_possible": free_possible}
