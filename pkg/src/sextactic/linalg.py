"""Exact linear algebra over K, and reduction modulo split primes.

Exact elimination is used for small systems.  For large graded pieces the
rank is bounded through ring homomorphisms K -> F_p: the rank of the reduced
matrix never exceeds the rank over K, so a modular rank is a certified lower
bound on the true rank.  Callers close the gap with exact kernel elements.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import flint
import numpy as np

from .exactfield import ONE, ZERO, K


class BadPrimeError(ArithmeticError):
    """A denominator vanishes modulo the chosen prime."""


# exact elimination ------------------------------------------------------------


def rref(rows: Sequence[Sequence[K]], ncols: int | None = None) -> tuple[list[list[K]], list[int]]:
    """Reduced row echelon form over K; pivots found left to right,
    first nonzero row taken as pivot row."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        inv = prow[c].inv()
        if inv != ONE:
            prow = [v * inv if v else v for v in prow]
            m[r] = prow
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(len(m)):
            if i != r:
                row = m[i]
                fac = row[c]
                if fac:
                    for j in nz:
                        row[j] = row[j] - fac * prow[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[K]], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[K]], ncols: int) -> list[list[K]]:
    """Basis of {v : M v = 0}, one vector per free column (free entry 1)."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = -row[free]
        basis.append(v)
    return basis


# modular reduction ------------------------------------------------------------


def _is_split(p: int) -> bool:
    return p % 3 == 1 and pow(2, (p - 1) // 3, p) == 1


@lru_cache(maxsize=None)
def split_primes(count: int = 6, start: int = 2**31 - 1) -> tuple[int, ...]:
    """Primes below ``start`` in which K splits completely (deterministic list)."""
    from sympy import isprime

    out = []
    p = start
    while len(out) < count:
        if _is_split(p) and isprime(p):
            out.append(p)
        p -= 1
    return tuple(out)


@lru_cache(maxsize=None)
def embedding(p: int, index: int = 0) -> tuple[int, ...]:
    """Images of the basis (1, w, a, wa, a^2, wa^2) under one of the six
    homomorphisms K -> F_p (index 0..5)."""
    from sympy.ntheory import nthroot_mod

    cube_roots_one = sorted(r for r in nthroot_mod(1, 3, p, all_roots=True) if r != 1)
    cube_roots_two = sorted(nthroot_mod(2, 3, p, all_roots=True))
    w = cube_roots_one[index // 3]
    a = cube_roots_two[index % 3]
    return (1, w, a, w * a % p, a * a % p, w * a * a % p)


class Reducer:
    """Ring homomorphism from the p-integral part of K onto F_p."""

    def __init__(self, p: int, index: int = 0):
        self.p = p
        self.images = embedding(p, index)
        self._cache: dict = {}

    def __call__(self, x: K) -> int:
        key = (x.n, x.d)
        v = self._cache.get(key)
        if v is not None:
            return v
        p = self.p
        if x.d % p == 0:
            raise BadPrimeError(f"denominator divisible by {p}")
        s = sum(c * b for c, b in zip(x.n, self.images)) % p
        if x.d != 1:
            s = s * pow(x.d, p - 2, p) % p
        self._cache[key] = s
        return s


def reducers(count: int = 2) -> list[Reducer]:
    ps = split_primes(max(count, 2))
    return [Reducer(ps[i], i % 6) for i in range(count)]


def rank_mod_p(a, p: int) -> int:
    """Rank modulo p of an integer matrix (numpy array or nested lists)."""
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    return int(flint.nmod_mat((a % p).tolist(), p).rank())


def reduce_matrix(rows: Sequence[Sequence[K]], red: Reducer) -> np.ndarray:
    return np.array([[red(v) for v in row] for row in rows], dtype=np.int64).reshape(len(rows), -1)
