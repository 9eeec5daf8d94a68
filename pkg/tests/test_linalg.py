import random

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from sextactic.exactfield import A, ONE, W, ZERO, K, random_element
from sextactic.linalg import Reducer, embedding, nullspace, rank, rank_mod_p, split_primes


def test_split_primes_split_k():
    for p in split_primes(4):
        e = embedding(p, 0)
        w, a = e[1], e[2]
        assert (w * w + w + 1) % p == 0
        assert pow(a, 3, p) == 2


def test_reducer_is_a_ring_map():
    rng = random.Random(1)
    red = Reducer(split_primes(1)[0], 4)
    p = red.p
    for _ in range(200):
        x, y = random_element(rng), random_element(rng)
        assert red(x * y) == red(x) * red(y) % p
        assert red(x + y) == (red(x) + red(y)) % p
    assert red(W * W + W + ONE) == 0
    assert red(A ** 3) == 2


def test_nullspace_exact():
    rows = [[ONE, W, A], [W, W * W, W * A]]
    ns = nullspace(rows, 3)
    assert len(ns) == 2
    for v in ns:
        for r in rows:
            assert sum((a * b for a, b in zip(r, v)), ZERO).is_zero()


def test_rank_exact_vs_modular_lower_bound():
    rng = random.Random(9)
    red = Reducer(split_primes(1)[0], 0)
    for _ in range(10):
        m = [[random_element(rng, 3, 0.3) for _ in range(6)] for _ in range(5)]
        m.append([m[0][j] + m[1][j] for j in range(6)])
        r = rank(m, 6)
        rp = rank_mod_p(np.array([[red(v) for v in row] for row in m]), red.p)
        assert rp <= r <= 5


@given(st.lists(st.lists(st.integers(0, 6), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_mod_p_matches_exact_for_small_integers(rows):
    p = split_primes(1)[0]
    assert rank_mod_p(np.array(rows), p) == rank([[K(v) for v in r] for r in rows], 4)
