import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ehrhart_delta import linalg
from ehrhart_delta.errors import DependentGenerators

small_ints = st.integers(-6, 6)


def square(n):
    return st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)


@given(st.integers(1, 5).flatmap(square))
@settings(max_examples=150, deadline=None)
def test_det_matches_numpy(m):
    assert linalg.det(m) == round(np.linalg.det(np.array(m, dtype=float)))


def test_det_small_cases():
    assert linalg.det([]) == 1
    assert linalg.det([[0, 1], [1, 0]]) == -1
    assert linalg.det([[2, 0, 0], [5, 3, 0], [7, 1, 4]]) == 24


def test_primitive():
    assert linalg.primitive((4, -6, 0)) == (2, -3, 0)
    assert linalg.primitive((0, 0)) == (0, 0)


def test_rank_and_affine_rank():
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.affine_rank([(0, 0, 0), (1, 1, 1), (2, 2, 2)]) == 1
    assert linalg.affine_rank([(0, 0), (1, 0), (0, 1)]) == 2


def test_solve():
    assert linalg.solve([(1, 0), (1, 2)], (3, 4)) == (Fraction(1), Fraction(2))
    assert linalg.solve([(1, 0, 0)], (0, 1, 0)) is None
    with pytest.raises(DependentGenerators):
        linalg.solve([(1, 1), (2, 2)], (1, 1))


def test_normal_vector_is_orthogonal():
    rng = random.Random(3)
    for _ in range(50):
        vecs = [tuple(rng.randint(-4, 4) for _ in range(4)) for _ in range(3)]
        if linalg.rank(vecs) < 3:
            continue
        u = linalg.normal_vector(vecs, 4)
        assert any(u)
        assert all(linalg.dot(u, v) == 0 for v in vecs)


def test_maximal_minor_gcd():
    # (0,1,1), (2,1,1), (1,0,1): the lifted segment-free triangle of area 1 in Z^3
    assert linalg.maximal_minor_gcd([(0, 1, 1), (2, 1, 1), (1, 0, 1)]) == 2
    assert linalg.maximal_minor_gcd([(1, 0, 1), (0, 1, 1)]) == 1
    assert linalg.maximal_minor_gcd([(2, 0, 1), (0, 0, 1)]) == 2


@given(st.integers(1, 3), st.integers(0, 2), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_column_hermite(r, extra, rng):
    n = r + extra
    rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(r)]
    if linalg.rank(rows) < r:
        return
    H, U, Uinv = linalg.column_hermite(rows)
    assert abs(linalg.det(U)) == 1
    ident = np.array(U) @ np.array(Uinv)
    assert (ident == np.eye(n, dtype=int)).all()
    assert (np.array(rows) @ np.array(U) == np.hstack([np.array(H), np.zeros((r, n - r), dtype=int)])).all()
    assert (np.array(H) @ np.array(Uinv[:r]) == np.array(rows)).all()
    for i in range(r):
        assert H[i][i] > 0
        assert all(H[i][j] == 0 for j in range(i + 1, r))
