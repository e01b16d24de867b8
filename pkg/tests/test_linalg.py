import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from naryalg import linalg
from naryalg.scalars import GaussianRational


def rand_matrix(rng, n, m):
    return [[Fraction(rng.randint(-5, 5)) for _ in range(m)] for _ in range(n)]


def test_rank_and_nullspace_consistency():
    rng = random.Random(0)
    for _ in range(20):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        a = rand_matrix(rng, n, m)
        r = linalg.rank(a)
        ns = linalg.nullspace(a)
        assert r + len(ns) == m
        for v in ns:
            out = [sum(a[i][j] * v[j] for j in range(m)) for i in range(n)]
            assert all(x == 0 for x in out)


def test_solve_consistent_and_inconsistent():
    a = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert linalg.solve(a, [Fraction(3), Fraction(6)]) is not None
    assert linalg.solve(a, [Fraction(3), Fraction(7)]) is None


def test_solve_returns_exact_solution():
    rng = random.Random(1)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = rng.randint(1, 4)
        a = rand_matrix(rng, n, m)
        x = [Fraction(rng.randint(-3, 3)) for _ in range(m)]
        b = [sum(a[i][j] * x[j] for j in range(m)) for i in range(n)]
        sol = linalg.solve(a, b)
        assert sol is not None
        out = [sum(a[i][j] * sol[j] for j in range(m)) for i in range(n)]
        assert out == b


def test_inverse_roundtrip():
    rng = random.Random(2)
    found = 0
    while found < 10:
        a = rand_matrix(rng, 3, 3)
        if linalg.det(a) == 0:
            continue
        found += 1
        assert linalg.mat_eq(linalg.mat_mul(a, linalg.inverse(a)), linalg.identity(3))


def test_inverse_singular_raises():
    with pytest.raises(ValueError):
        linalg.inverse([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])


def test_det_multiplicative():
    rng = random.Random(3)
    for _ in range(10):
        a, b = rand_matrix(rng, 3, 3), rand_matrix(rng, 3, 3)
        assert linalg.det(linalg.mat_mul(a, b)) == linalg.det(a) * linalg.det(b)


def test_signature_diagonal():
    m = [[Fraction(x) if i == j else Fraction(0) for j, x in enumerate((2, -3, 0, 5))]
         for i in range(4)]
    assert linalg.signature(m) == (2, 1, 1)


def test_signature_offdiagonal_block():
    # ((0,1),(1,0)) has eigenvalues +-1
    m = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    assert linalg.signature(m) == (1, 1, 0)


def test_signature_congruence_invariance():
    rng = random.Random(4)
    base = [[Fraction(2), Fraction(1), Fraction(0)],
            [Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(0), Fraction(0), Fraction(3)]]
    sig = linalg.signature(base)
    for _ in range(5):
        s = rand_matrix(rng, 3, 3)
        if linalg.det(s) == 0:
            continue
        m = linalg.mat_mul(linalg.transpose(s), linalg.mat_mul(base, s))
        assert linalg.signature(m) == sig


def test_gaussian_matrix_ops():
    i = GaussianRational(0, 1)
    a = [[i, GaussianRational(1)], [GaussianRational(0), -i]]
    sq = linalg.mat_mul(a, a)
    assert sq[0][0] == GaussianRational(-1)
    assert linalg.trace(a) == GaussianRational(0)
    ct = linalg.conj_transpose(a)
    assert ct[0][0] == -i and ct[1][0] == GaussianRational(1)
