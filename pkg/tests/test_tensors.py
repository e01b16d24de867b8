import random
from fractions import Fraction
from itertools import combinations, permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from naryalg.tensors import (AntisymTensor, DenseTensor, antisymmetrize,
                             antisymmetrize_weighted, as_antisym, contract,
                             eps_identities_check, eps_pair_expansion_check,
                             gen_kronecker, levi_civita, merge_sign, perm_sign,
                             shuffle_splits, sort_sign)


# ---------------------------------------------------------------------------
# generalized Kronecker symbol
# ---------------------------------------------------------------------------

def test_gen_kronecker_identity_permutation():
    assert gen_kronecker((1, 2), (1, 2)) == 1


def test_gen_kronecker_transposition():
    assert gen_kronecker((1, 2), (2, 1)) == -1


def test_gen_kronecker_not_a_permutation():
    assert gen_kronecker((1, 2, 3), (1, 2, 4)) == 0


def test_gen_kronecker_length_mismatch():
    with pytest.raises(ValueError):
        gen_kronecker((1, 2), (1, 2, 3))


def test_gen_kronecker_is_determinant():
    # brute-force determinant of the delta matrix for random small tuples
    rng = random.Random(0)
    for _ in range(50):
        p = rng.randint(1, 4)
        upper = tuple(rng.randint(1, 4) for _ in range(p))
        lower = tuple(rng.randint(1, 4) for _ in range(p))
        det = Fraction(0)
        for perm in permutations(range(p)):
            term = Fraction(perm_sign(perm))
            for i, j in enumerate(perm):
                term *= 1 if upper[i] == lower[j] else 0
            det += term
        assert gen_kronecker(upper, lower) == det


# ---------------------------------------------------------------------------
# epsilon recursions
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n,d", [(2, 2), (4, 4), (3, 5)])
def test_eps_identities(n, d):
    assert eps_identities_check(n, d).ok


def test_eps_pair_expansion_p2_d3():
    assert eps_pair_expansion_check(2, 3)


def test_eps_desk_scale_guard():
    with pytest.raises(ValueError):
        eps_identities_check(3, 7)


# ---------------------------------------------------------------------------
# antisymmetric storage
# ---------------------------------------------------------------------------

sorted_tuples = st.lists(st.integers(1, 6), min_size=3, max_size=3, unique=True)


@given(sorted_tuples, st.fractions(max_denominator=20))
@settings(max_examples=50)
def test_lookup_respects_permutation_signs(idx, value):
    t = AntisymTensor(3, 6, {tuple(idx): value})
    base = tuple(sorted(idx))
    stored = t.get(base)
    for perm in permutations(base):
        assert t.get(perm) == perm_sign(perm) * stored


def test_repeated_indices_read_zero():
    t = AntisymTensor(3, 4, {(1, 2, 3): Fraction(5)})
    assert t.get((1, 1, 3)) == 0


def test_canonical_no_zero_entries():
    t = AntisymTensor(2, 3, {(1, 2): Fraction(1), (2, 1): Fraction(1)})
    assert t.is_zero()  # the two entries cancel


def test_equality_is_entrywise():
    a = AntisymTensor(2, 3, {(2, 1): Fraction(-1)})
    b = AntisymTensor(2, 3, {(1, 2): Fraction(1)})
    assert a == b


# ---------------------------------------------------------------------------
# antisymmetrization
# ---------------------------------------------------------------------------

def test_antisymmetrize_rank2_delta_pattern():
    t = DenseTensor((2, 2), {(1, 2): Fraction(1)})
    out = antisymmetrize(t)
    assert out.get((1, 2)) == 1 and out.get((2, 1)) == -1


def test_antisymmetrize_kills_symmetric():
    t = DenseTensor.from_function((3, 3), lambda i, j: Fraction(i * j))
    assert antisymmetrize(t).is_zero()


def test_antisymmetrize_triple_products_equal_det():
    rng = random.Random(1)
    x, y, z = ([Fraction(rng.randint(-4, 4)) for _ in range(3)] for _ in range(3))
    t = DenseTensor.from_function((3, 3, 3),
                                  lambda i, j, k: x[i - 1] * y[j - 1] * z[k - 1])
    out = antisymmetrize(t)
    # brute-force determinant over all 27 tuples
    det = Fraction(0)
    for p in permutations((0, 1, 2)):
        det += perm_sign(p) * x[p[0]] * y[p[1]] * z[p[2]]
    for idx in permutations((1, 2, 3)):
        assert out.get(idx) == perm_sign(idx) * det


def test_double_antisymmetrization_scales_by_factorial():
    rng = random.Random(2)
    t = DenseTensor.from_function((3, 3, 3),
                                  lambda *i: Fraction(rng.randint(-3, 3)))
    once = antisymmetrize(t)
    twice = antisymmetrize(DenseTensor.from_antisym(once))
    assert twice == once.scale(Fraction(6))  # 3!


def test_weighted_variant_idempotent():
    rng = random.Random(3)
    t = DenseTensor.from_function((4, 4), lambda *i: Fraction(rng.randint(-3, 3)))
    once = antisymmetrize_weighted(t)
    twice = antisymmetrize_weighted(DenseTensor.from_antisym(once))
    assert once == twice


# ---------------------------------------------------------------------------
# contraction
# ---------------------------------------------------------------------------

def eps_tensor(p, d):
    return DenseTensor(tuple([d] * (2 * p)), {
        u + l: gen_kronecker(u, l)
        for u in product(range(1, d + 1), repeat=p)
        for l in product(range(1, d + 1), repeat=p)
        if gen_kronecker(u, l) != 0})


def test_contract_eps_with_delta_d3():
    # eps^{ij}_{kl} delta^k_i = (d - 1) delta^j_l at d = 3
    e = eps_tensor(2, 3)
    delta = DenseTensor.from_function((3, 3), lambda k, i: Fraction(1 if k == i else 0))
    out = contract(e, delta, [(0, 1), (2, 0)])
    for j in range(1, 4):
        for l in range(1, 4):
            assert out.get((j, l)) == (2 if j == l else 0)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_full_self_contraction_of_levi_civita(d):
    e = DenseTensor.from_antisym(levi_civita(d))
    out = contract(e, e, [(i, i) for i in range(d)])
    fact = 1
    for q in range(2, d + 1):
        fact *= q
    assert out.get(()) == fact


def test_eps_expansion_relation_p2_d3():
    # the pairwise expansion of the rank-3 symbol recombines exactly
    d = 3
    p = 2
    for upper in product(range(1, d + 1), repeat=p + 1):
        for lower in product(range(1, d + 1), repeat=p + 1):
            tot = Fraction(0)
            for s in range(p + 1):
                for t in range(s + 1, p + 1):
                    sub = gen_kronecker(upper[:2], (lower[s], lower[t]))
                    if sub:
                        rest = tuple(lower[q] for q in range(p + 1) if q not in (s, t))
                        tot += (-1) ** (s + t + 1) * sub * gen_kronecker(upper[2:], rest)
            assert tot == gen_kronecker(upper, lower)


def test_contract_dimension_mismatch():
    a = DenseTensor((2, 2), {})
    b = DenseTensor((3,), {})
    with pytest.raises(ValueError):
        contract(a, b, [(0, 0)])


@given(st.integers(0, 100))
@settings(max_examples=20)
def test_contract_bilinear_and_order_independent(seed):
    rng = random.Random(seed)

    def rnd(shape):
        return DenseTensor.from_function(shape, lambda *i: Fraction(rng.randint(-2, 2)))

    def dsum(x, y):
        data = {k: x.get(k) + y.get(k) for k in set(x.data) | set(y.data)}
        return DenseTensor(x.shape, {k: v for k, v in data.items() if v != 0})

    a, a2 = rnd((3, 3)), rnd((3, 3))
    b = rnd((3, 3, 3))
    both = contract(dsum(a, a2), b, [(1, 0)])
    assert both == dsum(contract(a, b, [(1, 0)]), contract(a2, b, [(1, 0)]))
    # chaining in either order gives the same full contraction
    c = rnd((3,))
    one = contract(contract(a, b, [(1, 0)]), c, [(1, 0)])
    pre = contract(b, c, [(1, 0)])
    two = contract(a, pre, [(1, 0)])
    assert one == two


def test_as_antisym_roundtrip():
    t = levi_civita(3)
    assert as_antisym(DenseTensor.from_antisym(t)) == t
    bad = DenseTensor((2, 2), {(1, 2): Fraction(1)})  # missing the mirror entry
    assert as_antisym(bad) is None


# ---------------------------------------------------------------------------
# shuffles
# ---------------------------------------------------------------------------

def test_shuffle_splits_cover_multinomial():
    m = (1, 2, 3, 4, 5)
    splits = list(shuffle_splits(m, [2, 3]))
    assert len(splits) == 10
    assert all(blocks[0] + blocks[1] and sign in (1, -1) for blocks, sign in splits)


def test_shuffle_signs_match_merge():
    for (a, b), sign in shuffle_splits((1, 2, 3, 4), [2, 2]):
        assert sign == merge_sign(a, b)


def test_sort_sign_zero_on_repeats():
    assert sort_sign((1, 1, 2))[1] == 0
