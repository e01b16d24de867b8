import random
from fractions import Fraction
from itertools import combinations

import pytest

from naryalg import linalg
from naryalg.catalog import a4, a5, a13, nhw
from naryalg.filippov import (FI_FORMS, FilippovAlgebra, FundamentalSum,
                              ad_of_sum, adjoint_fa_representation, append_center,
                              candidate_constants_antisymmetric, check_fa_representation,
                              check_fi, check_metric_fa, clifford_realization,
                              compose_matches_commutator, derivation_space_dim,
                              direct_sum, fundamental_compose, gamma_matrices,
                              inder_lie_algebra, k2_invariant_and_so4_split,
                              kasymov_bilinear_nondegenerate, kasymov_form,
                              orthogonal_relations_hold, semisimplicity_check,
                              simple_fa, subordinate, trace_extension_bracket,
                              trace_extension_structure, vector_product)
from naryalg.lie import check_jacobi
from naryalg.scalars import GaussianRational


def basis_vec(i, d):
    return [Fraction(1 if j == i else 0) for j in range(1, d + 1)]


# ---------------------------------------------------------------------------
# the characteristic identity
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("form", FI_FORMS)
def test_euclidean_three_algebra_passes_all_forms(form):
    assert check_fi(a4(), form).ok


@pytest.mark.parametrize("form", FI_FORMS)
def test_abelian_passes(form):
    assert check_fi(FilippovAlgebra(3, 5, {}), form).ok


def test_random_tensor_fails_all_forms_together():
    rng = random.Random(0)
    for _ in range(10):
        f = {idx: {b: Fraction(rng.randint(-3, 3)) for b in range(1, 6)
                   if rng.random() < 0.6}
             for idx in combinations(range(1, 6), 3)}
        fa = FilippovAlgebra(3, 5, f)
        verdicts = {form: check_fi(fa, form).ok for form in FI_FORMS}
        assert len(set(verdicts.values())) == 1


def test_violation_carries_a_witness():
    bad = FilippovAlgebra(3, 5, {(1, 2, 3): {4: Fraction(1)},
                                 (1, 4, 5): {2: Fraction(1)}})
    rep = check_fi(bad)
    assert not rep.ok and rep.witness is not None


# ---------------------------------------------------------------------------
# simple algebras
# ---------------------------------------------------------------------------

def test_a4_bracket_values():
    fa = a4()
    out = fa.bracket([basis_vec(1, 4), basis_vec(3, 4), basis_vec(4, 4)])
    assert out == [Fraction(0), Fraction(-1), Fraction(0), Fraction(0)]


@pytest.mark.parametrize("n,signs", [(3, (1, 1, 1, 1)), (4, (1, 1, 1, 1, 1)),
                                     (5, (1, 1, 1, 1, 1, 1)),
                                     (3, (-1, 1, 1, 1))])
def test_simple_family_satisfies_identity(n, signs):
    fa = simple_fa(n, signs)
    assert fa.dim == n + 1
    assert check_fi(fa).ok


def test_all_plus_signs_bring_an_identity_metric():
    fa = a4()
    assert fa.metric == linalg.identity(4)
    assert check_metric_fa(fa, fa.metric).metric


def test_sign_validation():
    with pytest.raises(ValueError):
        simple_fa(3, (1, 1, 1))


# ---------------------------------------------------------------------------
# vector product
# ---------------------------------------------------------------------------

def test_vector_product_on_basis():
    out = vector_product([basis_vec(1, 4), basis_vec(3, 4), basis_vec(4, 4)])
    assert out == [Fraction(0), Fraction(-1), Fraction(0), Fraction(0)]


def test_vector_product_repeated_argument_vanishes():
    v = [Fraction(1), Fraction(2), Fraction(0), Fraction(-1)]
    assert vector_product([v, v, basis_vec(2, 4)]) == [Fraction(0)] * 4


def test_vector_product_agrees_with_structure_constants():
    rng = random.Random(1)
    fa = a4()
    for _ in range(10):
        vs = [[Fraction(rng.randint(-4, 4)) for _ in range(4)] for _ in range(3)]
        assert vector_product(vs) == fa.bracket(vs)


# ---------------------------------------------------------------------------
# fundamental objects
# ---------------------------------------------------------------------------

def test_composition_realizes_matrix_commutator():
    fa = a4()
    for x in combinations(range(1, 5), 2):
        for y in combinations(range(1, 5), 2):
            assert compose_matches_commutator(fa, x, y)


def test_self_composition_acts_trivially():
    fa = a4()
    assert linalg.is_zero_matrix(ad_of_sum(fa, fundamental_compose(fa, (1, 2), (1, 2))))


def test_composition_antisymmetric_only_after_ad():
    # the adjoint map of a simple algebra is injective, so the distinction
    # between -X.Y and Y.X needs an algebra with central directions
    fa = nhw(2)
    xy = fundamental_compose(fa, (1, 3), (5, 6))
    yx = fundamental_compose(fa, (5, 6), (1, 3))
    # as formal sums they are not opposite ...
    assert xy != FundamentalSum({k: -v for k, v in yx.items()})
    # ... while the induced derivations are exactly opposite
    assert linalg.mat_eq(ad_of_sum(fa, xy),
                         linalg.mat_scale(Fraction(-1), ad_of_sum(fa, yx)))


def test_composition_opposite_after_ad_on_simple():
    fa = a4()
    for x in combinations(range(1, 5), 2):
        for y in combinations(range(1, 5), 2):
            xy = ad_of_sum(fa, fundamental_compose(fa, x, y))
            yx = ad_of_sum(fa, fundamental_compose(fa, y, x))
            assert linalg.mat_eq(xy, linalg.mat_scale(Fraction(-1), yx))


# ---------------------------------------------------------------------------
# inner derivations
# ---------------------------------------------------------------------------

def test_inder_dimension_of_simple_algebras():
    assert inder_lie_algebra(a4()).lie.dim == 6
    assert inder_lie_algebra(a5()).lie.dim == 10


def test_inder_trivial_for_abelian():
    assert inder_lie_algebra(FilippovAlgebra(3, 4, {})).lie.dim == 0


def test_inder_constants_satisfy_jacobi():
    ind = inder_lie_algebra(a4())
    assert check_jacobi(ind.lie).ok


def test_orthogonal_relations():
    assert orthogonal_relations_hold(a4())
    assert orthogonal_relations_hold(a5())


def test_candidate_constants_already_antisymmetric_for_simple():
    assert candidate_constants_antisymmetric(a4())


def test_all_derivations_inner_for_simple():
    assert derivation_space_dim(a4()) == 6
    assert derivation_space_dim(a5()) == 10


# ---------------------------------------------------------------------------
# Kasymov form and semisimplicity
# ---------------------------------------------------------------------------

def test_kasymov_su2_proportional_to_minus_identity():
    fa = simple_fa(2, (1, 1, 1))
    _, _, mat = kasymov_form(fa)
    assert mat == linalg.mat_scale(Fraction(-2), linalg.identity(3))


def test_kasymov_a4_diagonal_nonzero():
    labels, vals, mat = kasymov_form(a4())
    assert all(mat[i][i] != 0 for i in range(len(labels)))
    assert all(mat[i][j] == 0 for i in range(6) for j in range(6) if i != j)


def test_kasymov_abelian_zero():
    _, _, mat = kasymov_form(FilippovAlgebra(3, 4, {}))
    assert linalg.is_zero_matrix(mat)


def test_semisimplicity_criterion():
    assert semisimplicity_check(a4())
    assert not semisimplicity_check(append_center(a4()))


def test_direct_sum_semisimple_but_naive_form_degenerate():
    both = direct_sum(a4(), a4())
    assert check_fi(both).ok
    assert semisimplicity_check(both)
    assert not kasymov_bilinear_nondegenerate(both)


# ---------------------------------------------------------------------------
# metric structure
# ---------------------------------------------------------------------------

def test_a4_metric_and_lowered_form():
    rep = check_metric_fa(a4(), linalg.identity(4))
    assert rep.metric
    assert rep.lowered.entries == {(1, 2, 3, 4): Fraction(-1)}


def test_abelian_metric_for_any_inner_product():
    g = linalg.identity(4)
    g[3][3] = Fraction(2)
    assert check_metric_fa(FilippovAlgebra(3, 4, {}), g).metric


def test_stretched_metric_fails():
    g = linalg.identity(4)
    g[3][3] = Fraction(2)
    rep = check_metric_fa(a4(), g)
    assert not rep.metric and rep.witness is not None


def test_degenerate_metric_rejected():
    with pytest.raises(ValueError):
        check_metric_fa(a4(), linalg.zeros(4, 4))


def test_subordinated_metric_algebra_stays_metric():
    sub = subordinate(a4(), basis_vec(4, 4))
    assert check_metric_fa(sub, linalg.identity(4)).metric


# ---------------------------------------------------------------------------
# the rank-two invariants and the plus/minus split
# ---------------------------------------------------------------------------

def test_so4_split_report_all_green():
    rep = k2_invariant_and_so4_split(a4())
    assert rep.k1_matches_pattern
    assert rep.k2_is_epsilon_ray
    assert rep.k2_signature == (3, 3)
    assert rep.k1_invariant and rep.k2_invariant
    assert rep.split_commutes and rep.split_su2_pattern
    assert rep.k1_sum_of_blocks and rep.k2_difference_of_blocks


def test_so4_split_rejects_wrong_algebra():
    with pytest.raises(ValueError):
        k2_invariant_and_so4_split(a5())


# ---------------------------------------------------------------------------
# subordinated algebras
# ---------------------------------------------------------------------------

def test_subordinate_a4_at_e4_gives_rotation_constants():
    sub = subordinate(a4(), basis_vec(4, 4))
    # [e_a, e_b]' = -eps_{4ab}^c e_c on the first three generators
    assert sub.f == {(1, 2): {3: Fraction(1)}, (1, 3): {2: Fraction(-1)},
                     (2, 3): {1: Fraction(1)}}
    assert check_fi(sub).ok


def test_subordinate_zero_element_abelian():
    sub = subordinate(a4(), [Fraction(0)] * 4)
    assert not sub.f


def test_subordinate_a5():
    sub = subordinate(a5(), basis_vec(5, 5))
    assert sub.arity == 3 and check_fi(sub).ok


# ---------------------------------------------------------------------------
# representations in the fundamental-object sense
# ---------------------------------------------------------------------------

def test_adjoint_satisfies_both_representation_conditions():
    for fa in (a4(), a13(), nhw(1)):
        assert check_fa_representation(fa, adjoint_fa_representation(fa))


def test_broken_representation_detected():
    fa = a4()
    rho = adjoint_fa_representation(fa)
    rho[(1, 2)] = linalg.identity(4)
    assert not check_fa_representation(fa, rho)


# ---------------------------------------------------------------------------
# gamma-matrix realizations
# ---------------------------------------------------------------------------

def test_gamma_matrices_anticommutation():
    for d in (2, 4, 6):
        gam, chi = gamma_matrices(d)
        size = len(gam[0])
        ident = [[GaussianRational(1) if i == j else GaussianRational(0)
                  for j in range(size)] for i in range(size)]
        assert linalg.mat_eq(linalg.mat_mul(chi, chi), ident)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_clifford_realization_matches_simple_algebra(n):
    rep = clifford_realization(n)
    assert rep.identity_ok and rep.matches_simple
    assert check_fi(rep.induced).ok


def test_clifford_double_commutator_identity():
    assert clifford_realization(3).double_commutator_ok


# ---------------------------------------------------------------------------
# trace extensions
# ---------------------------------------------------------------------------

def u2_basis():
    def e(a, b):
        m = linalg.zeros(2, 2)
        m[a][b] = Fraction(1)
        return m
    return [e(0, 0), e(0, 1), e(1, 0), e(1, 1)]


def commutator_bracket(ms):
    return linalg.commutator(ms[0], ms[1])


commutator_bracket.arity = 2


def three_bracket(ms):
    return trace_extension_bracket(commutator_bracket, linalg.trace, ms)


three_bracket.arity = 3


def test_trace_three_bracket_formula_and_identity():
    rng = random.Random(2)
    a, b, c = ([[Fraction(rng.randint(-3, 3)) for _ in range(2)] for _ in range(2)]
               for _ in range(3))
    lhs = three_bracket([a, b, c])
    rhs = linalg.mat_add(
        linalg.mat_add(linalg.mat_scale(linalg.trace(a), linalg.commutator(b, c)),
                       linalg.mat_scale(linalg.trace(b), linalg.commutator(c, a))),
        linalg.mat_scale(linalg.trace(c), linalg.commutator(a, b)))
    assert linalg.mat_eq(lhs, rhs)
    fa = trace_extension_structure(three_bracket, u2_basis())
    assert check_fi(fa).ok


def test_traceless_inputs_bracket_to_zero():
    sl = [[[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]],
          [[Fraction(0), Fraction(0)], [Fraction(1), Fraction(0)]],
          [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(-1)]]]
    for a in sl:
        for b in sl:
            for c in sl:
                assert linalg.is_zero_matrix(three_bracket([a, b, c]))


def test_iterated_trace_extension_still_valid():
    def four_bracket(ms):
        return trace_extension_bracket(three_bracket, linalg.trace, ms)
    four_bracket.arity = 4
    fa = trace_extension_structure(four_bracket, u2_basis())
    assert check_fi(fa).ok
