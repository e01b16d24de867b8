"""Named catalog of the algebras every suite runs against, plus sign-flipped
negative controls."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from functools import lru_cache

from .filippov import FilippovAlgebra, simple_fa
from .gla import GLAlgebra, gla_from_cocycle
from .lie import (LieAlgebra, cocycle_from_invariant_poly, killing_invariant_poly,
                  sun_generators, symmetrized_trace_poly)
from .nary_cohomology import LeibnizAlgebra


@lru_cache(maxsize=None)
def sun_basis(n):
    return sun_generators(n)


def su(n) -> LieAlgebra:
    return sun_basis(n).algebra


def heisenberg() -> LieAlgebra:
    return LieAlgebra.from_entries(3, [((1, 2, 3), Fraction(1))])


def r2_abelian() -> LieAlgebra:
    return LieAlgebra(2, {})


def euclidean_rotations_2d() -> LieAlgebra:
    """The 3-dim solvable algebra of plane rotations and translations
    ([J, P1] = P2, [J, P2] = -P1), the classic contraction target."""
    return LieAlgebra.from_entries(3, [((1, 2, 3), Fraction(1)), ((1, 3, 2), Fraction(-1))])


def a4() -> FilippovAlgebra:
    return simple_fa(3, [1, 1, 1, 1])


def a13() -> FilippovAlgebra:
    return simple_fa(3, [-1, 1, 1, 1])


def a5() -> FilippovAlgebra:
    return simple_fa(4, [1, 1, 1, 1, 1])


def nhw(n_blocks=1) -> FilippovAlgebra:
    """Central extension of the abelian 3N-dim ternary algebra by the
    block-diagonal cocycle (the Jacobian-bracket algebra of N triples)."""
    d = 3 * n_blocks
    f = {}
    for a in range(1, n_blocks + 1):
        f[(a, n_blocks + a, 2 * n_blocks + a)] = {d + 1: Fraction(1)}
    return FilippovAlgebra(3, d + 1, f)


def abelian_fa(arity, dim) -> FilippovAlgebra:
    return FilippovAlgebra(arity, dim, {})


@lru_cache(maxsize=None)
def su3_five_cocycle():
    basis = sun_basis(3)
    return cocycle_from_invariant_poly(basis.algebra, symmetrized_trace_poly(basis, 3))


@lru_cache(maxsize=None)
def su3_three_cocycle():
    return cocycle_from_invariant_poly(su(3), killing_invariant_poly(su(3)))


@lru_cache(maxsize=None)
def su3_gla4() -> GLAlgebra:
    return gla_from_cocycle(su(3), su3_five_cocycle())


def nilpotent_leibniz() -> LeibnizAlgebra:
    """Three-dimensional non-Lie left Leibniz algebra:
    [e2, e3] = e1, [e3, e3] = e1."""
    return LeibnizAlgebra(3, {(2, 3): {1: Fraction(1)}, (3, 3): {1: Fraction(1)}})


def flip_one_sign_lie(alg: LieAlgebra) -> LieAlgebra:
    """Negative control: flip the sign of one structure-constant entry."""
    c = {k: dict(v) for k, v in alg.c.items()}
    key = min(c)
    sub = min(c[key])
    c[key][sub] = -c[key][sub]
    return LieAlgebra(alg.dim, c)


def flip_one_sign_fa(fa: FilippovAlgebra) -> FilippovAlgebra:
    f = {k: dict(v) for k, v in fa.f.items()}
    key = min(f)
    sub = min(f[key])
    f[key][sub] = -f[key][sub]
    return FilippovAlgebra(fa.arity, fa.dim, f)


def flip_one_sign_gla(g: GLAlgebra) -> GLAlgebra:
    c = {k: dict(v) for k, v in g.c.items()}
    key = min(c)
    sub = min(c[key])
    c[key][sub] = -c[key][sub]
    return GLAlgebra(g.arity, g.dim, c)


def corrupted(obj):
    """A deterministically corrupted copy that genuinely fails its identity.

    Sign flips are tried first (in sorted entry order).  For the epsilon-type
    algebras every single sign flip yields another valid algebra (it merely
    toggles one basis sign in the pseudoeuclidean family), so the fallback
    plants one off-pattern entry instead.
    """
    from .filippov import check_fi
    from .gla import check_gji
    from .lie import check_jacobi

    if isinstance(obj, LieAlgebra) and obj.dim < 3:
        return None  # the identity is vacuous below three dimensions
    if isinstance(obj, LieAlgebra):
        entries = [(k, s) for k in sorted(obj.c) for s in sorted(obj.c[k])]
        for key, sub in entries:
            c = {k: dict(v) for k, v in obj.c.items()}
            c[key][sub] = -c[key][sub]
            cand = LieAlgebra(obj.dim, c)
            if not check_jacobi(cand).ok:
                return cand
        for key in combinations(range(1, obj.dim + 1), 2):
            for tgt in range(1, obj.dim + 1):
                c = {k: dict(v) for k, v in obj.c.items()}
                row = c.setdefault(key, {})
                row[tgt] = row.get(tgt, Fraction(0)) + 1
                cand = LieAlgebra(obj.dim, c)
                if not check_jacobi(cand).ok:
                    return cand
        raise AssertionError("could not corrupt the algebra")
    if isinstance(obj, FilippovAlgebra):
        entries = [(k, s) for k in sorted(obj.f) for s in sorted(obj.f[k])]
        for key, sub in entries:
            f = {k: dict(v) for k, v in obj.f.items()}
            f[key][sub] = -f[key][sub]
            cand = FilippovAlgebra(obj.arity, obj.dim, f)
            if not check_fi(cand).ok:
                return cand
        for key in combinations(range(1, obj.dim + 1), obj.arity):
            for tgt in range(1, obj.dim + 1):
                f = {k: dict(v) for k, v in obj.f.items()}
                row = f.setdefault(key, {})
                row[tgt] = row.get(tgt, Fraction(0)) + 1
                cand = FilippovAlgebra(obj.arity, obj.dim, f)
                if not check_fi(cand).ok:
                    return cand
        raise AssertionError("could not corrupt the algebra")
    if isinstance(obj, GLAlgebra):
        entries = [(k, s) for k in sorted(obj.c) for s in sorted(obj.c[k])]
        for key, sub in entries:
            c = {k: dict(v) for k, v in obj.c.items()}
            c[key][sub] = -c[key][sub]
            cand = GLAlgebra(obj.arity, obj.dim, c)
            if not check_gji(cand).ok:
                return cand
        raise AssertionError("no corrupting sign flip found")
    raise TypeError(type(obj).__name__)


def lie_catalog():
    return {
        "su2": su(2),
        "su3": su(3),
        "su4": su(4),
        "heisenberg": heisenberg(),
        "r2-abelian": r2_abelian(),
    }


def fa_catalog():
    return {
        "a4": a4(),
        "a13": a13(),
        "a5": a5(),
        "nhw1": nhw(1),
        "nhw2": nhw(2),
    }


def gla_catalog():
    return {
        "su3-gla4": su3_gla4(),
    }
