"""Antisymmetric multivector fields with polynomial components: the
Schouten-Nijenhuis bracket, generalized-Poisson (even) and Nambu-Poisson
tensor conditions, linear tensors built from Lie-algebra data, Jacobian
n-brackets, and decomposability of constant tensors.

Everything is exact: conditions on tensors are polynomial identities checked
monomial by monomial, never numerically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from . import linalg
from .lie import LieAlgebra
from .poly import Poly
from .scalars import is_zero
from .tensors import AntisymTensor, merge_sign, perm_sign, shuffle_splits, sort_sign


# ---------------------------------------------------------------------------
# multivectors
# ---------------------------------------------------------------------------

@dataclass
class PolyMultivector:
    """Order-p antisymmetric contravariant tensor on R^m with Poly entries,
    stored on sorted index tuples."""

    order: int
    dim: int
    comps: dict = field(default_factory=dict)  # sorted tuple -> Poly

    def __post_init__(self):
        clean = {}
        for idx, p in self.comps.items():
            key, s = sort_sign(idx)
            if s == 0 or p.is_zero():
                continue
            q = p if s == 1 else -p
            if key in clean:
                q = clean[key] + q
            if q.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = q
        self.comps = clean

    def get(self, idx) -> Poly:
        key, s = sort_sign(idx)
        if s == 0:
            return Poly.zero(self.dim)
        p = self.comps.get(key)
        if p is None:
            return Poly.zero(self.dim)
        return p if s == 1 else -p

    def is_zero(self):
        return not self.comps

    def __add__(self, other):
        comps = dict(self.comps)
        for k, p in other.comps.items():
            q = comps.get(k)
            q = p if q is None else q + p
            if q.is_zero():
                comps.pop(k, None)
            else:
                comps[k] = q
        return PolyMultivector(self.order, self.dim, comps)

    def scale(self, c):
        return PolyMultivector(self.order, self.dim,
                               {k: p * c for k, p in self.comps.items()})

    def __sub__(self, other):
        return self + other.scale(Fraction(-1))

    def __eq__(self, other):
        return (isinstance(other, PolyMultivector) and self.order == other.order
                and self.dim == other.dim and self.comps == other.comps)

    def is_constant(self):
        return all(p.is_constant() for p in self.comps.values())


def coordinate_vector(m, i) -> PolyMultivector:
    """The field d/dx_i."""
    return PolyMultivector(1, m, {(i,): Poly.const(m, 1)})


def wedge(a: PolyMultivector, b: PolyMultivector) -> PolyMultivector:
    """Shuffle-normalized wedge: (a ^ b)^M = sum_{I+J=M} sign a^I b^J."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    comps = {}
    for ka, pa in a.comps.items():
        for kb, pb in b.comps.items():
            if set(ka) & set(kb):
                continue
            key = tuple(sorted(ka + kb))
            q = pa * pb * merge_sign(ka, kb)
            cur = comps.get(key)
            q = q if cur is None else cur + q
            if q.is_zero():
                comps.pop(key, None)
            else:
                comps[key] = q
    return PolyMultivector(a.order + b.order, a.dim, comps)


def wedge_vectors(vectors, m) -> PolyMultivector:
    """Wedge of constant coordinate vectors (lists of scalars)."""
    out = None
    for v in vectors:
        mv = PolyMultivector(1, m, {(i + 1,): Poly.const(m, c)
                                    for i, c in enumerate(v) if not is_zero(c)})
        out = mv if out is None else wedge(out, mv)
    return out


# ---------------------------------------------------------------------------
# Schouten-Nijenhuis bracket
# ---------------------------------------------------------------------------

def schouten_bracket(a: PolyMultivector, b: PolyMultivector) -> PolyMultivector:
    """[A, B]^{k_1..k_{p+q-1}} =
        1/(p-1)!q!  eps^{k..}_{i.. j..} A^{nu i..} d_nu B^{j..}
      + (-1)^p / p!(q-1)! eps^{k..}_{i.. j..} B^{nu j..} d_nu A^{i..}

    with the epsilon contractions realized as shuffle sums over sorted
    blocks (sizes p-1, q and p, q-1 respectively).
    """
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    p, q = a.order, b.order
    m = a.dim
    out_order = p + q - 1
    comps = {}

    def add(key, poly):
        if poly.is_zero():
            return
        cur = comps.get(key)
        poly = poly if cur is None else cur + poly
        if poly.is_zero():
            comps.pop(key, None)
        else:
            comps[key] = poly

    for kk in combinations(range(1, m + 1), out_order):
        tot = Poly.zero(m)
        for (bi, bj), sign in shuffle_splits(kk, [p - 1, q]):
            for nu in range(1, m + 1):
                av = a.get((nu,) + bi)
                if av.is_zero():
                    continue
                dv = b.get(bj).diff(nu)
                if not dv.is_zero():
                    tot = tot + av * dv * sign
        for (bi, bj), sign in shuffle_splits(kk, [p, q - 1]):
            for nu in range(1, m + 1):
                bv = b.get((nu,) + bj)
                if bv.is_zero():
                    continue
                dv = a.get(bi).diff(nu)
                if not dv.is_zero():
                    tot = tot + bv * dv * sign * ((-1) ** p)
        add(kk, tot)
    return PolyMultivector(out_order, m, comps)


def graded_jacobi_residual(a, b, c) -> PolyMultivector:
    """(-1)^{pr}[[A,B],C] + (-1)^{qp}[[B,C],A] + (-1)^{rq}[[C,A],B]."""
    p, q, r = a.order, b.order, c.order
    t1 = schouten_bracket(schouten_bracket(a, b), c).scale(Fraction((-1) ** (p * r)))
    t2 = schouten_bracket(schouten_bracket(b, c), a).scale(Fraction((-1) ** (q * p)))
    t3 = schouten_bracket(schouten_bracket(c, a), b).scale(Fraction((-1) ** (r * q)))
    return t1 + t2 + t3


# ---------------------------------------------------------------------------
# brackets of functions from a multivector
# ---------------------------------------------------------------------------

def bracket_of_functions(lam: PolyMultivector, fs) -> Poly:
    """{f_1..f_n} = sum_{sorted I} lam^I det(d f_k / d x_{I_l})."""
    n = lam.order
    if len(fs) != n:
        raise ValueError("wrong number of functions")
    m = lam.dim
    grads = [[f.diff(i) for i in range(1, m + 1)] for f in fs]
    out = Poly.zero(m)
    for idx, comp in lam.comps.items():
        sub = [[grads[k][i - 1] for i in idx] for k in range(n)]
        out = out + comp * _poly_det(sub)
    return out


def _poly_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    out = None
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _poly_det(minor)
        if j % 2:
            term = -term
        out = term if out is None else out + term
    return out


# ---------------------------------------------------------------------------
# generalized Poisson structures (even order)
# ---------------------------------------------------------------------------

@dataclass
class GPSReport:
    snb_ok: bool
    coords_ok: bool
    witness: tuple | None = None

    @property
    def ok(self):
        return self.snb_ok and self.coords_ok

    def __bool__(self):
        return self.ok


def gps_check(lam: PolyMultivector) -> GPSReport:
    """[Lambda, Lambda] = 0 via the Schouten bracket AND via the coordinates
    condition  w_{s[j_1..j_{2s-1}} d^s w_{j_{2s}..j_{4s-1}]} = 0; the two
    verdicts must agree (they are computed independently)."""
    if lam.order % 2:
        raise ValueError("the self-bracket condition is empty for odd order")
    snb = schouten_bracket(lam, lam)
    snb_ok = snb.is_zero()
    n = lam.order
    m = lam.dim
    coords_ok = True
    witness = None
    for kk in combinations(range(1, m + 1), 2 * n - 1):
        tot = Poly.zero(m)
        for (bi, bj), sign in shuffle_splits(kk, [n - 1, n]):
            for s in range(1, m + 1):
                av = lam.get(bi + (s,))
                if av.is_zero():
                    continue
                dv = lam.get(bj).diff(s)
                if not dv.is_zero():
                    tot = tot + av * dv * sign
        if not tot.is_zero():
            coords_ok = False
            witness = kk
            break
    if snb_ok != coords_ok:
        raise AssertionError("the two self-bracket evaluations disagree")
    return GPSReport(snb_ok, coords_ok, witness)


def lie_poisson_bivector(alg: LieAlgebra) -> PolyMultivector:
    """Lambda^{ij} = C_ij^k x_k on the dual space."""
    m = alg.dim
    comps = {}
    for (i, j), row in alg.c.items():
        p = Poly.zero(m)
        for k, v in row.items():
            p = p + Poly.var(m, k) * v
        if not p.is_zero():
            comps[(i, j)] = p
    return PolyMultivector(2, m, comps)


def linear_multivector(omega: AntisymTensor, raised_last=None) -> PolyMultivector:
    """Components w^{i_1..i_{r-1}} = T_{i_1..i_{r-1}}^sigma x_sigma from a
    rank-r antisymmetric tensor (the last slot becomes the coefficient)."""
    m = omega.dim
    comps = {}
    for idx, v in omega.entries.items():
        for t in range(len(idx)):
            body = idx[:t] + idx[t + 1:]
            move = (-1) ** (len(idx) - 1 - t)
            p = Poly.var(m, idx[t]) * (v * move)
            cur = comps.get(body)
            p = p if cur is None else cur + p
            if p.is_zero():
                comps.pop(body, None)
            else:
                comps[body] = p
    return PolyMultivector(omega.rank - 1, m, comps)


def linear_gps_from_cocycle(alg: LieAlgebra, omega: AntisymTensor) -> PolyMultivector:
    """Linear even tensor with components Omega_{i_1..i_{2m-2}}^sigma
    x_sigma; validated against the self-bracket condition."""
    from .lie import cocycle_condition_residual
    if cocycle_condition_residual(alg, omega) is not None:
        raise ValueError("input is not a cocycle")
    from .gla import gla_from_cocycle
    g = gla_from_cocycle(alg, omega)
    m = alg.dim
    comps = {}
    for idx, row in g.c.items():
        p = Poly.zero(m)
        for sig, v in row.items():
            p = p + Poly.var(m, sig) * v
        if not p.is_zero():
            comps[idx] = p
    lam = PolyMultivector(g.arity, m, comps)
    rep = gps_check(lam)
    if not rep.ok:
        raise AssertionError("linear tensor fails the self-bracket condition")
    return lam


def fa_linear_multivector(fa) -> PolyMultivector:
    """eta_{a_1..a_n} = f_{a_1..a_n}^b x_b for a structure-constant tensor."""
    m = fa.dim
    comps = {}
    for idx, row in fa.f.items():
        p = Poly.zero(m)
        for b, v in row.items():
            p = p + Poly.var(m, b) * v
        if not p.is_zero():
            comps[idx] = p
    return PolyMultivector(fa.arity, m, comps)


# ---------------------------------------------------------------------------
# Nambu-Poisson conditions
# ---------------------------------------------------------------------------

@dataclass
class NPReport:
    differential_ok: bool
    differential_witness: tuple | None
    algebraic_ok: bool
    algebraic_witness: tuple | None
    decomposable_hint: object = None

    @property
    def ok(self):
        return self.differential_ok and self.algebraic_ok

    def __bool__(self):
        return self.ok


def np_check(lam: PolyMultivector) -> NPReport:
    """Differential condition

        eta_{i.. rho} d^rho eta_{j_1..j_n}
          - sum_k (-1)^{k-1} (d^rho eta_{i.. j_k}) eta_{rho j..^k..} = 0

    plus the algebraic condition Sigma + P(Sigma) = 0 where

        Sigma_{i.. j..} = eta_{i..} eta_{j..}
                        - sum_k eta_{i_1..i_{n-1} j_k} eta_{j_1.. i_n @k ..j_n}

    and P swaps i_1 with j_1.  For n = 2 the algebraic condition is reported
    vacuously true (it is absent for ordinary Poisson tensors).
    """
    n = lam.order
    m = lam.dim
    # dense signed lookup: raw tuple -> Poly (None when zero)
    from itertools import permutations as _perms
    dense = {}
    for key, p in lam.comps.items():
        for perm in _perms(key):
            s = perm_sign(perm)
            dense[perm] = p if s == 1 else -p

    def get(idx):
        return dense.get(idx)

    dw = None
    diff_ok = True
    for it in combinations(range(1, m + 1), n - 1):
        for jt in combinations(range(1, m + 1), n):
            tot = Poly.zero(m)
            for rho in range(1, m + 1):
                e1 = get(it + (rho,))
                if e1 is not None:
                    d = get(jt)
                    if d is not None:
                        d = d.diff(rho)
                        if not d.is_zero():
                            tot = tot + e1 * d
                for k in range(n):
                    e2 = get((rho,) + jt[:k] + jt[k + 1:])
                    if e2 is None:
                        continue
                    d = get(it + (jt[k],))
                    if d is None:
                        continue
                    d = d.diff(rho)
                    if not d.is_zero():
                        tot = tot - d * e2 * ((-1) ** k)
            if not tot.is_zero():
                diff_ok = False
                dw = (it, jt)
                break
        if not diff_ok:
            break

    if n == 2:
        return NPReport(diff_ok, dw, True, None, _decomposable_hint(lam))

    alg_ok = True
    aw = None

    def sigma(it, jt):
        tot = None
        a = get(it)
        if a is not None:
            b = get(jt)
            if b is not None:
                tot = a * b
        head = it[:n - 1]
        pivot = it[n - 1]
        for k in range(n):
            a = get(head + (jt[k],))
            if a is None:
                continue
            b = get(jt[:k] + (pivot,) + jt[k + 1:])
            if b is None:
                continue
            t = a * b
            tot = -t if tot is None else tot - t
        return tot

    for it in product(range(1, m + 1), repeat=n):
        for jt in product(range(1, m + 1), repeat=n):
            s1 = sigma(it, jt)
            s2 = sigma((jt[0],) + it[1:], (it[0],) + jt[1:])
            if s1 is None and s2 is None:
                continue
            tot = s1 if s2 is None else (s2 if s1 is None else s1 + s2)
            if not tot.is_zero():
                alg_ok = False
                aw = (it, jt)
                break
        if not alg_ok:
            break
    return NPReport(diff_ok, dw, alg_ok, aw, _decomposable_hint(lam))


def np_even_implies_gps(lam: PolyMultivector) -> bool:
    """For an even-order tensor passing both Nambu-Poisson conditions, the
    self-bracket condition holds as well (computed, not assumed)."""
    if lam.order % 2:
        raise ValueError("even order required")
    rep = np_check(lam)
    if not rep.ok:
        raise ValueError("input does not satisfy the Nambu-Poisson conditions")
    return gps_check(lam).ok


# ---------------------------------------------------------------------------
# decomposability of constant tensors
# ---------------------------------------------------------------------------

@dataclass
class Decomposition:
    vectors: list
    scale: Fraction


@dataclass
class PluckerViolation:
    i_tuple: tuple
    j_tuple: tuple


def _decomposable_hint(lam: PolyMultivector):
    if not lam.comps or not lam.is_constant():
        return None
    const = {k: p.eval([Fraction(0)] * lam.dim) for k, p in lam.comps.items()}
    return decompose_constant(lam.order, lam.dim, const)


def decompose_constant(n, m, entries):
    """Greedy pivot factorization of a constant antisymmetric tensor: from a
    pivot P with T_P != 0 build candidate vectors (w_k)_j = T_{P[:k] j P[k+1:]};
    their wedge must reproduce T_P^{n-1} T exactly, otherwise some Plucker
    relation fails and a violated instance is returned."""
    if not entries:
        return Decomposition([], Fraction(0))

    def get(idx):
        key, s = sort_sign(idx)
        if s == 0:
            return Fraction(0)
        return s * entries.get(key, Fraction(0))

    pivot = min(entries)
    pv = entries[pivot]
    vectors = []
    for k in range(n):
        vec = [get(pivot[:k] + (j,) + pivot[k + 1:]) for j in range(1, m + 1)]
        vectors.append(vec)
    w = wedge_vectors(vectors, m)
    want = {k: v * pv ** (n - 1) for k, v in entries.items()}
    got = {k: p.eval([Fraction(0)] * m) for k, p in w.comps.items()}
    if got == want:
        return Decomposition(vectors, Fraction(1) / pv ** (n - 1))
    # find a violated Plucker relation:
    # sum_k (-1)^k T_{i_1..i_{n-1} j_k} T_{j_0..^k..j_n} = 0
    for it in combinations(range(1, m + 1), n - 1):
        for jt in combinations(range(1, m + 1), n + 1):
            tot = Fraction(0)
            for k in range(n + 1):
                tot += (-1) ** k * get(it + (jt[k],)) * get(jt[:k] + jt[k + 1:])
            if tot != 0:
                return PluckerViolation(it, jt)
    raise AssertionError("pivot factorization failed but no violated relation found")


# ---------------------------------------------------------------------------
# Jacobian (Nambu) brackets on R^n
# ---------------------------------------------------------------------------

def nambu_bracket(fs, density=Fraction(1)) -> Poly:
    """{f_1..f_n} = det(d f_i / d x_j) / e for a nonzero constant density e."""
    n = len(fs)
    m = fs[0].nvars
    if m != n:
        raise ValueError("need n polynomials in n variables")
    if is_zero(density):
        raise ValueError("density must be a nonzero constant")
    rows = [[f.diff(j) for j in range(1, n + 1)] for f in fs]
    return _poly_det(rows) * (Fraction(1) / Fraction(density))


def nambu_fi_residual(fs, gs, density=Fraction(1)) -> Poly:
    """{f_1..f_{n-1}, {g_1..g_n}} - sum_i {g_1.., {f.., g_i}, ..g_n} as a
    polynomial (identically zero for the Jacobian bracket)."""
    n = len(gs)
    lhs = nambu_bracket(list(fs) + [nambu_bracket(gs, density)], density)
    out = lhs
    for i in range(n):
        inner = nambu_bracket(list(fs) + [gs[i]], density)
        out = out - nambu_bracket(gs[:i] + [inner] + gs[i + 1:], density)
    return out


def nambu_leibniz_residual(fs, g, h, slot, density=Fraction(1)) -> Poly:
    """Leibniz rule in the chosen slot: {.. f_slot = g h ..} - g{..h..} -
    {..g..}h."""
    fs_gh = list(fs)
    fs_gh[slot] = g * h
    fs_g = list(fs)
    fs_g[slot] = g
    fs_h = list(fs)
    fs_h[slot] = h
    return nambu_bracket(fs_gh, density) - g * nambu_bracket(fs_h, density) \
        - nambu_bracket(fs_g, density) * h


def hamiltonian_derivation_residual(lam: PolyMultivector, hs, gs) -> Poly:
    """For the bracket of lam: {H_1..H_{n-1}, {g_1..g_n}} - sum_i {g_1..,
    {H.., g_i}, ..}; vanishes when lam is a Nambu-Poisson tensor."""
    n = lam.order
    lhs = bracket_of_functions(lam, list(hs) + [bracket_of_functions(lam, gs)])
    out = lhs
    for i in range(n):
        inner = bracket_of_functions(lam, list(hs) + [gs[i]])
        out = out - bracket_of_functions(lam, gs[:i] + [inner] + gs[i + 1:])
    return out


# ---------------------------------------------------------------------------
# the block-Jacobian realization of the extended abelian 3-algebra
# ---------------------------------------------------------------------------

def nhw_bracket(fs, n_blocks: int) -> Poly:
    """sum_a d(f_1,f_2,f_3)/d(x_a, y_a, z_a) on R^{3N}: variables ordered
    x_1..x_N, y_1..y_N, z_1..z_N."""
    if len(fs) != 3:
        raise ValueError("three functions required")
    m = 3 * n_blocks
    out = Poly.zero(m)
    for a in range(1, n_blocks + 1):
        cols = (a, n_blocks + a, 2 * n_blocks + a)
        rows = [[f.diff(c) for c in cols] for f in fs]
        out = out + _poly_det(rows)
    return out


def nhw_realization_check(n_blocks: int = 2) -> bool:
    """{x^a, y^b, z^c} = 1 exactly when a = b = c (0 otherwise), and any two
    coordinates from the same family bracket to zero."""
    m = 3 * n_blocks
    x = [Poly.var(m, a) for a in range(1, n_blocks + 1)]
    y = [Poly.var(m, n_blocks + a) for a in range(1, n_blocks + 1)]
    z = [Poly.var(m, 2 * n_blocks + a) for a in range(1, n_blocks + 1)]
    for a in range(n_blocks):
        for b in range(n_blocks):
            for c in range(n_blocks):
                want = Poly.const(m, 1 if a == b == c else 0)
                if nhw_bracket([x[a], y[b], z[c]], n_blocks) != want:
                    return False
    # same-family pairs kill the determinant columns across blocks
    for a in range(n_blocks):
        for b in range(n_blocks):
            for c in range(n_blocks):
                if not nhw_bracket([x[a], x[b], z[c]], n_blocks).is_zero():
                    return False
                if not nhw_bracket([y[a], z[b], z[c]], n_blocks).is_zero():
                    return False
    return True
