"""Ordinary Lie algebras by structure constants: Jacobi validation, Killing
form, metric invariance, su(n) generator bases, symmetric invariant
polynomials, and the two-way bridge between invariant polynomials and
odd-rank cocycles.

Conventions.  Structure constants C_{ij}^k are real rationals with
[X_i, X_j] = C_{ij}^k X_k in an antihermitian-type basis.  The su(n)
constructor also returns the hermitian-pattern matrices used for trace
polynomials; the two are related by X_herm = i * X_antiherm, so the same
real constants serve both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations

from . import linalg
from .scalars import GaussianRational, is_zero, rat
from .tensors import AntisymTensor, perm_sign, ray_equal, shuffle_splits, sort_sign


# ---------------------------------------------------------------------------
# Lie algebras
# ---------------------------------------------------------------------------

@dataclass
class LieAlgebra:
    """dim-r Lie algebra with sparse antisymmetric structure constants.

    `c` maps sorted pairs (i, j), i < j, to {k: C_ij^k}; reads through
    `c_get`/`c_row` apply the antisymmetry sign.
    """

    dim: int
    c: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), row in self.c.items():
            if i == j:
                if any(not is_zero(v) for v in row.values()):
                    raise ValueError("C_{ii}^k must vanish")
                continue
            key, s = ((i, j), 1) if i < j else ((j, i), -1)
            row2 = {k: s * rat(v) for k, v in row.items() if not is_zero(v)}
            if not row2:
                continue
            if key in clean and clean[key] != row2:
                raise ValueError(f"inconsistent antisymmetry at {key}")
            clean[key] = row2
        self.c = clean

    @classmethod
    def from_entries(cls, dim, entries):
        """entries: iterable of ((i, j, k), value) with any index order."""
        c = {}
        for (i, j, k), v in entries:
            if i == j:
                if not is_zero(v):
                    raise ValueError("C_{ii}^k must vanish")
                continue
            key, s = ((i, j), 1) if i < j else ((j, i), -1)
            row = c.setdefault(key, {})
            row[k] = row.get(k, Fraction(0)) + s * rat(v)
        for key in list(c):
            c[key] = {k: v for k, v in c[key].items() if v != 0}
            if not c[key]:
                del c[key]
        return cls(dim, c)

    def c_get(self, i, j, k):
        if i == j:
            return Fraction(0)
        key, s = ((i, j), 1) if i < j else ((j, i), -1)
        return s * self.c.get(key, {}).get(k, Fraction(0))

    def c_row(self, i, j):
        """{k: C_ij^k} with sign handling; empty when i == j."""
        if i == j:
            return {}
        key, s = ((i, j), 1) if i < j else ((j, i), -1)
        row = self.c.get(key, {})
        return row if s == 1 else {k: -v for k, v in row.items()}

    def bracket(self, x, y):
        """Bracket of coordinate vectors (dense lists, slot k-1 = basis k)."""
        out = [Fraction(0)] * self.dim
        for (i, j), row in self.c.items():
            w = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
            if not is_zero(w):
                for k, v in row.items():
                    out[k - 1] += w * v
        return out

    def ad_matrix(self, i):
        """(ad_{X_i})^k_j = C_{ij}^k as a dim x dim matrix."""
        m = linalg.zeros(self.dim, self.dim)
        for j in range(1, self.dim + 1):
            for k, v in self.c_row(i, j).items():
                m[k - 1][j - 1] = v
        return m

    def adjoint_rep(self):
        return Representation(self, [self.ad_matrix(i) for i in range(1, self.dim + 1)],
                              check=False)


@dataclass
class JacobiReport:
    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def check_jacobi(alg: LieAlgebra) -> JacobiReport:
    """Exact residual scan of C_{[ij}^l C_{k]l}^s = 0 over all (i<j<k, s)."""
    r = alg.dim
    for i, j, k in combinations(range(1, r + 1), 3):
        for s in range(1, r + 1):
            tot = Fraction(0)
            for l, v in alg.c_row(i, j).items():
                tot += v * alg.c_get(l, k, s)
            for l, v in alg.c_row(j, k).items():
                tot += v * alg.c_get(l, i, s)
            for l, v in alg.c_row(k, i).items():
                tot += v * alg.c_get(l, j, s)
            if tot != 0:
                return JacobiReport(False, (i, j, k, s))
    return JacobiReport(True)


def killing_form(alg: LieAlgebra):
    """k_ij = C_il^s C_js^l (= Tr ad_i ad_j), symmetric by construction."""
    r = alg.dim
    k = linalg.zeros(r, r)
    for i in range(1, r + 1):
        for j in range(i, r + 1):
            tot = Fraction(0)
            for l in range(1, r + 1):
                for s, v in alg.c_row(i, l).items():
                    tot += v * alg.c_get(j, s, l)
            k[i - 1][j - 1] = tot
            k[j - 1][i - 1] = tot
    return k


@dataclass
class MetricReport:
    invariant: bool
    nondegenerate: bool
    witness: tuple | None = None


def check_metric_invariance(alg: LieAlgebra, g) -> MetricReport:
    """C_{li}^s g_{sj} + C_{lj}^s g_{is} = 0 for all l, i, j; plus exact rank."""
    r = alg.dim
    if any(g[i][j] != g[j][i] for i in range(r) for j in range(r)):
        raise ValueError("metric must be symmetric")
    nondeg = linalg.rank(g) == r
    for l in range(1, r + 1):
        for i in range(1, r + 1):
            row_li = alg.c_row(l, i)
            for j in range(i, r + 1):
                tot = Fraction(0)
                for s, v in row_li.items():
                    tot += v * g[s - 1][j - 1]
                for s, v in alg.c_row(l, j).items():
                    tot += v * g[i - 1][s - 1]
                if tot != 0:
                    return MetricReport(False, nondeg, (l, i, j))
    return MetricReport(True, nondeg, None)


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------

@dataclass
class Representation:
    """Matrices rho_i with [rho_i, rho_j] = C_ij^k rho_k, entrywise exact."""

    algebra: LieAlgebra
    mats: list
    check: bool = True

    def __post_init__(self):
        if self.check:
            bad = closure_residual(self.algebra, self.mats)
            if bad is not None:
                raise ValueError(f"not a representation: residual at {bad}")

    def mat(self, i):
        return self.mats[i - 1]

    @property
    def dim_v(self):
        return len(self.mats[0])


def closure_residual(alg: LieAlgebra, mats):
    """None when [rho_i, rho_j] - C_ij^k rho_k = 0 exactly; else first (i, j)."""
    for i in range(1, alg.dim + 1):
        for j in range(i + 1, alg.dim + 1):
            m = linalg.commutator(mats[i - 1], mats[j - 1])
            for k, v in alg.c_row(i, j).items():
                m = linalg.mat_sub(m, linalg.mat_scale(v, mats[k - 1]))
            if not linalg.is_zero_matrix(m):
                return (i, j)
    return None


def associator_check(mats) -> bool:
    """The alternated associator of any three matrices equals
    [[A,B],C] + [[B,C],A] + [[C,A],B] and both vanish (associativity)."""
    def assoc(a, b, c):
        return linalg.mat_sub(linalg.mat_mul(linalg.mat_mul(a, b), c),
                              linalg.mat_mul(a, linalg.mat_mul(b, c)))
    for a in mats:
        for b in mats:
            for c in mats:
                alt = linalg.zeros(len(a), len(a))
                for s, (x, y, z) in [(1, (a, b, c)), (1, (b, c, a)), (1, (c, a, b)),
                                     (-1, (b, a, c)), (-1, (a, c, b)), (-1, (c, b, a))]:
                    alt = linalg.mat_add(alt, linalg.mat_scale(Fraction(s), assoc(x, y, z)))
                cyc = linalg.mat_add(
                    linalg.commutator(linalg.commutator(a, b), c),
                    linalg.mat_add(linalg.commutator(linalg.commutator(b, c), a),
                                   linalg.commutator(linalg.commutator(c, a), b)))
                if not linalg.mat_eq(alt, cyc) or not linalg.is_zero_matrix(cyc):
                    return False
    return True


# ---------------------------------------------------------------------------
# su(n) generators
# ---------------------------------------------------------------------------

@dataclass
class SunBasis:
    rep: Representation            # antihermitian matrices, real closure
    hermitian: list                # X_i = i * rep.mats[i-1]
    trace_norms: list              # Tr(X_i X_i), rational, diagonal metric

    @property
    def algebra(self):
        return self.rep.algebra


def sun_generators(n: int) -> SunBasis:
    """Defining-representation basis of su(n) over Gaussian rationals.

    Off-diagonal generators carry the standard normalization
    Tr(X_i X_j) = 1/2 delta_ij.  The Cartan (diagonal) generators are kept at
    Tr(X_l X_l) = l(l+1)/4: the 1/sqrt(l(l+1)) rescaling that would equalize
    them is irrational, hence unavailable in Q(i).  The basis stays
    trace-orthogonal, which is all the structure-constant extraction needs;
    for n = 2 the normalization is exactly 1/2 * identity.
    """
    if not 2 <= n <= 4:
        raise ValueError("sun_generators: desk scale is 2 <= n <= 4")
    half = Fraction(1, 2)

    def gmat(f):
        return [[f(a, b) for b in range(n)] for a in range(n)]

    herm = []
    for a in range(n):
        for b in range(a + 1, n):
            herm.append(gmat(lambda x, y, a=a, b=b:
                             GaussianRational(half) if (x, y) in ((a, b), (b, a))
                             else GaussianRational(0)))
            herm.append(gmat(lambda x, y, a=a, b=b:
                             GaussianRational(0, -half) if (x, y) == (a, b)
                             else GaussianRational(0, half) if (x, y) == (b, a)
                             else GaussianRational(0)))
    for l in range(1, n):
        herm.append(gmat(lambda x, y, l=l:
                         GaussianRational(half) if x == y and x < l
                         else GaussianRational(-Fraction(l, 2)) if x == y == l
                         else GaussianRational(0)))

    r = n * n - 1
    norms = []
    for m in herm:
        t = linalg.trace(linalg.mat_mul(m, m))
        assert t.im == 0
        norms.append(t.re)
    # real structure constants: [X_i, X_j] = i C_ij^k X_k in the hermitian basis
    entries = []
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            cm = linalg.commutator(herm[i - 1], herm[j - 1])
            for k in range(1, r + 1):
                coeff = linalg.trace(linalg.mat_mul(cm, herm[k - 1]))
                c = GaussianRational(0, -1) * coeff / GaussianRational(norms[k - 1])
                assert c.im == 0, "structure constants must be real"
                if c.re != 0:
                    entries.append(((i, j, k), c.re))
    alg = LieAlgebra.from_entries(r, entries)
    antiherm = [linalg.mat_scale(GaussianRational(0, -1), m) for m in herm]
    rep = Representation(alg, antiherm)
    return SunBasis(rep=rep, hermitian=herm, trace_norms=norms)


# ---------------------------------------------------------------------------
# symmetric invariant polynomials
# ---------------------------------------------------------------------------

@dataclass
class SymInvariantPoly:
    """Fully symmetric rank-m tensor on 1..dim, stored on sorted tuples."""

    order: int
    dim: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for idx, v in self.terms.items():
            if not is_zero(v):
                clean[tuple(sorted(idx))] = rat(v)
        self.terms = clean

    def get(self, idx):
        return self.terms.get(tuple(sorted(idx)), Fraction(0))

    def is_zero(self):
        return not self.terms


def check_invariance(alg: LieAlgebra, k: SymInvariantPoly):
    """First violation of sum_s C_{l i_s}^t k_{i_1..t..i_m} = 0, or None."""
    m = k.order
    for l in range(1, alg.dim + 1):
        for idx in combinations_with_replacement(range(1, alg.dim + 1), m):
            tot = Fraction(0)
            for s in range(m):
                for t, v in alg.c_row(l, idx[s]).items():
                    tot += v * k.get(idx[:s] + (t,) + idx[s + 1:])
            if tot != 0:
                return (l, idx)
    return None


def _factorial(m):
    f = 1
    for q in range(2, m + 1):
        f *= q
    return f


def _n_arrangements(idx):
    """Distinct arrangements of a multiset tuple."""
    f = _factorial(len(idx))
    counts = {}
    for x in idx:
        counts[x] = counts.get(x, 0) + 1
    for c in counts.values():
        f //= _factorial(c)
    return f


def symmetrized_trace_poly(basis: SunBasis, m: int) -> SymInvariantPoly:
    """k_{i_1..i_m} = sTr(X_{i_1}..X_{i_m}), weight-one symmetrization, in
    the hermitian basis, where the values come out real rationals."""
    if m < 2:
        raise ValueError("order must be >= 2")
    herm = basis.hermitian
    r = len(herm)
    prefix = {}

    def product_of(seq):
        if len(seq) == 1:
            return herm[seq[0] - 1]
        got = prefix.get(seq)
        if got is None:
            got = linalg.mat_mul(product_of(seq[:-1]), herm[seq[-1] - 1])
            prefix[seq] = got
        return got

    fact = _factorial(m)
    terms = {}
    for idx in combinations_with_replacement(range(1, r + 1), m):
        mult = fact // _n_arrangements(idx)
        tot = GaussianRational(0)
        for p in set(permutations(idx)):
            tot = tot + linalg.trace(product_of(p))
        tot = tot * mult
        assert tot.im == 0, "symmetrized trace of hermitian matrices is real"
        v = tot.re / fact
        if v != 0:
            terms[idx] = v
    return SymInvariantPoly(m, r, terms)


def killing_invariant_poly(alg: LieAlgebra) -> SymInvariantPoly:
    k = killing_form(alg)
    terms = {}
    for i in range(1, alg.dim + 1):
        for j in range(i, alg.dim + 1):
            if k[i - 1][j - 1] != 0:
                terms[(i, j)] = k[i - 1][j - 1]
    return SymInvariantPoly(2, alg.dim, terms)


def symmetrized_product(k1: SymInvariantPoly, k2: SymInvariantPoly) -> SymInvariantPoly:
    """Weight-one symmetrized product k_( .. k'_.. ): the standard source of
    non-primitive invariants (e.g. delta-delta)."""
    if k1.dim != k2.dim:
        raise ValueError("dimension mismatch")
    m = k1.order + k2.order
    fact = _factorial(m)
    terms = {}
    for idx in combinations_with_replacement(range(1, k1.dim + 1), m):
        mult = fact // _n_arrangements(idx)
        tot = Fraction(0)
        for p in set(permutations(idx)):
            tot += k1.get(p[:k1.order]) * k2.get(p[k1.order:])
        v = tot * mult / fact
        if v != 0:
            terms[idx] = v
    return SymInvariantPoly(m, k1.dim, terms)


# ---------------------------------------------------------------------------
# the polynomial <-> cocycle bridge
# ---------------------------------------------------------------------------

def cocycle_from_invariant_poly(alg: LieAlgebra, k: SymInvariantPoly) -> AntisymTensor:
    """Rank-(2m-1) antisymmetric tensor from an order-m invariant:

        Omega_{rho i_2..i_{2m-2} sigma}
          = eps^{j..}_{i..} C^{l_1}_{j_2 j_3} .. C^{l_{m-1}}_{j_{2m-2} sigma}
            k_{rho l_1..l_{m-1}}

    The epsilon contraction collapses to a shuffle sum over (m-2) pairs plus
    one single slot, times 2 per pair for the in-pair arrangements.  Rejects
    non-invariant k; verifies the raw output is totally antisymmetric and a
    cocycle before returning it.
    """
    wit = check_invariance(alg, k)
    if wit is not None:
        raise ValueError(f"polynomial is not invariant; residual at {wit}")
    m = k.order
    r = alg.dim
    rank = 2 * m - 1
    if rank > r:
        return AntisymTensor(rank, r, {})
    pair_factor = Fraction(2 ** (m - 2))

    raw = {}
    for mid in combinations(range(1, r + 1), rank - 2):
        for blocks, sign in shuffle_splits(mid, [2] * (m - 2) + [1]):
            pairs, single = blocks[:-1], blocks[-1][0]
            partial = [((), Fraction(1))]
            for p in pairs:
                row = alg.c.get(p)
                if not row:
                    partial = []
                    break
                partial = [(ls + (l,), c * v) for ls, c in partial for l, v in row.items()]
            if not partial:
                continue
            for sigma in range(1, r + 1):
                last_row = alg.c_row(single, sigma)
                if not last_row:
                    continue
                for ls, c in partial:
                    for lm, v in last_row.items():
                        w = sign * pair_factor * c * v
                        for rho in range(1, r + 1):
                            kv = k.get((rho,) + ls + (lm,))
                            if kv != 0:
                                key = (rho,) + mid + (sigma,)
                                val = raw.get(key, Fraction(0)) + w * kv
                                if val == 0:
                                    raw.pop(key, None)
                                else:
                                    raw[key] = val

    ent = {}
    for key, v in raw.items():
        skey, s = sort_sign(key)
        if s == 0:
            raise ArithmeticError(f"constructed tensor not antisymmetric at {key}")
        if skey in ent:
            if ent[skey] != s * v:
                raise ArithmeticError(f"constructed tensor not antisymmetric at {key}")
        else:
            ent[skey] = s * v
    out = AntisymTensor(rank, r, ent)
    wit = cocycle_condition_residual(alg, out)
    if wit is not None:
        raise ArithmeticError(f"output fails the cocycle condition at {wit}")
    return out


def cocycle_condition_residual(alg: LieAlgebra, omega: AntisymTensor):
    """First violation of C_{[j1 j2}^k Omega_{i_1..i_{p-1}]k} = 0, or None;
    the antisymmetrization is the shuffle sum over (2, p-1) splits."""
    p = omega.rank
    r = alg.dim
    for m in combinations(range(1, r + 1), p + 1):
        tot = Fraction(0)
        for (pair, rest), sign in shuffle_splits(m, [2, p - 1]):
            row = alg.c.get(pair)
            if row:
                for kk, v in row.items():
                    tot += sign * v * omega.get(rest + (kk,))
        if tot != 0:
            return m
    return None


def invariance_condition_residual(alg: LieAlgebra, omega: AntisymTensor):
    """First violation of sum_s C_{i j_s}^k Omega_{j_1.. k ..j_p} = 0, or None."""
    p = omega.rank
    for i in range(1, alg.dim + 1):
        for idx in combinations(range(1, alg.dim + 1), p):
            tot = Fraction(0)
            for s in range(p):
                for kk, v in alg.c_row(i, idx[s]).items():
                    tot += v * omega.get(idx[:s] + (kk,) + idx[s + 1:])
            if tot != 0:
                return (i, idx)
    return None


def invariant_poly_from_cocycle(alg: LieAlgebra, omega: AntisymTensor) -> SymInvariantPoly:
    """Order-m symmetric invariant from a (2m-1)-cocycle:

        t^{i_1..i_m} = Omega^{j_1..j_{2m-2} i_m}
                       C^{i_1}_{j_1 j_2} .. C^{i_{m-1}}_{j_{2m-3} j_{2m-2}}

    All Omega indices are raised with the inverse Killing form (which must
    exist).  The result is reported with its indices lowered again by the
    Killing form: that representative lives on the same ray, is the one the
    lower-index invariance condition applies to, and for a scalar metric the
    two differ only by an overall factor.
    """
    if cocycle_condition_residual(alg, omega) is not None:
        raise ValueError("input is not a cocycle")
    r = alg.dim
    m = (omega.rank + 1) // 2
    kf = killing_form(alg)
    if linalg.rank(kf) < r:
        raise ValueError("degenerate Killing form: cannot raise indices")
    kinv = linalg.inverse(kf)

    # raise every index of Omega
    up_raw = {}
    for key, v in omega.entries.items():
        expansions = [((), v)]
        for l in key:
            expansions = [(seq + (u,), w * kinv[u - 1][l - 1])
                          for seq, w in expansions
                          for u in range(1, r + 1) if kinv[u - 1][l - 1] != 0]
        for seq, w in expansions:
            skey, s = sort_sign(seq)
            if s == 0:
                continue
            val = up_raw.get(skey, Fraction(0)) + s * w
            if val == 0:
                up_raw.pop(skey, None)
            else:
                up_raw[skey] = val
    omega_up = AntisymTensor(omega.rank, r, up_raw)

    dense = {}
    for skey, v in omega_up.entries.items():
        # choose the slot playing i_m, shuffle the rest into C-pairs
        for pos in range(len(skey)):
            last = skey[pos]
            rest = skey[:pos] + skey[pos + 1:]
            move_sign = (-1) ** (len(skey) - 1 - pos)
            for blocks, sign in shuffle_splits(rest, [2] * (m - 1)):
                partial = [((), Fraction(1))]
                for pair in blocks:
                    row = alg.c.get(pair)
                    if not row:
                        partial = []
                        break
                    partial = [(seq + (u,), c * w) for seq, c in partial
                               for u, w in row.items()]
                for seq, c in partial:
                    key = seq + (last,)
                    val = dense.get(key, Fraction(0)) + move_sign * sign * v * c
                    if val == 0:
                        dense.pop(key, None)
                    else:
                        dense[key] = val

    # `dense` carries t-up on every ordered index tuple; confirm symmetry
    sym_check = {}
    for key, v in dense.items():
        skey = tuple(sorted(key))
        if sym_check.setdefault(skey, v) != v:
            raise ArithmeticError(f"output not symmetric at {key}")

    # lower every index with the Killing form, summing over the full dense map
    low = {}
    for key, v in dense.items():
        expansions = [((), v)]
        for u in key:
            expansions = [(seq + (i,), w * kf[i - 1][u - 1])
                          for seq, w in expansions
                          for i in range(1, r + 1) if kf[i - 1][u - 1] != 0]
        for seq, w in expansions:
            val = low.get(seq, Fraction(0)) + w
            if val == 0:
                low.pop(seq, None)
            else:
                low[seq] = val
    terms = {}
    for key, v in low.items():
        skey = tuple(sorted(key))
        if terms.setdefault(skey, v) != v:
            raise ArithmeticError(f"lowered output not symmetric at {key}")
    poly = SymInvariantPoly(m, r, terms)
    if check_invariance(alg, poly) is not None:
        raise ArithmeticError("output polynomial fails invariance")
    return poly


def check_poly_vanishing_identity(alg: LieAlgebra, k: SymInvariantPoly) -> bool:
    """eps^{j_1..j_{2m}}_{i..} C^{l_1}_{j_1 j_2} .. C^{l_m}_{j_{2m-1} j_{2m}}
    k_{l_1..l_m} = 0: total antisymmetrization over 2m indices of the m-fold
    C-product contracted with an invariant k."""
    m = k.order
    r = alg.dim
    if 2 * m > r:
        return True  # epsilon over more indices than the dimension
    for idx in combinations(range(1, r + 1), 2 * m):
        tot = Fraction(0)
        for blocks, sign in shuffle_splits(idx, [2] * m):
            partial = [((), Fraction(1))]
            for pair in blocks:
                row = alg.c.get(pair)
                if not row:
                    partial = []
                    break
                partial = [(seq + (l,), c * v) for seq, c in partial
                           for l, v in row.items()]
            for seq, c in partial:
                kv = k.get(seq)
                if kv != 0:
                    tot += sign * c * kv
        if tot != 0:
            return False
    return True


def antisym_ray_equal(a: AntisymTensor, b: AntisymTensor) -> bool:
    return a.rank == b.rank and a.dim == b.dim and ray_equal(a.entries, b.entries)


def sym_ray_equal(a: SymInvariantPoly, b: SymInvariantPoly) -> bool:
    return a.order == b.order and a.dim == b.dim and ray_equal(a.terms, b.terms)
