"""Even multibrackets and the structures they generate: the generalized
Jacobi identity (GJI) and its mixed-order variant, bracket resolutions into
two-brackets, higher-order algebras built from odd cocycles, coderivations
and higher exterior derivatives on the exterior algebra, and the complete
BRST operator on ghost variables.

Residual conventions.  The epsilon-contracted identities are evaluated as
shuffle sums over ordered block splits; these differ from the literal
Levi-Civita contraction by the product of the block factorials, which never
affects a vanishing statement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linalg
from .lie import LieAlgebra, killing_form
from .scalars import is_zero, rat
from .tensors import AntisymTensor, merge_sign, shuffle_splits, sort_sign


# ---------------------------------------------------------------------------
# matrix multibrackets
# ---------------------------------------------------------------------------

def multibracket(mats):
    """Weight-free antisymmetrized product sum_sigma sign X_s1 .. X_sn.

    Evaluated by subset dynamic programming (first-slot expansion of the
    bracket), linear instead of factorial in matrix products.
    """
    n = len(mats)
    if n == 0:
        raise ValueError("empty multibracket")
    size = len(mats[0])
    if any(len(m) != size or len(m[0]) != size for m in mats):
        raise ValueError("multibracket needs equal square matrices")
    table = {1 << i: mats[i] for i in range(n)}

    def build(mask):
        got = table.get(mask)
        if got is not None:
            return got
        acc = linalg.zeros(size, size)
        members = [i for i in range(n) if mask & (1 << i)]
        for pos, i in enumerate(members):
            sub = build(mask & ~(1 << i))
            term = linalg.mat_mul(mats[i], sub)
            if pos % 2:
                acc = linalg.mat_sub(acc, term)
            else:
                acc = linalg.mat_add(acc, term)
        table[mask] = acc
        return acc

    return build((1 << n) - 1)


def multibracket_weighted(mats):
    """Weight-one variant: multibracket / n!."""
    out = multibracket(mats)
    f = 1
    for q in range(2, len(mats) + 1):
        f *= q
    return linalg.mat_scale(Fraction(1, f), out)


def resolve_even_bracket(mats):
    """Expansion of a 2s-bracket into ordered products of two-brackets via the
    pairwise epsilon resolution; returns (terms, matrix) where each term is
    (sign, [(i, j), ...]) with 0-based positions, and asserts the expansion
    equals the direct multibracket on the given matrices."""
    n = len(mats)
    if n % 2 or n > 6:
        raise ValueError("resolution implemented for even n <= 6")

    def expand(positions):
        if len(positions) == 2:
            return [(1, [tuple(positions)])]
        out = []
        for s in range(len(positions)):
            for t in range(s + 1, len(positions)):
                rest = [positions[q] for q in range(len(positions)) if q not in (s, t)]
                sign = (-1) ** (s + t + 1)
                for sub_sign, pairs in expand(rest):
                    out.append((sign * sub_sign, [(positions[s], positions[t])] + pairs))
        return out

    terms = expand(list(range(n)))
    size = len(mats[0])
    acc = linalg.zeros(size, size)
    for sign, pairs in terms:
        prod = None
        for (i, j) in pairs:
            cm = linalg.commutator(mats[i], mats[j])
            prod = cm if prod is None else linalg.mat_mul(prod, cm)
        acc = linalg.mat_add(acc, linalg.mat_scale(Fraction(sign), prod))
    direct = multibracket(mats)
    if not linalg.mat_eq(acc, direct):
        raise AssertionError("two-bracket resolution disagrees with the multibracket")
    return terms, acc


def odd_arity_defect(mats):
    """For an odd number n of matrices, the shuffle-alternated double bracket

        sum_{|A|=n} sign(A, rest) [[X_A], X_rest]

    equals n times the full (2n-1)-bracket; returns (lhs, n * bracket)."""
    total = len(mats)
    n = (total + 1) // 2
    if n % 2 == 0 or total != 2 * n - 1:
        raise ValueError("need 2n-1 matrices with n odd")
    size = len(mats[0])
    acc = linalg.zeros(size, size)
    for aidx in combinations(range(total), n):
        rest = [i for i in range(total) if i not in aidx]
        sign = merge_sign(aidx, tuple(rest))
        inner = multibracket([mats[i] for i in aidx])
        outer = multibracket([inner] + [mats[i] for i in rest])
        acc = linalg.mat_add(acc, linalg.mat_scale(Fraction(sign), outer))
    rhs = linalg.mat_scale(Fraction(n), multibracket(mats))
    return acc, rhs


# ---------------------------------------------------------------------------
# higher-order algebras by structure constants
# ---------------------------------------------------------------------------

@dataclass
class GLAlgebra:
    """Even-arity algebra: C_{i_1..i_n}^j antisymmetric in the lower block."""

    arity: int
    dim: int
    c: dict = field(default_factory=dict)  # sorted n-tuple -> {j: value}

    def __post_init__(self):
        if self.arity % 2:
            raise ValueError("bracket arity must be even")
        clean = {}
        for idx, row in self.c.items():
            key, s = sort_sign(idx)
            if s == 0:
                if any(not is_zero(v) for v in row.values()):
                    raise ValueError("repeated lower indices must read zero")
                continue
            row2 = {j: s * rat(v) for j, v in row.items() if not is_zero(v)}
            if not row2:
                continue
            if key in clean and clean[key] != row2:
                raise ValueError(f"inconsistent antisymmetry at {idx}")
            clean[key] = row2
        self.c = clean

    def c_row(self, idx):
        key, s = sort_sign(idx)
        if s == 0:
            return {}
        row = self.c.get(key, {})
        return row if s == 1 else {j: -v for j, v in row.items()}

    def c_get(self, idx, j):
        return self.c_row(idx).get(j, Fraction(0))


@dataclass
class IdentityReport:
    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def nested_bracket_residuals(c1: dict, n1: int, c2: dict, n2: int, dim: int) -> dict:
    """Sparse accumulation of the shuffle-antisymmetrized nesting

        R_M^s = sum_{A+B=M} sign sum_l c1_A^l c2_{B l}^s

    over sorted (n1 + n2 - 1)-tuples M; only nonzero residuals are returned.
    Used for the GJI (c1 = c2), the mixed identity, and the short form of the
    Filippov identity.
    """
    by_member = {}
    for idx, row in c2.items():
        for pos, l in enumerate(idx):
            by_member.setdefault(l, []).append((idx, pos, row))
    res = {}
    for a_idx, row1 in c1.items():
        for l, v1 in row1.items():
            for (b_full, pos, row2) in by_member.get(l, []):
                b_rest = b_full[:pos] + b_full[pos + 1:]
                if set(a_idx) & set(b_rest):
                    continue
                # value of c2 at (b_rest..., l): move l from pos to the end
                move = (-1) ** (len(b_full) - 1 - pos)
                sign = merge_sign(a_idx, b_rest) * move
                key_m = tuple(sorted(a_idx + b_rest))
                for s, v2 in row2.items():
                    key = (key_m, s)
                    val = res.get(key, Fraction(0)) + sign * v1 * v2
                    if val == 0:
                        res.pop(key, None)
                    else:
                        res[key] = val
    return res


def check_gji(g: GLAlgebra) -> IdentityReport:
    """C_{[j_1..j_n}^l C_{j_{n+1}..j_{2n-1}]l}^s = 0, shuffle-normalized."""
    res = nested_bracket_residuals(g.c, g.arity, g.c, g.arity, g.dim)
    if res:
        key = min(res)
        return IdentityReport(False, key)
    return IdentityReport(True)


def check_mgji(g1: GLAlgebra, g2: GLAlgebra) -> IdentityReport:
    """Mixed identity eps C_{i_1..i_n}^l C'_{i_{n+1}..i_{n+m-1} l}^s = 0 for
    two even-arity algebras on the same space (both nesting orders)."""
    if g1.dim != g2.dim:
        raise ValueError("dimension mismatch")
    for ca, na, cb, nb in ((g1.c, g1.arity, g2.c, g2.arity),
                           (g2.c, g2.arity, g1.c, g1.arity)):
        res = nested_bracket_residuals(ca, na, cb, nb, g1.dim)
        if res:
            return IdentityReport(False, min(res))
    return IdentityReport(True)


def lie_as_gla(alg: LieAlgebra) -> GLAlgebra:
    return GLAlgebra(2, alg.dim, dict(alg.c))


def gla_from_cocycle(alg: LieAlgebra, omega: AntisymTensor) -> GLAlgebra:
    """Structure constants C_{i_1..i_{2m-2}}^j = Omega_{i_1..i_{2m-2}}^j with
    the last index raised through the inverse Killing form; validates the GJI
    and the mixed identity against the underlying algebra."""
    from .lie import cocycle_condition_residual
    if cocycle_condition_residual(alg, omega) is not None:
        raise ValueError("input is not a cocycle")
    kf = killing_form(alg)
    if linalg.rank(kf) < alg.dim:
        raise ValueError("degenerate Killing form")
    kinv = linalg.inverse(kf)
    c = {}
    for idx, v in omega.entries.items():
        # every slot of the sorted entry may play the raised index
        for t in range(len(idx)):
            body = idx[:t] + idx[t + 1:]
            move = (-1) ** (len(idx) - 1 - t)
            for j in range(1, alg.dim + 1):
                w = move * v * kinv[idx[t] - 1][j - 1]
                if w != 0:
                    row = c.setdefault(body, {})
                    val = row.get(j, Fraction(0)) + w
                    if val == 0:
                        row.pop(j, None)
                    else:
                        row[j] = val
    out = GLAlgebra(omega.rank - 1, alg.dim, {k: v for k, v in c.items() if v})
    rep = check_gji(out)
    if not rep.ok:
        raise AssertionError(f"GJI failed at {rep.witness}")
    rep = check_mgji(lie_as_gla(alg), out)
    if not rep.ok:
        raise AssertionError(f"mixed identity failed at {rep.witness}")
    return out


# ---------------------------------------------------------------------------
# exterior algebra: multivectors and coderivations
# ---------------------------------------------------------------------------

class Multivector(dict):
    """Element of the exterior algebra on generators 1..dim: canonical map
    from sorted tuples to coefficients."""

    def __init__(self, dim, data=()):
        super().__init__()
        self.dim = dim
        for idx, v in dict(data).items():
            self.add(idx, v)

    def add(self, idx, v):
        key, s = sort_sign(idx)
        if s == 0 or is_zero(v):
            return
        w = self.get(key, Fraction(0)) + s * v
        if w == 0:
            self.pop(key, None)
        else:
            self[key] = w

    def is_zero(self):
        return not self


def coderivation_apply(g: GLAlgebra, monomial, dim=None) -> Multivector:
    """partial_s on a wedge monomial (tuple of generator labels):

        sum over s-subsets A: sign(A, rest) [X_A] wedge X_rest

    which realizes the epsilon definition with its 1/s!(q-s)! weights.
    """
    dim = dim if dim is not None else g.dim
    key, sgn = sort_sign(monomial)
    out = Multivector(dim)
    if sgn == 0 or len(key) < g.arity:
        return out
    s = g.arity
    for blocks, sign in shuffle_splits(key, [s, len(key) - s]):
        a, rest = blocks
        for j, v in g.c.get(a, {}).items():
            out.add((j,) + rest, sgn * sign * v)
    return out


def coderivation_on_multivector(g: GLAlgebra, mv: Multivector) -> Multivector:
    out = Multivector(mv.dim)
    for idx, v in mv.items():
        for idx2, w in coderivation_apply(g, idx, mv.dim).items():
            out.add(idx2, v * w)
    return out


def coderivation_nilpotency(g: GLAlgebra, q_max=None) -> bool:
    """partial_s^2 = 0 on every basis monomial up to degree q_max."""
    q_max = q_max if q_max is not None else g.dim
    for q in range(g.arity, q_max + 1):
        for mono in combinations(range(1, g.dim + 1), q):
            once = coderivation_apply(g, mono)
            twice = coderivation_on_multivector(g, once)
            if not twice.is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# higher exterior derivative on scalar cochains
# ---------------------------------------------------------------------------

def higher_exterior_derivative(g: GLAlgebra, alpha: AntisymTensor) -> AntisymTensor:
    """(d~ alpha)_{i_1..i_{q+n-1}} = sum over (n, q-1) splits:
    sign * C_A^rho alpha_{rho B}; the shuffle realization of the epsilon form
    with its 1/(n)! 1/(q-1)! weights (n = arity = 2m-2)."""
    n = g.arity
    q = alpha.rank
    r = g.dim
    out_rank = q + n - 1
    ent = {}
    if out_rank > r:
        return AntisymTensor(out_rank, r, {})
    for m in combinations(range(1, r + 1), out_rank):
        tot = Fraction(0)
        for (a, b), sign in shuffle_splits(m, [n, q - 1]):
            for rho, v in g.c.get(a, {}).items():
                tot += sign * v * alpha.get((rho,) + b)
        if tot != 0:
            ent[m] = tot
    return AntisymTensor(out_rank, r, ent)


def basis_one_form(r, sigma) -> AntisymTensor:
    return AntisymTensor(1, r, {(sigma,): Fraction(1)})


def wedge_antisym(a: AntisymTensor, b: AntisymTensor) -> AntisymTensor:
    """Weight-free wedge on coordinates: (a ^ b)_M = shuffle sum a_A b_B."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    rank = a.rank + b.rank
    ent = {}
    for ka, va in a.entries.items():
        for kb, vb in b.entries.items():
            if set(ka) & set(kb):
                continue
            key = tuple(sorted(ka + kb))
            ent[key] = ent.get(key, Fraction(0)) + merge_sign(ka, kb) * va * vb
    return AntisymTensor(rank, a.dim, {k: v for k, v in ent.items() if v != 0})


def leibniz_rule_holds(g: GLAlgebra, a: AntisymTensor, b: AntisymTensor) -> bool:
    """d~(a ^ b) = d~a ^ b + (-1)^p a ^ d~b."""
    left = higher_exterior_derivative(g, wedge_antisym(a, b))
    right = wedge_antisym(higher_exterior_derivative(g, a), b) \
        + wedge_antisym(a, higher_exterior_derivative(g, b)).scale(Fraction((-1) ** a.rank))
    return left == right


def derivative_squared_vanishes(g: GLAlgebra, alpha: AntisymTensor) -> bool:
    return higher_exterior_derivative(g, higher_exterior_derivative(g, alpha)).is_zero()


def evaluate_cochain(alpha: AntisymTensor, monomial) -> Fraction:
    """alpha(X_{m_1} ^ .. ^ X_{m_q}) = q! alpha_{m_1..m_q} (weight-free wedge
    of vectors against the coordinate normalization)."""
    f = 1
    for k in range(2, alpha.rank + 1):
        f *= k
    return f * alpha.get(monomial)


def duality_factor_holds(g: GLAlgebra, alpha: AntisymTensor, monomial) -> bool:
    """(d~ alpha)(monomial) = (p + n - 1)!/p! * alpha(partial monomial),
    the stated pairing between the derivative and the coderivation."""
    p = alpha.rank
    n = g.arity
    lhs = evaluate_cochain(higher_exterior_derivative(g, alpha), monomial)
    rhs = Fraction(0)
    for idx, v in coderivation_apply(g, monomial).items():
        rhs += v * evaluate_cochain(alpha, idx)
    f = Fraction(1)
    for k in range(p + 1, p + n):
        f *= k
    return lhs == f * rhs


# ---------------------------------------------------------------------------
# ghost representation and the complete BRST operator
# ---------------------------------------------------------------------------

@dataclass
class GhostOperator:
    """Odd operator  -1/(n)! c^{i_1}..c^{i_n} C_{i_1..i_n}^sigma d/dc^sigma
    acting on the exterior algebra of r ghosts; `c` are the structure
    constants of one even bracket (n = 2m-2)."""

    arity: int
    dim: int
    c: dict

    def apply(self, mv: Multivector) -> Multivector:
        out = Multivector(self.dim)
        for mono, coeff in mv.items():
            for pos, sigma in enumerate(mono):
                rest = mono[:pos] + mono[pos + 1:]
                dsign = (-1) ** pos  # d/dc^sigma moved past pos ghosts
                for idx, row in self.c.items():
                    v = row.get(sigma)
                    if v is None or set(idx) & set(rest):
                        continue
                    # coefficient of the arrangement c^idx c^rest; `add`
                    # canonicalizes the ordering itself
                    out.add(idx + rest, -coeff * dsign * v)
        return out


def ghost_operators(alg: LieAlgebra, cocycles) -> list[GhostOperator]:
    """One ghost operator per cocycle (the rank-3 cocycle reproduces the
    ordinary coboundary); cocycles enter with their last index raised."""
    ops = []
    for om in cocycles:
        g = gla_from_cocycle(alg, om)
        ops.append(GhostOperator(g.arity, g.dim, g.c))
    return ops


def brst_nilpotency(alg: LieAlgebra, cocycles) -> bool:
    """All anticommutators {s_a, s_b} vanish on every ghost basis monomial."""
    ops = ghost_operators(alg, cocycles)
    r = alg.dim
    monos = [m for q in range(0, r + 1) for m in combinations(range(1, r + 1), q)]
    for a in range(len(ops)):
        for b in range(a, len(ops)):
            for mono in monos:
                mv = Multivector(r, {mono: Fraction(1)})
                first = ops[b].apply(ops[a].apply(mv))
                second = ops[a].apply(ops[b].apply(mv))
                for k, v in second.items():
                    first.add(k, v)
                if not first.is_zero():
                    return False
    return True
