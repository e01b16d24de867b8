"""Exact dense linear algebra over the rationals (or any exact field).

Matrices are lists of row lists.  Elimination uses exact field arithmetic
with first-nonzero (lexicographic) pivoting, so ranks, nullspaces and solves
are deterministic and free of rounding; this is what turns the cohomology
dimensions into integers rather than tolerance statements.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GaussianRational, is_zero


# ---------------------------------------------------------------------------
# construction / basic ops
# ---------------------------------------------------------------------------

def zeros(n, m):
    return [[Fraction(0)] * m for _ in range(n)]


def identity(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    zero = Fraction(0) * a[0][0] * b[0][0]
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        row_a = a[i]
        row_o = out[i]
        for l in range(k):
            v = row_a[l]
            if is_zero(v):
                continue
            row_b = b[l]
            for j in range(m):
                w = row_b[j]
                if not is_zero(w):
                    row_o[j] = row_o[j] + v * w
    return out


def mat_eq(a, b):
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def transpose(a):
    return [list(r) for r in zip(*a)]


def trace(a):
    return sum((a[i][i] for i in range(len(a))), Fraction(0) * a[0][0])


def commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def anticommutator(a, b):
    return mat_add(mat_mul(a, b), mat_mul(b, a))


def kron(a, b):
    n, m = len(a), len(b)
    na, ma = len(a[0]), len(b[0])
    return [[a[i // m][j // ma] * b[i % m][j % ma]
             for j in range(na * ma)] for i in range(n * m)]


def is_zero_matrix(a):
    return all(is_zero(x) for row in a for x in row)


def conj_transpose(a):
    def c(x):
        return x.conjugate() if isinstance(x, GaussianRational) else x
    return [[c(a[j][i]) for j in range(len(a))] for i in range(len(a[0]))]


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

def rref(mat):
    """Reduced row-echelon form; returns (rref_matrix, pivot_columns)."""
    m = [row[:] for row in mat]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not is_zero(m[i][c])), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and not is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(mat) -> int:
    return len(rref(mat)[1])


def nullspace(mat):
    """Basis of the right nullspace (deterministic: free columns in order)."""
    if not mat:
        return []
    r, pivots = rref(mat)
    cols = len(mat[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][fc]
        basis.append(v)
    return basis


def solve(a, b):
    """One exact solution x of a x = b, or None if inconsistent."""
    if not a:
        return [] if all(is_zero(x) for x in b) else None
    rows, cols = len(a), len(a[0])
    aug = [a[i][:] + [b[i]] for i in range(rows)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for i, pc in enumerate(pivots):
        x[pc] = r[i][cols]
    return x


def inverse(a):
    n = len(a)
    aug = [a[i][:] + identity(n)[i] for i in range(n)]
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r]


def det(a):
    """Exact determinant by fraction-free-style elimination with row swaps."""
    n = len(a)
    m = [row[:] for row in a]
    sign = 1
    d = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if not is_zero(m[i][c])), None)
        if pivot is None:
            return Fraction(0) * d
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        d = d * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if not is_zero(m[i][c]):
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * d


def signature(sym):
    """(n_plus, n_minus, n_zero) of a rational symmetric matrix, found by
    exact simultaneous row/column reduction (Lagrange diagonalization)."""
    n = len(sym)
    m = [row[:] for row in sym]
    plus = minus = zero = 0
    idx = list(range(n))
    work = [row[:] for row in m]
    used = [False] * n
    for _ in range(n):
        # find a nonzero diagonal entry among unused coordinates
        k = next((i for i in idx if not used[i] and work[i][i] != 0), None)
        if k is None:
            # try to create one from an off-diagonal pair
            pair = None
            for i in idx:
                if used[i]:
                    continue
                for j in idx:
                    if not used[j] and i != j and work[i][j] != 0:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                zero += sum(1 for i in idx if not used[i])
                break
            i, j = pair
            # row/col operation: e_i -> e_i + e_j makes diagonal nonzero
            for c in range(n):
                work[i][c] += work[j][c]
            for r in range(n):
                work[r][i] += work[r][j]
            k = i
        d = work[k][k]
        if d > 0:
            plus += 1
        else:
            minus += 1
        used[k] = True
        for i in idx:
            if i != k and not used[i] and work[i][k] != 0:
                f = work[i][k] / d
                for c in range(n):
                    work[i][c] -= f * work[k][c]
                for r in range(n):
                    work[r][i] -= f * work[r][k]
    return plus, minus, zero
