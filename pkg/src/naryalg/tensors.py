"""Canonical antisymmetric tensors, Levi-Civita machinery, and the
contraction kernels shared by every other module.

Storage convention: an antisymmetric tensor keeps only strictly increasing
index tuples (1-based indices).  Reading a permuted tuple applies the sign of
the permutation; a tuple with repeats reads zero.  The total antisymmetrizer
follows the weight-free convention [a_1...a_n] = sum_sigma sign(sigma) a_sigma
(no 1/n!); the weight-one variant is exposed separately so the two can never
be silently confused.

Contractions of products of blockwise-antisymmetric factors against the
generalized Kronecker symbol collapse to signed sums over ordered block
splits ("shuffles") -- `shuffle_splits` is the hot kernel behind the
generalized-Jacobi, Filippov and Poisson residuals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product

from .scalars import is_zero, rat


# ---------------------------------------------------------------------------
# permutation helpers
# ---------------------------------------------------------------------------

def perm_sign(seq) -> int:
    """Sign of the permutation sorting `seq` (entries distinct); 0 on repeats."""
    t = list(seq)
    n = len(t)
    if len(set(t)) != n:
        return 0
    sign = 1
    for i in range(n):
        m = min(range(i, n), key=t.__getitem__)
        if m != i:
            t[i], t[m] = t[m], t[i]
            sign = -sign
    return sign


def sort_sign(seq):
    """(sorted tuple, sign); sign 0 when the tuple has a repeated index."""
    s = perm_sign(seq)
    if s == 0:
        return tuple(seq), 0
    return tuple(sorted(seq)), s


def merge_sign(a, b) -> int:
    """Sign of the concatenation a+b of disjoint sorted tuples vs sorted merge."""
    inv = 0
    for x in a:
        for y in b:
            if y < x:
                inv += 1
    return -1 if inv % 2 else 1


def shuffle_splits(m, sizes):
    """Yield (blocks, sign) over ordered partitions of sorted tuple `m`.

    Each block comes out sorted; `sign` is the parity of the arrangement
    block_1 + block_2 + ... relative to m.  The number of terms is the
    multinomial coefficient; together with in-block antisymmetry this
    reproduces the full Levi-Civita contraction up to the product of the
    block factorials.
    """
    if not sizes:
        yield (), 1
        return
    k = sizes[0]
    rest_sizes = sizes[1:]
    idx = range(len(m))
    for chosen in combinations(idx, k):
        block = tuple(m[i] for i in chosen)
        rest = tuple(m[i] for i in idx if i not in chosen)
        s = merge_sign(block, rest)
        for blocks, s2 in shuffle_splits(rest, rest_sizes):
            yield (block,) + blocks, s * s2


# ---------------------------------------------------------------------------
# generalized Kronecker symbol
# ---------------------------------------------------------------------------

def gen_kronecker(upper, lower):
    """det(delta^{u_i}_{l_j}): the permutation sign when `lower` rearranges
    `upper`, zero otherwise."""
    if len(upper) != len(lower):
        raise ValueError("gen_kronecker: tuples must have equal length")
    if len(set(upper)) != len(upper) or sorted(upper) != sorted(lower):
        return Fraction(0)
    pos = {v: i for i, v in enumerate(upper)}
    return Fraction(perm_sign([pos[v] for v in lower]))


# ---------------------------------------------------------------------------
# canonical antisymmetric tensors
# ---------------------------------------------------------------------------

@dataclass
class AntisymTensor:
    """Fully antisymmetric rank-r tensor on indices 1..dim, sparse canonical."""

    rank: int
    dim: int
    entries: dict = field(default_factory=dict)  # sorted tuple -> nonzero scalar

    def __post_init__(self):
        clean = {}
        for idx, v in self.entries.items():
            key, s = sort_sign(idx)
            if s == 0 or is_zero(v):
                continue
            val = clean.get(key, 0) + s * v
            if is_zero(val):
                clean.pop(key, None)
            else:
                clean[key] = val
        self.entries = clean

    @classmethod
    def from_function(cls, rank, dim, f):
        ent = {}
        for idx in combinations(range(1, dim + 1), rank):
            v = f(*idx)
            if not is_zero(v):
                ent[idx] = v
        return cls(rank, dim, ent)

    def get(self, idx):
        key, s = sort_sign(idx)
        if s == 0:
            return Fraction(0)
        v = self.entries.get(key)
        return Fraction(0) if v is None else s * v

    def is_zero(self) -> bool:
        return not self.entries

    def keys(self):
        return self.entries.keys()

    def items(self):
        return self.entries.items()

    def __add__(self, other):
        if (self.rank, self.dim) != (other.rank, other.dim):
            raise ValueError("shape mismatch")
        ent = dict(self.entries)
        for k, v in other.entries.items():
            w = ent.get(k, 0) + v
            if is_zero(w):
                ent.pop(k, None)
            else:
                ent[k] = w
        return AntisymTensor(self.rank, self.dim, ent)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if is_zero(c):
            return AntisymTensor(self.rank, self.dim, {})
        return AntisymTensor(self.rank, self.dim,
                             {k: c * v for k, v in self.entries.items()})

    def __eq__(self, other):
        return (isinstance(other, AntisymTensor)
                and self.rank == other.rank and self.dim == other.dim
                and self.entries == other.entries)


def levi_civita(dim) -> AntisymTensor:
    """epsilon_{1...d} = +1."""
    return AntisymTensor(dim, dim, {tuple(range(1, dim + 1)): Fraction(1)})


def ray_equal(a: dict, b: dict) -> bool:
    """Exact proportionality of two sparse maps by a nonzero scalar."""
    if not a or not b:
        return not a and not b
    if set(a) != set(b):
        return False
    k0 = next(iter(a))
    va, vb = a[k0], b[k0]
    # cross-multiplied comparison avoids choosing which side to divide
    return all(a[k] * vb == b[k] * va for k in a)


# ---------------------------------------------------------------------------
# dense arrays (small, exact)
# ---------------------------------------------------------------------------

@dataclass
class DenseTensor:
    """Dense exact array keyed by full 1-based index tuples; zero-suppressed."""

    shape: tuple
    data: dict = field(default_factory=dict)

    @classmethod
    def from_function(cls, shape, f):
        d = {}
        for idx in product(*(range(1, s + 1) for s in shape)):
            v = f(*idx)
            if not is_zero(v):
                d[idx] = v
        return cls(shape, d)

    @classmethod
    def from_antisym(cls, t: AntisymTensor):
        d = {}
        for key, v in t.entries.items():
            for p in permutations(key):
                d[p] = perm_sign(p) * v
        return cls((t.dim,) * t.rank, d)

    def get(self, idx):
        return self.data.get(tuple(idx), Fraction(0))

    def __eq__(self, other):
        return (isinstance(other, DenseTensor)
                and self.shape == other.shape and self.data == other.data)


def antisymmetrize(t: DenseTensor) -> AntisymTensor:
    """Weight-free total antisymmetrization: sum over all permutations with
    signs (no 1/n!)."""
    rank = len(t.shape)
    dim = t.shape[0]
    if any(s != dim for s in t.shape):
        raise ValueError("antisymmetrize needs equal axis dimensions")
    ent = {}
    for key in combinations(range(1, dim + 1), rank):
        tot = Fraction(0)
        for p in permutations(key):
            v = t.data.get(p)
            if v is not None:
                tot += perm_sign(p) * v
        if not is_zero(tot):
            ent[key] = tot
    return AntisymTensor(rank, dim, ent)


def antisymmetrize_weighted(t: DenseTensor) -> AntisymTensor:
    """Weight-one variant: divides by rank! (idempotent on antisym input)."""
    out = antisymmetrize(t)
    f = Fraction(1)
    for k in range(2, out.rank + 1):
        f *= k
    return out.scale(Fraction(1, 1) / f)


def contract(a, b, pairs):
    """Exact contraction of two arrays over the given (axis_a, axis_b) pairs.

    Axes are 0-based positions; AntisymTensor inputs are densified first.
    Result axes: unpaired axes of `a` then of `b`, in order.
    """
    ta = DenseTensor.from_antisym(a) if isinstance(a, AntisymTensor) else a
    tb = DenseTensor.from_antisym(b) if isinstance(b, AntisymTensor) else b
    pa = [p for p, _ in pairs]
    pb = [q for _, q in pairs]
    for p, q in pairs:
        if ta.shape[p] != tb.shape[q]:
            raise ValueError(f"contract: axis dim mismatch {p}/{q}")
    free_a = [i for i in range(len(ta.shape)) if i not in pa]
    free_b = [i for i in range(len(tb.shape)) if i not in pb]
    shape = tuple(ta.shape[i] for i in free_a) + tuple(tb.shape[i] for i in free_b)

    # bucket b's entries by their paired-index signature
    buckets = {}
    for idx, v in tb.data.items():
        sig = tuple(idx[q] for q in pb)
        buckets.setdefault(sig, []).append((tuple(idx[i] for i in free_b), v))
    out = {}
    for idx, v in ta.data.items():
        sig = tuple(idx[p] for p in pa)
        hits = buckets.get(sig)
        if not hits:
            continue
        left = tuple(idx[i] for i in free_a)
        for right, w in hits:
            key = left + right
            tot = out.get(key, 0) + v * w
            if is_zero(tot):
                out.pop(key, None)
            else:
                out[key] = tot
    return DenseTensor(shape, out)


def as_antisym(t: DenseTensor):
    """Return the canonical AntisymTensor equal to `t`, or None if `t` is not
    fully antisymmetric."""
    rank = len(t.shape)
    dim = t.shape[0] if t.shape else 0
    if any(s != dim for s in t.shape):
        return None
    ent = {}
    for idx, v in t.data.items():
        key, s = sort_sign(idx)
        if s == 0:
            return None
        if key in ent:
            if ent[key] != s * v:
                return None
        else:
            ent[key] = s * v
    # every permutation of a stored key must be present with the right value
    for key, v in ent.items():
        for p in permutations(key):
            if t.data.get(p, Fraction(0)) != perm_sign(p) * v:
                return None
    return AntisymTensor(rank, dim, ent)


# ---------------------------------------------------------------------------
# Levi-Civita recursion identities
# ---------------------------------------------------------------------------

@dataclass
class EpsReport:
    ok: bool
    counterexample: tuple | None = None


def eps_identities_check(n: int, d: int) -> EpsReport:
    """Entrywise check of the two epsilon recursions: the first-row expansion
    eps^{i..}_{j..} = sum_s (-1)^{s+1} delta^{i1}_{js} eps^{i2..}_{j..^s..}
    and the pairwise resolution
    eps^{i..}_{j..} = sum_{t>s} (-1)^{s+t+1} eps^{i1 i2}_{js jt} eps^{i3..}_{rest}.
    """
    if not (1 <= n <= d <= 6):
        raise ValueError("eps_identities_check: desk-scale bounds 1 <= n <= d <= 6")
    rng = range(1, d + 1)
    for upper in product(rng, repeat=n):
        for lower in product(rng, repeat=n):
            lhs = gen_kronecker(upper, lower)
            tot = Fraction(0)
            for s in range(n):
                if upper[0] == lower[s]:
                    rest = lower[:s] + lower[s + 1:]
                    tot += (-1) ** s * gen_kronecker(upper[1:], rest)
            if tot != lhs:
                return EpsReport(False, (upper, lower, "first-row"))
            if n >= 2:
                tot2 = Fraction(0)
                for s in range(n):
                    for t in range(s + 1, n):
                        sub = gen_kronecker(upper[:2], (lower[s], lower[t]))
                        if sub:
                            rest = tuple(lower[k] for k in range(n) if k not in (s, t))
                            tot2 += (-1) ** (s + t + 1) * sub * gen_kronecker(upper[2:], rest)
                if tot2 != lhs:
                    return EpsReport(False, (upper, lower, "pair-resolution"))
    return EpsReport(True)


def eps_pair_expansion_check(p: int, d: int) -> bool:
    """Check sum_{s<t} (-1)^{s+t+1} eps^{j1 j2}_{is it} eps^{j3..}_{i-rest}
    equals eps^{j1..j_{p+1}}_{i1..i_{p+1}} entrywise (the identity behind the
    coordinates form of the coboundary operator)."""
    rng = range(1, d + 1)
    m = p + 1
    for upper in product(rng, repeat=m):
        for lower in product(rng, repeat=m):
            tot = Fraction(0)
            for s in range(m):
                for t in range(s + 1, m):
                    sub = gen_kronecker(upper[:2], (lower[s], lower[t]))
                    if sub:
                        rest = tuple(lower[k] for k in range(m) if k not in (s, t))
                        tot += (-1) ** (s + t + 1) * sub * gen_kronecker(upper[2:], rest)
            if tot != gen_kronecker(upper, lower):
                return False
    return True
