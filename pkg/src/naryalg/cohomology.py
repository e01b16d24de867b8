"""Chevalley-Eilenberg cohomology for an arbitrary representation: the
coboundary in both its argument form and (for the trivial representation)
its epsilon-contracted coordinates form, exact cohomology dimensions,
the Casimir-built homotopy operator behind Whitehead's lemma, central
extensions, and deformation cocycles with their obstruction classes.

A V-valued p-cochain is stored by coordinates Omega^A_{i_1..i_p} on the
minimal basis of strictly increasing index tuples, one antisymmetric layer
per target index A (A = 1 for scalar-valued cochains).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linalg
from .lie import LieAlgebra, Representation, check_jacobi
from .scalars import is_zero, rat
from .tensors import shuffle_splits, sort_sign


@dataclass
class Cochain:
    """Order-p cochain with values in a dim_v target (dim_v = 1: scalars)."""

    order: int
    alg_dim: int
    dim_v: int = 1
    data: dict = field(default_factory=dict)  # (A, sorted tuple) -> value

    def __post_init__(self):
        clean = {}
        for (a, idx), v in self.data.items():
            key, s = sort_sign(idx)
            if s == 0 or is_zero(v):
                continue
            val = clean.get((a, key), Fraction(0)) + s * rat(v)
            if val == 0:
                clean.pop((a, key), None)
            else:
                clean[(a, key)] = val
        self.data = clean

    def get(self, a, idx):
        key, s = sort_sign(idx)
        if s == 0:
            return Fraction(0)
        return s * self.data.get((a, key), Fraction(0))

    def value(self, idx):
        """Target vector at the given arguments (dense list)."""
        return [self.get(a, idx) for a in range(1, self.dim_v + 1)]

    def is_zero(self):
        return not self.data

    def __add__(self, other):
        d = dict(self.data)
        for k, v in other.data.items():
            w = d.get(k, Fraction(0)) + v
            if w == 0:
                d.pop(k, None)
            else:
                d[k] = w
        return Cochain(self.order, self.alg_dim, self.dim_v, d)

    def scale(self, c):
        if is_zero(c):
            return Cochain(self.order, self.alg_dim, self.dim_v, {})
        return Cochain(self.order, self.alg_dim, self.dim_v,
                       {k: c * v for k, v in self.data.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.order == other.order
                and self.alg_dim == other.alg_dim and self.dim_v == other.dim_v
                and self.data == other.data)


def basis_tuples(r, p):
    return list(combinations(range(1, r + 1), p))


def coboundary(alg: LieAlgebra, rho, om: Cochain) -> Cochain:
    """Argument form of the coboundary:

        (s Om)(X_1..X_{p+1}) = sum_i (-1)^{i+1} rho(X_i) Om(..^i..)
                             + sum_{j<k} (-1)^{j+k} Om([X_j,X_k], ..^j..^k..)

    `rho` is None for the trivial representation, else a Representation (or a
    bare list of matrices) acting on the target.
    """
    mats = None
    if rho is not None:
        mats = rho.mats if isinstance(rho, Representation) else rho
        if len(mats[0]) != om.dim_v:
            raise ValueError("representation/target dimension mismatch")
    p = om.order
    r = om.alg_dim
    if p >= r:
        return Cochain(p + 1, r, om.dim_v, {})
    data = {}

    def add(a, idx, v):
        if is_zero(v):
            return
        key = (a, idx)
        w = data.get(key, Fraction(0)) + v
        if w == 0:
            data.pop(key, None)
        else:
            data[key] = w

    for idx in combinations(range(1, r + 1), p + 1):
        for a in range(1, om.dim_v + 1):
            tot = Fraction(0)
            if mats is not None:
                for i in range(p + 1):
                    rest = idx[:i] + idx[i + 1:]
                    m = mats[idx[i] - 1]
                    for b in range(1, om.dim_v + 1):
                        coeff = m[a - 1][b - 1]
                        if not is_zero(coeff):
                            tot += (-1) ** i * coeff * om.get(b, rest)
            for j in range(p + 1):
                for k in range(j + 1, p + 1):
                    rest = tuple(idx[t] for t in range(p + 1) if t not in (j, k))
                    for l, v in alg.c_row(idx[j], idx[k]).items():
                        # positions are 0-based here; the 1-based (-1)^{j+k}
                        tot += (-1) ** (j + k) * v * om.get(a, (l,) + rest)
            add(a, idx, tot)
    return Cochain(p + 1, r, om.dim_v, data)


def coboundary_coords(alg: LieAlgebra, om: Cochain) -> Cochain:
    """Coordinates form for the trivial representation:

        (s Om)_{i_1..i_{p+1}} = -1/2 * 1/(p-1)! *
            eps^{j..}_{i..} C_{j_1 j_2}^k Om_{k j_3..j_{p+1}}

    The epsilon contraction is the shuffle sum over (2, p-1) splits times
    2 (pair arrangements) times (p-1)! (tail arrangements), so the
    prefactors cancel against a bare shuffle sum up to the -1/2 * 2 = -1.
    """
    if om.dim_v != 1:
        raise ValueError("coordinates form applies to scalar-valued cochains")
    p = om.order
    r = om.alg_dim
    data = {}
    for idx in combinations(range(1, r + 1), p + 1):
        tot = Fraction(0)
        for (pair, rest), sign in shuffle_splits(idx, [2, p - 1]):
            row = alg.c.get(pair)
            if row:
                for k, v in row.items():
                    tot += sign * v * om.get(1, (k,) + rest)
        if tot != 0:
            data[(1, idx)] = -tot
    return Cochain(p + 1, r, 1, data)


# ---------------------------------------------------------------------------
# matrices of s and cohomology dimensions
# ---------------------------------------------------------------------------

def coord_basis(r, p, dim_v):
    return [(a, idx) for a in range(1, dim_v + 1) for idx in basis_tuples(r, p)]


def coboundary_matrix(alg: LieAlgebra, rho, p, dim_v):
    """Exact matrix of s: C^p -> C^{p+1} in the canonical coordinate bases."""
    src = coord_basis(alg.dim, p, dim_v)
    dst = coord_basis(alg.dim, p + 1, dim_v)
    pos = {key: i for i, key in enumerate(dst)}
    mat = linalg.zeros(len(dst), len(src))
    for col, (a, idx) in enumerate(src):
        om = Cochain(p, alg.dim, dim_v, {(a, idx): Fraction(1)})
        out = coboundary(alg, rho, om)
        for key, v in out.data.items():
            mat[pos[key]][col] = v
    return mat, src, dst


@dataclass
class CohomologyReport:
    dims_c: dict
    dims_z: dict
    dims_b: dict
    dims_h: dict


def cohomology_dims(alg: LieAlgebra, rho, p_max, dim_v=None) -> CohomologyReport:
    """Exact Z/B/H dimensions for degrees 0..p_max by ranks over Q."""
    if dim_v is None:
        dim_v = 1 if rho is None else len((rho.mats if isinstance(rho, Representation) else rho)[0])
    ranks = {}
    dims_c = {}
    for p in range(0, p_max + 1):
        dims_c[p] = len(coord_basis(alg.dim, p, dim_v))
        m, _, _ = coboundary_matrix(alg, rho, p, dim_v)
        ranks[p] = linalg.rank(m) if m and m[0] else 0
    dims_z, dims_b, dims_h = {}, {}, {}
    for p in range(0, p_max + 1):
        dims_z[p] = dims_c[p] - ranks[p]
        dims_b[p] = 0 if p == 0 else ranks[p - 1]
        dims_h[p] = dims_z[p] - dims_b[p]
    return CohomologyReport(dims_c, dims_z, dims_b, dims_h)


# ---------------------------------------------------------------------------
# Whitehead homotopy operator
# ---------------------------------------------------------------------------

def quadratic_casimir(alg: LieAlgebra, rho):
    """I_2(rho) = k^{ij} rho_i rho_j; raises through the inverse Killing form."""
    from .lie import killing_form
    kf = killing_form(alg)
    if linalg.rank(kf) < alg.dim:
        raise ValueError("singular Killing form")
    kinv = linalg.inverse(kf)
    mats = rho.mats if isinstance(rho, Representation) else rho
    n = len(mats[0])
    out = linalg.zeros(n, n)
    for i in range(alg.dim):
        for j in range(alg.dim):
            if kinv[i][j] != 0:
                out = linalg.mat_add(out, linalg.mat_scale(kinv[i][j],
                                                           linalg.mat_mul(mats[i], mats[j])))
    return out


def homotopy_contraction(alg: LieAlgebra, rho, om: Cochain) -> Cochain:
    """(tau Om)^A_{i_1..i_{p-1}} = k^{ij} rho(X_i)^A_B Om^B_{j i_1..i_{p-1}}."""
    from .lie import killing_form
    kf = killing_form(alg)
    kinv = linalg.inverse(kf)
    mats = rho.mats if isinstance(rho, Representation) else rho
    p = om.order
    data = {}
    for idx in combinations(range(1, om.alg_dim + 1), p - 1):
        for a in range(1, om.dim_v + 1):
            tot = Fraction(0)
            for i in range(1, om.alg_dim + 1):
                for j in range(1, om.alg_dim + 1):
                    kij = kinv[i - 1][j - 1]
                    if kij == 0:
                        continue
                    m = mats[i - 1]
                    for b in range(1, om.dim_v + 1):
                        coeff = m[a - 1][b - 1]
                        if not is_zero(coeff):
                            tot += kij * coeff * om.get(b, (j,) + idx)
            if tot != 0:
                data[(a, idx)] = tot
    return Cochain(p - 1, om.alg_dim, om.dim_v, data)


def whitehead_homotopy(alg: LieAlgebra, rho, om: Cochain) -> Cochain:
    """Return the (p-1)-cochain tau(Om) I_2(rho)^{-1} whose coboundary
    reproduces the cocycle Om (requires invertible Killing form and a scalar,
    invertible quadratic Casimir)."""
    cas = quadratic_casimir(alg, rho)
    n = len(cas)
    c0 = cas[0][0]
    if any(cas[i][j] != (c0 if i == j else 0) for i in range(n) for j in range(n)):
        raise ValueError("quadratic Casimir is not scalar (rho not irreducible)")
    if c0 == 0:
        raise ValueError("quadratic Casimir is singular (rho trivial?)")
    return homotopy_contraction(alg, rho, om).scale(Fraction(1) / c0)


def laplacian_identity_holds(alg: LieAlgebra, rho, om: Cochain) -> bool:
    """(s tau + tau s) Om = I_2(rho) Om entrywise on the given cochain."""
    cas = quadratic_casimir(alg, rho)
    c0 = cas[0][0]
    left = coboundary(alg, rho, homotopy_contraction(alg, rho, om)) \
        + homotopy_contraction(alg, rho, coboundary(alg, rho, om))
    return left == om.scale(c0)


# ---------------------------------------------------------------------------
# central extensions
# ---------------------------------------------------------------------------

def central_extension(alg: LieAlgebra, om2: Cochain) -> LieAlgebra:
    """Extend by one central generator using a scalar 2-cocycle:
    [X~_i, X~_j] = C_ij^k X~_k + Om(X_i, X_j) Xi."""
    if om2.order != 2 or om2.dim_v != 1:
        raise ValueError("need a scalar 2-cochain")
    if not coboundary(alg, None, om2).is_zero():
        raise ValueError("not a 2-cocycle: extension would break the Jacobi identity")
    r = alg.dim
    entries = []
    for (i, j), row in alg.c.items():
        for k, v in row.items():
            entries.append(((i, j, k), v))
    for (a, idx), v in om2.data.items():
        entries.append(((idx[0], idx[1], r + 1), v))
    ext = LieAlgebra.from_entries(r + 1, entries)
    rep = check_jacobi(ext)
    if not rep.ok:
        raise AssertionError(f"extension failed the Jacobi identity at {rep.witness}")
    return ext


def trivialize_extension(alg: LieAlgebra, om2: Cochain):
    """Solve s(Om1) = Om2 for a 1-cochain; returns the basis-change vector
    Om1 (X~'_k = X~_k - Om1_k Xi) or None when the class is non-trivial."""
    r = alg.dim
    rows = []
    rhs = []
    for idx in combinations(range(1, r + 1), 2):
        row = [Fraction(0)] * r
        for k, v in alg.c_row(*idx).items():
            row[k - 1] -= v
        rows.append(row)
        rhs.append(om2.get(1, idx))
    return linalg.solve(rows, rhs)


# ---------------------------------------------------------------------------
# deformations
# ---------------------------------------------------------------------------

@dataclass
class DeformationReport:
    is_cocycle: bool
    is_coboundary: bool
    obstruction: Cochain | None
    obstruction_is_cocycle: bool | None
    obstruction_is_coboundary: bool | None
    obstruction_potential: Cochain | None


def deformation_check(alg: LieAlgebra, alpha: Cochain) -> DeformationReport:
    """First-order deformation analysis of an algebra-valued 2-cochain.

    Checks the ad-cocycle condition; when it holds, builds the quadratic
    obstruction gamma(X,Y,Z) = alpha(X, alpha(Y,Z)) + cycl., verifies it is a
    3-cocycle, and classifies it in degree-3 cohomology by an exact solve.
    """
    if alpha.order != 2 or alpha.dim_v != alg.dim:
        raise ValueError("need an algebra-valued 2-cochain")
    rho = alg.adjoint_rep()
    s_alpha = coboundary(alg, rho, alpha)
    if not s_alpha.is_zero():
        return DeformationReport(False, False, None, None, None, None)

    is_cob = _in_coboundary_image(alg, rho, alpha)

    r = alg.dim
    gdata = {}
    for idx in combinations(range(1, r + 1), 3):
        vec = _alpha_nested_cyclic(alg, alpha, idx)
        for a in range(1, r + 1):
            if vec[a - 1] != 0:
                gdata[(a, idx)] = vec[a - 1]
    gamma = Cochain(3, r, r, gdata)
    g_cocycle = coboundary(alg, rho, gamma).is_zero()
    pot = _coboundary_preimage(alg, rho, gamma)
    return DeformationReport(True, is_cob, gamma, g_cocycle, pot is not None, pot)


def _alpha_nested_cyclic(alg, alpha, idx):
    """alpha(X, alpha(Y, Z)) + cyclic over the three slots, as a vector."""
    r = alg.dim
    out = [Fraction(0)] * r
    x, y, z = idx
    for (i, j, k) in ((x, y, z), (y, z, x), (z, x, y)):
        inner = alpha.value((j, k))
        for l in range(1, r + 1):
            if inner[l - 1] == 0:
                continue
            for a in range(1, r + 1):
                out[a - 1] += inner[l - 1] * alpha.get(a, (i, l))
    return out


def _in_coboundary_image(alg, rho, om):
    return _coboundary_preimage(alg, rho, om) is not None


def _coboundary_preimage(alg, rho, om):
    """Exact solve s(beta) = om over the (p-1)-cochain coordinates."""
    p = om.order
    mat, src, dst = coboundary_matrix(alg, rho, p - 1, om.dim_v)
    rhs = [Fraction(0)] * len(dst)
    pos = {key: i for i, key in enumerate(dst)}
    for key, v in om.data.items():
        rhs[pos[key]] = v
    sol = linalg.solve(mat, rhs)
    if sol is None:
        return None
    data = {src[i]: sol[i] for i in range(len(src)) if sol[i] != 0}
    return Cochain(p - 1, om.alg_dim, om.dim_v, data)


def mc_cochain(alg: LieAlgebra) -> Cochain:
    """The algebra-valued identity 1-cochain omega(X_i) = X_i."""
    data = {(a, (a,)): Fraction(1) for a in range(1, alg.dim + 1)}
    return Cochain(1, alg.dim, alg.dim, data)
