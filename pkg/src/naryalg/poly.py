"""Multivariate polynomials with exact rational coefficients.

Canonical form: term map from exponent vector to nonzero coefficient, with a
fixed variable list.  Only the operations the Poisson module needs: ring
arithmetic, partial derivatives, evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import is_zero


@dataclass
class Poly:
    nvars: int
    terms: dict = field(default_factory=dict)  # exponent tuple -> coeff

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            e = tuple(e)
            if len(e) != self.nvars:
                raise ValueError("exponent length mismatch")
            if not is_zero(c):
                clean[e] = Fraction(c) if not isinstance(c, Fraction) else c
        self.terms = clean

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def var(cls, nvars, i):
        """The coordinate x_i (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    # -- ring ops ------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, Fraction(0)) + c
            if v == 0:
                t.pop(e, None)
            else:
                t[e] = v
        return Poly(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly.zero(self.nvars)
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e, Fraction(0)) + c1 * c2
                if v == 0:
                    t.pop(e, None)
                else:
                    t[e] = v
        return Poly(self.nvars, t)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return Poly.const(self.nvars, other)

    # -- calculus ------------------------------------------------------------
    def diff(self, i):
        """Partial derivative with respect to x_i (1-based)."""
        t = {}
        for e, c in self.terms.items():
            k = e[i - 1]
            if k:
                e2 = list(e)
                e2[i - 1] -= 1
                t[tuple(e2)] = c * k
        return Poly(self.nvars, t)

    def eval(self, point):
        tot = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                for _ in range(k):
                    v *= x
            tot += v
        return tot

    # -- queries ------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        return (isinstance(other, Poly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        def mono(e, c):
            parts = [] if c == 1 and any(e) else [str(c)]
            for i, k in enumerate(e):
                if k == 1:
                    parts.append(f"x{i+1}")
                elif k > 1:
                    parts.append(f"x{i+1}^{k}")
            return "*".join(parts) or str(c)
        return " + ".join(mono(e, c) for e, c in sorted(self.terms.items()))
