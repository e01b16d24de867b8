"""The .alg text format: one header line `kind arity dim scalar`, then one
entry per line `i1 i2 ... in -> k : value`, with an optional `metric` block
of `i j : value` lines.  Indices are 1-based; antisymmetric kinds accept only
strictly increasing index tuples, so files are canonical and diffable.
Multivector files reuse the same line shape with exponent vectors in place
of the target index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .filippov import FilippovAlgebra
from .gla import GLAlgebra
from .lie import LieAlgebra
from .nary_cohomology import LeibnizAlgebra
from .poisson import PolyMultivector
from .poly import Poly
from .scalars import GaussianRational, format_scalar, parse_scalar

KINDS = ("lie", "gla", "filippov", "leibniz", "multivector")


class ParseError(ValueError):
    def __init__(self, line_no, col, message):
        super().__init__(f"line {line_no}, column {col}: {message}")
        self.line_no = line_no
        self.col = col


@dataclass
class AlgebraFile:
    kind: str
    arity: int
    dim: int
    scalar_kind: str = "rational"
    entries: list = field(default_factory=list)  # (tuple, target, value)
    metric: list | None = None

    # -- text round trip -----------------------------------------------------
    def emit(self) -> str:
        lines = [f"{self.kind} {self.arity} {self.dim} {self.scalar_kind}"]
        for idx, target, value in sorted(self.entries):
            head = " ".join(str(i) for i in idx)
            tgt = " ".join(str(t) for t in target) if isinstance(target, tuple) \
                else str(target)
            lines.append(f"{head} -> {tgt} : {format_scalar(value)}")
        if self.metric is not None:
            lines.append("metric")
            d = len(self.metric)
            for i in range(d):
                for j in range(i, d):
                    if self.metric[i][j] != 0:
                        lines.append(f"{i + 1} {j + 1} : {format_scalar(self.metric[i][j])}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "AlgebraFile":
        lines = text.splitlines()
        if not lines:
            raise ParseError(1, 1, "empty file")
        head = lines[0].split()
        if len(head) != 4:
            raise ParseError(1, 1, "header must be: kind arity dim scalar")
        kind, arity_s, dim_s, scalar_kind = head
        if kind not in KINDS:
            raise ParseError(1, 1, f"unknown kind {kind!r}")
        try:
            arity, dim = int(arity_s), int(dim_s)
        except ValueError:
            raise ParseError(1, len(kind) + 2, "arity and dim must be integers")
        if scalar_kind not in ("rational", "gaussian"):
            raise ParseError(1, 1, f"unknown scalar kind {scalar_kind!r}")
        out = cls(kind, arity, dim, scalar_kind)
        in_metric = False
        metric = None
        seen = set()
        for no, line in enumerate(lines[1:], start=2):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if stripped == "metric":
                in_metric = True
                metric = [[Fraction(0)] * dim for _ in range(dim)]
                continue
            if ":" not in stripped:
                raise ParseError(no, 1, "missing ':' separator")
            lhs, _, val_s = stripped.rpartition(":")
            try:
                value = parse_scalar(val_s)
            except (ValueError, ZeroDivisionError):
                raise ParseError(no, stripped.rfind(":") + 2, f"bad scalar {val_s.strip()!r}")
            if scalar_kind == "rational" and isinstance(value, GaussianRational):
                raise ParseError(no, 1, "gaussian literal in a rational file")
            if in_metric:
                parts = lhs.split()
                if len(parts) != 2:
                    raise ParseError(no, 1, "metric lines are `i j : value`")
                i, j = (int(x) for x in parts)
                if not (1 <= i <= dim and 1 <= j <= dim):
                    raise ParseError(no, 1, "metric index out of range")
                metric[i - 1][j - 1] = value
                metric[j - 1][i - 1] = value
                continue
            if "->" not in lhs:
                raise ParseError(no, 1, "missing '->'")
            idx_s, _, tgt_s = lhs.partition("->")
            try:
                idx = tuple(int(x) for x in idx_s.split())
                tgt_parts = tuple(int(x) for x in tgt_s.split())
            except ValueError:
                raise ParseError(no, 1, "indices must be integers")
            if kind == "multivector":
                if len(tgt_parts) != dim:
                    raise ParseError(no, 1, f"exponent vector must have {dim} entries")
                target = tgt_parts
            else:
                if len(tgt_parts) != 1:
                    raise ParseError(no, len(idx_s) + 3, "exactly one target index")
                target = tgt_parts[0]
                if not 1 <= target <= dim:
                    raise ParseError(no, 1, f"target index {target} out of range")
            if len(idx) != arity:
                raise ParseError(no, 1, f"expected {arity} lower indices")
            if any(not 1 <= i <= dim for i in idx):
                raise ParseError(no, 1, "lower index out of range")
            if kind != "leibniz":
                if any(a >= b for a, b in zip(idx, idx[1:])):
                    raise ParseError(no, 1,
                                     f"indices must be strictly increasing, got {idx}")
            key = (idx, target)
            if key in seen:
                raise ParseError(no, 1, f"duplicate entry for {idx} -> {target}")
            seen.add(key)
            out.entries.append((idx, target, value))
        out.metric = metric
        return out

    # -- object round trip ----------------------------------------------------
    def build(self):
        if self.kind == "lie":
            if self.arity != 2:
                raise ValueError("binary algebras have arity 2")
            return LieAlgebra.from_entries(
                self.dim, [((idx[0], idx[1], t), v) for idx, t, v in self.entries])
        if self.kind == "gla":
            c = {}
            for idx, t, v in self.entries:
                c.setdefault(idx, {})[t] = v
            return GLAlgebra(self.arity, self.dim, c)
        if self.kind == "filippov":
            f = {}
            for idx, t, v in self.entries:
                f.setdefault(idx, {})[t] = v
            fa = FilippovAlgebra(self.arity, self.dim, f)
            fa.metric = self.metric
            return fa
        if self.kind == "leibniz":
            b = {}
            for idx, t, v in self.entries:
                b.setdefault(idx, {})[t] = v
            return LeibnizAlgebra(self.dim, b)
        if self.kind == "multivector":
            comps = {}
            for idx, exps, v in self.entries:
                p = comps.get(idx, Poly.zero(self.dim))
                comps[idx] = p + Poly(self.dim, {tuple(exps): v})
            return PolyMultivector(self.arity, self.dim, comps)
        raise ValueError(f"unknown kind {self.kind!r}")

    @classmethod
    def from_object(cls, obj, name_hint="") -> "AlgebraFile":
        if isinstance(obj, LieAlgebra):
            out = cls("lie", 2, obj.dim)
            for (i, j), row in obj.c.items():
                for k, v in row.items():
                    out.entries.append(((i, j), k, v))
            return out
        if isinstance(obj, GLAlgebra):
            out = cls("gla", obj.arity, obj.dim)
            for idx, row in obj.c.items():
                for k, v in row.items():
                    out.entries.append((idx, k, v))
            return out
        if isinstance(obj, FilippovAlgebra):
            out = cls("filippov", obj.arity, obj.dim)
            for idx, row in obj.f.items():
                for k, v in row.items():
                    out.entries.append((idx, k, v))
            out.metric = obj.metric
            return out
        if isinstance(obj, LeibnizAlgebra):
            out = cls("leibniz", 2, obj.dim)
            for (i, j), row in obj.b.items():
                for k, v in row.items():
                    out.entries.append(((i, j), k, v))
            return out
        if isinstance(obj, PolyMultivector):
            out = cls("multivector", obj.order, obj.dim)
            for idx, p in obj.comps.items():
                for exps, c in sorted(p.terms.items()):
                    out.entries.append((idx, exps, c))
            return out
        raise TypeError(f"cannot serialize {type(obj).__name__}")
