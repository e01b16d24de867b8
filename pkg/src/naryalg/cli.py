"""Batch front-end: validate algebra files against their identity/metric/
cohomology suites, generate the catalog algebras, compute cohomology
dimension reports, and run the Poisson-tensor checks.

Machine-readable results go to stdout as JSON lines; a human summary goes to
stderr.  Exit codes: 0 all checks passed, 1 at least one check failed,
2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import catalog, linalg
from .algfile import AlgebraFile, ParseError
from .filippov import (FI_FORMS, FilippovAlgebra, check_fi, check_metric_fa,
                       inder_lie_algebra, kasymov_form, semisimplicity_check)
from .gla import GLAlgebra, check_gji
from .lie import LieAlgebra, check_jacobi, check_metric_invariance, killing_form
from .nary_cohomology import LeibnizAlgebra, fa_cohomology_dims
from .cohomology import cohomology_dims
from .poisson import PolyMultivector, gps_check, np_check, schouten_bracket

DEFAULT_MAX_DIM = 8
DEFAULT_MAX_ARITY = 6


def max_dim():
    return int(os.environ.get("NARY_MAX_DIM", DEFAULT_MAX_DIM))


def _emit(record):
    sys.stdout.write(json.dumps(record, sort_keys=True) + "\n")


def _human(msg):
    sys.stderr.write(msg + "\n")


class CheckRun:
    def __init__(self):
        self.failed = 0
        self.count = 0

    def record(self, name, ok, witness=None):
        self.count += 1
        if not ok:
            self.failed += 1
        t = time.monotonic()
        rec = {"check": name, "verdict": "pass" if ok else "fail"}
        if witness is not None and not ok:
            rec["counterexample"] = _jsonable(witness)
        _emit(rec)
        _human(f"  {'ok  ' if ok else 'FAIL'} {name}"
               + ("" if ok or witness is None else f"  at {witness}"))

    @property
    def exit_code(self):
        return 0 if self.failed == 0 else 1


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x if isinstance(x, (int, str, bool, type(None))) else str(x)


# ---------------------------------------------------------------------------
# check suites
# ---------------------------------------------------------------------------

def identity_suite(obj, run: CheckRun):
    if isinstance(obj, LieAlgebra):
        rep = check_jacobi(obj)
        run.record("jacobi", rep.ok, rep.witness)
    elif isinstance(obj, GLAlgebra):
        rep = check_gji(obj)
        run.record("generalized-jacobi", rep.ok, rep.witness)
    elif isinstance(obj, FilippovAlgebra):
        for form in FI_FORMS:
            rep = check_fi(obj, form)
            run.record(f"filippov-identity-{form}", rep.ok, rep.witness)
    elif isinstance(obj, LeibnizAlgebra):
        wit = obj.left_identity_witness()
        run.record("left-leibniz-identity", wit is None, wit)
    else:
        raise ValueError("identity suite applies to algebra files")


def metric_suite(obj, metric, run: CheckRun):
    if metric is None:
        ident = linalg.identity(obj.dim)
        metric = ident
        _human("  (no metric block; using the identity matrix)")
    if isinstance(obj, LieAlgebra):
        rep = check_metric_invariance(obj, metric)
        run.record("metric-invariance", rep.invariant, rep.witness)
        run.record("metric-nondegenerate", rep.nondegenerate)
    elif isinstance(obj, FilippovAlgebra):
        try:
            rep = check_metric_fa(obj, metric)
        except ValueError as exc:
            run.record("metric-nondegenerate", False, str(exc))
            return
        run.record("metric-nondegenerate", True)
        run.record("metric-invariance", rep.metric, rep.witness)
    else:
        raise ValueError("metric suite applies to binary or n-ary bracket algebras")


def cohomology_suite(obj, run: CheckRun, p_max=1):
    if isinstance(obj, LieAlgebra):
        rep = cohomology_dims(obj, None, min(p_max + 1, obj.dim))
        _emit({"check": "cohomology-dims", "H": _jsonable(rep.dims_h)})
        run.record("cohomology-consistent", all(v >= 0 for v in rep.dims_h.values()))
    elif isinstance(obj, FilippovAlgebra):
        rep = fa_cohomology_dims(obj, "trivial", p_max)
        _emit({"check": "cohomology-dims", "complex": "trivial", "H": _jsonable(rep.dims_h)})
        run.record("cohomology-consistent", all(v >= 0 for v in rep.dims_h.values()))
    else:
        raise ValueError("cohomology suite applies to lie or filippov files")


def cmd_check(args) -> int:
    try:
        text = open(args.path).read()
        af = AlgebraFile.parse(text)
        if af.dim > max_dim():
            raise ValueError(f"dimension {af.dim} above the cap {max_dim()}"
                             " (override with NARY_MAX_DIM)")
        obj = af.build()
    except (OSError, ParseError, ValueError) as exc:
        _human(f"input error: {exc}")
        _emit({"error": str(exc)})
        return 2
    run = CheckRun()
    _human(f"{args.path}: {af.kind} arity={af.arity} dim={af.dim}")
    suites = ("identity", "metric", "cohomology") if args.suite == "all" else (args.suite,)
    for suite in suites:
        if suite == "identity":
            identity_suite(obj, run)
        elif suite == "metric":
            if isinstance(obj, (GLAlgebra, LeibnizAlgebra)):
                if args.suite != "all":
                    _human("  metric suite not applicable; skipping")
                continue
            metric_suite(obj, af.metric, run)
        elif suite == "cohomology":
            if isinstance(obj, (GLAlgebra, LeibnizAlgebra)):
                if args.suite != "all":
                    _human("  cohomology suite not applicable; skipping")
                continue
            cohomology_suite(obj, run, args.pmax)
    _human(f"{run.count - run.failed}/{run.count} checks passed")
    return run.exit_code


# ---------------------------------------------------------------------------
# generation
# ---------------------------------------------------------------------------

def cmd_generate(args) -> int:
    try:
        obj = _generate_object(args)
    except ValueError as exc:
        _human(f"input error: {exc}")
        return 2
    af = AlgebraFile.from_object(obj)
    text = af.emit()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        _human(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def _generate_object(args):
    kind = args.kind
    if kind == "simple-fa":
        signs = [1 if ch == "+" else -1 for ch in (args.signs or "+" * (args.n + 1))]
        from .filippov import simple_fa
        return simple_fa(args.n, signs)
    if kind == "gla-from-su":
        if (args.n, args.m) != (3, 3):
            raise ValueError("available desk-scale generation: n=3 m=3")
        return catalog.su3_gla4()
    if kind == "heisenberg":
        return catalog.heisenberg()
    if kind == "nhw":
        return catalog.nhw(args.N)
    if kind == "clifford":
        from .filippov import clifford_realization
        rep = clifford_realization(args.n)
        if not (rep.identity_ok and rep.matches_simple):
            raise AssertionError("realization failed to reproduce the simple algebra")
        return rep.induced
    raise ValueError(f"unknown generation kind {kind!r}")


# ---------------------------------------------------------------------------
# cohomology reports
# ---------------------------------------------------------------------------

def cmd_cohomology(args) -> int:
    try:
        af = AlgebraFile.parse(open(args.path).read())
        obj = af.build()
    except (OSError, ParseError, ValueError) as exc:
        _human(f"input error: {exc}")
        return 2
    if isinstance(obj, LieAlgebra):
        if args.complex not in ("ce", "trivial"):
            _human("input error: binary algebras use the ce complex")
            return 2
        rho = None
        if args.rep == "ad":
            rho = obj.adjoint_rep()
        rep = cohomology_dims(obj, rho, args.pmax)
    elif isinstance(obj, FilippovAlgebra):
        if args.complex not in ("trivial", "module", "deformation"):
            _human("input error: n-ary complexes are trivial|module|deformation")
            return 2
        if args.rep == "ad" and args.complex == "module":
            rep = fa_cohomology_dims(obj, "module", args.pmax)
        else:
            rep = fa_cohomology_dims(obj, args.complex, args.pmax)
    else:
        _human("input error: cohomology applies to lie or filippov files")
        return 2
    for p in sorted(rep.dims_h):
        _emit({"degree": p, "dim_c": rep.dims_c[p], "dim_z": rep.dims_z[p],
               "dim_b": rep.dims_b[p], "dim_h": rep.dims_h[p]})
    _human(f"H = { {p: rep.dims_h[p] for p in sorted(rep.dims_h)} }")
    return 0


# ---------------------------------------------------------------------------
# poisson checks
# ---------------------------------------------------------------------------

def cmd_poisson(args) -> int:
    try:
        af = AlgebraFile.parse(open(args.path).read())
        obj = af.build()
    except (OSError, ParseError, ValueError) as exc:
        _human(f"input error: {exc}")
        return 2
    if not isinstance(obj, PolyMultivector):
        _human("input error: poisson checks apply to multivector files")
        return 2
    run = CheckRun()
    if args.check == "gps":
        try:
            rep = gps_check(obj)
        except ValueError as exc:
            _human(f"input error: {exc}")
            return 2
        run.record("self-bracket-zero", rep.ok, rep.witness)
    elif args.check == "np":
        rep = np_check(obj)
        run.record("differential-condition", rep.differential_ok, rep.differential_witness)
        run.record("algebraic-condition", rep.algebraic_ok, rep.algebraic_witness)
        if rep.decomposable_hint is not None:
            _emit({"decomposable": type(rep.decomposable_hint).__name__ == "Decomposition"})
    elif args.check == "snb-self":
        out = schouten_bracket(obj, obj)
        run.record("snb-self", out.is_zero())
    _human(f"{run.count - run.failed}/{run.count} checks passed")
    return run.exit_code


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="naryalg",
                                 description="exact checks for n-ary bracket algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run validation suites on an algebra file")
    p.add_argument("path")
    p.add_argument("--suite", choices=("identity", "metric", "cohomology", "all"),
                   default="identity")
    p.add_argument("--pmax", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("generate", help="emit a catalog algebra file")
    p.add_argument("kind", choices=("simple-fa", "gla-from-su", "heisenberg",
                                    "nhw", "clifford"))
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--N", type=int, default=1)
    p.add_argument("--signs", default=None, help="e.g. ++++ or -+++")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("cohomology", help="exact cohomology dimensions")
    p.add_argument("path")
    p.add_argument("--complex", choices=("ce", "trivial", "module", "deformation"),
                   default="ce")
    p.add_argument("--rep", choices=("0", "ad"), default="0")
    p.add_argument("--pmax", type=int, default=2)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("poisson", help="multivector tensor checks")
    p.add_argument("path")
    p.add_argument("--check", choices=("gps", "np", "snb-self"), default="np")
    p.set_defaults(func=cmd_poisson)

    args = ap.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
