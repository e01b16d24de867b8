"""naryalg: exact-arithmetic toolkit for n-ary Lie structures.

Subpackages by topic:

  scalars, tensors, poly, linalg   -- exact arithmetic foundations
  lie, cohomology                  -- binary algebras and their complexes
  gla                              -- even multibrackets, coderivations, BRST
  filippov                         -- n-Lie algebras and their invariants
  nary_cohomology                  -- n-ary and Leibniz complexes
  poisson                          -- multivector fields and tensor conditions
  catalog, algfile, cli            -- named examples, files, batch front-end
"""

from .scalars import GaussianRational
from .tensors import AntisymTensor, gen_kronecker
from .poly import Poly
from .lie import LieAlgebra, Representation, SymInvariantPoly
from .gla import GLAlgebra
from .filippov import FilippovAlgebra
from .nary_cohomology import LeibnizAlgebra, NCochain
from .poisson import PolyMultivector

__all__ = [
    "AntisymTensor", "FilippovAlgebra", "GaussianRational", "GLAlgebra",
    "LeibnizAlgebra", "LieAlgebra", "NCochain", "Poly", "PolyMultivector",
    "Representation", "SymInvariantPoly", "gen_kronecker",
]
