"""Lower bounds for dimensions of projective indecomposable modules of
finite groups of Lie type in defining characteristic.

The package is organised as follows:

* :mod:`pimbounds.rootdata`     -- root systems, twists, order polynomials;
* :mod:`pimbounds.charlattice`  -- torus-character orbits and mod-l
  reductions of the reflection representation;
* :mod:`pimbounds.weights`      -- restricted weights, parabolic descent and
  the minimal-candidate sieve;
* :mod:`pimbounds.degrees`      -- exact polynomial arithmetic and embedded
  character-degree datasets;
* :mod:`pimbounds.caseanalysis` -- exhaustive decomposition searches with
  certified eliminations;
* :mod:`pimbounds.bounds`       -- the bound rules and the Sylow-dimension
  classification;
* :mod:`pimbounds.cli`          -- the ``pimbounds`` command-line tool.
"""

from .rootdata import (
    GroupSpec,
    IntegerField,
    RootDatum,
    SuzukiReeField,
    build_root_datum,
    group,
    special_linear,
    special_unitary,
)
from .weights import Weight

__all__ = [
    "GroupSpec",
    "IntegerField",
    "RootDatum",
    "SuzukiReeField",
    "Weight",
    "build_root_datum",
    "group",
    "special_linear",
    "special_unitary",
]

__version__ = "0.1.0"
