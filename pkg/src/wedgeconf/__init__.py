"""Exact equivariant cohomology of configuration spaces of wedges of spheres.

The package computes, with exact arithmetic, the compactly supported
cohomology of the space of n ordered distinct points on a wedge of g spheres,
as a bigraded sequence of symmetric-group representations whose multiplicity
spaces are polynomial GL_g-functors.  Everything is organized around three
independent computation routes that are cross-checked against each other:

* ``cecomplex`` -- the Chevalley-Eilenberg complex of a graded Lie algebra
  built from the cohomology of the wedge and a free graded Lie algebra on odd
  generators; honest sparse differentials and homology.
* ``decomp`` -- assembly of the bigraded S_n x GL decomposition from weight
  space characters of ``cecomplex`` via Kostka inversion.
* ``closedform`` -- independent closed-form predictions (Stirling-number
  multiplicities, Euler characteristics, spectral-sequence page dimensions,
  genus-2 weight-0 totals, small-arity conjecture rows) that never touch the
  chain-level code.

Supporting layers: ``combinat`` (partitions, Stirling and Kostka numbers),
``schar`` (symmetric-group class functions), ``symfunc`` (symmetric functions
with Laurent-polynomial coefficients, plethystic calculus), ``lie`` (free
Lie algebra rewriting, plain and odd-generator variants), ``linalg`` (exact
and certified-modular sparse linear algebra), ``cli`` (command line).
"""

__version__ = "0.1.0"

__all__ = [
    "combinat",
    "schar",
    "symfunc",
    "lie",
    "linalg",
    "cecomplex",
    "decomp",
    "closedform",
]
