"""Exact computer algebra for homotopy transfer of A-infinity structures.

Subpackages cover exact linear algebra, graded modules, dg (co)algebras
and simplicial chains, the minimal-model transfer engine, bar/cobar
constructions, twisting cochains, Hochschild/Harrison brace calculus and
rational-homotopy applications, plus a batch CLI.
"""

__version__ = "0.1.0"
