"""Shared fixtures: standard simplicial complexes and small algebras."""

from fractions import Fraction

from ainf.fields import QQ
from ainf.complexes import (ChainComplex, DgAlgebra, SimplicialComplex,
                            cochain_algebra, simplicial_chain_coalgebra)
from ainf.graded import GradedMap, GradedModule


def circle(n=3):
    """Simplicial circle with n >= 3 vertices."""
    verts = list(range(n))
    edges = [(i, (i + 1) % n) for i in range(n)]
    return SimplicialComplex(verts, edges)


def torus7():
    """Standard 7-vertex (Moebius) triangulation of the torus: faces
    (i, i+1, i+3) and (i, i+2, i+3) mod 7."""
    faces = []
    for i in range(7):
        faces.append(tuple(sorted([i, (i + 1) % 7, (i + 3) % 7])))
        faces.append(tuple(sorted([i, (i + 2) % 7, (i + 3) % 7])))
    return SimplicialComplex(list(range(7)), faces)


def wedge_s1_s1_s2():
    """Two triangle circles and a tetrahedron-boundary sphere glued at 0."""
    facets = [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4),
              (0, 5, 6), (0, 5, 7), (0, 6, 7), (5, 6, 7)]
    return SimplicialComplex(list(range(8)), facets)


def cochains(V, field=QQ):
    return cochain_algebra(simplicial_chain_coalgebra(V, field), field)


def exterior_algebra(gen_degree, field=QQ, name="t"):
    """Unital exterior (= trivial square) algebra on one generator."""
    module = GradedModule({0: ["1"], gen_degree: [name]})
    cx = ChainComplex.with_zero_differential(module, field)
    e, t = (0, 0), (gen_degree, 0)
    one = field.one
    mul = {(e, e): {e: one}, (e, t): {t: one}, (t, e): {t: one}}
    return DgAlgebra(cx, mul, unit=e)


def sphere_cohomology_dga(n, field=QQ):
    """H^*(S^n) as a dga with zero differential."""
    return exterior_algebra(n, field, name="s%d" % n)
