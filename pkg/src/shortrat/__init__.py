"""Exact lattice point counting with short rational generating functions."""
from .exact import hnf, lll_reduce, shortest_vector, max_subdeterminant
from .genfun import (BasicTerm, ShortRatFun, TermOrder, add, hadamard, monomial_substitution,
                     specialize_all_ones, interval_polynomial, leading_monomial,
                     recover_exponent, expand, normalize_signs)
from .cones import Cone, VertexCone, SignedUnimodularCone, polarize, triangulate, \
    barvinok_decompose, unimodular_genfun, dual_decompose
from .polytope import Polyhedron, enumerate_vertices, tangent_cone, brion_genfun, count

__version__ = "0.1.0"
