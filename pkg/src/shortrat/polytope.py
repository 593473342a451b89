"""Polyhedra in H-representation, vertices and tangent cones, and Brion's
signed sum of vertex-cone generating functions.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .cones import Cone, ConeError, VertexCone, decompose_normals, extreme_rays
from .exact import dot, integer_solve, inverse, lll_reduce, primitive, rank
from .genfun import BasicTerm, ShortRatFun, specialize_all_ones

__all__ = [
    "UnboundedError", "Polyhedron", "enumerate_vertices", "tangent_cone",
    "brion_genfun", "count", "lattice_point_terms", "count_points",
]


class UnboundedError(ValueError):
    def __init__(self, msg, ray=None):
        super().__init__(msg)
        self.ray = ray


@dataclass(frozen=True)
class Polyhedron:
    """{x : A x <= b, E x = d}."""
    A: tuple
    b: tuple
    E: tuple = ()
    d: tuple = ()
    dim: int = None

    def __post_init__(self):
        A = tuple(tuple(int(x) for x in r) for r in self.A)
        E = tuple(tuple(int(x) for x in r) for r in self.E)
        dim = self.dim
        if dim is None:
            rows = A or E
            if not rows:
                raise ValueError("cannot infer dimension")
            dim = len(rows[0])
        if any(len(r) != dim for r in A + E):
            raise ValueError("row length does not match dimension %d" % dim)
        if len(self.b) != len(A) or len(self.d) != len(E):
            raise ValueError("right-hand side length mismatch")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "E", E)
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        object.__setattr__(self, "dim", dim)

    def contains(self, x):
        return all(dot(a, x) <= c for a, c in zip(self.A, self.b)) and \
            all(dot(e, x) == c for e, c in zip(self.E, self.d))

    def translate(self, w):
        return Polyhedron(self.A, tuple(c + dot(a, w) for a, c in zip(self.A, self.b)),
                          self.E, tuple(c + dot(e, w) for e, c in zip(self.E, self.d)), self.dim)

    def dilate(self, m):
        return Polyhedron(self.A, tuple(m * c for c in self.b), self.E, tuple(m * c for c in self.d), self.dim)


# ------------------------------------------------------------------ core

class _Param:
    """x = x0 + y K, restricting {A x <= b, E x = d} to y-space."""

    def __init__(self, x0, K):
        self.x0 = tuple(x0)
        self.K = tuple(K)

    def point(self, y):
        return tuple(a + sum(yi * k[j] for yi, k in zip(y, self.K)) for j, a in enumerate(self.x0))

    def vector(self, g):
        return tuple(sum(gi * k[j] for gi, k in zip(g, self.K)) for j in range(len(self.x0)))


def _reduce(A, b, E, d, n):
    """Eliminate equations. Returns (param, A', b') or None when there are
    no integer points."""
    if E:
        sol = integer_solve(E, d)
        if sol is None:
            return None
        x0, K = sol
        if K:
            K = lll_reduce(K)
    else:
        x0, K = (0,) * n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    par = _Param(x0, K)
    A2, b2 = [], []
    for a, c in zip(A, b):
        row = tuple(dot(a, k) for k in K)
        rhs = c - dot(a, x0)
        if any(row):
            g = 0
            for x in row:
                g = _gcd(g, x)
            # integer points only: a.y <= rhs  <=>  (a/g).y <= floor(rhs/g)
            A2.append(tuple(x // g for x in row))
            b2.append(rhs // g)
        elif rhs < 0:
            return None
    return par, A2, b2


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _homogenized(A, b, k):
    """Vertices and rays of {y : A y <= b} via the cone over it."""
    rows = [tuple(a) + (-c,) for a, c in zip(A, b)] + [(0,) * k + (-1,)]
    if rank(rows) < k + 1:
        raise ConeError("polyhedron contains a line")
    verts, rays = [], []
    for r in extreme_rays(rows, k + 1):
        s = r[-1]
        if s > 0:
            verts.append(tuple(Fraction(x, s) for x in r[:-1]))
        elif any(r[:-1]):
            rays.append(tuple(r[:-1]))
    verts.sort()
    rays.sort()
    return verts, rays


def _restricted(A, b, E, d, n):
    """Reduce to a full-dimensional pointed polyhedron in lattice
    coordinates. Returns (param, A, b, verts, rays) or None when empty."""
    red = _reduce(A, b, E, d, n)
    if red is None:
        return None
    par, A2, b2 = red
    k = len(par.K)
    if k == 0:
        return par, [], [], [()], []
    if not A2:
        raise ConeError("polyhedron contains a line")
    verts, rays = _homogenized(A2, b2, k)
    if not verts:
        return None
    eq = [i for i, (a, c) in enumerate(zip(A2, b2))
          if all(dot(a, v) == c for v in verts) and all(dot(a, r) == 0 for r in rays)]
    if eq:
        sub = _restricted([A2[i] for i in range(len(A2)) if i not in eq],
                          [b2[i] for i in range(len(A2)) if i not in eq],
                          [A2[i] for i in eq], [b2[i] for i in eq], k)
        if sub is None:
            return None
        inner, A3, b3, verts, rays = sub
        par = _Param(par.point(inner.x0), tuple(par.vector(g) for g in inner.K))
        return par, A3, b3, verts, rays
    return par, A2, b2, verts, rays


def _vertex_terms(A, b, v):
    active = [a for a, c in zip(A, b) if dot(a, v) == c]
    out = []
    for s, G in decompose_normals(active):
        Ginv = inverse(G)
        k = len(G)
        beta = [sum(v[i] * Ginv[i][j] for i in range(k)) for j in range(k)]
        m = [ceil(x) for x in beta]
        u = tuple(sum(m[i] * G[i][j] for i in range(k)) for j in range(k))
        out.append((s, u, G))
    return out


def lattice_point_terms(A, b, E=(), d=(), n=None):
    """Signed unimodular terms (sign, exponent, generators) whose generating
    functions sum to that of {x in Z^n : A x <= b, E x = d}.

    The polyhedron may be unbounded but must not contain a line.
    """
    if n is None:
        n = len((list(A) + list(E))[0])
    res = _restricted(list(A), list(b), list(E), list(d), n)
    if res is None:
        return []
    par, A2, b2, verts, rays = res
    if not par.K:
        return [(1, par.x0, ())]
    out = []
    for v in verts:
        for s, u, G in _vertex_terms(A2, b2, v):
            out.append((s, par.point(u), tuple(par.vector(g) for g in G)))
    return out


def count_points(A, b, E=(), d=(), n=None):
    terms = lattice_point_terms(A, b, E, d, n)
    if not terms:
        return 0
    f = ShortRatFun(len(terms[0][1]), tuple(BasicTerm(s, u, G) for s, u, G in terms))
    c = specialize_all_ones(f)
    if c.denominator != 1:
        raise ArithmeticError("non-integral lattice point count %s" % c)
    return int(c)


# ----------------------------------------------------------------- API

def _rational_restricted(P):
    """Vertices and rays of P over Q (equations solved over the rationals)."""
    from .exact import nullspace, _row_reduce
    n = P.dim
    if P.E:
        red, piv = _row_reduce([list(e) + [c] for e, c in zip(P.E, P.d)])
        if n in piv:
            return None
        x0 = [Fraction(0)] * n
        for i, p in enumerate(piv):
            x0[p] = red[i][n]
        K = nullspace(P.E, n)
    else:
        x0 = [Fraction(0)] * n
        K = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    k = len(K)
    if k == 0:
        ok = all(dot(a, x0) <= c for a, c in zip(P.A, P.b))
        return (tuple(x0), K, [()] if ok else [], [])
    A2, b2 = [], []
    for a, c in zip(P.A, P.b):
        row = tuple(dot(a, kk) for kk in K)
        rhs = c - dot(a, x0)
        if any(row):
            den = rhs.denominator
            A2.append(tuple(x * den for x in row))
            b2.append(int(rhs * den))
        elif rhs < 0:
            return None
    if not A2 or rank(A2) < k:
        lin = nullspace(A2, k) if A2 else tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
        raise UnboundedError("polyhedron contains a line", ray=_ambient_ray(lin[0], K, n))
    verts, rays = _homogenized(A2, b2, k)
    return tuple(x0), K, verts, rays


def _ambient_ray(g, K, n):
    return primitive(tuple(sum(g[i] * K[i][j] for i in range(len(K))) for j in range(n)))


def enumerate_vertices(P):
    """Vertices of a bounded polyhedron in lexicographic order; [] if empty.

    Raises UnboundedError (with a recession ray in ``.ray``) if unbounded.
    """
    res = _rational_restricted(P)
    if res is None:
        return []
    x0, K, verts, rays = res
    n = P.dim
    if not verts:
        return []
    if rays:
        raise UnboundedError("polyhedron is unbounded", ray=_ambient_ray(rays[0], K, n))
    out = sorted({tuple(Fraction(x0[j]) + sum(v[i] * K[i][j] for i in range(len(K))) for j in range(n))
                  for v in verts})
    return out


def tangent_cone(P, v):
    """Tangent cone of P at the vertex v, with apex v."""
    v = tuple(Fraction(x) for x in v)
    if not P.contains(v):
        raise ValueError("point is not in the polyhedron")
    active = [a for a, c in zip(P.A, P.b) if dot(a, v) == c]
    n = P.dim
    if rank(list(active) + list(P.E)) < n:
        raise ValueError("point is not a vertex")
    rows = list(active) + [tuple(e) for e in P.E] + [tuple(-x for x in e) for e in P.E]
    rays = extreme_rays(rows, n) if rows else []
    return VertexCone(v, Cone(tuple(sorted(rays)), n))


def brion_genfun(P):
    """Short rational generating function of the lattice points of the
    bounded polyhedron P, as a sum over vertex tangent cones."""
    res = _rational_restricted(P)
    if res is not None and res[3] and res[2]:
        raise UnboundedError("polyhedron is unbounded", ray=_ambient_ray(res[3][0], res[1], P.dim))
    terms = lattice_point_terms(P.A, P.b, P.E, P.d, P.dim)
    return ShortRatFun(P.dim, tuple(BasicTerm(s, u, G) for s, u, G in terms))


def count(P):
    """Number of lattice points of the bounded polyhedron P."""
    f = brion_genfun(P)
    if not f.terms:
        return 0
    c = specialize_all_ones(f)
    if c.denominator != 1 or c < 0:
        raise ArithmeticError("inconsistent lattice point count %s" % c)
    return int(c)
