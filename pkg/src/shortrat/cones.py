"""Rational polyhedral cones: polarity, triangulation and Barvinok's signed
decomposition into unimodular cones.

Polar convention: K* = {y : y.x <= 0 for all x in K}. A cone given by
inequalities a.x <= 0 therefore has the rows a as generators of its polar.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import ceil

from .exact import (RankError, det, dot, echelon, identity, inverse, lll_reduce,
                    primitive, rank, shortest_vector)
from .genfun import BasicTerm

__all__ = [
    "ConeError", "Cone", "VertexCone", "SignedUnimodularCone",
    "extreme_rays", "polarize", "triangulate", "barvinok_decompose",
    "unimodular_genfun", "dual_decompose", "decompose_normals",
]


class ConeError(ValueError):
    """Cone violates a precondition (not pointed, not full-dimensional, ...)."""


@dataclass(frozen=True)
class Cone:
    rays: tuple
    dim: int = field(default=None)

    def __post_init__(self):
        rays = tuple(primitive(tuple(int(x) for x in r)) for r in self.rays)
        if any(not any(r) for r in rays):
            raise ConeError("zero ray")
        dim = self.dim if self.dim is not None else len(rays[0])
        if any(len(r) != dim for r in rays):
            raise ConeError("ray length does not match ambient dimension")
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "dim", dim)

    def contains(self, x):
        facets = polarize(self).rays
        return all(dot(h, x) <= 0 for h in facets)


@dataclass(frozen=True)
class VertexCone:
    apex: tuple
    cone: Cone


@dataclass(frozen=True)
class SignedUnimodularCone:
    sign: int
    generators: tuple
    apex: tuple = None

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        if abs(det(gens)) != 1:
            raise ConeError("generators are not unimodular")
        object.__setattr__(self, "generators", gens)
        apex = self.apex if self.apex is not None else (0,) * len(gens)
        object.__setattr__(self, "apex", tuple(Fraction(a) for a in apex))


# ------------------------------------------------------- double description

def _clean(rows):
    seen = []
    for r in rows:
        p = primitive(tuple(int(x) for x in r))
        if any(p) and p not in seen:
            seen.append(p)
    return seen


def extreme_rays(A, n=None):
    """Extreme rays of the pointed cone {x : a.x <= 0 for every row a of A}.

    Double description with the combinatorial adjacency test; rows are
    inserted in input order so the result is deterministic.
    """
    A = _clean(A)
    if n is None:
        n = len(A[0])
    if rank(A) < n:
        raise ConeError("constraint rows do not span; the cone has a lineality space")
    basis = []
    for i, a in enumerate(A):
        if rank([A[j] for j in basis] + [a]) > len(basis):
            basis.append(i)
            if len(basis) == n:
                break
    inv = inverse([A[i] for i in basis])
    rays = []
    zeros = []
    all_basis = 0
    for i in basis:
        all_basis |= 1 << i
    for j in range(n):
        col = [-inv[i][j] for i in range(n)]
        den = 1
        for x in col:
            den = den * x.denominator // _gcd(den, x.denominator)
        rays.append(primitive(tuple(int(x * den) for x in col)))
        zeros.append(all_basis & ~(1 << basis[j]))
    done = set(basis)
    for idx, a in enumerate(A):
        if idx in done:
            continue
        vals = [dot(a, r) for r in rays]
        plus = [k for k, v in enumerate(vals) if v > 0]
        minus = [k for k, v in enumerate(vals) if v < 0]
        new_rays, new_zeros = [], []
        for p in plus:
            for q in minus:
                common = zeros[p] & zeros[q]
                if bin(common).count("1") < n - 2:
                    continue
                if any(k != p and k != q and (zeros[k] & common) == common for k in range(len(rays))):
                    continue
                vp, vq = vals[p], vals[q]
                r = primitive(tuple(vp * y - vq * x for x, y in zip(rays[p], rays[q])))
                new_rays.append(r)
                new_zeros.append(common | (1 << idx))
        keep = [k for k, v in enumerate(vals) if v <= 0]
        rays = [rays[k] for k in keep] + new_rays
        zeros = [zeros[k] | ((1 << idx) if vals[k] == 0 else 0) for k in keep] + new_zeros
        done.add(idx)
    return rays


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def polarize(K):
    """Polar cone, by ray representation. K must be full-dimensional and pointed."""
    n = K.dim
    if not K.rays or rank(K.rays) < n:
        raise ConeError("polarize needs a full-dimensional cone")
    rays = extreme_rays(K.rays, n)
    if rank(rays) < n:
        raise ConeError("cone is not pointed")
    return Cone(tuple(rays), n)


def _extreme_generators(rays, facets):
    n = len(rays[0])
    keep = []
    for r in rays:
        tight = [h for h in facets if dot(h, r) == 0]
        if n == 1 or (tight and rank(tight) == n - 1):
            keep.append(r)
    return keep


def triangulate(K):
    """Pulling triangulation into simplicial cones spanned by extreme rays of K.

    Rays are pulled in input order.
    """
    n = K.dim
    facets = polarize(K).rays
    rays = _extreme_generators(list(dict.fromkeys(K.rays)), facets)
    if len(rays) == n:
        return [Cone(tuple(rays), n)]
    inc = []
    for h in facets:
        m = 0
        for i, r in enumerate(rays):
            if dot(h, r) == 0:
                m |= 1 << i
        inc.append(m)

    rank_cache = {}

    def rk(mask):
        if mask not in rank_cache:
            rank_cache[mask] = rank([rays[i] for i in range(len(rays)) if mask >> i & 1])
        return rank_cache[mask]

    def tri(mask, d):
        if bin(mask).count("1") == d:
            return [mask]
        v = (mask & -mask).bit_length() - 1
        subfaces = []
        for f in inc:
            sub = mask & f
            if sub != mask and sub not in subfaces and rk(sub) == d - 1:
                subfaces.append(sub)
        out = []
        for sub in subfaces:
            if sub >> v & 1:
                continue
            out.extend(s | (1 << v) for s in tri(sub, d - 1))
        return out

    full = (1 << len(rays)) - 1
    return [Cone(tuple(rays[i] for i in range(len(rays)) if s >> i & 1), n) for s in tri(full, n)]


# --------------------------------------------------- signed decomposition

def _coset_search(R, D):
    """Exhaustive search over Z^n / R Z^n for the combination z = alpha R with
    smallest max |alpha_i|."""
    n = len(R)
    H, _, _ = echelon(R)
    Rinv = inverse(R)
    best = None
    diag = [H[i][i] for i in range(n)]

    def reps(i, z):
        if i == n:
            yield tuple(z)
            return
        for a in range(diag[i]):
            yield from reps(i + 1, z + [a])

    for z in reps(0, []):
        if not any(z):
            continue
        alpha = [sum(z[k] * Rinv[k][j] for k in range(n)) for j in range(n)]
        alpha = [a - _round_half_down(a) for a in alpha]
        key = max(abs(a) for a in alpha)
        if best is None or key < best[0]:
            best = (key, alpha)
    return [int(x * D) for x in best[1]]


def _round_half_down(a):
    # nearest integer; the remainder a - result lies in (-1/2, 1/2]
    return ceil(a - Fraction(1, 2))


def _short_combination(R, D):
    """Integer vector D*alpha with z = alpha R integral and max|alpha_i| < 1."""
    n = len(R)
    Rinv = inverse(R)
    L = [tuple(int(Rinv[i][j] * D) for j in range(n)) for i in range(n)]
    red = lll_reduce(L)
    cand = min(red, key=lambda v: (max(abs(x) for x in v), v))
    if max(abs(x) for x in cand) < D:
        return list(cand)
    if D <= 200000:
        return _coset_search(R, D)
    sv = shortest_vector(red)
    if max(abs(x) for x in sv) < D:
        return list(sv)
    raise ConeError("no short vector found")  # pragma: no cover - Minkowski guarantees one


def barvinok_decompose(K):
    """Signed decomposition of a simplicial full-dimensional cone into
    unimodular cones, exact modulo lower-dimensional cones.

    Returns a sorted list of SignedUnimodularCone (apex at the origin).
    """
    n = K.dim
    R = tuple(K.rays)
    if len(R) != n or det(R) == 0:
        raise ConeError("barvinok_decompose needs a simplicial full-dimensional cone")
    return [SignedUnimodularCone(s, g) for s, g in _barvinok(R)]


@lru_cache(maxsize=20000)
def _barvinok(R):
    n = len(R)
    out = []
    stack = [(1, R)]
    while stack:
        s, rays = stack.pop()
        D = abs(det(rays))
        if D == 1:
            out.append((s, rays))
            continue
        v = _short_combination(rays, D)
        if all(x <= 0 for x in v):
            v = [-x for x in v]
        z = [sum(v[i] * rays[i][j] for i in range(n)) for j in range(n)]
        assert all(x % D == 0 for x in z)
        z = primitive(tuple(x // D for x in z))
        for i in range(n):
            if v[i] == 0:
                continue
            new = rays[:i] + (z,) + rays[i + 1:]
            stack.append((s if v[i] > 0 else -s, new))
    out.sort()
    return tuple(out)


def unimodular_genfun(c):
    """Generating function term of apex + unimodular cone (closed cone)."""
    G = c.generators
    n = len(G)
    Ginv = inverse(G)
    beta = [sum(c.apex[i] * Ginv[i][j] for i in range(n)) for j in range(n)]
    m = [ceil(b) for b in beta]
    u = tuple(sum(m[i] * G[i][j] for i in range(n)) for j in range(n))
    return BasicTerm(c.sign, u, G)


def decompose_normals(normals):
    """Unimodular decomposition of {x : a.x <= 0, a in normals}; see
    _decompose_normals."""
    key = tuple(sorted(set(primitive(tuple(int(x) for x in a)) for a in normals)))
    return _decompose_normals(key)


@lru_cache(maxsize=50000)
def _decompose_normals(normals):
    """Unimodular decomposition of the pointed full-dimensional cone
    {x : a.x <= 0, a in normals}, computed in the dual.

    Returns a tuple of (sign, generator rows) for the primal unimodular
    cones; the identity holds exactly on generating functions because the
    dropped pieces dualize to cones containing lines.
    """
    n = len(normals[0])
    Kstar = Cone(normals, n)
    if len(Kstar.rays) == n and det(Kstar.rays) != 0:
        pieces = [Kstar]
    else:
        pieces = triangulate(Kstar)
    out = []
    for piece in pieces:
        for s, B in _barvinok(tuple(piece.rays)):
            Binv = inverse(B)
            gens = tuple(tuple(-int(Binv[i][j]) for i in range(n)) for j in range(n))
            out.append((s, gens))
    out.sort()
    return tuple(out)


def dual_decompose(K, apex=None):
    """Polarize, triangulate, decompose, polarize back.

    Returns SignedUnimodularCone objects whose generating functions sum to
    that of apex + K.
    """
    n = K.dim
    Kstar = polarize(K)
    normals = tuple(sorted(Kstar.rays))
    return [SignedUnimodularCone(s, g, apex) for s, g in decompose_normals(normals)]
