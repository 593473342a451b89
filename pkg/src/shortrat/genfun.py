"""Short rational generating functions.

A ShortRatFun is a finite sum of basic terms

    coeff * x^u / prod_j (1 - x^{c_j})

Every operation that depends on how a term is expanded as a series takes a
*direction*: a term is rewritten (via 1/(1-x^c) = -x^{-c}/(1-x^{-c})) so that
each denominator exponent c is positive with respect to the direction, and is
then read as the series x^u * sum_{e >= 0} x^{C e}. For a finite set any
direction gives its polynomial; for an infinite set the direction must be
positive on its recession cone. The default is a generic positive vector,
matching ordinary power series.

A direction may be a single vector or a sequence of vectors compared
lexicographically; unit vectors are appended internally so the comparison
never ties.
"""
import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exact import dot, solve, RankError

__all__ = [
    "GenFunError", "PoleError", "DirectionError", "EmptySetError",
    "BasicTerm", "ShortRatFun", "TermOrder",
    "normalize_signs", "add", "hadamard", "monomial_substitution",
    "specialize_all_ones", "specialize_graded", "interval_polynomial",
    "leading_monomial", "recover_exponent", "expand", "coefficient",
    "generic_vector", "from_points",
]


class GenFunError(ValueError):
    pass


class PoleError(GenFunError):
    """A denominator would collapse to 1 - 1."""


class DirectionError(GenFunError):
    """The chosen direction is orthogonal to a denominator exponent."""


class EmptySetError(GenFunError):
    pass


@dataclass(frozen=True)
class BasicTerm:
    coeff: Fraction
    num: tuple
    dens: tuple = ()

    def __post_init__(self):
        num = tuple(int(x) for x in self.num)
        dens = tuple(tuple(int(x) for x in c) for c in self.dens)
        for c in dens:
            if len(c) != len(num):
                raise GenFunError("denominator exponent has wrong length")
            if not any(c):
                raise PoleError("zero denominator exponent")
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "dens", dens)

    @property
    def dim(self):
        return len(self.num)

    def evaluate(self, point):
        val = self.coeff * _monomial_value(point, self.num)
        for c in self.dens:
            d = 1 - _monomial_value(point, c)
            if d == 0:
                raise ZeroDivisionError("evaluation at a pole")
            val /= d
        return val

    def __str__(self):
        return "%s ; %s ; %s" % (
            self.coeff, ",".join(map(str, self.num)),
            " | ".join(",".join(map(str, c)) for c in self.dens))


def _monomial_value(point, e):
    v = Fraction(1)
    for p, k in zip(point, e):
        if k:
            v *= Fraction(p) ** k
    return v


@dataclass(frozen=True)
class ShortRatFun:
    dim: int
    terms: tuple = ()

    def __post_init__(self):
        terms = tuple(t for t in self.terms if t.coeff != 0)
        if any(t.dim != self.dim for t in terms):
            raise GenFunError("term dimension mismatch")
        object.__setattr__(self, "terms", terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return add(self, -other)

    def scale(self, c):
        return ShortRatFun(self.dim, tuple(BasicTerm(t.coeff * c, t.num, t.dens) for t in self.terms))

    def shift(self, a):
        """Multiply by the monomial x^a."""
        return ShortRatFun(self.dim, tuple(
            BasicTerm(t.coeff, tuple(x + y for x, y in zip(t.num, a)), t.dens) for t in self.terms))

    def evaluate(self, point):
        return sum((t.evaluate(point) for t in self.terms), Fraction(0))

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def monomial(cls, a, coeff=1):
        return cls(len(a), (BasicTerm(coeff, a, ()),))

    def to_text(self):
        lines = ["# dim %d" % self.dim]
        lines += [str(t) for t in self.terms]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        dim = None
        terms = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line[1:].split()
                if len(parts) == 2 and parts[0] == "dim":
                    dim = int(parts[1])
                continue
            fields = [f.strip() for f in line.split(";")]
            if len(fields) != 3:
                raise GenFunError("bad term line: %r" % raw)
            coeff = Fraction(fields[0])
            num = tuple(int(x) for x in fields[1].split(",")) if fields[1] else ()
            dens = tuple(tuple(int(x) for x in c.split(",")) for c in fields[2].split("|") if c.strip())
            terms.append(BasicTerm(coeff, num, dens))
        if dim is None:
            if not terms:
                raise GenFunError("cannot infer dimension of an empty function")
            dim = terms[0].dim
        return cls(dim, tuple(terms))


def from_points(points, n=None):
    """Naive encoding: one monomial term per point."""
    points = [tuple(p) for p in points]
    if n is None:
        n = len(points[0])
    return ShortRatFun(n, tuple(BasicTerm(1, p, ()) for p in points))


class TermOrder:
    """x^a < x^b iff W a is lexicographically smaller than W b."""

    def __init__(self, W):
        from .exact import det
        self.W = tuple(tuple(int(x) for x in r) for r in W)
        n = len(self.W)
        if any(len(r) != n for r in self.W) or det(self.W) == 0:
            raise GenFunError("term order matrix must be square and nonsingular")

    @classmethod
    def lex(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def dim(self):
        return len(self.W)

    def key(self, a):
        return tuple(dot(w, a) for w in self.W)

    def less(self, a, b):
        return self.key(a) < self.key(b)


# -------------------------------------------------------------- directions

def _seed(*data):
    return int.from_bytes(hashlib.sha256(repr(data).encode()).digest()[:8], "big")


def generic_vector(n, avoid=(), seed=0, positive=False, size=1000):
    """Deterministic pseudorandom integer vector with nonzero dot product
    against every vector in ``avoid``."""
    avoid = list(avoid)
    rng = random.Random(_seed(seed, n, len(avoid)))
    for _ in range(1000):
        if positive:
            lam = tuple(rng.randint(size, 2 * size) for _ in range(n))
        else:
            lam = tuple(rng.choice((-1, 1)) * rng.randint(1, size) for _ in range(n))
        if all(dot(lam, c) != 0 for c in avoid):
            return lam
    raise DirectionError("could not find a generic direction")  # pragma: no cover


def _as_direction(direction, n):
    if direction is None:
        direction = (generic_vector(n, seed="default", positive=True),)
    elif direction and isinstance(direction[0], int):
        direction = (tuple(direction),)
    else:
        direction = tuple(tuple(d) for d in direction)
    units = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    return direction + units


def _dir_key(direction, c):
    for lam in direction:
        v = dot(lam, c)
        if v:
            return v
    raise DirectionError("direction is orthogonal to %r" % (c,))


def _normalize(t, direction):
    coeff, u, dens = t.coeff, list(t.num), []
    for c in t.dens:
        if _dir_key(direction, c) < 0:
            coeff = -coeff
            u = [a - b for a, b in zip(u, c)]
            dens.append(tuple(-x for x in c))
        else:
            dens.append(c)
    return BasicTerm(coeff, u, tuple(dens))


def normalize_signs(t, direction):
    """Rewrite t so every denominator exponent c has direction . c > 0."""
    lam = tuple(direction)
    for c in t.dens:
        if dot(lam, c) == 0:
            raise DirectionError("direction %r is orthogonal to %r; pick a new generic direction" % (lam, c))
    return _normalize(t, (lam,))


def normalize_all(f, direction=None):
    d = _as_direction(direction, f.dim)
    return ShortRatFun(f.dim, tuple(_normalize(t, d) for t in f.terms))


# ---------------------------------------------------------------- algebra

def add(f, g):
    if f.dim != g.dim:
        raise GenFunError("dimension mismatch: %d vs %d" % (f.dim, g.dim))
    return ShortRatFun(f.dim, f.terms + g.terms)


def monomial_substitution(f, images):
    """Substitute x_i -> y^{images[i]}."""
    images = [tuple(int(x) for x in im) for im in images]
    if len(images) != f.dim:
        raise GenFunError("need one image per variable")
    k = len(images[0]) if images else 0

    def img(e):
        out = [0] * k
        for ei, im in zip(e, images):
            if ei:
                for j in range(k):
                    out[j] += ei * im[j]
        return tuple(out)

    terms = []
    for t in f.terms:
        dens = tuple(img(c) for c in t.dens)
        if any(not any(c) for c in dens):
            raise PoleError("substitution collapses a denominator of term %s" % t)
        terms.append(BasicTerm(t.coeff, img(t.num), dens))
    return ShortRatFun(k, tuple(terms))


def hadamard(f, g, direction=None, coords=None, g_direction=None):
    """Hadamard (coefficient-wise) product.

    With ``coords`` given, g lives in len(coords) variables and coefficients
    are matched only on those coordinates of f (a partial Hadamard product,
    the other variables of f riding along).
    """
    from .polytope import lattice_point_terms

    if coords is None:
        if f.dim != g.dim:
            raise GenFunError("dimension mismatch: %d vs %d" % (f.dim, g.dim))
        coords = tuple(range(f.dim))
        g_dir = direction
    else:
        coords = tuple(coords)
        if g.dim != len(coords):
            raise GenFunError("g must have one variable per matched coordinate")
        g_dir = g_direction
    fd = normalize_all(f, direction).terms
    gd = normalize_all(g, g_dir).terms
    out = []
    for t1 in fd:
        for t2 in gd:
            out.extend(_pair(t1, t2, coords, lattice_point_terms))
    return ShortRatFun(f.dim, tuple(out))


def _pair(t1, t2, coords, lattice_point_terms):
    n = t1.dim
    k1, k2 = len(t1.dens), len(t2.dens)
    full = len(coords) == n
    u1c = [t1.num[i] for i in coords]
    coeff = t1.coeff * t2.coeff
    if k1 == 0 and k2 == 0:
        return [BasicTerm(coeff, t1.num)] if tuple(u1c) == t2.num else []
    if k2 == 0 and full:
        return _monomial_hit(t1, t2.num, coeff)
    if k1 == 0:
        return [BasicTerm(c * t1.coeff, t1.num) for c in _coefficient_of(t2, tuple(u1c))]
    rows = []
    rhs = []
    for r, i in enumerate(coords):
        rows.append([t1.dens[j][i] for j in range(k1)] + [-t2.dens[j][r] for j in range(k2)])
        rhs.append(t2.num[r] - t1.num[i])
    k = k1 + k2
    A = [[-int(i == j) for j in range(k)] for i in range(k)]
    b = [0] * k
    res = []
    for s, w, gens in lattice_point_terms(A, b, rows, rhs):
        exp = tuple(t1.num[i] + sum(t1.dens[j][i] * w[j] for j in range(k1)) for i in range(n))
        dens = []
        for gvec in gens:
            c = tuple(sum(t1.dens[j][i] * gvec[j] for j in range(k1)) for i in range(n))
            if not any(c):
                raise PoleError("Hadamard image collapses a generator")
            dens.append(c)
        res.append(BasicTerm(coeff * s, exp, tuple(dens)))
    return res


def _coefficient_of(t, a):
    """Coefficients list [c] of x^a in the expansion of t (normalized)."""
    from .polytope import count_points
    k = len(t.dens)
    rows = [[t.dens[j][i] for j in range(k)] for i in range(t.dim)]
    rhs = [a[i] - t.num[i] for i in range(t.dim)]
    A = [[-int(i == j) for j in range(k)] for i in range(k)]
    c = count_points(A, [0] * k, rows, rhs)
    return [t.coeff * c] if c else []


def _monomial_hit(t1, a, coeff):
    c = _coefficient_of(BasicTerm(1, t1.num, t1.dens), a)
    return [BasicTerm(coeff * c[0], a)] if c else []


def interval_polynomial(p, q):
    """(t^p - t^(q+1)) / (1 - t) = t^p + ... + t^q."""
    if p > q:
        raise GenFunError("empty interval [%d, %d]" % (p, q))
    return ShortRatFun(1, (BasicTerm(1, (p,), ((1,),)), BasicTerm(-1, (q + 1,), ((1,),))))


# ------------------------------------------------------- specialization

def _binom_series(a, N):
    """Coefficients of (1+tau)^a up to tau^N (a any integer)."""
    out = []
    c = Fraction(1)
    for i in range(N + 1):
        out.append(c)
        c = c * (a - i) / (i + 1)
    return out


def _gen_binom(m, i):
    num = 1
    for j in range(i):
        num *= m - j
    return num // factorial(i)


@lru_cache(maxsize=100000)
def _pole_factor(m, N):
    """Series of tau / (1 - (1+tau)^m) up to tau^N."""
    h = [Fraction(_gen_binom(m, i + 1)) for i in range(N + 1)]
    inv = [Fraction(0)] * (N + 1)
    inv[0] = 1 / h[0]
    for i in range(1, N + 1):
        s = sum(h[j] * inv[i - j] for j in range(1, i + 1))
        inv[i] = -s / h[0]
    return tuple(-x for x in inv)


def _series_mul(a, b, N):
    out = [Fraction(0)] * (N + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(N + 1 - i):
                out[i + j] += x * b[j]
    return out


@lru_cache(maxsize=100000)
def _pole_product(ms):
    N = len(ms)
    s = [Fraction(1)] + [Fraction(0)] * N
    for m in ms:
        s = _series_mul(s, _pole_factor(m, N), N)
    return tuple(s)


def _ones_value(exp, ms):
    N = len(ms)
    poles = _pole_product(tuple(sorted(ms)))
    b = _binom_series(exp, N)
    return sum(b[i] * poles[N - i] for i in range(N + 1))


def specialize_all_ones(f, direction=None):
    """Value of f as all variables tend to 1 (the number of encoded points
    for a finite set), by a limit along a generic line."""
    if not f.terms:
        return Fraction(0)
    dens = {c for t in f.terms for c in t.dens}
    if direction is None:
        lam = generic_vector(f.dim, sorted(dens), seed=("ones", len(f.terms)))
    else:
        lam = tuple(direction)
        if any(dot(lam, c) == 0 for c in dens):
            raise DirectionError("line direction is not generic")
    total = Fraction(0)
    for t in f.terms:
        total += t.coeff * _ones_value(dot(lam, t.num), [dot(lam, c) for c in t.dens])
    return total


# polynomials in t as {exponent: Fraction}
def _padd(p, q, c=1):
    out = dict(p)
    for e, v in q.items():
        out[e] = out.get(e, 0) + c * v
        if out[e] == 0:
            del out[e]
    return out


def _pmul(p, q):
    out = {}
    for e1, v1 in p.items():
        for e2, v2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
    return {e: v for e, v in out.items() if v}


@lru_cache(maxsize=10000)
def _one_minus_pow(e, k):
    """(1 - t^e)^k as a dict polynomial."""
    return {e * i: Fraction((-1) ** i * comb(k, i)) for i in range(k + 1)}


def _graded_term(t, grading, lam):
    """One term specialized along x = (1+tau)^lam t^grading at tau -> 0.

    Returns (numerator dict, {e: multiplicity}) with denominator
    prod (1 - t^e)^mult.
    """
    coeff, u = t.coeff, list(t.num)
    j0, j1 = [], []
    for c in t.dens:
        e = dot(grading, c)
        if e < 0:
            coeff = -coeff
            u = [a - b for a, b in zip(u, c)]
            c = tuple(-x for x in c)
            e = -e
        (j1 if e else j0).append((c, e))
    K = len(j0)
    s = _binom_series(dot(lam, u), K)
    for c, _ in j0:
        s = _series_mul(s, _pole_factor(dot(lam, c), K), K)
    series = [{0: x} if x else {} for x in s]
    den = {}
    for c, e in j1:
        m = dot(lam, c)
        delta = _binom_series(m, K)
        delta[0] = Fraction(0)
        # powers of delta
        pw = [[Fraction(1)] + [Fraction(0)] * K]
        for q in range(1, K + 1):
            pw.append(_series_mul(pw[-1], delta, K))
        factor = []
        for i in range(K + 1):
            poly = {}
            for q in range(i + 1):
                if pw[q][i]:
                    term = _pmul({e * q: pw[q][i]}, _one_minus_pow(e, K - q))
                    poly = _padd(poly, term)
            factor.append(poly)
        new = [dict() for _ in range(K + 1)]
        for i in range(K + 1):
            if not series[i]:
                continue
            for j in range(K + 1 - i):
                if factor[j]:
                    new[i + j] = _padd(new[i + j], _pmul(series[i], factor[j]))
        series = new
        den[e] = den.get(e, 0) + K + 1
    g0 = dot(grading, u)
    num = {e + g0: v * coeff for e, v in series[K].items()}
    return num, den


def specialize_graded(f, grading, direction=None):
    """Substitute x^a -> t^(grading . a), taking the limit in all other
    directions. Returns (numerator dict, {e: multiplicity}) for the rational
    function numerator / prod (1 - t^e)^multiplicity."""
    grading = tuple(grading)
    zero_dens = sorted({c for t in f.terms for c in t.dens if dot(grading, c) == 0})
    lam = tuple(direction) if direction is not None else generic_vector(f.dim, zero_dens, seed="graded")
    if any(dot(lam, c) == 0 for c in zero_dens):
        raise DirectionError("line direction is not generic")
    groups = {}
    for t in f.terms:
        num, den = _graded_term(t, grading, lam)
        key = tuple(sorted(den.items()))
        groups[key] = _padd(groups.get(key, {}), num)
    common = {}
    for key in groups:
        for e, m in key:
            common[e] = max(common.get(e, 0), m)
    total = {}
    for key, num in groups.items():
        own = dict(key)
        for e, m in common.items():
            extra = m - own.get(e, 0)
            if extra:
                num = _pmul(num, _one_minus_pow(e, extra))
        total = _padd(total, num)
    return total, common


# ----------------------------------------------------- monomial extraction

def _degree_bounds(f, w, direction):
    """(lower, upper) bounds on w . x over the support of f, read off the
    numerators after normalizing toward -w (upper) and +w (lower)."""
    up = _as_direction((tuple(-x for x in w),) + direction, f.dim)
    lo = _as_direction((tuple(w),) + direction, f.dim)
    U = max(dot(w, _normalize(t, up).num) for t in f.terms)
    L = min(dot(w, _normalize(t, lo).num) for t in f.terms)
    return L, U


def _slice(lifted, p, q, direction):
    n = lifted.dim - 1
    lam = tuple(tuple(d) + (0,) for d in direction)
    return hadamard(lifted, interval_polynomial(p, q), direction=lam, coords=(n,), g_direction=(1,))


def _lift(f, w):
    n = f.dim
    return monomial_substitution(f, [tuple(int(i == j) for j in range(n)) + (w[i],) for i in range(n)])


def _drop_last(f):
    n = f.dim - 1
    return monomial_substitution(f, [tuple(int(i == j) for j in range(n)) for i in range(n)] + [(0,) * n])


def leading_monomial(f, order, direction=None, finite=True):
    """Exponent of the leading monomial of the set encoded by f under the
    term order, found by one binary degree search per row of W.

    ``finite=False`` allows infinite sets whose degree slices for the first
    row are finite; ``direction`` must then be positive on the set.
    """
    n = f.dim
    if order.dim != n:
        raise GenFunError("term order dimension mismatch")
    if not f.terms:
        raise EmptySetError("empty generating function")
    d = _as_direction(direction, n)[:-n] if direction is not None else \
        (generic_vector(n, seed="lead", positive=True),)
    cur = f
    if finite:
        for i in range(n):
            e = tuple(int(i == j) for j in range(n))
            L, U = _degree_bounds(cur, e, d)
            if L < 0 and specialize_all_ones(_drop_last(_slice(_lift(cur, e), L, -1, d))) != 0:
                raise GenFunError("set has points with negative exponents")
    degs = []
    for w in order.W:
        lifted = _lift(cur, w)

        def count(p, q):
            return specialize_all_ones(_drop_last(_slice(lifted, p, q, d)))

        L, U = _degree_bounds(cur, w, d)
        if L <= U and count(L, U) != 0:
            lo = L
        elif finite:
            raise EmptySetError("the encoded set is empty")
        else:
            step = 1
            while True:
                if count(U - step, U) != 0:
                    lo = U - step
                    break
                step *= 2
                if step > 1 << 64:
                    raise EmptySetError("no points found below the degree bound")
        hi = U
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if count(mid, hi) != 0:
                lo = mid
            else:
                hi = mid - 1
        degs.append(lo)
        cur = _drop_last(_slice(lifted, lo, lo, d))
    a = solve(order.W, degs)
    if any(x.denominator != 1 for x in a):
        raise GenFunError("degree vector has no integral preimage")
    return tuple(int(x) for x in a), cur


def recover_exponent(f):
    """Exponent a of f, which must equal a single monomial x^a."""
    if specialize_all_ones(f) != 1:
        raise GenFunError("function is not a single monomial")
    a, rest = leading_monomial(f, TermOrder.lex(f.dim))
    if specialize_all_ones(rest) != 1:
        raise GenFunError("function is not a single monomial")
    return a


# --------------------------------------------------------------- expansion

def expand(f, hi, lo=None, direction=None):
    """All monomials of f with exponents in the box [lo, hi] (lo defaults to
    0), as {exponent: coefficient}.

    Each term is expanded as a series in the given direction; the multiples
    of its denominator exponents that can land in the box are bounded by the
    vertices of that (bounded) polytope.
    """
    from .polytope import Polyhedron, enumerate_vertices
    n = f.dim
    hi = tuple(hi)
    lo = tuple(lo) if lo is not None else (0,) * n
    d = _as_direction(direction, n)
    out = {}
    for t in f.terms:
        t = _normalize(t, d)
        k = len(t.dens)
        if k == 0:
            if all(a <= x <= b for a, x, b in zip(lo, t.num, hi)):
                out[t.num] = out.get(t.num, 0) + t.coeff
            continue
        rows, rhs = [], []
        for j in range(k):
            rows.append(tuple(-int(i == j) for i in range(k)))
            rhs.append(0)
        for i in range(n):
            col = tuple(c[i] for c in t.dens)
            rows.append(col)
            rhs.append(hi[i] - t.num[i])
            rows.append(tuple(-x for x in col))
            rhs.append(t.num[i] - lo[i])
        verts = enumerate_vertices(Polyhedron(rows, rhs, dim=k))
        if not verts:
            continue
        top = [max(v[j] for v in verts) // 1 for j in range(k)]
        smin = [[0] * n for _ in range(k + 1)]
        smax = [[0] * n for _ in range(k + 1)]
        for j in range(k - 1, -1, -1):
            for i in range(n):
                x = t.dens[j][i] * top[j]
                smin[j][i] = smin[j + 1][i] + min(0, x)
                smax[j][i] = smax[j + 1][i] + max(0, x)
        point = list(t.num)

        def rec(j):
            if any(point[i] + smin[j][i] > hi[i] or point[i] + smax[j][i] < lo[i] for i in range(n)):
                return
            if j == k:
                p = tuple(point)
                out[p] = out.get(p, 0) + t.coeff
                return
            c = t.dens[j]
            for e in range(top[j] + 1):
                rec(j + 1)
                for i in range(n):
                    point[i] += c[i]
            for i in range(n):
                point[i] -= (top[j] + 1) * c[i]

        rec(0)
    return {p: c for p, c in sorted(out.items()) if c != 0}


def coefficient(f, a, direction=None):
    """Coefficient of x^a in the expansion of f (Hadamard with x^a, then
    evaluate at 1)."""
    return specialize_all_ones(hadamard(f, ShortRatFun.monomial(a), direction=direction))
