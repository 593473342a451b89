"""Ehrhart series of rational polytopes, Hilbert series of normal semigroups
and the Gorenstein test, all through the homogenized cone.
"""
from dataclasses import dataclass
from fractions import Fraction

from .cones import Cone, polarize
from .exact import dot, identity, rank, saturated_basis, solve
from .genfun import (BasicTerm, ShortRatFun, TermOrder, leading_monomial, monomial_substitution,
                     specialize_graded)
from .polytope import Polyhedron, enumerate_vertices, lattice_point_terms

__all__ = ["UniSeries", "GradedSemigroup", "ehrhart_series", "hilbert_series",
           "semigroup_genfun", "gorenstein_check"]


def _pmul(p, q):
    out = [0] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _one_minus(e):
    p = [0] * (e + 1)
    p[0], p[e] = 1, -1
    return p


def _divide_exact(p, e):
    """p / (1 - t^e) if exact, else None."""
    p = list(p)
    q = [0] * len(p)
    for i in range(len(p)):
        q[i] = p[i] + (q[i - e] if i >= e else 0)
    if any(q[len(p) - e:]) if len(p) >= e else any(q):
        return None
    return _trim(q[:max(len(p) - e, 0)])


@dataclass(frozen=True)
class UniSeries:
    """numerator(t) / prod_k (1 - t^{den_k}); numerator as coefficients from t^0."""
    numerator: tuple
    den: tuple = ()

    def __post_init__(self):
        if any(e <= 0 for e in self.den):
            raise ValueError("denominator exponents must be positive")
        object.__setattr__(self, "numerator", _trim(int(c) for c in self.numerator))
        object.__setattr__(self, "den", tuple(sorted(int(e) for e in self.den)))

    @classmethod
    def from_specialization(cls, num, den):
        if any(Fraction(c).denominator != 1 for c in num.values()):
            raise ArithmeticError("non-integral numerator coefficient")
        if num and min(num) < 0:
            raise ArithmeticError("series has negative powers of t")
        top = max(num) if num else -1
        coeffs = [0] * (top + 1)
        for e, c in num.items():
            coeffs[e] = int(c)
        exps = [e for e, m in sorted(den.items()) for _ in range(m)]
        return cls(tuple(coeffs), tuple(exps)).reduced()

    def reduced(self):
        """Cancel factors (1 - t^e) that divide the numerator exactly."""
        num, den = self.numerator, list(self.den)
        changed = True
        while changed and num:
            changed = False
            for i in sorted(range(len(den)), key=lambda i: den[i]):
                q = _divide_exact(num, den[i])
                if q is not None:
                    num = q
                    del den[i]
                    changed = True
                    break
        if not num:
            den = []
        return UniSeries(num, tuple(den))

    def denominator_poly(self):
        p = [1]
        for e in self.den:
            p = _pmul(p, _one_minus(e))
        return tuple(p)

    def coefficients(self, k):
        """First k power-series coefficients."""
        q = self.denominator_poly()
        out = []
        for i in range(k):
            s = self.numerator[i] if i < len(self.numerator) else 0
            s -= sum(q[j] * out[i - j] for j in range(1, min(i, len(q) - 1) + 1))
            out.append(s)
        return out

    def __eq__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        return _trim(_pmul(self.numerator, other.denominator_poly()) or ()) == \
            _trim(_pmul(other.numerator, self.denominator_poly()) or ())

    def __hash__(self):
        return hash(self.reduced().numerator)

    def to_text(self):
        return "%s ; %s" % (",".join(map(str, self.numerator)) or "0", ",".join(map(str, self.den)))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.numerator):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else "t^%d" % i)
            if mono and abs(c) == 1:
                body = mono
            else:
                body = str(abs(c)) + ("*" + mono if mono else "")
            terms.append(("- " if c < 0 else "+ ") + body)
        num = " ".join(terms).lstrip("+ ") if terms else "0"
        if num.startswith("- "):
            num = "-" + num[2:]
        if len(terms) > 1:
            num = "(" + num + ")"
        if not self.den:
            return num
        parts = []
        for e in sorted(set(self.den)):
            m = self.den.count(e)
            f = "(1-t)" if e == 1 else "(1-t^%d)" % e
            parts.append(f + ("^%d" % m if m > 1 else ""))
        return "%s / %s" % (num, "".join(parts) if len(parts) == 1 else "(" + "*".join(parts) + ")")


def ehrhart_series(P):
    """sum_m #(mP cap Z^n) t^m for a bounded nonempty polyhedron P.

    P may be lower-dimensional; equations (explicit or implicit) are
    eliminated in lattice coordinates.
    """
    if not enumerate_vertices(P):
        raise ValueError("empty polytope has no Ehrhart series")
    n = P.dim
    A = [tuple(a) + (-c,) for a, c in zip(P.A, P.b)] + [(0,) * n + (-1,)]
    E = [tuple(e) + (-c,) for e, c in zip(P.E, P.d)]
    terms = lattice_point_terms(A, [0] * len(A), E, [0] * len(E), n + 1)
    f = ShortRatFun(n + 1, tuple(BasicTerm(s, u, G) for s, u, G in terms))
    grading = (0,) * n + (1,)
    return UniSeries.from_specialization(*specialize_graded(f, grading))


@dataclass(frozen=True)
class GradedSemigroup:
    """Lattice points of cone(rays), graded by a linear form."""
    rays: tuple
    grading: tuple = None

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in r) for r in self.rays)
        if not rays:
            raise ValueError("need at least one ray")
        object.__setattr__(self, "rays", rays)
        if self.grading is not None:
            object.__setattr__(self, "grading", tuple(int(x) for x in self.grading))

    @property
    def dim(self):
        return len(self.rays[0])


def _coordinates(S):
    """Lattice basis B of span(rays) and the rays in B-coordinates."""
    n = S.dim
    r = rank(S.rays)
    if r == n:
        return identity(n), S.rays
    B = saturated_basis(list(S.rays), n)
    Bt = [list(col) for col in zip(*B)]
    idx = _independent_rows(Bt)
    sub = [[Bt[i][j] for j in range(r)] for i in idx]
    coords = []
    for ray in S.rays:
        c = solve(sub, [ray[i] for i in idx])
        coords.append(tuple(int(x) for x in c))
    return B, tuple(coords)


def _independent_rows(M):
    idx = []
    for i, row in enumerate(M):
        if rank([M[j] for j in idx] + [row]) > len(idx):
            idx.append(i)
    return idx


def _facets(rays, k):
    K = Cone(rays, k)
    return polarize(K).rays


def semigroup_genfun(S):
    """Multivariate generating function of cone(rays) cap Z^n, in the
    coordinates of a lattice basis B of the span.

    Returns (f, B, facet normals, rays in B-coordinates).
    """
    B, coords = _coordinates(S)
    k = len(B)
    facets = _facets(coords, k)
    terms = lattice_point_terms(facets, [0] * len(facets), (), (), k)
    return ShortRatFun(k, tuple(BasicTerm(s, u, G) for s, u, G in terms)), B, facets, coords


def hilbert_series(S):
    """H_S(t) = sum_r #{x in S : deg x = r} t^r."""
    if S.grading is None:
        raise ValueError("hilbert_series needs a grading")
    f, B, facets, coords = semigroup_genfun(S)
    g = tuple(dot(S.grading, b) for b in B)
    for r in coords:
        if dot(g, r) <= 0:
            raise ValueError("grading is not positive on ray %r" % (r,))
    return UniSeries.from_specialization(*specialize_graded(f, g))


def _completion(c):
    """Rows completing c to a nonsingular matrix."""
    k = len(c)
    rows = [tuple(c)]
    for i in range(k):
        e = tuple(int(i == j) for j in range(k))
        if rank(rows + [e]) > len(rows):
            rows.append(e)
    return rows


def gorenstein_check(S):
    """(True, a) if the interior lattice points of the cone are exactly
    a + S, else (False, None)."""
    f, B, facets, coords = semigroup_genfun(S)
    k = len(B)
    c = tuple(-sum(h[j] for h in facets) for j in range(k))
    # reciprocity: interior series = (-1)^k f(1/z)
    inv = monomial_substitution(f, [tuple(-int(i == j) for j in range(k)) for i in range(k)])
    f_int = inv.scale((-1) ** k)
    W = _completion(c)
    W[0] = tuple(-x for x in c)
    a, _ = leading_monomial(f_int, TermOrder(W), direction=(c,), finite=False)
    if any(dot(h, a) > -1 for h in facets):
        return False, None
    diff = f_int - f.shift(a)
    num, _ = specialize_graded(diff, c)
    if num:
        return False, None
    return True, tuple(sum(a[i] * B[i][j] for i in range(k)) for j in range(S.dim))
