"""Degree-bounded binomial sets of toric ideals, encoded as short rational
functions in variables x_1..x_n, y_1..y_n (x^u y^v stands for x^u - x^v).
"""
from collections import Counter
from dataclasses import dataclass
from itertools import product

from .exact import box_points, dot, matvec, max_subdeterminant, rank
from .genfun import (BasicTerm, ShortRatFun, TermOrder, coefficient, expand, hadamard,
                     monomial_substitution)
from .polytope import Polyhedron, brion_genfun, count, lattice_point_terms

__all__ = [
    "ToricInstance", "BinomialSet", "BinomialCount", "universal_gb_genfun", "order_filter",
    "count_binomials_bounded", "brute_force_binomials", "calibrate_conventions",
    "contains_pair", "expand_binomials", "normal_form_desk",
]


@dataclass(frozen=True)
class ToricInstance:
    A: tuple

    def __post_init__(self):
        A = tuple(tuple(int(x) for x in r) for r in self.A)
        if not A or any(len(r) != len(A[0]) for r in A):
            raise ValueError("A must be a nonempty rectangular matrix")
        object.__setattr__(self, "A", A)

    @property
    def d(self):
        return len(self.A)

    @property
    def n(self):
        return len(self.A[0])

    @property
    def M(self):
        """(d+1)(n-d) D(A), with d the rank of A."""
        r = rank(self.A)
        rows = self.A if r == self.d else _independent(self.A)
        return (r + 1) * (self.n - r) * max_subdeterminant(rows, r)


def _independent(A):
    out = []
    for r in A:
        if rank(out + [r]) > len(out):
            out.append(r)
    return out


@dataclass(frozen=True)
class BinomialSet:
    genfun: ShortRatFun
    A: tuple
    box: int = None

    @property
    def n(self):
        return len(self.A[0])


def _box_polyhedron(A, bound):
    n = len(A[0])
    rows, rhs = [], []
    for i in range(2 * n):
        e = [0] * (2 * n)
        e[i] = -1
        rows.append(tuple(e))
        rhs.append(0)
        e = [0] * (2 * n)
        e[i] = 1
        rows.append(tuple(e))
        rhs.append(bound)
    E = [tuple(a) + tuple(-x for x in a) for a in A]
    return Polyhedron(rows, rhs, E, [0] * len(E), 2 * n)


def universal_gb_genfun(inst, bound=None):
    """Generating function of {(u, v) : A u = A v, 0 <= u_i, v_i <= M}.

    ``bound`` overrides M (smaller boxes for desk-scale work).
    """
    bound = inst.M if bound is None else bound
    return BinomialSet(brion_genfun(_box_polyhedron(inst.A, bound)), inst.A, bound)


def _lifted(G, rows):
    """Append one coordinate per row w, carrying w.(u - v)."""
    n = G.n
    k = len(rows)
    images = []
    for side in (1, -1):
        for j in range(n):
            e = [0] * (2 * n)
            e[j + (0 if side == 1 else n)] = 1
            images.append(tuple(e) + tuple(side * w[j] for w in rows))
    return monomial_substitution(G.genfun, images), k


def _dropped(f, n2, k):
    images = [tuple(int(i == j) for j in range(n2)) for i in range(n2)] + [(0,) * n2] * k
    return monomial_substitution(f, images)


def order_filter(G0, order):
    """Sub-sum of G0 over pairs with x^v < x^u under the term order.

    For each row i the slice G_i has w_j.u = w_j.v for j < i and
    w_i.u >= w_i.v + 1; it is cut out by one Hadamard product in the lifted
    coordinates carrying w_j.(u - v). The result is G_1 + ... + G_n.
    """
    if G0.box is None:
        raise ValueError("order_filter needs a box-bounded binomial set")
    n = G0.n
    if order.dim != n:
        raise ValueError("term order dimension mismatch")
    total = ShortRatFun.zero(2 * n)
    for i in range(1, n + 1):
        rows = order.W[:i]
        lifted, k = _lifted(G0, rows)
        # {t : t_1 = ... = t_{i-1} = 0, t_i >= 1}
        e = tuple(int(j == i - 1) for j in range(i))
        selector = ShortRatFun(i, (BasicTerm(1, e, (e,)),))
        sliced = hadamard(lifted, selector, coords=tuple(range(2 * n, 2 * n + i)), g_direction=(e,))
        total = total + _dropped(sliced, 2 * n, k)
    return BinomialSet(total, G0.A, G0.box)


def contains_pair(G, u, v):
    """Coefficient of x^u y^v in G (1 for members of an indicator set)."""
    return coefficient(G.genfun, tuple(u) + tuple(v))


def expand_binomials(G):
    """Explicit (u, v) list of a box-bounded binomial set."""
    if G.box is None:
        raise ValueError("expansion needs a box-bounded set")
    n = G.n
    pts = expand(G.genfun, (G.box,) * (2 * n))
    out = []
    for p, c in pts.items():
        if c != 1:
            raise ArithmeticError("coefficient %s at %r is not an indicator" % (c, p))
        out.append((p[:n], p[n:]))
    return out


# ------------------------------------------------------------- counting

@dataclass(frozen=True)
class BinomialCount:
    raw: int
    diagonal: int

    @property
    def off_diagonal(self):
        return self.raw - self.diagonal

    @property
    def unordered(self):
        return (self.raw - self.diagonal) // 2

    def as_dict(self):
        return {"raw": self.raw, "diagonal": self.diagonal,
                "off_diagonal": self.off_diagonal, "unordered": self.unordered}


def _default_grading(A):
    if all(x > 0 for x in A[0]):
        return tuple(A[0])
    raise ValueError("first row of A is not positive; supply a grading")


def _degree_polyhedra(A, D, degree, grading):
    n = len(A[0])
    if degree == "box":
        pairs = _box_polyhedron(A, D)
        diag = Polyhedron([e for i in range(n) for e in (_unit(n, i, -1), _unit(n, i, 1))],
                          [c for _ in range(n) for c in (0, D)], dim=n)
        return pairs, diag
    if degree != "graded":
        raise ValueError("degree convention must be 'box' or 'graded'")
    g = tuple(grading) if grading is not None else _default_grading(A)
    if any(x <= 0 for x in g):
        raise ValueError("grading must be positive on every variable")
    rows = [_unit(2 * n, i, -1) for i in range(2 * n)]
    rows += [tuple(g) + (0,) * n, (0,) * n + tuple(g)]
    E = [tuple(a) + tuple(-x for x in a) for a in A]
    pairs = Polyhedron(rows, [0] * (2 * n) + [D, D], E, [0] * len(E), 2 * n)
    diag = Polyhedron([_unit(n, i, -1) for i in range(n)] + [tuple(g)], [0] * n + [D], dim=n)
    return pairs, diag


def _unit(n, i, s):
    return tuple(s if j == i else 0 for j in range(n))


def count_binomials_bounded(A, D, degree="box", grading=None):
    """Count pairs (u, v) >= 0 with A u = A v and degree at most D.

    ``degree="box"`` bounds every exponent by D; ``degree="graded"`` bounds
    grading.u and grading.v by D (grading defaults to the first row of A).
    The diagonal u = v is counted separately so that all three conventions
    (raw, off-diagonal, unordered) are available.
    """
    A = tuple(tuple(int(x) for x in r) for r in A)
    if D < 0:
        return BinomialCount(0, 0)
    pairs, diag = _degree_polyhedra(A, D, degree, grading)
    return BinomialCount(count(pairs), count(diag))


def brute_force_binomials(A, D, degree="box", grading=None):
    n = len(A[0])
    if degree == "box":
        pts = product(range(D + 1), repeat=n)
    else:
        g = tuple(grading) if grading is not None else _default_grading(A)
        pts = (u for u in product(range(D + 1), repeat=n) if dot(g, u) <= D)
    fibers = Counter(matvec(A, u) for u in pts)
    raw = sum(c * c for c in fibers.values())
    return BinomialCount(raw, sum(fibers.values()))


def calibrate_conventions(A, max_D=5, grading=None):
    """Conventions (degree, field) on which Brion counts agree with brute
    force for all D <= max_D."""
    ok = []
    for degree in ("box", "graded"):
        agree = all(count_binomials_bounded(A, D, degree, grading) ==
                    brute_force_binomials(A, D, degree, grading) for D in range(max_D + 1))
        if agree:
            ok.extend((degree, f) for f in ("raw", "off_diagonal", "unordered"))
    return ok


# ------------------------------------------------------- desk-scale division

def normal_form_desk(a, pairs, order):
    """Reduce x^a by the ordered pairs (u, v), u the larger side, until no
    u divides the current monomial."""
    a = tuple(a)
    pairs = sorted((tuple(u), tuple(v)) for u, v in pairs)
    for u, v in pairs:
        if not order.less(v, u):
            raise ValueError("pair %r is not correctly ordered" % ((u, v),))
    while True:
        for u, v in pairs:
            if all(x >= y for x, y in zip(a, u)):
                a = tuple(x - y + z for x, y, z in zip(a, u, v))
                break
        else:
            return a
