"""Brute-force reference computations, independent of the library."""
from collections import Counter, defaultdict
from fractions import Fraction
from itertools import combinations, product


def det(M):
    M = [[Fraction(x) for x in r] for r in M]
    n = len(M)
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        d *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return d


def lattice_points(A, b, lo, hi, E=(), d=()):
    """Integer points of {A x <= b, E x = d} inside the box [lo, hi]."""
    out = []
    for x in product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        if all(sum(a * y for a, y in zip(r, x)) <= c for r, c in zip(A, b)) and \
                all(sum(a * y for a, y in zip(r, x)) == c for r, c in zip(E, d)):
            out.append(x)
    return out


def in_cone(rays, x):
    """Membership in the simplicial cone spanned by ``rays`` (exact)."""
    n = len(rays)
    M = [[Fraction(rays[j][i]) for j in range(n)] + [Fraction(x[i])] for i in range(n)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        M[c] = [v / M[c][c] for v in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                M[r] = [a - M[r][c] * b for a, b in zip(M[r], M[c])]
    return all(M[i][n] >= 0 for i in range(n))


def coords(rays, x):
    n = len(rays)
    M = [[Fraction(rays[j][i]) for j in range(n)] + [Fraction(x[i])] for i in range(n)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        M[c] = [v / M[c][c] for v in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                M[r] = [a - M[r][c] * b for a, b in zip(M[r], M[c])]
    return [M[i][n] for i in range(n)]


def shortest_norm(B, box=3):
    best = None
    for c in product(range(-box, box + 1), repeat=len(B)):
        if any(c):
            v = [sum(ci * b[j] for ci, b in zip(c, B)) for j in range(len(B[0]))]
            nv = sum(x * x for x in v)
            if best is None or nv < best:
                best = nv
    return best


def max_minor(A, d):
    best = 0
    for rows in combinations(range(len(A)), d):
        for cols in combinations(range(len(A[0])), d):
            best = max(best, abs(det([[A[r][c] for c in cols] for r in rows])))
    return best


def lex_max(S, W):
    return max(S, key=lambda s: tuple(sum(w * x for w, x in zip(r, s)) for r in W))


def binomial_pairs(A, bound):
    """All (u, v) in [0, bound]^n x [0, bound]^n with A u = A v."""
    n = len(A[0])
    fib = defaultdict(list)
    for u in product(range(bound + 1), repeat=n):
        fib[tuple(sum(a * x for a, x in zip(r, u)) for r in A)].append(u)
    return [(u, v) for f in fib.values() for u in f for v in f]


def graded_binomial_counts(A, D, grading):
    n = len(A[0])
    fib = Counter()
    for u in product(range(D + 1), repeat=n):
        if sum(g * x for g, x in zip(grading, u)) <= D:
            fib[tuple(sum(a * x for a, x in zip(r, u)) for r in A)] += 1
    return sum(c * c for c in fib.values()), sum(fib.values())


def reduced_gb(A, W, degree_bound):
    """Reduced Groebner basis of the toric ideal of A (positive first row)
    under the matrix order W: minimal generators x^u of the initial ideal
    paired with the order-minimal monomial of their fiber."""
    n = len(A[0])
    key = lambda u: tuple(sum(w * x for w, x in zip(r, u)) for r in W)
    fib = defaultdict(list)
    for u in product(range(degree_bound + 1), repeat=n):
        if sum(u) <= degree_bound:
            fib[tuple(sum(a * x for a, x in zip(r, u)) for r in A)].append(u)
    fmin = {b: min(us, key=key) for b, us in fib.items()}
    img = lambda u: tuple(sum(a * x for a, x in zip(r, u)) for r in A)
    standard = lambda u: fmin[img(u)] == u
    gb = []
    for us in fib.values():
        for u in us:
            if standard(u):
                continue
            if all(standard(tuple(x - (i == j) for j, x in enumerate(u))) for i in range(n) if u[i] > 0):
                gb.append((u, fmin[img(u)]))
    return sorted(gb)


def magic_squares(k, s, diagonals=True):
    """Number of k x k nonnegative integer matrices with all row and column
    sums (and both diagonals) equal to s, by dynamic programming over rows."""
    rows = [r for r in product(range(s + 1), repeat=k) if sum(r) == s]
    states = Counter({((0,) * k, 0, 0): 1})
    for i in range(k):
        nxt = Counter()
        for (cols, dg, ad), c in states.items():
            for r in rows:
                nc = tuple(a + b for a, b in zip(cols, r))
                if max(nc) > s:
                    continue
                nd, na = dg + r[i], ad + r[k - 1 - i]
                if diagonals and (nd > s or na > s):
                    continue
                nxt[(nc, nd, na)] += c
        states = nxt
    return sum(c for (cols, dg, ad), c in states.items()
               if all(x == s for x in cols) and (not diagonals or (dg == s and ad == s)))


def series_coefficients(num, den, k):
    """First k coefficients of num(t)/den(t) for coefficient lists with den[0] != 0."""
    out = []
    for i in range(k):
        s = Fraction(num[i] if i < len(num) else 0)
        s -= sum(den[j] * out[i - j] for j in range(1, min(i, len(den) - 1) + 1))
        out.append(s / den[0])
    return out


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_pow(p, e):
    out = [1]
    for _ in range(e):
        out = poly_mul(out, p)
    return out


def gorenstein_oracle(rays, B=30):
    """Box-bounded test that the interior lattice points of the 2-D cone
    spanned by ``rays`` form a single translate a + S."""
    r, s = rays
    D = r[0] * s[1] - r[1] * s[0]
    sgn = 1 if D > 0 else -1
    # x = alpha r + beta s; interior iff alpha > 0 and beta > 0
    def ab(x):
        return (sgn * (x[0] * s[1] - x[1] * s[0]), sgn * (r[0] * x[1] - r[1] * x[0]))
    pts = list(product(range(-B, B + 1), repeat=2))
    interior = [x for x in pts if min(ab(x)) > 0]
    cval = lambda x: sum(ab(x))
    m = min(cval(x) for x in interior)
    mins = [x for x in interior if cval(x) == m]
    if len(mins) != 1:
        return False, None
    a = mins[0]
    for x in pts:
        y = (x[0] - a[0], x[1] - a[1])
        if (min(ab(x)) > 0) != (min(ab(y)) >= 0):
            return False, None
    return True, a
