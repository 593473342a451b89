"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples of Python ints (or Fractions where noted).
Nothing here touches floating point.
"""
from fractions import Fraction
from itertools import combinations, product
from math import gcd, isqrt

__all__ = [
    "RankError", "LinearDependenceError",
    "as_matrix", "transpose", "matmul", "matvec", "dot", "identity",
    "primitive", "det", "rank", "solve", "inverse", "nullspace",
    "hnf", "echelon", "integer_solve", "saturated_basis",
    "lll_reduce", "shortest_vector", "max_subdeterminant",
]


class RankError(ValueError):
    """Input matrix does not have the required rank."""


class LinearDependenceError(RankError):
    """Rows expected to be linearly independent are not."""


def as_matrix(rows):
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows


def transpose(M, ncols=None):
    if not M:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*M))


def matmul(A, B):
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in A)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def primitive(v):
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def det(M):
    """Determinant by fraction-free Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    if any(len(r) != n for r in M):
        raise ValueError("determinant of a non-square matrix")
    a = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[-1][-1]


def _row_reduce(M):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    if all(type(x) is int for r in M for x in r):
        return _row_reduce_int(M)
    a = [[Fraction(x) for x in r] for r in M]
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def _row_reduce_int(M):
    # fraction-free elimination, rows kept primitive; pivots scaled to 1 at the end
    a = [list(r) for r in M]
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pr = a[r]
        g = pr[c]
        for i in range(len(a)):
            f = a[i][c]
            if i != r and f != 0:
                row = [g * x - f * y for x, y in zip(a[i], pr)]
                h = 0
                for x in row:
                    h = gcd(h, x)
                a[i] = [x // h for x in row] if h > 1 else row
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    out = []
    for i, row in enumerate(a):
        if i < len(pivots):
            pv = row[pivots[i]]
            out.append([Fraction(x, pv) for x in row])
        else:
            out.append([Fraction(x) for x in row])
    return out, pivots


def rank(M):
    if not M:
        return 0
    return len(_row_reduce(M)[1])


def solve(A, b):
    """Solve A x = b over Q for square nonsingular A."""
    n = len(A)
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    red, piv = _row_reduce(aug)
    if piv != list(range(n)):
        raise RankError("singular system")
    return tuple(red[i][n] for i in range(n))


def inverse(A):
    """Inverse over Q as a tuple of Fraction rows."""
    n = len(A)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(A)]
    red, piv = _row_reduce(aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise RankError("matrix is singular")
    return tuple(tuple(red[i][n:]) for i in range(n))


def nullspace(M, ncols=None):
    """Integer basis (primitive rows) of the rational null space {x : M x = 0}."""
    if not M:
        return identity(ncols or 0)
    n = len(M[0])
    red, piv = _row_reduce(M)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -red[i][f]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        basis.append(primitive(tuple(int(x * den) for x in v)))
    return tuple(basis)


def echelon(M):
    """Integer row echelon form with transform.

    Returns (H, U, pivots) with H = U M, U unimodular, H upper echelon with
    positive pivots and the entries above each pivot reduced into
    [0, pivot). Zero rows of H sit at the bottom; ``pivots`` lists the pivot
    column of each nonzero row. Works for any rank.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    h = [list(r) for r in M]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if h[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(h[i][c]), i))
            if p != r:
                h[r], h[p] = h[p], h[r]
                u[r], u[p] = u[p], u[r]
            done = True
            for i in range(r + 1, m):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if r < m and h[r][c] != 0:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            piv = h[r][c]
            for i in range(r):
                q = h[i][c] // piv
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            pivots.append(c)
            r += 1
    return tuple(map(tuple, h)), tuple(map(tuple, u)), tuple(pivots)


def hnf(M):
    """Hermite normal form of a full-row-rank integer matrix.

    Returns (H, U) with H = U M, |det U| = 1, H upper triangular (echelon)
    with positive pivots and entries above each pivot reduced modulo the
    pivot into [0, pivot).
    """
    M = as_matrix(M)
    H, U, piv = echelon(M)
    if len(piv) < len(M):
        raise RankError("hnf requires full row rank, got rank %d < %d" % (len(piv), len(M)))
    return H, U


def integer_solve(B, b):
    """All integer solutions of B x = b.

    Returns ``None`` if there are none, else (x0, K) where x0 is one solution
    and the rows of K form a basis of the integer kernel lattice.
    """
    B = as_matrix(B)
    m = len(B)
    k = len(B[0]) if m else 0
    if m == 0:
        return (0,) * k, identity(k)
    # Column operations on B: U B^T = H, so B U^T = H^T.
    H, U, piv = echelon(transpose(B))
    rk = len(piv)
    w = []
    for i in range(rk):
        row = piv[i]
        s = b[row] - sum(H[l][row] * w[l] for l in range(i))
        q, rem = divmod(s, H[i][row])
        if rem:
            return None
        w.append(q)
    x0 = tuple(sum(U[l][j] * w[l] for l in range(rk)) for j in range(k))
    if matvec(B, x0) != tuple(b):
        return None
    kernel = tuple(U[l] for l in range(rk, k))
    return x0, kernel


def saturated_basis(R, n):
    """Integer basis of span(R) ∩ Z^n (rows)."""
    comp = nullspace(R, n) if R else identity(n)
    if not comp:
        return identity(n)
    res = integer_solve(comp, (0,) * len(comp))
    return res[1]


# ---------------------------------------------------------------- lattices

def _gram_schmidt(B):
    Bs = []
    mu = [[Fraction(0)] * len(B) for _ in B]
    norms = []
    for i, b in enumerate(B):
        v = [Fraction(x) for x in b]
        for j in range(i):
            if norms[j] == 0:
                continue
            mu[i][j] = sum(Fraction(x) * y for x, y in zip(b, Bs[j])) / norms[j]
            v = [x - mu[i][j] * y for x, y in zip(v, Bs[j])]
        Bs.append(v)
        norms.append(sum(x * x for x in v))
    return Bs, mu, norms


def lll_reduce(B, delta=Fraction(3, 4)):
    """LLL-reduce the rows of B with Lovász parameter ``delta``.

    Integral variant: Gram determinants d_i and the scaled coefficients
    lambda_ij = d_j mu_ij are kept as integers and updated in place.
    The output spans the same lattice.
    """
    B = [list(r) for r in as_matrix(B)]
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must lie in (1/4, 1)")
    if not B:
        return ()
    if rank(B) < len(B):
        raise LinearDependenceError("lll_reduce needs linearly independent rows")
    n = len(B)
    p, q = delta.numerator, delta.denominator
    # 1-based as in the textbook recurrences; d[0] = 1
    d = [1] + [0] * n
    lam = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(1, n + 1):
        for j in range(1, k + 1):
            u = dot(B[k - 1], B[j - 1])
            for i in range(1, j):
                u = (d[i] * u - lam[k][i] * lam[j][i]) // d[i - 1]
            if j < k:
                lam[k][j] = u
            else:
                d[k] = u

    def red(k, l):
        if 2 * abs(lam[k][l]) > d[l]:
            r = (2 * lam[k][l] + d[l]) // (2 * d[l])
            B[k - 1] = [x - r * y for x, y in zip(B[k - 1], B[l - 1])]
            lam[k][l] -= r * d[l]
            for i in range(1, l):
                lam[k][i] -= r * lam[l][i]

    k = 2
    while k <= n:
        for l in range(k - 1, 0, -1):
            red(k, l)
        lk = lam[k][k - 1]
        if q * d[k] * d[k - 2] < p * d[k - 1] ** 2 - q * lk * lk:
            B[k - 1], B[k - 2] = B[k - 2], B[k - 1]
            for j in range(1, k - 1):
                lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
            nb = (d[k - 2] * d[k] + lk * lk) // d[k - 1]
            for i in range(k + 1, n + 1):
                t = lam[i][k]
                lam[i][k] = (d[k] * lam[i][k - 1] - lk * t) // d[k - 1]
                lam[i][k - 1] = (nb * t + lk * lam[i][k]) // d[k]
            d[k - 1] = nb
            k = max(k - 1, 2)
        else:
            k += 1
    return tuple(map(tuple, B))


def _enumerate_short(B, bound):
    """All coefficient vectors x != 0 with |x B|^2 <= bound (B reduced rows)."""
    n = len(B)
    _, mu, norms = _gram_schmidt(B)
    out = []
    x = [0] * n

    def rec(i, partial):
        if i < 0:
            if any(x):
                out.append(tuple(x))
            return
        c = -sum(mu[j][i] * x[j] for j in range(i + 1, n))
        room = (bound - partial) / norms[i]
        if room < 0:
            return
        s = isqrt(room.numerator // room.denominator) + 1
        lo = int(c) - s - 1
        hi = int(c) + s + 1
        for xi in range(lo, hi + 1):
            t = partial + norms[i] * (xi - c) ** 2
            if t <= bound:
                x[i] = xi
                rec(i - 1, t)
        x[i] = 0

    rec(n - 1, Fraction(0))
    return out


def lattice_points_in_ball(B, bound):
    """Nonzero lattice vectors (row combinations of B) with squared norm <= bound."""
    R = lll_reduce(B)
    pts = []
    for x in _enumerate_short(R, Fraction(bound)):
        pts.append(tuple(sum(xi * R[i][j] for i, xi in enumerate(x)) for j in range(len(R[0]))))
    return pts


def shortest_vector(B):
    """A shortest nonzero vector of the row lattice of B.

    Ties are broken by normalizing each minimizer so its first nonzero entry
    is positive and taking the lexicographically largest.
    """
    B = as_matrix(B)
    if not B:
        raise RankError("zero-dimensional lattice has no nonzero vector")
    R = lll_reduce(B)
    bound = min(dot(r, r) for r in R)
    best = []
    for v in lattice_points_in_ball(R, bound):
        if dot(v, v) == bound:
            first = next(a for a in v if a)
            best.append(v if first > 0 else tuple(-a for a in v))
    return max(best)


def max_subdeterminant(A, d):
    """Largest |det| over all d x d minors of A."""
    A = as_matrix(A)
    m = len(A)
    n = len(A[0]) if m else 0
    if d > m or d > n or d < 0:
        raise ValueError("minor size %d exceeds matrix shape %dx%d" % (d, m, n))
    best = 0
    for rows in combinations(range(m), d):
        for cols in combinations(range(n), d):
            best = max(best, abs(det([[A[i][j] for j in cols] for i in rows])))
    return best


def box_points(lo, hi):
    """Integer points of the box [lo, hi] in lexicographic order."""
    return product(*(range(a, b + 1) for a, b in zip(lo, hi)))
