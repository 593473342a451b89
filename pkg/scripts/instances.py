"""Polytopes of the published reproduction targets, in library and LattE form."""
from itertools import product

from shortrat.polytope import Polyhedron


def _unit(n, idx):
    return tuple(int(j in idx) for j in range(n))


def _polytope(n, lines, rhs):
    A = [tuple(-int(i == j) for j in range(n)) for i in range(n)]
    E = [_unit(n, set(line)) for line in lines]
    return Polyhedron(A, [0] * n, E, list(rhs), n)


def magic_square(k, diagonals=True, s=1):
    """k x k nonnegative arrays with every row, column (and diagonal) sum s."""
    cell = lambda i, j: i * k + j
    lines = [[cell(i, j) for j in range(k)] for i in range(k)]
    lines += [[cell(i, j) for i in range(k)] for j in range(k)]
    if diagonals:
        lines.append([cell(i, i) for i in range(k)])
        lines.append([cell(i, k - 1 - i) for i in range(k)])
    return _polytope(k * k, lines, [s] * len(lines))


def semi_magic_cube(k, dim, s=1):
    """k^dim nonnegative arrays with every axis-parallel line summing to s."""
    cells = list(product(range(k), repeat=dim))
    index = {c: i for i, c in enumerate(cells)}
    lines = []
    for axis in range(dim):
        for c in cells:
            if c[axis] == 0:
                lines.append([index[c[:axis] + (t,) + c[axis + 1:]] for t in range(k)])
    return _polytope(len(cells), lines, [s] * len(lines))


def symmetric_table(margins):
    """Symmetric tables with nonnegative entries x_ij (i <= j); the diagonal
    entry enters its row sum twice."""
    k = len(margins)
    pairs = [(i, j) for i in range(k) for j in range(i, k)]
    n = len(pairs)
    E = []
    for r in range(k):
        E.append(tuple((2 if i == j == r else int(r in (i, j))) for i, j in pairs))
    A = [tuple(-int(i == j) for j in range(n)) for i in range(n)]
    return Polyhedron(A, [0] * n, E, list(margins), n)


def latte_text(P):
    """LattE file for P: inequalities b - a.x >= 0, equations marked by linearity."""
    rows = [(c,) + tuple(-x for x in a) for a, c in zip(P.A, P.b)]
    rows += [(c,) + tuple(-x for x in e) for e, c in zip(P.E, P.d)]
    out = ["%d %d" % (len(rows), P.dim + 1)]
    out += [" ".join(map(str, r)) for r in rows]
    if P.E:
        first = len(P.A) + 1
        out.append("linearity %d %s" % (len(P.E), " ".join(str(first + i) for i in range(len(P.E)))))
    return "\n".join(out) + "\n"
