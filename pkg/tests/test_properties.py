"""Hypothesis versions of the structural invariants, one block per module."""
from fractions import Fraction

from hypothesis import assume, given, settings, strategies as st

from shortrat.cones import Cone, ConeError, barvinok_decompose, dual_decompose, polarize, unimodular_genfun
from shortrat.ehrhart import UniSeries, ehrhart_series
from shortrat.exact import det, hnf, lll_reduce, matmul, shortest_vector, solve
from shortrat.genfun import (BasicTerm, ShortRatFun, TermOrder, expand, from_points, hadamard, leading_monomial,
                             normalize_signs, specialize_all_ones)
from shortrat.polytope import Polyhedron, brion_genfun, count
from shortrat.toric import normal_form_desk
from oracles import coords, in_cone, lattice_points, lex_max, shortest_norm

small = st.integers(-9, 9)


def square_matrix(n, lo=-9, hi=9):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)


def nonsingular(n, lo=-9, hi=9):
    return square_matrix(n, lo, hi).filter(lambda M: det(M) != 0)


def point_sets(n, B=6):
    return st.lists(st.tuples(*[st.integers(0, B)] * n), min_size=1, max_size=8).map(lambda s: sorted(set(s)))


def in_row_lattice(B, v):
    x = solve([list(c) for c in zip(*B)], v)
    return all(t.denominator == 1 for t in x)


# ---------------------------------------------------------------- exact

@given(st.integers(2, 3).flatmap(nonsingular))
def test_hnf_same_row_lattice(M):
    H, U = hnf(M)
    assert abs(det(U)) == 1
    assert [list(r) for r in matmul(U, M)] == [list(r) for r in H]
    assert all(in_row_lattice(H, r) for r in M) and all(in_row_lattice(M, r) for r in H)
    for i, row in enumerate(H):
        piv = next(j for j, x in enumerate(row) if x)
        assert row[piv] > 0 and all(0 <= H[k][piv] < row[piv] for k in range(i))


@settings(max_examples=25)
@given(st.integers(2, 3).flatmap(lambda n: nonsingular(n, -20, 20)))
def test_lll_same_lattice_and_shortest(B):
    R = lll_reduce(B)
    assert abs(det(R)) == abs(det(B))
    assert all(in_row_lattice(B, r) for r in R)
    v = shortest_vector(B)
    assert sum(x * x for x in v) == shortest_norm(R, box=3)
    assert in_row_lattice(B, v)


# ---------------------------------------------------------------- genfun

@given(st.integers(1, 3).flatmap(point_sets))
def test_round_trip_and_cardinality(S):
    f = from_points(S)
    n = len(S[0])
    assert expand(f, (6,) * n) == {p: 1 for p in S}
    assert specialize_all_ones(f) == len(S)


@given(st.integers(1, 2).flatmap(lambda n: st.tuples(point_sets(n), point_sets(n))))
def test_hadamard_is_intersection(pair):
    S1, S2 = pair
    n = len(S1[0])
    assert expand(hadamard(from_points(S1), from_points(S2)), (6,) * n) == {p: 1 for p in set(S1) & set(S2)}


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_hadamard_of_boxes(a, b, c, d):
    def seg(p, q):
        return brion_genfun(Polyhedron([[1], [-1]], [q, -p]))
    lo, hi = max(a, c), min(a + b, c + d)
    got = expand(hadamard(seg(a, a + b), seg(c, c + d)), (8,))
    assert got == {(x,): 1 for x in range(lo, hi + 1)}


@given(nonsingular(3, -4, 4), point_sets(3, 8))
def test_leading_monomial_is_argmax(W, S):
    assert leading_monomial(from_points(S), TermOrder(W))[0] == lex_max(S, W)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.tuples(*[st.integers(-3, 3)] * n),
    st.lists(st.tuples(*[st.integers(-3, 3)] * n).filter(any), min_size=1, max_size=3),
    st.tuples(*[small] * n),
    st.lists(st.tuples(*[st.integers(1, 9)] * n), min_size=5, max_size=5))))
def test_normalize_signs_keeps_value(data):
    u, dens, lam, pts = data
    assume(all(sum(a * b for a, b in zip(lam, c)) != 0 for c in dens))
    t = BasicTerm(Fraction(3, 2), u, tuple(dens))
    s = normalize_signs(t, lam)
    for p in pts:
        # odd denominators avoid every pole x^c = 1 with c != 0
        x = tuple(Fraction(2 * a + 1, 2) for a in p)
        try:
            v = t.evaluate(x)
        except ZeroDivisionError:
            continue
        assert s.evaluate(x) == v


# ------------------------------------------------------------------ cones

def _off_faces(rays, x):
    return all(c != 0 for c in coords(rays, x))


@settings(max_examples=10)
@given(st.integers(2, 3).flatmap(nonsingular), st.randoms(use_true_random=False))
def test_barvinok_signed_indicator(R, rnd):
    pieces = barvinok_decompose(Cone(R))
    assert all(abs(det(p.generators)) == 1 for p in pieces)
    n = len(R)
    checked = 0
    for _ in range(400):
        x = tuple(rnd.randint(-30, 30) for _ in range(n))
        if not (_off_faces(R, x) and all(_off_faces(p.generators, x) for p in pieces)):
            continue
        assert sum(p.sign for p in pieces if in_cone(p.generators, x)) == int(in_cone(R, x))
        checked += 1
        if checked == 200:
            break


@settings(max_examples=15)
@given(st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9)), min_size=2, max_size=4))
def test_dual_decompose_counts_box(rays):
    try:
        K = Cone(rays)
        Kp = polarize(K)
    except ConeError:
        assume(False)
    c = tuple(-sum(h[j] for h in Kp.rays) for j in range(2))
    f = ShortRatFun(2, tuple(unimodular_genfun(p) for p in dual_decompose(K)))
    got = expand(f, (5, 5), lo=(-5, -5), direction=c)
    want = {x: 1 for x in lattice_points([], [], [-5, -5], [5, 5]) if K.contains(x)}
    assert got == want


@settings(max_examples=10)
@given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6)).filter(any),
                min_size=3, max_size=5))
def test_polarize_involution(rays):
    try:
        K = Cone(rays)
        K2 = polarize(polarize(K))
    except ConeError:
        assume(False)
    # the double polar keeps exactly the extreme input rays and the same cone
    assert set(K2.rays) <= set(K.rays)
    assert all(K2.contains(r) for r in K.rays)
    assert set(polarize(K2).rays) == set(polarize(K).rays)


# --------------------------------------------------------------- polytope

def polygons():
    row = st.tuples(small, small)
    return st.tuples(st.lists(row, min_size=0, max_size=3), st.lists(st.integers(0, 20), min_size=3, max_size=3),
                     st.lists(st.integers(0, 4), min_size=4, max_size=4))


def build(data):
    rows, rhs, bounds = data
    A = list(rows) + [(1, 0), (-1, 0), (0, 1), (0, -1)]
    return Polyhedron(A, list(rhs[:len(rows)]) + bounds)


@settings(max_examples=30)
@given(polygons(), st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_count_brute_force_and_translation(data, w):
    P = build(data)
    c = count(P)
    assert c == len(lattice_points(P.A, P.b, [-4, -4], [4, 4])) >= 0
    Q = P.translate(w)
    assert count(Q) == c
    e1 = expand(brion_genfun(P), (4, 4), lo=(-4, -4))
    e2 = expand(brion_genfun(Q), (8, 8), lo=(-8, -8))
    assert e2 == {tuple(a + b for a, b in zip(p, w)): v for p, v in e1.items()}
    assert brion_genfun(P) == brion_genfun(P)


# ---------------------------------------------------------------- ehrhart

@settings(max_examples=8)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=3, max_size=4))
def test_ehrhart_matches_dilations(pts):
    # lattice polygon as a bounding box intersected with a half-plane through lattice points
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    P = Polyhedron([(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1)],
                   [max(xs), -min(xs), max(ys), -min(ys), max(xs) + max(ys) - 1])
    assume(count(P) > 0)
    s = ehrhart_series(P)
    assert s.coefficients(6) == [count(P.dilate(m)) for m in range(6)]


@given(st.lists(st.integers(-5, 5), max_size=4), st.lists(st.integers(1, 3), max_size=3),
       st.lists(st.integers(-3, 3), min_size=1, max_size=3))
def test_uniseries_equality_is_cross_multiplication(num, den, extra):
    # multiplying numerator and denominator by (1 - t^e) leaves the series unchanged
    s = UniSeries(tuple(num), tuple(den))
    e = 1 + abs(extra[0])
    p = [0] * (len(num) + e)
    for i, c in enumerate(num):
        p[i] += c
        p[i + e] -= c
    t = UniSeries(tuple(p), tuple(den) + (e,))
    assert s == t and s.coefficients(8) == t.coefficients(8)
    assert s.reduced() == s


# ------------------------------------------------------------------ toric

TWISTED_GB = [((1, 0, 1, 0), (0, 2, 0, 0)), ((0, 1, 0, 1), (0, 0, 2, 0)), ((1, 0, 0, 1), (0, 1, 1, 0))]


@given(st.tuples(*[st.integers(0, 5)] * 4), st.permutations(TWISTED_GB))
def test_normal_form_fixpoint_and_confluence(a, order):
    lex = TermOrder.lex(4)
    nf = normal_form_desk(a, TWISTED_GB, lex)
    assert normal_form_desk(nf, TWISTED_GB, lex) == nf
    assert normal_form_desk(a, list(order), lex) == nf
    assert not any(all(x >= y for x, y in zip(nf, u)) for u, _ in TWISTED_GB)
