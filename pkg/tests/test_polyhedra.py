import random
from fractions import Fraction

from hypothesis import given, strategies as st

from toricvortex._linalg import matvec
from toricvortex.polyhedra import (
    cone_is_simplicial_pointed,
    cones_intersect_in_common_face,
    free_solve_positive,
    nonneg_solve,
    normalize_functionals,
    positive_span_is_full,
    remove_redundant,
)

F1 = [[1, 0, -1, 0], [0, 1, 1, -1]]


def test_nonneg_solve_zero_solution():
    x = nonneg_solve([[1, -1]], [0])
    assert x is not None and x[0] == x[1] >= 0


def test_nonneg_solve_substitution_example():
    A = [[1, 0, -1], [0, 1, -2]]
    x = nonneg_solve(A, [-1, 0])
    assert x == (0, 2, 1)


def test_nonneg_solve_infeasible():
    assert nonneg_solve([[1, 1]], [-1]) is None


@given(st.integers(1, 4), st.integers(1, 6), st.randoms(use_true_random=False))
def test_nonneg_solve_finds_planted_solution(p, n, rnd):
    A = [[rnd.randint(-4, 4) for _ in range(n)] for _ in range(p)]
    x0 = [Fraction(rnd.randint(0, 5), rnd.randint(1, 3)) for _ in range(n)]
    b = matvec(A, x0)
    x = nonneg_solve(A, b)
    assert x is not None
    assert all(t >= 0 for t in x)
    assert matvec(A, x) == b


def test_free_solve_positive():
    y = free_solve_positive([[1, 0], [-1, 1]])
    assert y[0] >= 1 and y[1] - y[0] >= 1
    assert free_solve_positive([[1], [-1]]) is None


def test_positive_span_examples():
    assert positive_span_is_full([[1, -1]])
    assert not positive_span_is_full([[1, 1]])
    assert positive_span_is_full(F1)


def test_simplicial_examples():
    assert cone_is_simplicial_pointed(F1, [0, 1])
    assert not cone_is_simplicial_pointed([[1, -1]], [0, 1])
    assert cone_is_simplicial_pointed(F1, [])


def test_common_face_examples():
    assert cones_intersect_in_common_face(F1, [0, 1], [1, 2])
    assert cones_intersect_in_common_face(F1, [0, 1], [0, 1])
    V = [[1, 1, 1, 1], [0, 1, 2, 3]]
    assert not cones_intersect_in_common_face(V, [0, 2], [1, 3])


def test_common_face_symmetric_and_reflexive():
    rng = random.Random(5)
    V = [[1, 0, -1, 0, 2, -1], [0, 1, 1, -1, 1, -2]]
    from itertools import combinations

    cones = [c for c in combinations(range(6), 2) if cone_is_simplicial_pointed(V, c)]
    for I in cones:
        assert cones_intersect_in_common_face(V, I, I)
    for _ in range(40):
        I, J = rng.sample(cones, 2)
        assert cones_intersect_in_common_face(V, I, J) == cones_intersect_in_common_face(V, J, I)


def test_redundancy_removal():
    rows = normalize_functionals([(2, 0), (0, 1), (1, 1), (3, 3)])
    assert rows == [(0, 1), (1, 0), (1, 1)]
    assert remove_redundant(rows) == [(0, 1), (1, 0)]
