import random
from fractions import Fraction

from hypothesis import given, strategies as st

from toricvortex.moment import (
    in_moment_image,
    moment_vector,
    orthogonal_projector,
    properness_constant,
    properness_minimizer,
)
from toricvortex.oracle import oracle_moment_image, oracle_properness
from toricvortex.polyhedra import positive_span_is_full

from helpers import random_lift, random_matrix, random_weight_matrix

P1 = [[1, -1]]
F1 = [[1, 0, -1, 0], [0, 1, 1, -1]]


def test_moment_vector_examples():
    half = Fraction(1, 2)
    assert moment_vector(P1, (1, 1)).canonical_lift == (half, half)
    assert moment_vector(P1, (1, 0)).canonical_lift == (Fraction(1, 4), Fraction(1, 4))
    assert moment_vector(F1, (0, 0, 0, 0)).canonical_lift == (0, 0, 0, 0)


def test_moment_vector_orthogonal_to_shifts():
    m = moment_vector(F1, (1, 2, 3, 4)).canonical_lift
    for row in F1:
        assert sum(x * y for x, y in zip(row, m)) == 0


@given(st.lists(st.fractions(min_value=0, max_value=10, max_denominator=9), min_size=4, max_size=4),
       st.fractions(min_value=-5, max_value=5, max_denominator=5))
def test_moment_homogeneity(x, lam):
    scaled = [lam * lam * t for t in x]
    assert moment_vector(F1, scaled).canonical_lift == tuple(lam * lam * t for t in moment_vector(F1, x).canonical_lift)


def test_projector_is_idempotent():
    P = orthogonal_projector(F1)
    PP = [[sum(P[i][k] * P[k][j] for k in range(4)) for j in range(4)] for i in range(4)]
    assert PP == [list(row) for row in P]


def test_moment_image_examples():
    assert in_moment_image(P1, (1, 0))
    assert not in_moment_image(P1, (-1, 0))
    assert in_moment_image(F1, (0, 0, 0, 0))


def test_properness_examples():
    assert properness_constant(P1) == Fraction(1, 8)
    assert properness_constant([[1, 1]]) == 0
    # im(v*) is all of R_1 here, so the projection vanishes and P2 fails
    assert properness_constant([[1]]) == 0
    assert not positive_span_is_full([[1]])


def test_properness_attained_and_bracketed():
    rng = random.Random(4)
    for _ in range(20):
        m = rng.randint(1, 2)
        V = random_matrix(rng, m, rng.randint(m + 1, 4))
        c = properness_constant(V)
        x = properness_minimizer(V)
        assert sum(x) == 1 and min(x) >= 0
        assert moment_vector(V, x).norm_squared() == c
        lo, hi = oracle_properness(V, 6)
        assert lo <= c <= hi
        for _ in range(10):
            y = [Fraction(rng.randint(0, 9)) for _ in range(V.r)]
            if sum(y):
                y = [t / sum(y) for t in y]
                assert moment_vector(V, y).norm_squared() >= c


def test_properness_positive_iff_positive_span():
    rng = random.Random(17)
    seen = 0
    while seen < 40:
        m = rng.randint(1, 2)
        V = random_matrix(rng, m, rng.randint(m, 5))
        if V.rank < m:
            continue
        seen += 1
        assert (properness_constant(V) > 0) == positive_span_is_full(V)


def test_moment_image_lift_invariance_and_oracle():
    rng = random.Random(23)
    for _ in range(40):
        V = random_weight_matrix(rng, 2, rng.randint(3, 5))
        a = random_lift(rng, V.r)
        b = tuple(x + y for x, y in zip(a, V.transpose_apply([rng.randint(-3, 3), rng.randint(-3, 3)])))
        assert in_moment_image(V, a) == in_moment_image(V, b) == oracle_moment_image(V, a)
