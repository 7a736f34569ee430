"""Random instances shared by the property tests."""

import random
from fractions import Fraction

from toricvortex.polyhedra import positive_span_is_full, satisfies_p1
from toricvortex.weights import WeightMatrix


def random_matrix(rng: random.Random, m: int, r: int, lo: int = -3, hi: int = 3) -> WeightMatrix:
    rows = tuple(tuple(rng.randint(lo, hi) for _ in range(r)) for _ in range(m))
    return WeightMatrix(rows)


def random_weight_matrix(rng: random.Random, m: int, r: int, lo: int = -3, hi: int = 3) -> WeightMatrix:
    """Rank m, primitive columns, positively spanning."""
    while True:
        V = random_matrix(rng, m, r, lo, hi)
        if V.rank == m and satisfies_p1(V) and positive_span_is_full(V):
            return V


def random_lift(rng: random.Random, r: int, den: int = 7) -> tuple:
    return tuple(Fraction(rng.randint(-3 * den, 6 * den), rng.randint(1, den)) for _ in range(r))
