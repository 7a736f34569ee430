"""Moment map values, moment image membership and the properness constant.

Conventions. The moment map of K_w takes values in i*coker(v*). We store
the real vector m with mu = -i m, and identify coker(v*) (x) R with the
orthogonal complement of im(v*) inside R_r using the standard Euclidean
product. With x_j = |z_j|^2 this gives m(x) = (1/2) proj(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from . import _linalg
from .polyhedra import nonneg_solve
from .weights import WeightMatrix, WeightLike, as_lift

NORM_CONVENTION = (
    "coker(v*) (x) R is identified with the orthogonal complement of im(v*) in R_r "
    "under the standard Euclidean inner product; moment values are the real vectors m "
    "with mu = -i m, m(x) = (1/2) proj(x) for x_j = |z_j|^2; the properness constant c "
    "is optimal for |mu(z)|^2 >= c |z|^4 in these norms."
)


@dataclass(frozen=True)
class MomentVector:
    canonical_lift: tuple[Fraction, ...]

    def norm_squared(self) -> Fraction:
        return sum(x * x for x in self.canonical_lift)


@lru_cache(maxsize=256)
def _projector(V: WeightMatrix) -> tuple[tuple[Fraction, ...], ...]:
    # projection of R_r onto the orthogonal complement of the row space of V
    B, _ = _linalg.rref(V.rows)
    r = V.r
    if not B:
        return tuple(tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r))
    gram = _linalg.matmul(B, _linalg.transpose(B))
    k = len(B)
    # columns of G^{-1} B, one per standard basis vector
    inv_cols = []
    for j in range(r):
        inv_cols.append(_linalg.solve_square(gram, [B[i][j] for i in range(k)]))
    P = []
    for i in range(r):
        row = []
        for j in range(r):
            along = sum(B[t][i] * inv_cols[j][t] for t in range(k))
            row.append(Fraction(int(i == j)) - along)
        P.append(tuple(row))
    return tuple(P)


def orthogonal_projector(V: WeightLike) -> tuple[tuple[Fraction, ...], ...]:
    return _projector(WeightMatrix.coerce(V))


def moment_vector(V: WeightLike, x: Sequence) -> MomentVector:
    V = WeightMatrix.coerce(V)
    x = as_lift(x, V.r)
    if any(t < 0 for t in x):
        raise ValueError("moment coordinates x_j = |z_j|^2 must be nonnegative")
    P = _projector(V)
    return MomentVector(tuple(Fraction(1, 2) * v for v in _linalg.matvec(P, x)))


def nonnegative_lift(V: WeightLike, a: Sequence) -> tuple[Fraction, ...] | None:
    """Some a' = a + V^T g with a' >= 0, or None."""
    V = WeightMatrix.coerce(V)
    a = as_lift(a, V.r)
    # unknowns: a' >= 0, g+ >= 0, g- >= 0 with a' - V^T g+ + V^T g- = a
    A = []
    for j, col in enumerate(V.columns):
        A.append([int(k == j) for k in range(V.r)] + [-c for c in col] + list(col))
    sol = nonneg_solve(A, a)
    return None if sol is None else sol[: V.r]


def in_moment_image(V: WeightLike, a: Sequence) -> bool:
    """The class of a lies in p_v(R_r^{>=0})."""
    return nonnegative_lift(V, a) is not None


@lru_cache(maxsize=256)
def _properness(V: WeightMatrix) -> tuple[Fraction, tuple[Fraction, ...]]:
    P = _projector(V)
    r = V.r
    best = None
    for size in range(1, r + 1):
        for face in combinations(range(r), size):
            # KKT on the face: P_FF x = mu * 1, sum x = 1, x >= 0; then mu = x.Px
            A = [[P[i][j] for j in face] + [-1] for i in face]
            A.append([1] * size + [0])
            sol = nonneg_solve(A, [0] * size + [1])
            if sol is None:
                continue
            mu = sol[-1]
            if best is None or mu < best[0]:
                x = [Fraction(0)] * r
                for i, j in enumerate(face):
                    x[j] = sol[i]
                best = (mu, tuple(x))
    value, x = best
    return value / 4, x


def properness_constant(V: WeightLike) -> Fraction:
    """Optimal c with |mu(z)|^2 >= c |z|^4, i.e. min over the simplex of |proj x|^2 / 4.

    Exact, by enumerating the KKT system of a convex quadratic on every face
    of the standard simplex.
    """
    return _properness(WeightMatrix.coerce(V))[0]


def properness_minimizer(V: WeightLike) -> tuple[Fraction, ...]:
    """A point of the simplex where the constant is attained."""
    return _properness(WeightMatrix.coerce(V))[1]
