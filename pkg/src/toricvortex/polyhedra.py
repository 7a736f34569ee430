"""Exact rational polyhedral primitives.

Every membership and feasibility question in the package reduces to
``nonneg_solve``: find x >= 0 with A x = b. It runs a phase-one simplex on
Fractions with Bland's rule, so it terminates and never rounds.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from . import _linalg
from .errors import PreconditionFailed
from .lattice import is_primitive_column
from .weights import WeightMatrix, WeightLike

Vector = tuple[Fraction, ...]


def nonneg_solve(A: Sequence[Sequence], b: Sequence) -> Vector | None:
    """Return some x >= 0 with A x = b, or None if there is none."""
    p = len(A)
    n = len(A[0]) if p else 0
    if p == 0:
        return None if n < 0 else tuple(Fraction(0) for _ in range(n))
    rows = []
    for row, bi in zip(A, b):
        row = [Fraction(x) for x in row]
        bi = Fraction(bi)
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        rows.append(row + [Fraction(int(k == len(rows))) for k in range(p)] + [bi])
    width = n + p
    basis = [n + i for i in range(p)]
    # phase-one objective: minimise the sum of artificials
    cost = [-sum(rows[i][j] for i in range(p)) for j in range(n)] + [Fraction(0)] * p
    value = -sum(row[-1] for row in rows)

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(p):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded direction in phase one cannot happen: objective >= 0
            break
        piv = rows[leave][enter]
        prow = [x / piv for x in rows[leave]]
        rows[leave] = prow
        for i in range(p):
            if i != leave:
                f = rows[i][enter]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        f = cost[enter]
        cost = [c - f * y for c, y in zip(cost, prow[:width])]
        value -= f * prow[-1]
        basis[leave] = enter

    if value != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][-1]
    return tuple(x)


def free_solve_positive(G: Sequence[Sequence]) -> Vector | None:
    """Some y with G y >= 1 componentwise (y free), or None.

    Finding y with G y > 0 is the same question up to scaling.
    """
    k = len(G[0]) if G else 0
    if not G:
        return tuple(Fraction(0) for _ in range(k))
    q = len(G)
    A = [list(row) + [-x for x in row] + [-int(i == t) for t in range(q)] for i, row in enumerate(G)]
    sol = nonneg_solve(A, [1] * q)
    if sol is None:
        return None
    return tuple(sol[i] - sol[k + i] for i in range(k))


@lru_cache(maxsize=512)
def _positive_span_is_full(V: WeightMatrix) -> bool:
    cols = V.submatrix(range(V.r))
    for i in range(V.m):
        for sign in (1, -1):
            target = [sign * int(t == i) for t in range(V.m)]
            if nonneg_solve(cols, target) is None:
                return False
    return True


def positive_span_is_full(V: WeightLike) -> bool:
    """True iff the columns of V positively span R^m."""
    return _positive_span_is_full(WeightMatrix.coerce(V))


def satisfies_p1(V: WeightLike) -> bool:
    V = WeightMatrix.coerce(V)
    return all(is_primitive_column(c) for c in V.columns)


def check_p1_p2(V: WeightMatrix) -> None:
    bad = [j + 1 for j, c in enumerate(V.columns) if not is_primitive_column(c)]
    if bad:
        raise PreconditionFailed(f"columns {bad} are not primitive")
    if not positive_span_is_full(V):
        raise PreconditionFailed("columns do not positively span R^m")


def cone_is_simplicial_pointed(V: WeightLike, I: Sequence[int]) -> bool:
    """Columns indexed by I are linearly independent."""
    V = WeightMatrix.coerce(V)
    I = list(I)
    if not I:
        return True
    return _linalg.rank(V.submatrix(I)) == len(I)


def cone_coordinates(V: WeightMatrix, I: Sequence[int], x: Sequence) -> Vector | None:
    """Coordinates of x in the basis (v_i)_{i in I} of R^m, for |I| = m independent."""
    return _linalg.solve_square(V.submatrix(I), x)


def in_cone_interior(V: WeightMatrix, I: Sequence[int], x: Sequence) -> bool:
    coords = cone_coordinates(V, I, x)
    return coords is not None and all(c > 0 for c in coords)


def same_ray(u: Sequence, v: Sequence) -> bool:
    """u = t v for some t > 0 (both nonzero)."""
    if not any(u) or not any(v):
        return False
    i = next(k for k in range(len(v)) if v[k] != 0)
    t = Fraction(u[i]) / Fraction(v[i])
    return t > 0 and all(Fraction(a) == t * b for a, b in zip(u, v))


def ray_groups(V: WeightMatrix) -> tuple[tuple[int, ...], ...]:
    """For each column, the sorted tuple of all columns spanning the same ray."""
    groups = []
    for j, c in enumerate(V.columns):
        groups.append(tuple(k for k, d in enumerate(V.columns) if k == j or same_ray(c, d)))
    return tuple(groups)


def _overlap_outside(V: WeightMatrix, I, J) -> bool:
    # exists x, y >= 0 with V_I x = V_J y and sum of x over I \ J equal to 1
    only = [i for i in I if i not in J]
    if not only:
        return False
    A = [row_i + [-x for x in row_j] for row_i, row_j in zip(V.submatrix(I), V.submatrix(J))]
    A.append([int(i in only) for i in I] + [0] * len(J))
    b = [0] * V.m + [1]
    return nonneg_solve(A, b) is not None


def cones_intersect_in_common_face(V: WeightLike, I: Sequence[int], J: Sequence[int]) -> bool:
    """cone(I) and cone(J) meet exactly in cone(I & J).

    Because both cones are simplicial, a point of cone(I) lies in
    cone(I & J) iff its (unique) coordinates vanish off I & J. Both
    inclusions are tested by exact feasibility.
    """
    V = WeightMatrix.coerce(V)
    I = tuple(sorted(I))
    J = tuple(sorted(J))
    return not _overlap_outside(V, I, J) and not _overlap_outside(V, J, I)


def hyperplane_normal(V: WeightMatrix, F: Sequence[int]) -> Vector:
    """A normal vector of span(v_F) for |F| = m - 1 independent columns."""
    rows = [list(V.column(j)) for j in F]
    basis = _linalg.nullspace(rows, V.m)
    if len(basis) != 1:
        raise ValueError(f"columns {F} do not span a hyperplane")
    return tuple(_linalg.primitive_integer(basis[0]))


def fourier_motzkin(rows: Sequence[Sequence], var: int) -> list[tuple[Fraction, ...]]:
    """Eliminate variable ``var`` from a homogeneous system {row . y >= 0}."""
    pos, neg, zero = [], [], []
    for row in rows:
        row = tuple(Fraction(x) for x in row)
        (pos if row[var] > 0 else neg if row[var] < 0 else zero).append(row)
    out = [r[:var] + r[var + 1:] for r in zero]
    for p in pos:
        for q in neg:
            comb = tuple(-q[var] * x + p[var] * y for x, y in zip(p, q))
            out.append(comb[:var] + comb[var + 1:])
    return out


def normalize_functionals(rows) -> list[tuple[int, ...]]:
    """Primitive integer representatives, zero rows and duplicates dropped, sorted."""
    seen = set()
    for row in rows:
        prim = _linalg.primitive_integer(row)
        if any(prim):
            seen.add(prim)
    return sorted(seen)


def remove_redundant(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Drop every functional that is a nonnegative combination of the rest.

    Redundancy is decided against the currently kept set, scanning in
    order, which gives a deterministic irredundant subset.
    """
    kept = [tuple(r) for r in rows]
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        if others:
            A = _linalg.transpose(others)
            if nonneg_solve(A, kept[i]) is not None:
                kept.pop(i)
                continue
        i += 1
    return kept


def generic_point(V: WeightMatrix) -> tuple[int, ...]:
    """An integer point off every hyperplane spanned by m - 1 columns."""
    m = V.m
    normals = []
    for F in combinations(range(V.r), m - 1):
        if cone_is_simplicial_pointed(V, F):
            normals.append(hyperplane_normal(V, F))
    t = 1
    while True:
        p = tuple(t ** k for k in range(m))
        if all(_linalg.dot(n, p) != 0 for n in normals):
            return p
        t += 1
