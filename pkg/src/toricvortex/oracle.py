"""Slow reference implementations used for differential testing and --verify.

Each oracle answers the same question as a fast routine by a more direct
route: covering sample points, enumerating vertices, counting lattice points
or walking a grid. None of them calls the fast routine it checks.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import gcd
from typing import Sequence

from . import _linalg
from .errors import RankDeficient
from .fans import Fan
from .polyhedra import free_solve_positive, hyperplane_normal, in_cone_interior
from .weights import WeightMatrix, WeightLike, as_lift


def arrangement_samples(V: WeightLike) -> list[tuple[Fraction, ...]]:
    """One point in every open cell of the arrangement of column-spanned hyperplanes."""
    V = WeightMatrix.coerce(V)
    normals = set()
    for F in combinations(range(V.r), V.m - 1):
        if not F or _linalg.rank(V.submatrix(F)) == len(F):
            normals.add(hyperplane_normal(V, F))
    # a cell is the list of signed normals it lies strictly on the positive side of
    cells = [[]]
    for n in sorted(normals):
        split = []
        for cell in cells:
            for sign in (1, -1):
                trial = cell + [tuple(sign * x for x in n)]
                if free_solve_positive(trial) is not None:
                    split.append(trial)
        cells = split
    return [free_solve_positive(cell) for cell in cells]


def _cells_of(V: WeightMatrix, cone, samples) -> frozenset[int]:
    return frozenset(i for i, p in enumerate(samples) if in_cone_interior(V, cone, p))


def covers_all_chambers(V: WeightLike, cones) -> bool:
    """Every arrangement cell has its sample point inside some cone."""
    V = WeightMatrix.coerce(V)
    samples = arrangement_samples(V)
    return all(any(in_cone_interior(V, c, p) for c in cones) for p in samples)


def _t_junction(V: WeightMatrix, chosen) -> bool:
    # some generator in use lies in a cone of which it is not a generator
    used = {j for c in chosen for j in c}
    for J in chosen:
        for k in used - set(J):
            coords = _linalg.solve_square(V.submatrix(J), V.column(k))
            if all(x >= 0 for x in coords):
                return True
    return False


def oracle_fans(V: WeightLike) -> list[Fan]:
    """All complete simplicial fans, by exact cover of arrangement cells (m <= 3)."""
    V = WeightMatrix.coerce(V)
    samples = arrangement_samples(V)
    cands = []
    for I in combinations(range(V.r), V.m):
        if _linalg.rank(V.submatrix(I)) == V.m:
            cands.append((I, _cells_of(V, I, samples)))
    everything = frozenset(range(len(samples)))
    found = []

    def search(chosen, covered):
        if covered == everything:
            if not _t_junction(V, chosen):
                found.append(Fan.build(V, chosen))
            return
        target = min(everything - covered)
        for I, cells in cands:
            if target in cells and not (cells & covered):
                search(chosen + [I], covered | cells)

    search([], frozenset())
    return sorted(found, key=lambda f: f.max_cones)


def oracle_destabilizer(V: WeightLike, a: Sequence, S) -> tuple[Fraction, ...] | None:
    """A nonzero vertex of {xi in ker v : xi_S <= 0, <a,xi> >= 0, |xi_j| <= 1}, if any."""
    V = WeightMatrix.coerce(V)
    a = as_lift(a, V.r)
    B = V.kernel_basis
    h = len(B)
    if h == 0:
        return None
    # xi = sum lam_k B_k; each constraint is row . lam <= rhs
    def coord(j):
        return [B[k][j] for k in range(h)]

    cons = []
    for j in S:
        cons.append((coord(j), Fraction(0)))
    cons.append(([-_linalg.dot(a, B[k]) for k in range(h)], Fraction(0)))
    for j in range(V.r):
        cons.append((coord(j), Fraction(1)))
        cons.append(([-x for x in coord(j)], Fraction(1)))
    for active in combinations(cons, h):
        lam = _linalg.solve_square([row for row, _ in active], [rhs for _, rhs in active])
        if lam is None:
            continue
        if all(_linalg.dot(row, lam) <= rhs for row, rhs in cons):
            xi = tuple(sum(lam[k] * B[k][j] for k in range(h)) for j in range(V.r))
            if any(xi):
                return xi
    return None


def oracle_properness(V: WeightLike, grid_density: int) -> tuple[Fraction, Fraction]:
    """(lower, upper) bracket for the properness constant from a simplex grid.

    Grid points x = k/N give upper = min |proj x|^2 / 4. Every simplex point
    is within l1 distance r/N of the grid and |proj x|^2 is 2-Lipschitz
    in l1 on the simplex, so min - 2r/N bounds the true minimum from below.
    """
    if grid_density < 2:
        raise ValueError("grid density must be at least 2")
    V = WeightMatrix.coerce(V)
    N, r = grid_density, V.r
    # orthogonal basis of the row space; proj removes each component
    rows = [list(map(Fraction, row)) for row in V.rows]
    basis = []
    for row in rows:
        v = row[:]
        for b in basis:
            coef = _linalg.dot(v, b) / _linalg.dot(b, b)
            v = [x - coef * y for x, y in zip(v, b)]
        if any(v):
            basis.append(v)
    best = None
    for k in _compositions(N, r):
        x = [Fraction(t, N) for t in k]
        # |proj x|^2 = |x|^2 - sum over orthogonal basis of (x.b)^2/|b|^2
        val = _linalg.dot(x, x) - sum(_linalg.dot(x, b) ** 2 / _linalg.dot(b, b) for b in basis)
        if best is None or val < best:
            best = val
    upper = best / 4
    lower = max(Fraction(0), best - Fraction(2 * r, N)) / 4
    return lower, upper


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def oracle_stabilizer_order(V: WeightLike, S) -> int | None:
    """Count theta in (1/D Z / Z)^k with sum_{j not in S} theta_j v_j integral.

    Returns None when the stabilizer is infinite (dependent columns off S).
    D is a nonzero maximal minor, which every element order divides.
    """
    V = WeightMatrix.coerce(V)
    rest = [j for j in range(V.r) if j not in set(S)]
    k = len(rest)
    if k == 0:
        return 1
    M = V.submatrix(rest)
    if _linalg.rank(M) < k:
        return None
    D = next(
        abs(_linalg.int_det([M[i] for i in rows]))
        for rows in combinations(range(V.m), k)
        if _linalg.int_det([M[i] for i in rows])
    )
    count = 0
    for nums in product(range(D), repeat=k):
        if all(sum(M[i][t] * nums[t] for t in range(k)) % D == 0 for i in range(V.m)):
            count += 1
    return count


def oracle_component_order(V: WeightLike) -> tuple[int, int]:
    """|pi_0(K_w)| two ways: gcd of maximal minors, and an index count mod D."""
    V = WeightMatrix.coerce(V)
    g = 0
    for I in combinations(range(V.r), V.m):
        g = gcd(g, _linalg.int_det(V.submatrix(I)))
    if g == 0:
        raise RankDeficient("all maximal minors vanish")
    D = g
    # subgroup of (Z/D)^m generated by the columns, by breadth-first closure
    seen = {tuple([0] * V.m)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for col in V.columns:
                y = tuple((xi + ci) % D for xi, ci in zip(x, col))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return g, D ** V.m // len(seen)


def oracle_algebra_dimension(h: int, g: int, n: int) -> int:
    """Count monomials of degree n: degree-2 symmetric generators, degree-1 exterior ones."""
    count = 0
    for k in range(n // 2 + 1):
        sym = sum(1 for _ in combinations_with_replacement(range(h), k))
        ext = sum(1 for _ in combinations(range(2 * g * h), n - 2 * k))
        count += sym * ext
    return count


def oracle_moment_image(V: WeightLike, a: Sequence) -> bool:
    """a is in p_v(R_r^{>=0}) iff every invariant functional nonneg on R_r^{>=0} is nonneg at a.

    Checked through vertex lifts: a + V^T g >= 0 has a solution iff one exists
    at a vertex, where m independent coordinates vanish.
    """
    V = WeightMatrix.coerce(V)
    a = as_lift(a, V.r)
    for I in combinations(range(V.r), V.rank):
        rows = [list(V.column(j)) for j in I]
        if _linalg.rank(rows) < V.rank:
            continue
        # solve for g in the row space: v_j . g = -a_j on I, least-norm not needed
        sol = _solve_consistent(rows, [-a[j] for j in I], V.m)
        if sol is None:
            continue
        if all(a[j] + _linalg.dot(V.column(j), sol) >= 0 for j in range(V.r)):
            return True
    return False


def _solve_consistent(rows, rhs, n):
    R, piv = _linalg.rref([list(r) + [b] for r, b in zip(rows, rhs)], n + 1)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(R, piv):
        x[p] = row[n]
    return x
