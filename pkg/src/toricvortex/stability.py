"""Stability of support patterns, stabilizer subgroups and smoothness.

A support S is the set of indices j with z_j != 0. It is stable for a fan
when it contains the required support of some maximal cone, and stable for
a parameter when no nonzero xi in ker v has xi_S <= 0 and <a, xi> >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _linalg
from .fans import Fan
from .lattice import FinAbelianGroup, cokernel_group
from .polyhedra import nonneg_solve
from .weights import WeightMatrix, WeightLike, as_lift


def required_support(V: WeightLike, fan: Fan, I: Sequence[int]) -> frozenset[int]:
    """Columns that must be nonzero on the chart of cone I: those not generating I."""
    V = WeightMatrix.coerce(V)
    return frozenset(j for j in range(V.r) if j not in I)


def support_in_U(V: WeightLike, fan: Fan, S: Iterable[int]) -> bool:
    V = WeightMatrix.coerce(V)
    S = frozenset(S)
    return any(required_support(V, fan, I) <= S for I in fan.max_cones)


def hm_destabilizer(V: WeightLike, a: Sequence, S: Iterable[int]) -> tuple[Fraction, ...] | None:
    """A nonzero xi in ker v with xi_j <= 0 on S and <a, xi> >= 0, or None if stable.

    Either xi is strictly negative somewhere on S, and then scaling gives
    sum_{j in S} -xi_j = 1 (one LP), or xi vanishes on S, which is a
    nullspace question.
    """
    V = WeightMatrix.coerce(V)
    a = as_lift(a, V.r)
    S = sorted(set(S))
    free = [j for j in range(V.r) if j not in S]

    if S:
        # unknowns: t_S >= 0 (xi_S = -t_S), p, q >= 0 on the rest (xi = p - q), slack s >= 0
        ns, nf = len(S), len(free)
        A, b = [], []
        for row in V.rows:
            A.append([-row[j] for j in S] + [row[j] for j in free] + [-row[j] for j in free] + [0])
            b.append(0)
        A.append([-a[j] for j in S] + [a[j] for j in free] + [-a[j] for j in free] + [-1])
        b.append(0)
        A.append([1] * ns + [0] * (2 * nf) + [0])
        b.append(1)
        sol = nonneg_solve(A, b)
        if sol is not None:
            xi = [Fraction(0)] * V.r
            for k, j in enumerate(S):
                xi[j] = -sol[k]
            for k, j in enumerate(free):
                xi[j] = sol[ns + k] - sol[ns + nf + k]
            return tuple(xi)

    # xi supported off S
    rows = [list(row) for row in V.rows] + [[int(k == j) for k in range(V.r)] for j in S]
    basis = _linalg.nullspace(rows, V.r)
    if not basis:
        return None
    xi = basis[0]
    if _linalg.dot(a, xi) < 0:
        xi = [-x for x in xi]
    return tuple(xi)


def stabilizer_group(V: WeightLike, S: Iterable[int]) -> FinAbelianGroup:
    """The subgroup of K_w fixing every coordinate in S, via its character group.

    {t in K_w : t_j = 1 for j in S} = Hom(coker(V_{S^c}^T), S^1). The returned
    group is coker(V_{S^c}^T); its dual is the stabilizer, which has the same
    order when finite. Use ``dual_str`` to print the stabilizer itself.
    """
    V = WeightMatrix.coerce(V)
    S = set(S)
    rest = [j for j in range(V.r) if j not in S]
    if not rest:
        return FinAbelianGroup(0)
    return cokernel_group([list(V.column(j)) for j in rest])


@dataclass(frozen=True)
class ConeStabilizer:
    cone: tuple[int, ...]
    determinant: int
    stabilizer: FinAbelianGroup


@dataclass(frozen=True)
class SmoothnessReport:
    per_cone: tuple[ConeStabilizer, ...]
    smooth: bool


def fan_smoothness(V: WeightLike, fan: Fan) -> SmoothnessReport:
    V = WeightMatrix.coerce(V)
    rows = []
    for I in fan.max_cones:
        d = _linalg.int_det(V.submatrix(I))
        rows.append(ConeStabilizer(I, d, stabilizer_group(V, required_support(V, fan, I))))
    smooth = all(c.stabilizer.is_trivial for c in rows)
    return SmoothnessReport(tuple(rows), smooth)
