"""Support functionals, chamber membership and the GKZ decomposition.

A chamber inequality is a linear form a -> <xi, a> with xi in ker v, so it
is unchanged by a -> a + V^T f. We store xi as a primitive integer vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import _linalg
from .errors import SingularCone
from .fans import DEFAULT_LIMIT, Fan, NonGeneric, enumerate_complete_fans, fan_from_lift
from .moment import in_moment_image
from .polyhedra import (
    check_p1_p2,
    free_solve_positive,
    fourier_motzkin,
    nonneg_solve,
    normalize_functionals,
    remove_redundant,
)
from .weights import WeightMatrix, WeightLike, as_lift

Functional = tuple[int, ...]


def support_functional(V: WeightLike, a: Sequence, I: Sequence[int]) -> tuple[Fraction, ...]:
    """The unique f in Q_m with <f, v_i> = -a_i for every i in I."""
    V = WeightMatrix.coerce(V)
    a = as_lift(a, V.r)
    I = list(I)
    if len(I) != V.m:
        raise SingularCone(f"cone has {len(I)} generators, need {V.m}")
    f = _linalg.solve_square([list(V.column(i)) for i in I], [-a[i] for i in I])
    if f is None:
        raise SingularCone(f"columns {[i + 1 for i in I]} are linearly dependent")
    return tuple(f)


def convexity_functional(V: WeightMatrix, I: Sequence[int], j: int) -> tuple[Fraction, ...]:
    """xi with <xi, a> = <f_I^a, v_j> + a_j for every lift a."""
    # <f, v_j> = -a_I . (V_I^{-1} v_j), so xi_I = -V_I^{-1} v_j and xi_j = 1
    coeffs = _linalg.solve_square(V.submatrix(I), V.column(j))
    if coeffs is None:
        raise SingularCone(f"columns {[i + 1 for i in I]} are linearly dependent")
    xi = [Fraction(0)] * V.r
    for i, c in zip(I, coeffs):
        xi[i] -= c
    xi[j] += 1
    return tuple(xi)


def fan_convexity_functionals(V: WeightMatrix, fan: Fan) -> list[tuple[Fraction, ...]]:
    return [
        convexity_functional(V, I, j)
        for I in fan.max_cones
        for j in range(V.r)
        if j not in I
    ]


def image_cone_functionals(V: WeightLike) -> list[Functional]:
    """Facet functionals of p_v(R_r^{>=0}), by eliminating the shift g.

    Start from {a_j + <v_j, g> >= 0} in the unknowns (a, g) and remove
    g_1..g_m by Fourier-Motzkin; what survives is invariant by construction.
    """
    V = WeightMatrix.coerce(V)
    rows = [
        tuple(int(k == j) for k in range(V.r)) + tuple(V.column(j))
        for j in range(V.r)
    ]
    for _ in range(V.m):
        # pruning after each step keeps the pairwise blow-up small
        rows = remove_redundant(normalize_functionals(fourier_motzkin(rows, V.r)))
    return rows


def evaluate(xi: Sequence, a: Sequence) -> Fraction:
    return sum(Fraction(x) * Fraction(y) for x, y in zip(xi, a))


def format_functional(xi: Sequence[int], var: str = "a") -> str:
    terms = []
    for j, c in enumerate(xi):
        if not c:
            continue
        mag = abs(c)
        name = f"{var}{j + 1}"
        body = name if mag == 1 else f"{mag}*{name}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class ChamberDescription:
    """K(fan) = {closed >= 0}, K0(fan) = {strict > 0}, in invariant functionals."""

    fan: Fan
    closed_inequalities: tuple[Functional, ...]
    strict_inequalities: tuple[Functional, ...]

    def contains(self, a: Sequence, strict: bool = True) -> bool:
        ineqs = self.strict_inequalities if strict else self.closed_inequalities
        if strict:
            return all(evaluate(xi, a) > 0 for xi in ineqs)
        return all(evaluate(xi, a) >= 0 for xi in ineqs)

    def render(self, strict: bool = True) -> list[str]:
        op = ">" if strict else ">="
        ineqs = self.strict_inequalities if strict else self.closed_inequalities
        return [f"{format_functional(xi)} {op} 0" for xi in ineqs]


@dataclass(frozen=True)
class ChamberResult:
    status: str  # "regular", "critical" or "outside_image"
    fan: Fan | None = None

    REGULAR = "regular"
    CRITICAL = "critical"
    OUTSIDE_IMAGE = "outside_image"


def chamber_membership(V: WeightLike, fan: Fan, a: Sequence, strict: bool) -> bool:
    """p_v(a) in K(fan) (strict=False) or K0(fan) (strict=True)."""
    V = WeightMatrix.coerce(V)
    a = as_lift(a, V.r)
    for I in fan.max_cones:
        f = support_functional(V, a, I)
        for j in range(V.r):
            if j in I:
                continue
            slack = _linalg.dot(f, V.column(j)) + a[j]
            if slack < 0 or (strict and slack == 0):
                return False
    return in_moment_image(V, a)


def _chamber_is_open(V: WeightMatrix, ineqs: Sequence[Functional]) -> bool:
    # some a with <xi, a> > 0 for all listed xi
    return free_solve_positive([list(x) for x in ineqs]) is not None


def chamber_description(V: WeightLike, fan: Fan) -> ChamberDescription | None:
    """Irredundant description of K(fan), or None when K0(fan) is empty."""
    V = WeightMatrix.coerce(V)
    raw = fan_convexity_functionals(V, fan) + list(image_cone_functionals(V))
    funcs = normalize_functionals(raw)
    if not _chamber_is_open(V, funcs):
        return None
    kept = tuple(remove_redundant(funcs))
    return ChamberDescription(fan, kept, kept)


def gkz_chambers(V: WeightLike, limit: int = DEFAULT_LIMIT) -> list[tuple[Fan, ChamberDescription]]:
    """Every complete simplicial fan with nonempty open chamber, with its chamber."""
    V = WeightMatrix.coerce(V)
    out = []
    for fan in enumerate_complete_fans(V, limit):
        desc = chamber_description(V, fan)
        if desc is not None:
            out.append((fan, desc))
    return out


def in_critical_locus(V: WeightLike, a: Sequence) -> bool:
    """Direct test: p_v(a) in p_v(cone{e_j : j in S}) for some |S| = r - m - 1.

    These are the images of the coordinate subspaces with m + 1 vanishing
    coordinates. Cost grows like binom(r, m + 1); used as a cross-check.
    """
    V = WeightMatrix.coerce(V)
    a = as_lift(a, V.r)
    k = V.r - V.m - 1
    if k < 0:
        return False
    for S in combinations(range(V.r), k):
        # a + V^T g = y with y >= 0 supported on S
        A = []
        for j, col in enumerate(V.columns):
            A.append([int(s == j) for s in S] + [-c for c in col] + list(col))
        if nonneg_solve(A, a) is not None:
            return True
    return False


def classify_parameter(V: WeightLike, a: Sequence, cross_check: bool = False) -> ChamberResult:
    V = WeightMatrix.coerce(V)
    check_p1_p2(V)
    a = as_lift(a, V.r)
    if not in_moment_image(V, a):
        result = ChamberResult(ChamberResult.OUTSIDE_IMAGE)
    else:
        fan = fan_from_lift(V, a)
        if not isinstance(fan, NonGeneric) and chamber_membership(V, fan, a, strict=True):
            result = ChamberResult(ChamberResult.REGULAR, fan)
        else:
            result = ChamberResult(ChamberResult.CRITICAL)
    if cross_check and result.status != ChamberResult.OUTSIDE_IMAGE:
        direct = in_critical_locus(V, a)
        if direct != (result.status == ChamberResult.CRITICAL):
            raise AssertionError(f"wall test and coordinate-subspace test disagree at a = {a}")
    return result
