"""Complete simplicial fans whose rays are columns of V.

A fan is stored by its maximal cones, each a sorted tuple of column
indices. Cones are identified at the column level: two equal columns are
two different generators, and a fan may use at most one of them per ray
(otherwise the common-face test fails).
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from . import _linalg
from .errors import LimitExceeded, MalformedFan
from .polyhedra import (
    check_p1_p2,
    cone_is_simplicial_pointed,
    cones_intersect_in_common_face,
    generic_point,
    hyperplane_normal,
    in_cone_interior,
    ray_groups,
)
from .weights import WeightMatrix, WeightLike, as_lift

DEFAULT_LIMIT = 12

Cone = tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    max_cones: tuple[Cone, ...]
    # every column spanning the same ray as a generator in use
    coincident: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    @classmethod
    def build(cls, V: WeightLike, cones) -> "Fan":
        V = WeightMatrix.coerce(V)
        max_cones = tuple(sorted(tuple(sorted(c)) for c in cones))
        groups = ray_groups(V)
        used = sorted({j for c in max_cones for j in c})
        return cls(max_cones, tuple(groups[j] for j in used))

    @property
    def ray_columns(self) -> tuple[int, ...]:
        return tuple(sorted({j for c in self.max_cones for j in c}))

    def labels(self) -> list[list[int]]:
        """Maximal cones with 1-based column labels."""
        return [[j + 1 for j in c] for c in self.max_cones]

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(map(str, c)) + "}" for c in self.labels()) + "}"


@dataclass(frozen=True)
class NonGeneric:
    """The lift sits on a wall; no single fan is induced."""

    reason: str


def _facets(cone: Cone):
    for i in cone:
        yield tuple(j for j in cone if j != i), i


def _facet_normal(V: WeightMatrix, facet: Cone, apex: int):
    n = hyperplane_normal(V, facet)
    if _linalg.dot(n, V.column(apex)) < 0:
        n = tuple(-x for x in n)
    return n


def fan_is_complete(V: WeightLike, fan: Fan, cross_check: bool = False) -> bool:
    """Facet pairing plus connectivity; exact for simplicial full-dimensional cones.

    With ``cross_check`` the answer is compared against point covering of
    every chamber of the hyperplane arrangement spanned by the columns.
    """
    V = WeightMatrix.coerce(V)
    cones = list(fan.max_cones)
    for c in cones:
        if len(c) != V.m or not cone_is_simplicial_pointed(V, c):
            raise MalformedFan(f"cone {[j + 1 for j in c]} is not simplicial of dimension {V.m}")
    for I, J in combinations(cones, 2):
        if not cones_intersect_in_common_face(V, I, J):
            raise MalformedFan(
                f"cones {[j + 1 for j in I]} and {[j + 1 for j in J]} do not meet in a common face"
            )
    if not cones:
        return False
    owners = defaultdict(list)
    for idx, c in enumerate(cones):
        for facet, _ in _facets(c):
            owners[facet].append(idx)
    complete = all(len(v) == 2 for v in owners.values())
    if complete:
        adj = defaultdict(set)
        for pair in owners.values():
            a, b = pair
            adj[a].add(b)
            adj[b].add(a)
        seen = {0}
        todo = deque([0])
        while todo:
            x = todo.popleft()
            for y in adj[x] - seen:
                seen.add(y)
                todo.append(y)
        complete = len(seen) == len(cones)
    if cross_check:
        from .oracle import covers_all_chambers

        if covers_all_chambers(V, cones) != complete:
            raise AssertionError("combinatorial completeness disagrees with point covering")
    return complete


def candidate_cones(V: WeightMatrix) -> list[Cone]:
    return [I for I in combinations(range(V.r), V.m) if cone_is_simplicial_pointed(V, I)]


def enumerate_complete_fans(V: WeightLike, limit: int = DEFAULT_LIMIT) -> list[Fan]:
    """All complete simplicial fans with rays among the columns of V.

    Backtracking: start from the cones containing a fixed generic point,
    then repeatedly close the first unpaired facet with a compatible cone
    on its far side. Each fan is reached along exactly one path.
    """
    V = WeightMatrix.coerce(V)
    if V.r > limit:
        raise LimitExceeded(f"r = {V.r} exceeds limit {limit}")
    check_p1_p2(V)

    cands = candidate_cones(V)
    by_facet = defaultdict(list)
    for c in cands:
        for facet, apex in _facets(c):
            by_facet[facet].append((c, apex))
    normals = {}
    compat_cache: dict[tuple[Cone, Cone], bool] = {}

    def compatible(I, J):
        key = (I, J) if I < J else (J, I)
        if key not in compat_cache:
            compat_cache[key] = cones_intersect_in_common_face(V, *key)
        return compat_cache[key]

    def normal(facet, apex):
        key = (facet, apex)
        if key not in normals:
            normals[key] = _facet_normal(V, facet, apex)
        return normals[key]

    found: list[Fan] = []
    p = generic_point(V)
    starts = [c for c in cands if in_cone_interior(V, c, p)]

    def extend(chosen: list[Cone], count: dict):
        open_facets = sorted(f for f, owners in count.items() if len(owners) == 1)
        if not open_facets:
            found.append(Fan.build(V, chosen))
            return
        facet = open_facets[0]
        owner = count[facet][0]
        apex = next(i for i in owner if i not in facet)
        n = normal(facet, apex)
        for cand, k in by_facet[facet]:
            if cand in chosen or _linalg.dot(n, V.column(k)) >= 0:
                continue
            if not all(compatible(cand, c) for c in chosen):
                continue
            for f, _ in _facets(cand):
                count.setdefault(f, []).append(cand)
            chosen.append(cand)
            extend(chosen, count)
            chosen.pop()
            for f, _ in _facets(cand):
                count[f].remove(cand)
                if not count[f]:
                    del count[f]

    for start in starts:
        count = {f: [start] for f, _ in _facets(start)}
        extend([start], count)
    return sorted(found, key=lambda fan: fan.max_cones)


def fan_from_lift(V: WeightLike, a: Sequence) -> Fan | NonGeneric:
    """The fan of cones I on which the support functional of a is tight.

    I qualifies when f with <f, v_j> = -a_j on I satisfies <f, v_j> > -a_j
    for every other column. Off the walls these cones form a complete fan.
    """
    V = WeightMatrix.coerce(V)
    check_p1_p2(V)
    a = as_lift(a, V.r)
    cones = []
    for I in candidate_cones(V):
        f = _linalg.solve_square([list(V.column(i)) for i in I], [-a[i] for i in I])
        if all(_linalg.dot(f, V.column(j)) > -a[j] for j in range(V.r) if j not in I):
            cones.append(I)
    if not cones:
        return NonGeneric("no cone is strictly supported by this lift")
    fan = Fan.build(V, cones)
    try:
        ok = fan_is_complete(V, fan)
    except MalformedFan as exc:
        return NonGeneric(str(exc))
    if not ok:
        return NonGeneric("strictly supported cones do not cover R^m")
    return fan
