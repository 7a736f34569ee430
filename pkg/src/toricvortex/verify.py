"""Fast-versus-oracle comparisons over a set of weight matrices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations, product
from typing import Callable, Iterable

from .chambers import classify_parameter, gkz_chambers
from .corpus import CORPUS, Datum
from .fans import DEFAULT_LIMIT, Fan, enumerate_complete_fans, fan_from_lift, fan_is_complete
from .lattice import component_group_order
from .moduli import algebra_dimension
from .moment import in_moment_image, properness_constant
from .oracle import (
    oracle_algebra_dimension,
    oracle_component_order,
    oracle_destabilizer,
    oracle_fans,
    oracle_moment_image,
    oracle_properness,
    oracle_stabilizer_order,
)
from .polyhedra import free_solve_positive
from .stability import hm_destabilizer, required_support, stabilizer_group, support_in_U


@dataclass(frozen=True)
class Check:
    datum: str
    name: str
    ok: bool
    detail: str = ""


def all_supports(r: int):
    return chain.from_iterable(combinations(range(r), k) for k in range(r + 1))


def chamber_interior_points(chambers) -> list[tuple]:
    """One integral lift strictly inside each listed chamber."""
    pts = []
    for _, desc in chambers:
        y = free_solve_positive([list(x) for x in desc.strict_inequalities])
        if y is not None:
            den = 1
            for t in y:
                den = den * t.denominator
            pts.append(tuple(int(t * den) for t in y))
    return pts


def verify_datum(datum: Datum, chambers_fn: Callable = gkz_chambers, limit: int = DEFAULT_LIMIT) -> list[Check]:
    V = datum.V
    out = []

    def check(name, ok, detail=""):
        out.append(Check(datum.name, name, bool(ok), detail))

    fans = enumerate_complete_fans(V, limit)
    slow = oracle_fans(V) if V.m <= 3 else None
    if slow is not None:
        check("fans", [f.max_cones for f in fans] == [f.max_cones for f in slow],
              f"{len(fans)} fast vs {len(slow)} oracle")
    for fan in fans:
        check(f"complete {fan}", fan_is_complete(V, fan, cross_check=True))

    chambers = chambers_fn(V, limit)
    for fan, desc in chambers:
        for xi in desc.strict_inequalities:
            check(f"lift-invariant {list(xi)}", not any(V.apply(xi)))

    lifts = list(datum.lifts) + chamber_interior_points(chambers)
    samples = list(product(range(-1, 3), repeat=V.r)) if V.r <= 4 else list(product(range(2), repeat=V.r))
    for a in lifts + samples:
        img = in_moment_image(V, a)
        check(f"moment image {a}", img == oracle_moment_image(V, a))
        induced = fan_from_lift(V, a) if img else None
        inside = [f for f, desc in chambers if desc.contains(a, strict=True)]
        if isinstance(induced, Fan):
            ok = [f.max_cones for f in inside] == [induced.max_cones]
        else:
            ok = not inside
        check(f"chamber of {a}", ok, f"induced {induced}, listed {[str(f) for f in inside]}")
        if img:
            try:
                classify_parameter(V, a, cross_check=True)
                agree = True
            except AssertionError:
                agree = False
            check(f"critical cross-check {a}", agree)

    for a in lifts:
        res = classify_parameter(V, a)
        if res.status != "regular":
            continue
        for S in all_supports(V.r):
            fast = hm_destabilizer(V, a, S) is None
            slow_ok = oracle_destabilizer(V, a, S) is None
            check(f"stability {a} S={[j + 1 for j in S]}", fast == slow_ok == support_in_U(V, res.fan, S))

    for fan in fans:
        for I in fan.max_cones:
            S = required_support(V, fan, I)
            check(f"stabilizer {[j + 1 for j in I]}",
                  stabilizer_group(V, S).order == oracle_stabilizer_order(V, S))

    c = properness_constant(V)
    lo, hi = oracle_properness(V, 8 if V.r <= 4 else 5)
    check("properness bracket", lo <= c <= hi, f"{lo} <= {c} <= {hi}")

    if V.rank == V.m:
        g_minor, g_index = oracle_component_order(V)
        check("component order", component_group_order(V) == g_minor == g_index)

    h = V.r - V.m
    check("algebra dimensions", all(
        algebra_dimension(h, g, n) == oracle_algebra_dimension(h, g, n)
        for g in range(3) for n in range(13)
    ))
    return out


def run_verification(data: Iterable[Datum] = CORPUS, chambers_fn: Callable = None,
                     limit: int = DEFAULT_LIMIT) -> list[Check]:
    # the module-level name is resolved per call, so tests can patch it
    fn = chambers_fn or gkz_chambers
    results = []
    for datum in data:
        results.extend(verify_datum(datum, fn, limit))
    return results
