"""Acceptance criteria 1-8, each reported as one PASS/FAIL line.

Run with pytest (lines appear in the terminal summary) or directly:
    python3 tests/test_acceptance.py
"""

import io
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from toricvortex import cli, verify
from toricvortex.chambers import ChamberResult, classify_parameter, gkz_chambers
from toricvortex.corpus import CORPUS, F1, P1, P112, Z2
from toricvortex.fans import enumerate_complete_fans
from toricvortex.lattice import component_group_order, kw_character_group
from toricvortex.moduli import (
    algebra_dimension,
    auto_divisor_degrees,
    embedding_report,
    expected_dimension,
    picard_fiber_components,
)
from toricvortex.moment import properness_constant
from toricvortex.oracle import oracle_algebra_dimension, oracle_properness
from toricvortex.polyhedra import nonneg_solve, positive_span_is_full
from toricvortex.stability import fan_smoothness, hm_destabilizer, support_in_U

from helpers import random_matrix, random_weight_matrix

RESULTS = {}


def record(n, ok, elapsed, limit, detail):
    ok = bool(ok) and (limit is None or elapsed < limit)
    bound = "" if limit is None else f" (limit {limit:g}s)"
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail} [{elapsed:.2f}s{bound}]"
    RESULTS[n] = line
    print(line)
    return ok


def implied(rows, xi):
    cols = [list(c) for c in zip(*rows)]
    return nonneg_solve(cols, xi) is not None


def same_open_cone(A, B):
    return all(implied(B, x) for x in A) and all(implied(A, x) for x in B)


def test_criterion_1_projective_line():
    t = time.perf_counter()
    V = P1.V
    chambers = gkz_chambers(V)
    chars = kw_character_group(V)
    checks = [
        len(chambers) == 1 and chambers[0][1].strict_inequalities == ((1, 1),),
        all(fan_smoothness(V, f).smooth for f, _ in chambers),
        (chars.free_rank, chars.invariant_factors) == (1, ()),
        properness_constant(V) == Fraction(1, 8),
        all(expected_dimension(V, 0, (d, d)) == 2 * d + 1 for d in range(6)),
    ]
    assert record(1, all(checks), time.perf_counter() - t, 1.0,
                  f"P1 chamber/smooth/K_w/c=1/8/e=2d+1 checks {checks}")


def test_criterion_2_hirzebruch():
    t = time.perf_counter()
    V = F1.V
    fans = enumerate_complete_fans(V)
    chambers = gkz_chambers(V)
    s, u = (1, -1, 1, 0), (0, 1, 0, 1)
    neg_s, s_plus_u = (-1, 1, -1, 0), (1, 0, 1, 1)
    expected = {
        ((0, 1), (0, 3), (1, 2), (2, 3)): [s, u],
        ((0, 2), (0, 3), (2, 3)): [neg_s, u, s_plus_u],
    }
    chamber_ok = len(chambers) == 2 and all(
        fan.max_cones in expected
        and same_open_cone(desc.strict_inequalities, expected[fan.max_cones])
        and set(desc.strict_inequalities) <= set(expected[fan.max_cones])
        for fan, desc in chambers
    )
    cls = [classify_parameter(V, a) for a in [(1, 1, 1, 1), (1, 5, 1, 1), (1, 2, 1, 1)]]
    checks = [
        len(fans) == 2,
        chamber_ok,
        all(fan_smoothness(V, f).smooth for f, _ in chambers),
        cls[0].status == "regular" and cls[0].fan.max_cones == ((0, 1), (0, 3), (1, 2), (2, 3)),
        cls[1].status == "regular" and cls[1].fan.max_cones == ((0, 2), (0, 3), (2, 3)),
        cls[2].status == "critical",
    ]
    assert record(2, all(checks), time.perf_counter() - t, 1.0,
                  f"F1 2 fans, chambers {{s>0,u>0}} and {{s<0,u>0,s+u>0}}, smooth, classifications {checks}")


def test_criterion_3_weighted_plane():
    t = time.perf_counter()
    V = P112.V
    fans = enumerate_complete_fans(V)
    rep = fan_smoothness(V, fans[0])
    dets = sorted(abs(c.determinant) for c in rep.per_cone)
    stabs = {abs(c.determinant): c.stabilizer for c in rep.per_cone}
    checks = [
        len(fans) == 1,
        dets == [1, 1, 2],
        stabs[2].invariant_factors == (2,) and stabs[2].free_rank == 0,
        stabs[1].is_trivial,
        not rep.smooth,
    ]
    assert record(3, all(checks), time.perf_counter() - t, 1.0,
                  f"P(1,1,2) one fan, dets {dets}, Z/2 stabilizer, not smooth {checks}")


def _sweep(V, a, fan):
    bad = 0
    for S in verify.all_supports(V.r):
        if (hm_destabilizer(V, a, S) is None) != support_in_U(V, fan, S):
            bad += 1
    return bad


def test_criterion_4_stability_equivalence():
    t = time.perf_counter()
    mismatches = sweeps = 0
    for datum in CORPUS:
        lifts = list(datum.lifts) + verify.chamber_interior_points(gkz_chambers(datum.V))
        for a in lifts:
            res = classify_parameter(datum.V, a)
            if res.status == ChamberResult.REGULAR:
                sweeps += 1
                mismatches += _sweep(datum.V, a, res.fan)
    rng = random.Random(20240601)
    random_done = 0
    while random_done < 200:
        m = rng.randint(1, 2)
        V = random_weight_matrix(rng, m, rng.randint(m + 1, 6))
        a = tuple(Fraction(rng.randint(0, 40), rng.randint(1, 7)) for _ in range(V.r))
        res = classify_parameter(V, a)
        if res.status != ChamberResult.REGULAR:
            continue
        random_done += 1
        mismatches += _sweep(V, a, res.fan)
    assert record(4, mismatches == 0 and sweeps > 0, time.perf_counter() - t, 60.0,
                  f"{sweeps} corpus sweeps + {random_done} random sweeps over all supports, {mismatches} mismatches")


def test_criterion_5_virtual_dimension():
    t = time.perf_counter()
    rng = random.Random(5)
    bad = 0
    for i in range(1000):
        V = CORPUS[i % len(CORPUS)].V
        g = rng.randint(0, 3)
        c = [rng.randint(-3, 6) for _ in range(V.r)]
        d = [x + rng.randint(0, 3) for x in auto_divisor_degrees(g, c)]
        if embedding_report(V, g, c, d).virtual_dim != expected_dimension(V, g, c):
            bad += 1
    assert record(5, bad == 0, time.perf_counter() - t, 5.0,
                  f"1000 random (g, c, d) instances, {bad} with virtual dim != e")


def test_criterion_6_properness_link():
    t = time.perf_counter()
    rng = random.Random(606)
    mats = [d.V for d in CORPUS]
    while len(mats) < len(CORPUS) + 100:
        m = rng.randint(1, 2)
        V = random_matrix(rng, m, rng.randint(m, 6))
        if V.rank == m:
            mats.append(V)
    link_bad = bracket_bad = 0
    for V in mats:
        c = properness_constant(V)
        if (c > 0) != positive_span_is_full(V):
            link_bad += 1
        lo, hi = oracle_properness(V, 8 if V.r <= 4 else 5)
        if not lo <= c <= hi:
            bracket_bad += 1
    assert record(6, link_bad == bracket_bad == 0, time.perf_counter() - t, 60.0,
                  f"{len(mats)} matrices, {link_bad} link failures, {bracket_bad} bracket failures")


def test_criterion_7_torsion_and_algebra():
    t = time.perf_counter()
    V = Z2.V
    enum_ok = all(
        algebra_dimension(h, g, n) == oracle_algebra_dimension(h, g, n)
        for h in range(4) for g in range(3) for n in range(13)
    )
    checks = [
        component_group_order(V) == 2,
        picard_fiber_components(V, 1) == 4,
        [algebra_dimension(1, 0, 4), algebra_dimension(1, 1, 1), algebra_dimension(2, 1, 2)] == [1, 2, 8],
        enum_ok,
    ]
    assert record(7, all(checks), time.perf_counter() - t, 1.0,
                  f"|pi_0| = 2, 4 Picard components, algebra dims 1, 2, 8, enumeration n <= 12 {checks}")


def _off_by_one(chambers_fn):
    def mutated(V, limit=12):
        out = chambers_fn(V, limit)
        if not out:
            return out
        fan, desc = out[0]
        xi = list(desc.strict_inequalities[0])
        xi[0] += 1
        ineqs = (tuple(xi),) + desc.strict_inequalities[1:]
        return [(fan, type(desc)(fan, ineqs, ineqs))] + out[1:]
    return mutated


def test_criterion_8_verify(monkeypatch):
    t = time.perf_counter()
    clean = cli.main(["--verify"], io.StringIO())
    monkeypatch.setattr(verify, "gkz_chambers", _off_by_one(gkz_chambers))
    mutated = cli.main(["--verify"], io.StringIO())
    assert record(8, clean == 0 and mutated != 0, time.perf_counter() - t, None,
                  f"--verify exit {clean} on the corpus, exit {mutated} with an off-by-one chamber coefficient")


if __name__ == "__main__":
    import pytest

    sys.exit(pytest.main([__file__, "-q", "-s"]))
