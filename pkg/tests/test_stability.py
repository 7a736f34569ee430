import random

from toricvortex._linalg import int_det
from toricvortex.chambers import ChamberResult, classify_parameter
from toricvortex.fans import Fan, enumerate_complete_fans
from toricvortex.oracle import oracle_destabilizer, oracle_stabilizer_order
from toricvortex.stability import (
    fan_smoothness,
    hm_destabilizer,
    required_support,
    stabilizer_group,
    support_in_U,
)
from toricvortex.verify import all_supports

from helpers import random_lift, random_weight_matrix

P1 = [[1, -1]]
F1 = [[1, 0, -1, 0], [0, 1, 1, -1]]
P112 = [[1, 0, -1], [0, 1, -2]]
F1_FAN = Fan.build(F1, [(0, 1), (0, 3), (1, 2), (2, 3)])
P2_FAN = Fan.build(F1, [(0, 2), (0, 3), (2, 3)])
P112_FAN = Fan.build(P112, [(0, 1), (0, 2), (1, 2)])


def test_required_support_examples():
    assert required_support(F1, F1_FAN, (0, 1)) == {2, 3}
    assert required_support(P1, Fan.build(P1, [(0,), (1,)]), (0,)) == {1}
    assert required_support(P112, P112_FAN, (0, 2)) == {1}


def test_support_in_U_examples():
    assert support_in_U(F1, F1_FAN, {2, 3})
    assert not support_in_U(F1, F1_FAN, {0, 2})
    assert support_in_U(F1, F1_FAN, range(4))


def test_destabilizer_examples():
    xi = hm_destabilizer(F1, (1, 1, 1, 1), {0, 2})
    assert xi is not None and any(xi)
    assert hm_destabilizer(F1, (1, 1, 1, 1), {2, 3}) is None
    assert hm_destabilizer(F1, (1, 1, 1, 1), range(4)) is None


def test_destabilizer_is_valid_witness():
    a = (1, 1, 1, 1)
    for S in all_supports(4):
        xi = hm_destabilizer(F1, a, S)
        if xi is None:
            continue
        assert any(xi)
        assert all(sum(v * x for v, x in zip(row, xi)) == 0 for row in F1)
        assert sum(x * y for x, y in zip(a, xi)) >= 0
        assert all(xi[j] <= 0 for j in S)


def test_stabilizer_examples():
    assert stabilizer_group(P112, {1}).invariant_factors == (2,)
    assert stabilizer_group(P112, {2}).is_trivial
    g = stabilizer_group(P112, set())
    assert (g.free_rank, g.invariant_factors) == (1, ())
    z2 = stabilizer_group([[1, 1, -1, -1], [1, -1, 1, -1]], set())
    assert (z2.free_rank, z2.invariant_factors) == (2, (2,))


def test_smoothness_examples():
    rep = fan_smoothness(F1, F1_FAN)
    assert [abs(c.determinant) for c in rep.per_cone] == [1, 1, 1, 1] and rep.smooth
    rep = fan_smoothness(F1, P2_FAN)
    assert [abs(c.determinant) for c in rep.per_cone] == [1, 1, 1] and rep.smooth
    rep = fan_smoothness(P112, P112_FAN)
    assert [abs(c.determinant) for c in rep.per_cone] == [1, 2, 1]
    assert rep.per_cone[1].cone == (0, 2) and rep.per_cone[1].stabilizer.order == 2
    assert not rep.smooth


def test_equivalence_and_oracle_on_random_instances():
    rng = random.Random(31)
    done = 0
    while done < 25:
        m = rng.randint(1, 2)
        V = random_weight_matrix(rng, m, rng.randint(m + 1, 5))
        a = random_lift(rng, V.r)
        res = classify_parameter(V, a)
        if res.status != ChamberResult.REGULAR:
            continue
        done += 1
        for S in all_supports(V.r):
            fast = hm_destabilizer(V, a, S)
            assert (fast is None) == (oracle_destabilizer(V, a, S) is None) == support_in_U(V, res.fan, S)


def test_monotonicity_and_stabilizer_divisibility():
    rng = random.Random(8)
    for _ in range(15):
        V = random_weight_matrix(rng, 2, rng.randint(3, 5))
        fan = enumerate_complete_fans(V)[0]
        supports = [frozenset(S) for S in all_supports(V.r)]
        for S in supports:
            for T in supports:
                if S <= T:
                    assert support_in_U(V, fan, T) or not support_in_U(V, fan, S)
                    gS, gT = stabilizer_group(V, S), stabilizer_group(V, T)
                    if gS.is_finite:
                        assert gT.is_finite and gS.order % gT.order == 0


def test_stabilizer_orders_against_lattice_count():
    rng = random.Random(12)
    for _ in range(20):
        V = random_weight_matrix(rng, 2, rng.randint(3, 5))
        for fan in enumerate_complete_fans(V):
            for I in fan.max_cones:
                S = required_support(V, fan, I)
                g = stabilizer_group(V, S)
                assert g.is_finite
                assert g.order == oracle_stabilizer_order(V, S)
                assert g.order == abs(int_det(V.submatrix(I)))
