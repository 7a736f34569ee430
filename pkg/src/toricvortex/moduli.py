"""Dimension and counting bookkeeping for vortex moduli spaces.

Riemann-Roch gives chi(L) = deg L + 1 - g on a genus g surface, and
h^1(L) = 0 once deg L > 2g - 2. Both are used as standard facts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import DegreeTooSmall, RankDeficient
from .lattice import component_group_order
from .weights import WeightMatrix, WeightLike


@dataclass(frozen=True)
class ModuliProblem:
    genus: int
    degrees: tuple[int, ...]
    divisor_degrees: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.divisor_degrees is not None:
            if len(self.divisor_degrees) != len(self.degrees):
                raise ValueError("degrees and divisor_degrees differ in length")
            if any(d < 0 for d in self.divisor_degrees):
                raise ValueError("divisor degrees must be nonnegative")


@dataclass(frozen=True)
class EmbeddingReport:
    c_prime: tuple[int, ...]
    base_dim: int
    fiber_h0: tuple[int, ...]
    ambient_dim: int
    obstruction_rank: int
    virtual_dim: int
    consistent: bool


def _check_rank(V: WeightMatrix):
    if V.rank < V.m:
        raise RankDeficient(f"rank {V.rank} < m = {V.m}")


def _check_length(V: WeightMatrix, vec, name):
    if len(vec) != V.r:
        raise ValueError(f"{name} has length {len(vec)}, expected {V.r}")


def expected_dimension(V: WeightLike, g: int, c: Sequence[int]) -> int:
    """e = sum_j chi(L_j) - (r - m) chi(O_Y)."""
    V = WeightMatrix.coerce(V)
    _check_rank(V)
    _check_length(V, c, "degrees")
    h = V.r - V.m
    return sum(cj + 1 - g for cj in c) - h * (1 - g)


def picard_fiber_components(V: WeightLike, g: int) -> int:
    """Number of components of the Picard torsor: |pi_0(K_w)|^(2g)."""
    return component_group_order(V) ** (2 * g)


def base_dimension(V: WeightLike, g: int) -> int:
    V = WeightMatrix.coerce(V)
    return g * (V.r - V.m)


def auto_divisor_degrees(g: int, c: Sequence[int]) -> tuple[int, ...]:
    """Smallest d >= 0 with c_j + d_j > 2g - 2 for every j."""
    return tuple(max(0, 2 * g - 1 - cj) for cj in c)


def embedding_report(V: WeightLike, g: int, c: Sequence[int], d: Sequence[int]) -> EmbeddingReport:
    V = WeightMatrix.coerce(V)
    _check_length(V, c, "degrees")
    _check_length(V, d, "divisor_degrees")
    c_prime = tuple(cj + dj for cj, dj in zip(c, d))
    low = [j for j, x in enumerate(c_prime) if x <= 2 * g - 2]
    if low:
        raise DegreeTooSmall(low, g)
    h = V.r - V.m
    base = g * h
    fiber = tuple(x + 1 - g for x in c_prime)
    # fibres of the projective bundle over the base: sum h0 - (r - m)
    ambient = base + sum(fiber) - h
    obstruction = sum(d)
    virtual = ambient - obstruction
    return EmbeddingReport(
        c_prime=c_prime,
        base_dim=base,
        fiber_h0=fiber,
        ambient_dim=ambient,
        obstruction_rank=obstruction,
        virtual_dim=virtual,
        consistent=virtual == expected_dimension(V, g, c),
    )


def algebra_dimension(h: int, g: int, n: int) -> int:
    """Coefficient of q^n in (1 + q)^(2gh) / (1 - q^2)^h."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    total = 0
    for k in range(n // 2 + 1):
        # k symmetric degree-2 generators, n - 2k exterior degree-1 ones
        sym = comb(h + k - 1, k) if h else int(k == 0)
        total += comb(2 * g * h, n - 2 * k) * sym
    return total


def invariant_algebra_dimension(V: WeightLike, g: int, n: int) -> int:
    """Rational dimension of the degree-n part of S*(H) (x) Lambda*(H (x) H_1(Y))."""
    V = WeightMatrix.coerce(V)
    return algebra_dimension(V.r - V.m, g, n)
