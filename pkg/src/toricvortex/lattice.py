"""Exact integer linear algebra: Smith normal form and cokernels.

The group K_w is Hom(coker(V^T), S^1), so its component group and every
stabilizer subgroup are read off the Smith normal form of a transpose
(or of a row-restricted transpose) of V.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence

from ._linalg import identity, rank
from .errors import RankDeficient
from .weights import WeightMatrix, WeightLike

IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SNFDecomposition:
    """U * M * W = D with U, W unimodular and d_1 | d_2 | ... on the diagonal."""

    U: IntMatrix
    D: IntMatrix
    W: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)))


@dataclass(frozen=True)
class FinAbelianGroup:
    """Z^free_rank + Z/d_1 + ... + Z/d_k with d_i > 1 and d_i | d_{i+1}."""

    free_rank: int
    invariant_factors: tuple[int, ...] = ()

    @property
    def torsion_order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        return self.torsion_order if self.is_finite else None

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"

    def dual_str(self) -> str:
        """Pontryagin dual Hom(G, S^1), written as a torus times finite factors."""
        parts = []
        if self.free_rank:
            parts.append("S^1" if self.free_rank == 1 else f"(S^1)^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " x ".join(parts) if parts else "1"


def _swap_rows(A, i, j):
    A[i], A[j] = A[j], A[i]


def _swap_cols(A, i, j):
    for row in A:
        row[i], row[j] = row[j], row[i]


def _add_row(A, dst, src, k):
    if k:
        A[dst] = [x + k * y for x, y in zip(A[dst], A[src])]


def _add_col(A, dst, src, k):
    if k:
        for row in A:
            row[dst] += k * row[src]


def smith_normal_form(M: Sequence[Sequence[int]]) -> SNFDecomposition:
    """Smith normal form by elementary operations.

    Pivots are chosen by minimal absolute value in the remaining block,
    ties broken by smallest row index and then smallest column index.
    """
    A = [[int(x) for x in row] for row in M]
    p = len(A)
    q = len(A[0]) if p else 0
    U = identity(p)
    W = identity(q)

    for t in range(min(p, q)):
        best = None
        for i in range(t, p):
            for j in range(t, q):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        _swap_rows(A, t, best[0]); _swap_rows(U, t, best[0])
        _swap_cols(A, t, best[1]); _swap_cols(W, t, best[1])

        while True:
            for i in range(t + 1, p):
                k = A[i][t] // A[t][t]
                _add_row(A, i, t, -k); _add_row(U, i, t, -k)
            for j in range(t + 1, q):
                k = A[t][j] // A[t][t]
                _add_col(A, j, t, -k); _add_col(W, j, t, -k)

            # a nonzero remainder in row/column t is smaller than the pivot
            rest = [(abs(A[i][t]), 0, i) for i in range(t + 1, p) if A[i][t]]
            rest += [(abs(A[t][j]), 1, j) for j in range(t + 1, q) if A[t][j]]
            if rest:
                _, kind, idx = min(rest)
                if kind == 0:
                    _swap_rows(A, t, idx); _swap_rows(U, t, idx)
                else:
                    _swap_cols(A, t, idx); _swap_cols(W, t, idx)
                continue

            bad = next(
                (i for i in range(t + 1, p) for j in range(t + 1, q) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            _add_row(A, t, bad, 1); _add_row(U, t, bad, 1)

        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

    freeze = lambda X: tuple(tuple(row) for row in X)
    return SNFDecomposition(freeze(U), freeze(A), freeze(W))


def is_primitive_column(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g == 1


def cokernel_group(M: Sequence[Sequence[int]]) -> FinAbelianGroup:
    """coker(M : Z^cols -> Z^rows) as an abstract abelian group."""
    rows = len(M)
    diag = [d for d in smith_normal_form(M).diagonal if d]
    return FinAbelianGroup(rows - len(diag), tuple(d for d in diag if d > 1))


def transpose_int(V: WeightMatrix) -> list[list[int]]:
    return [list(col) for col in V.columns]


def kw_character_group(V: WeightLike) -> FinAbelianGroup:
    """coker(V^T) = Hom(K_w, S^1); K_w itself is its dual."""
    V = WeightMatrix.coerce(V)
    return cokernel_group(transpose_int(V))


def component_group_order(V: WeightLike) -> int:
    """|pi_0(K_w)| = |Tors coker(V^T)|."""
    V = WeightMatrix.coerce(V)
    if V.rank < V.m:
        raise RankDeficient(f"rank {V.rank} < m = {V.m}")
    return kw_character_group(V).torsion_order


def integer_rank(M: Sequence[Sequence[int]]) -> int:
    return rank(M)
