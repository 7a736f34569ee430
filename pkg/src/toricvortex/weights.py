"""The weight matrix V and parameter lifts a."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence, Union

from . import _linalg


@dataclass(frozen=True)
class WeightMatrix:
    """An m x r integer matrix; its columns v_1..v_r live in Z^m.

    Columns are addressed with 0-based indices throughout the library.
    Reports print them 1-based.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        if not rows or not rows[0]:
            raise ValueError("weight matrix must have at least one row and column")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValueError("weight matrix rows have different lengths")
            for x in row:
                if isinstance(x, bool) or int(x) != x:
                    raise ValueError(f"non-integer entry {x!r}")
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def coerce(cls, obj: "WeightLike") -> "WeightMatrix":
        if isinstance(obj, cls):
            return obj
        return cls(tuple(tuple(row) for row in obj))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def r(self) -> int:
        return len(self.rows[0])

    @cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows))

    def column(self, j: int) -> tuple[int, ...]:
        return self.columns[j]

    def submatrix(self, cols: Sequence[int]) -> list[list[int]]:
        """The m x |cols| matrix of the selected columns."""
        return [[row[j] for j in cols] for row in self.rows]

    @cached_property
    def rank(self) -> int:
        return _linalg.rank(self.rows)

    @cached_property
    def kernel_basis(self) -> tuple[tuple[Fraction, ...], ...]:
        """Rational basis of ker v in R^r (the Lie algebra of K_w up to i)."""
        return tuple(tuple(v) for v in _linalg.nullspace(self.rows, self.r))

    def transpose_apply(self, f: Sequence) -> tuple[Fraction, ...]:
        """v*(f) = V^T f, the shift by which equivalent lifts differ."""
        return tuple(sum(Fraction(fi) * col[i] for i, fi in enumerate(f)) for col in self.columns)

    def apply(self, x: Sequence) -> tuple[Fraction, ...]:
        return tuple(sum(Fraction(xj) * aij for xj, aij in zip(x, row)) for row in self.rows)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(map(str, row)) + "]" for row in self.rows) + "]"


WeightLike = Union[WeightMatrix, Sequence[Sequence[int]]]


def as_lift(a: Sequence, r: int | None = None) -> tuple[Fraction, ...]:
    """Exact parameter lift; strings like "3/2" are accepted."""
    lift = tuple(Fraction(x) for x in a)
    if r is not None and len(lift) != r:
        raise ValueError(f"lift has length {len(lift)}, expected {r}")
    return lift
