"""Small weight matrices with known answers, shared by tests and --verify."""

from __future__ import annotations

from dataclasses import dataclass

from .weights import WeightMatrix


@dataclass(frozen=True)
class Datum:
    name: str
    V: WeightMatrix
    note: str
    lifts: tuple[tuple[int, ...], ...] = ()


def _d(name, rows, note, lifts=()):
    return Datum(name, WeightMatrix(tuple(map(tuple, rows))), note, tuple(map(tuple, lifts)))


P1 = _d("P1", [[1, -1]], "projective line", [(1, 0), (0, 1), (2, 3)])
F1 = _d(
    "F1",
    [[1, 0, -1, 0], [0, 1, 1, -1]],
    "Hirzebruch surface F1; its chamber structure has two fans",
    [(1, 1, 1, 1), (1, 5, 1, 1), (3, 1, 0, 2)],
)
P112 = _d("P112", [[1, 0, -1], [0, 1, -2]], "weighted projective plane P(1,1,2)", [(1, 1, 1)])
Z2 = _d(
    "Z2",
    [[1, 1, -1, -1], [1, -1, 1, -1]],
    "columns (+-1, +-1); K_w has two components",
    [(1, 1, 1, 1), (2, 0, 1, 1)],
)
P2 = _d("P2", [[1, 0, -1], [0, 1, -1]], "projective plane", [(1, 1, 1)])
F2 = _d("F2", [[1, 0, -1, 0], [0, 1, 2, -1]], "Hirzebruch surface F2", [(1, 1, 1, 1), (1, 5, 1, 1)])

CORPUS: tuple[Datum, ...] = (P1, F1, P112, Z2, P2, F2)


def by_name(name: str) -> Datum:
    for d in CORPUS:
        if d.name == name:
            return d
    raise KeyError(name)
