"""Problem files and canonical JSON.

A problem file is a JSON object:

    {"V": [[1, -1]], "genus": 1, "degrees": [2, 2],
     "divisor_degrees": [1, 1], "t_lift": ["1", "-1/2"]}

Only V is required. Rationals are written as strings so no float ever
enters the computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .weights import WeightMatrix

FIELDS = ("V", "genus", "degrees", "divisor_degrees", "t_lift")


@dataclass(frozen=True)
class ProblemFile:
    V: WeightMatrix
    genus: int = 0
    degrees: tuple[int, ...] | None = None
    divisor_degrees: tuple[int, ...] | None = None
    t_lift: tuple[Fraction, ...] | None = None


def _int(x, field):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"expected an integer, got {json.dumps(x)}", field=field)
    return x


def _int_vector(x, field, r):
    if not isinstance(x, list):
        raise ParseError("expected a list of integers", field=field)
    vec = tuple(_int(v, field) for v in x)
    if len(vec) != r:
        raise ParseError(f"has length {len(vec)}, expected r = {r}", field=field)
    return vec


def _rational(x, field):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"rationals must be integers or \"p/q\" strings, got {json.dumps(x)}", field=field)
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            pass
        raise ParseError(f"cannot read {json.dumps(x)} as a rational", field=field)
    raise ParseError(f"unexpected value {json.dumps(x)}", field=field)


def _key_line(text: str, field: str) -> int | None:
    needle = json.dumps(field)
    for lineno, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return lineno
    return None


def parse_problem(text: str) -> ProblemFile:
    try:
        return _parse(text)
    except ParseError as exc:
        if exc.field is not None and exc.line is None:
            raise ParseError(exc.message, field=exc.field, line=_key_line(text, exc.field)) from None
        raise


def _parse(text: str) -> ProblemFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    extra = sorted(set(obj) - set(FIELDS))
    if extra:
        raise ParseError("unknown field", field=extra[0])
    if "V" not in obj:
        raise ParseError("missing", field="V")
    rows = obj["V"]
    if not isinstance(rows, list) or not rows or not all(isinstance(row, list) for row in rows):
        raise ParseError("expected a nonempty list of rows", field="V")
    rows = [[_int(x, "V") for x in row] for row in rows]
    try:
        V = WeightMatrix(tuple(map(tuple, rows)))
    except ValueError as exc:
        raise ParseError(str(exc), field="V") from None

    genus = _int(obj.get("genus", 0), "genus")
    if genus < 0:
        raise ParseError("must be nonnegative", field="genus")
    degrees = divisor = lift = None
    if obj.get("degrees") is not None:
        degrees = _int_vector(obj["degrees"], "degrees", V.r)
    if obj.get("divisor_degrees") is not None:
        divisor = _int_vector(obj["divisor_degrees"], "divisor_degrees", V.r)
        if any(d < 0 for d in divisor):
            raise ParseError("entries must be nonnegative", field="divisor_degrees")
    if obj.get("t_lift") is not None:
        if not isinstance(obj["t_lift"], list) or len(obj["t_lift"]) != V.r:
            raise ParseError(f"expected a list of {V.r} rationals", field="t_lift")
        lift = tuple(_rational(x, "t_lift") for x in obj["t_lift"])
    return ProblemFile(V, genus, degrees, divisor, lift)


def problem_to_dict(p: ProblemFile) -> dict:
    out = {"V": [list(row) for row in p.V.rows], "genus": p.genus}
    if p.degrees is not None:
        out["degrees"] = list(p.degrees)
    if p.divisor_degrees is not None:
        out["divisor_degrees"] = list(p.divisor_degrees)
    if p.t_lift is not None:
        out["t_lift"] = [str(x) for x in p.t_lift]
    return out


def _plain(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def canonical_json(obj) -> str:
    """Sorted keys, no whitespace, fractions as reduced "p/q" strings."""
    return json.dumps(_plain(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=False)
