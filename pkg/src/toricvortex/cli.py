"""Command line entry point: validate, chambers, analyze, dims and --verify.

Exit codes: 0 ok, 1 verification mismatch, 2 validation failure,
3 limit exceeded, 4 parse error.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from fractions import Fraction

from . import __version__
from .chambers import ChamberResult, classify_parameter, gkz_chambers
from .corpus import CORPUS, Datum
from .errors import DegreeTooSmall, LimitExceeded, ParseError, RankDeficient
from .fans import DEFAULT_LIMIT
from .lattice import is_primitive_column, kw_character_group
from .moduli import (
    auto_divisor_degrees,
    base_dimension,
    embedding_report,
    expected_dimension,
    invariant_algebra_dimension,
    picard_fiber_components,
)
from .moment import NORM_CONVENTION, in_moment_image, properness_constant
from .polyhedra import positive_span_is_full
from .problem import ProblemFile, canonical_json, parse_problem, problem_to_dict
from .stability import fan_smoothness, hm_destabilizer, support_in_U
from . import verify

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_LIMIT, EXIT_PARSE = 0, 1, 2, 3, 4


class ValidationFailed(Exception):
    def __init__(self, report):
        self.report = report


def labels(cols):
    return [j + 1 for j in cols]


def provenance(raw: bytes) -> dict:
    return {
        "input_sha256": hashlib.sha256(raw).hexdigest(),
        "norm_convention": NORM_CONVENTION,
        "tool": "toricvortex",
        "version": __version__,
    }


def validate_report(p: ProblemFile) -> dict:
    V = p.V
    cols = [{"column": j + 1, "vector": list(c), "primitive": is_primitive_column(c)}
            for j, c in enumerate(V.columns)]
    chars = kw_character_group(V)
    p1 = all(c["primitive"] for c in cols)
    p2 = positive_span_is_full(V)
    return {
        "m": V.m,
        "r": V.r,
        "rank": V.rank,
        "columns": cols,
        "P1": p1,
        "P2": p2,
        "K_w": {
            "free_rank": chars.free_rank,
            "torsion": list(chars.invariant_factors),
            "group": chars.dual_str(),
        },
        "properness_constant": properness_constant(V),
        "valid": p1 and p2 and V.rank == V.m,
    }


def _require_valid(p: ProblemFile):
    rep = validate_report(p)
    if not rep["valid"]:
        raise ValidationFailed(rep)


def smoothness_dict(V, fan) -> dict:
    rep = fan_smoothness(V, fan)
    return {
        "smooth": rep.smooth,
        "per_cone": [
            {"cone": labels(c.cone), "determinant": c.determinant, "stabilizer": c.stabilizer.dual_str(),
             "stabilizer_order": c.stabilizer.order}
            for c in rep.per_cone
        ],
    }


def chambers_report(p: ProblemFile, limit: int) -> dict:
    _require_valid(p)
    V = p.V
    out = []
    for fan, desc in gkz_chambers(V, limit):
        out.append({
            "fan": fan.labels(),
            "inequalities": desc.render(strict=True),
            "functionals": [list(x) for x in desc.strict_inequalities],
            "smoothness": smoothness_dict(V, fan),
        })
    return {"chambers": out, "count": len(out)}


def analyze_report(p: ProblemFile, limit: int) -> dict:
    if p.t_lift is None:
        raise ParseError("required by analyze", field="t_lift")
    _require_valid(p)
    V, a = p.V, p.t_lift
    if V.r > limit:
        raise LimitExceeded(f"r = {V.r} exceeds limit {limit}")
    res = classify_parameter(V, a)
    out = {
        "t_lift": list(a),
        "classification": res.status,
        "moment_image_condition": in_moment_image(V, a),
    }
    if res.status == ChamberResult.REGULAR:
        out["fan"] = res.fan.labels()
        out["smoothness"] = smoothness_dict(V, res.fan)
        table = []
        for S in verify.all_supports(V.r):
            xi = hm_destabilizer(V, a, S)
            table.append({
                "support": labels(S),
                "stable": xi is None,
                "in_U": support_in_U(V, res.fan, S),
                "destabilizer": None if xi is None else list(xi),
            })
        out["supports"] = table
        minimal = [row["support"] for row in table if row["stable"]
                   and not any(set(o["support"]) < set(row["support"]) for o in table if o["stable"])]
        out["minimal_stable_supports"] = minimal
    return out


def dims_report(p: ProblemFile) -> dict:
    if p.degrees is None:
        raise ParseError("required by dims", field="degrees")
    V, g, c = p.V, p.genus, p.degrees
    if p.divisor_degrees is None:
        d, source = auto_divisor_degrees(g, c), "auto"
    else:
        d, source = p.divisor_degrees, "given"
    e = expected_dimension(V, g, c)
    emb = embedding_report(V, g, c, d)
    return {
        "genus": g,
        "degrees": list(c),
        "expected_dimension": e,
        "base_dimension": base_dimension(V, g),
        "picard_components": picard_fiber_components(V, g),
        "divisor_degrees": list(d),
        "divisor_degrees_source": source,
        "embedding": {
            "c_prime": list(emb.c_prime),
            "base_dim": emb.base_dim,
            "fiber_h0": list(emb.fiber_h0),
            "ambient_dim": emb.ambient_dim,
            "obstruction_rank": emb.obstruction_rank,
            "virtual_dim": emb.virtual_dim,
            "consistent": emb.consistent,
        },
        "algebra_degree": 2 * e,
        "algebra_dimension": invariant_algebra_dimension(V, g, 2 * e) if e >= 0 else 0,
    }


# text rendering

def _fmt(x):
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, list):
        return "(" + ", ".join(_fmt(v) for v in x) + ")"
    return str(x)


def render_text(command: str, rep: dict) -> str:
    lines = [f"[{command}]"]
    if command == "validate":
        lines.append(f"V: {rep['m']} x {rep['r']}, rank {rep['rank']}")
        for c in rep["columns"]:
            lines.append(f"  v{c['column']} = {_fmt(c['vector'])}  primitive: {_fmt(c['primitive'])}")
        lines.append(f"P1 (primitive columns): {_fmt(rep['P1'])}")
        lines.append(f"P2 (columns positively span): {_fmt(rep['P2'])}")
        lines.append(f"K_w = {rep['K_w']['group']}")
        lines.append(f"properness constant c = {rep['properness_constant']}")
    elif command == "chambers":
        lines.append(f"{rep['count']} chamber(s)")
        for i, ch in enumerate(rep["chambers"], 1):
            lines.append(f"chamber {i}: fan {_fmt(ch['fan'])}")
            for ineq in ch["inequalities"]:
                lines.append(f"    {ineq}")
            lines += _smooth_lines(ch["smoothness"])
    elif command == "analyze":
        lines.append(f"t lift: {_fmt(rep['t_lift'])}")
        lines.append(f"classification: {rep['classification']}")
        lines.append(f"in moment image: {_fmt(rep['moment_image_condition'])}")
        if "fan" in rep:
            lines.append(f"fan: {_fmt(rep['fan'])}")
            lines += _smooth_lines(rep["smoothness"])
            lines.append("minimal stable supports: " + ", ".join(_fmt(s) for s in rep["minimal_stable_supports"]))
            for row in rep["supports"]:
                mark = "stable" if row["stable"] else "unstable"
                extra = "" if row["destabilizer"] is None else f"  xi = {_fmt(row['destabilizer'])}"
                lines.append(f"    S = {_fmt(row['support'])}: {mark}{extra}")
    elif command == "dims":
        emb = rep["embedding"]
        lines.append(f"genus {rep['genus']}, degrees {_fmt(rep['degrees'])}")
        lines.append(f"expected dimension e = {rep['expected_dimension']}")
        lines.append(f"base dimension = {rep['base_dimension']}")
        lines.append(f"Picard components = {rep['picard_components']}")
        lines.append(f"divisor degrees ({rep['divisor_degrees_source']}) = {_fmt(rep['divisor_degrees'])}")
        lines.append(f"c' = {_fmt(emb['c_prime'])}, h0 = {_fmt(emb['fiber_h0'])}")
        lines.append(f"ambient {emb['ambient_dim']} - obstruction {emb['obstruction_rank']}"
                     f" = virtual {emb['virtual_dim']}; consistent: {_fmt(emb['consistent'])}")
        lines.append(f"invariant algebra dimension in degree {rep['algebra_degree']} = {rep['algebra_dimension']}")
    prov = rep.get("provenance")
    if prov:
        lines.append(f"input sha256 {prov['input_sha256']}, {prov['tool']} {prov['version']}")
        lines.append(f"norm: {prov['norm_convention']}")
    return "\n".join(lines)


def _smooth_lines(sm):
    lines = [f"    smooth: {_fmt(sm['smooth'])}"]
    for c in sm["per_cone"]:
        lines.append(f"    cone {_fmt(c['cone'])}: det {c['determinant']}, stabilizer {c['stabilizer']}")
    return lines


def _add_flags(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="canonical machine-readable output")
    parser.add_argument("--verify", action="store_true", default=default(False),
                        help="run every fast-versus-oracle comparison; exit 1 on mismatch")
    parser.add_argument("--limit", type=int, default=default(DEFAULT_LIMIT), metavar="R",
                        help=f"largest r accepted by enumerations (default {DEFAULT_LIMIT})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricvortex", description=__doc__.splitlines()[0])
    _add_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command")
    helps = {
        "validate": "check primitivity, positive span, K_w and the properness constant",
        "chambers": "list every GKZ chamber with its fan and smoothness",
        "analyze": "classify t_lift and tabulate stable supports",
        "dims": "moduli dimension bookkeeping",
    }
    for name, text in helps.items():
        sp = sub.add_parser(name, help=text)
        sp.add_argument("problem", help="problem file (JSON)")
        _add_flags(sp, suppress=True)
    return parser


def _emit(args, command, rep, out):
    if args.json:
        out.write(canonical_json({"command": command, "report": rep}) + "\n")
    else:
        out.write(render_text(command, rep) + "\n")


def _run_verify(args, extra, out) -> int:
    data = list(CORPUS) + list(extra)
    checks = verify.run_verification(data, limit=args.limit)
    failed = [c for c in checks if not c.ok]
    summary = {
        "checks": len(checks),
        "failed": [{"datum": c.datum, "check": c.name, "detail": c.detail} for c in failed],
        "data": [d.name for d in data],
        "provenance": provenance(canonical_json([[list(r) for r in d.V.rows] for d in data]).encode()),
    }
    if args.json:
        _emit(args, "verify", summary, out)
    else:
        out.write(f"[verify] {len(checks)} checks over {len(data)} data, {len(failed)} failed\n")
        for c in failed:
            out.write(f"  FAIL {c.datum}: {c.name} {c.detail}\n")
    return EXIT_MISMATCH if failed else EXIT_OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.command is None:
        if args.verify:
            return _run_verify(args, [], out)
        build_parser().print_usage(sys.stderr)
        return EXIT_INVALID

    try:
        with open(args.problem, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        sys.stderr.write(f"error: cannot read {args.problem}: {exc.strerror}\n")
        return EXIT_PARSE

    code = EXIT_OK
    try:
        problem = parse_problem(raw.decode("utf-8"))
        if args.command == "validate":
            rep = validate_report(problem)
            code = EXIT_OK if rep["valid"] else EXIT_INVALID
        elif args.command == "chambers":
            rep = chambers_report(problem, args.limit)
        elif args.command == "analyze":
            rep = analyze_report(problem, args.limit)
        else:
            rep = dims_report(problem)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except UnicodeDecodeError:
        sys.stderr.write("parse error: file is not UTF-8\n")
        return EXIT_PARSE
    except ValidationFailed as exc:
        rep, code = exc.report, EXIT_INVALID
        sys.stderr.write("validation failed; see report\n")
        args.command_shown = "validate"
    except LimitExceeded as exc:
        sys.stderr.write(f"limit exceeded: {exc}\n")
        return EXIT_LIMIT
    except (DegreeTooSmall, RankDeficient) as exc:
        sys.stderr.write(f"validation failed: {exc}\n")
        return EXIT_INVALID

    rep["problem"] = problem_to_dict(problem)
    rep["provenance"] = provenance(raw)
    _emit(args, getattr(args, "command_shown", args.command), rep, out)

    if args.verify and code == EXIT_OK:
        extra = []
        V = problem.V
        if V.m <= 3 and V.r <= 8:
            lifts = () if problem.t_lift is None else (problem.t_lift,)
            extra.append(Datum("input", V, args.problem, lifts))
        code = _run_verify(args, extra, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
