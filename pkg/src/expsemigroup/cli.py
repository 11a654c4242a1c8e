"""Command-line interface.

Exit codes: 0 success, 1 parse or input error, 2 state budget exhausted,
3 verification failure (a construction or fixture did not round-trip).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import bounds
from .constructions import family_2x2, match_2x2_family, represent
from .exponents import StateBudget, exponent_semigroup
from .fixtures import load_all
from .interchange import (
    ParseError,
    analysis_to_json,
    bounds_to_json,
    generators_from_json,
    matrix_from_json,
    matrix_to_json,
    semigroup_human,
    semigroup_to_json,
    tfae_to_json,
)
from .power_integral import tfae_report
from .semigroups import from_generators

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3


def _read_matrix(path: str):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    return matrix_from_json(obj)


def _parse_generators(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ParseError(f"bad generator list {text!r}") from exc


def _emit(payload, fmt: str, human_lines=None):
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in human_lines or [json.dumps(payload, indent=2)]:
            print(line)


def _budget(args) -> StateBudget:
    return StateBudget(max_states=args.state_budget)


def cmd_matrix_analyze(args) -> int:
    a = _read_matrix(args.path)
    report = tfae_report(a, args.trace_bound)
    analysis = exponent_semigroup(a, _budget(args))
    payload = {
        "power_integrality": tfae_to_json(report),
        "exponent_semigroup": analysis_to_json(analysis),
    }
    human = [
        f"dimension: {a.dim}",
        f"char poly integral: {report.char_poly_integral}",
    ]
    if analysis.final and analysis.classification is not None:
        human.append(f"exponent semigroup: {semigroup_human(analysis.classification)}")
    else:
        human.append("exponent semigroup: budget exhausted, partial result")
    _emit(payload, args.format, human)
    return EXIT_OK if analysis.final else EXIT_BUDGET


def cmd_matrix_power_integral(args) -> int:
    a = _read_matrix(args.path)
    report = tfae_report(a, args.trace_bound)
    human = [f"verdict: {report.verdict}"]
    if report.witness:
        human.append(f"witness: {report.witness.describe()}")
    _emit(tfae_to_json(report), args.format, human)
    return EXIT_OK


def cmd_matrix_similar_integral(args) -> int:
    from .power_integral import NoIntegralSpectrum, integral_similarity

    a = _read_matrix(args.path)
    try:
        s, b = integral_similarity(a)
    except NoIntegralSpectrum as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    payload = {"S": matrix_to_json(s), "B": matrix_to_json(b)}
    _emit(payload, args.format, [f"S = {s!r}", f"B = {b!r}"])
    return EXIT_OK


def _semigroup_from_args(args):
    if args.generators:
        gens = _parse_generators(args.generators)
    else:
        try:
            with open(args.path) as fh:
                gens = generators_from_json(json.load(fh))
        except OSError as exc:
            raise ParseError(f"cannot read {args.path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"{args.path} is not valid JSON: {exc}") from exc
    try:
        return from_generators(gens)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def cmd_semigroup_info(args) -> int:
    s = _semigroup_from_args(args)
    _emit(semigroup_to_json(s), args.format, [semigroup_human(s)])
    return EXIT_OK


def cmd_semigroup_bounds(args) -> int:
    s = _semigroup_from_args(args)
    b = bounds(s)
    human = [f"{semigroup_human(s)}: dimension in [{b.lower}, {b.upper}]"]
    human += [f"  {j.rule}: {j.value} ({j.cite})" for j in b.justifications]
    _emit(bounds_to_json(b), args.format, human)
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        gens = _parse_generators(args.generators)
        target = from_generators(gens)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    budget = _budget(args)
    if args.family == "2x2":
        match = match_2x2_family(target)
        if match is None:
            print(f"error: no 2x2 family realizes {target}", file=sys.stderr)
            return EXIT_INPUT
        result = family_2x2(*match, budget=budget)
    elif args.family == "auto" and (match := match_2x2_family(target)) is not None:
        result = family_2x2(*match, budget=budget)
    else:
        result = represent(target, base=args.base, budget=budget)
    payload = {
        "matrix": matrix_to_json(result.matrix),
        "vector": list(result.vector.entries) if result.vector else None,
        "base": result.vector.base if result.vector else None,
        "claimed": semigroup_to_json(result.claimed),
        "verified": result.verified,
    }
    text = json.dumps(payload, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    if args.format == "human":
        print(f"target: {semigroup_human(result.claimed)}")
        print(f"dimension: {result.matrix.dim}")
        print(f"verified: {result.verified}")
    elif not args.output:
        print(text)
    if not result.verified:
        print("error: construction failed engine verification", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify_fixtures(args) -> int:
    failures = 0
    rows = []
    for fixture in load_all():
        analysis = exponent_semigroup(fixture.matrix, _budget(args))
        ok = analysis.final and analysis.classification == fixture.expected
        if not ok:
            failures += 1
        got = (
            semigroup_human(analysis.classification)
            if analysis.final and analysis.classification is not None
            else "budget exhausted"
        )
        rows.append(
            {
                "name": fixture.name,
                "expected": semigroup_human(fixture.expected),
                "computed": got,
                "ok": ok,
            }
        )
    total = len(rows)
    passed = total - failures
    if args.format == "json":
        print(json.dumps({"passed": passed, "total": total, "rows": rows}, indent=2))
    else:
        for row in rows:
            mark = "ok  " if row["ok"] else "FAIL"
            print(f"{mark} {row['name']:<14} expected {row['expected']}")
        print(f"{passed}/{total} pass")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expsemigroup",
        description="Exact exponent semigroups of rational matrices",
    )
    parser.add_argument(
        "--format", choices=["json", "human"], default="json", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    matrix = sub.add_parser("matrix", help="analyze a matrix file")
    msub = matrix.add_subparsers(dest="matrix_command", required=True)

    analyze = msub.add_parser("analyze", help="full integrality and exponent report")
    analyze.add_argument("path")
    analyze.add_argument("--trace-bound", type=int, default=None)
    analyze.add_argument("--state-budget", type=int, default=1_000_000)
    analyze.set_defaults(func=cmd_matrix_analyze)

    power = msub.add_parser("power-integral", help="integrality conditions only")
    power.add_argument("path")
    power.add_argument("--trace-bound", type=int, default=None)
    power.set_defaults(func=cmd_matrix_power_integral)

    similar = msub.add_parser("similar-integral", help="integral similarity certificate")
    similar.add_argument("path")
    similar.set_defaults(func=cmd_matrix_similar_integral)

    semigroup = sub.add_parser("semigroup", help="semigroup utilities")
    ssub = semigroup.add_subparsers(dest="semigroup_command", required=True)
    for name, func in (("info", cmd_semigroup_info), ("bounds", cmd_semigroup_bounds)):
        cmd = ssub.add_parser(name)
        cmd.add_argument("path", nargs="?", help="JSON file with a generators list")
        cmd.add_argument("--generators", help="comma-separated generators")
        cmd.set_defaults(func=func)

    construct = sub.add_parser("construct", help="build a matrix realizing a semigroup")
    construct.add_argument("--generators", required=True)
    construct.add_argument("--base", type=int, default=2)
    construct.add_argument("--family", choices=["auto", "nilpotent", "2x2"], default="auto")
    construct.add_argument("--state-budget", type=int, default=1_000_000)
    construct.add_argument("-o", "--output", help="write the result JSON to a file")
    construct.set_defaults(func=cmd_construct)

    verify = sub.add_parser("verify-fixtures", help="recompute all bundled fixtures")
    verify.add_argument("--state-budget", type=int, default=1_000_000)
    verify.set_defaults(func=cmd_verify_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "semigroup":
        if not args.generators and not args.path:
            parser.error("semigroup commands need --generators or a JSON file path")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
