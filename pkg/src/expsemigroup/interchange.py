"""JSON interchange formats.

Matrices travel as {"dim": d, "entries": [[...], ...]} with each entry a
string "p/q" or "p" (denominator omitted when 1).  Semigroups travel as
{"generators": [...]} on input; outputs add the full classification.
"""

from __future__ import annotations

from fractions import Fraction

from .bounds import DimensionBounds
from .exponents import ExponentAnalysis
from .linalg import Polynomial, RationalMatrix
from .power_integral import TfaeReport
from .semigroups import Kind, SubsemigroupDesc, is_pseudosymmetric, is_symmetric


class ParseError(ValueError):
    """Malformed interchange data."""


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p"; surrounding whitespace is tolerated, a zero
    denominator is not."""
    if not isinstance(text, str):
        if isinstance(text, int):
            return Fraction(text)
        raise ParseError(f"entry must be a string, got {type(text).__name__}")
    s = text.strip()
    if "/" in s:
        num_s, _, den_s = s.partition("/")
        try:
            num = int(num_s.strip())
            den = int(den_s.strip())
        except ValueError as exc:
            raise ParseError(f"malformed rational {text!r}") from exc
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(num, den)
    try:
        return Fraction(int(s))
    except ValueError as exc:
        raise ParseError(f"malformed rational {text!r}") from exc


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def matrix_to_json(a: RationalMatrix) -> dict:
    return {
        "dim": a.dim,
        "entries": [[format_rational(x) for x in row] for row in a.rows],
    }


def matrix_from_json(obj) -> RationalMatrix:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ParseError('expected an object with "dim" and "entries"')
    entries = obj["entries"]
    if not isinstance(entries, list) or not entries:
        raise ParseError('"entries" must be a nonempty list of rows')
    dim = obj.get("dim", len(entries))
    if dim != len(entries):
        raise ParseError(f'"dim" is {dim} but there are {len(entries)} rows')
    rows = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"row {i + 1} must have {dim} entries")
        parsed = []
        for j, cell in enumerate(row):
            try:
                parsed.append(parse_rational(cell))
            except ParseError as exc:
                raise ParseError(f"entry ({i + 1},{j + 1}): {exc}") from exc
        rows.append(parsed)
    return RationalMatrix(rows)


def polynomial_to_json(p: Polynomial) -> list[str]:
    return [format_rational(c) for c in p.coeffs]


def generators_from_json(obj) -> list[int]:
    if not isinstance(obj, dict) or "generators" not in obj:
        raise ParseError('expected an object with a "generators" list')
    gens = obj["generators"]
    if not isinstance(gens, list) or not all(isinstance(g, int) for g in gens):
        raise ParseError('"generators" must be a list of integers')
    return gens


def semigroup_to_json(s: SubsemigroupDesc) -> dict:
    out = {
        "kind": s.kind.value,
        "generators": list(s.minimal_generators),
        "minimal_generators": list(s.minimal_generators),
        "content": s.content,
        "multiplicity": s.multiplicity,
        "embedding_dimension": s.embedding_dimension,
        "frobenius": None,
        "gaps": None,
        "symmetric": None,
        "pseudosymmetric": None,
    }
    if s.kind is Kind.FULL:
        out["frobenius"] = -1
        out["gaps"] = []
    elif s.kind is Kind.NUMERICAL:
        out["frobenius"] = s.numerical_part.frobenius
        out["gaps"] = list(s.numerical_part.gaps)
        out["symmetric"] = is_symmetric(s)
        out["pseudosymmetric"] = is_pseudosymmetric(s)
    elif s.kind is Kind.SCALED:
        out["numerical_part"] = {
            "generators": list(s.numerical_part.minimal_generators),
            "frobenius": s.numerical_part.frobenius,
            "gaps": list(s.numerical_part.gaps),
        }
    return out


def semigroup_human(s: SubsemigroupDesc) -> str:
    if s.kind is Kind.TRIVIAL:
        return "{0}"
    if s.kind is Kind.FULL:
        return "<1> = N"
    gens = ", ".join(str(g) for g in s.minimal_generators)
    if s.kind is Kind.NUMERICAL:
        part = s.numerical_part
        gaps = ", ".join(str(x) for x in part.gaps)
        return f"<{gens}>, g = {part.frobenius}, gaps = {{{gaps}}}"
    return f"<{gens}> (content {s.content})"


def analysis_to_json(an: ExponentAnalysis) -> dict:
    return {
        "final": an.final,
        "classification": semigroup_to_json(an.classification) if an.classification else None,
        "char_poly": polynomial_to_json(an.char_poly),
        "uniform_denominator": an.uniform_denominator,
        "preperiod": an.preperiod,
        "period": an.period,
        "membership_prefix": "".join("1" if b else "0" for b in an.membership_prefix),
        "certificates": [[n, ok] for n, ok in an.certificates],
        "early_exit": an.early_exit,
    }


def tfae_to_json(report: TfaeReport) -> dict:
    out = {
        "verdict": report.verdict,
        "char_poly": polynomial_to_json(report.char_poly),
        "char_poly_integral": report.char_poly_integral,
        "min_poly": polynomial_to_json(report.min_poly),
        "min_poly_integral": report.min_poly_integral,
        "uniform_denominator": report.uniform_denominator,
        "trace_integral_upto": report.trace_integral_upto,
        "trace_bound": report.trace_bound,
        "similarity": None,
        "witness": None,
    }
    if report.similarity is not None:
        s, b = report.similarity
        out["similarity"] = {"S": matrix_to_json(s), "B": matrix_to_json(b)}
    if report.witness is not None:
        w = report.witness
        out["witness"] = {
            "kind": w.kind,
            "value": format_rational(w.value),
            "power": w.power,
            "description": w.describe(),
        }
    return out


def bounds_to_json(b: DimensionBounds) -> dict:
    return {
        "lower": b.lower,
        "upper": b.upper,
        "justifications": [
            {"value": j.value, "rule": j.rule, "cite": j.cite} for j in b.justifications
        ],
    }
