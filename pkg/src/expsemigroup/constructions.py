"""Rational matrices realizing a prescribed exponent semigroup.

A numerical semigroup with Frobenius number g is realized by a nilpotent
(g+1)x(g+1) superdiagonal matrix whose entries are signed powers b^x_i of
an integer base: A^j is integral exactly when every window of j
consecutive exponents sums to >= 0, and the tally construction below picks
exponents in {-1, 0, 1} whose window sums encode membership.  Semigroups
with content d0 >= 2 get a superdiagonal block plus a 2x2 unipotent block
realizing multiples of d0.  Every construction is verified by running the
exponent-semigroup engine on the result before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exponents import ExponentAnalysis, StateBudget, exponent_semigroup
from .linalg import RationalMatrix, direct_sum
from .semigroups import Kind, SubsemigroupDesc, from_generators


@dataclass(frozen=True)
class SuperdiagonalVector:
    """Exponent vector for a superdiagonal representation.

    Entries lie in {-1, 0, 1}; the matrix has base^entries[i] on the
    superdiagonal.  Prefix sums stay in {0, -1}: the prefix sum at k is -1
    exactly when k is not in the target semigroup.
    """

    entries: tuple[int, ...]
    base: int
    target: SubsemigroupDesc

    def __post_init__(self):
        if any(x not in (-1, 0, 1) for x in self.entries):
            raise ValueError("entries must lie in {-1, 0, 1}")
        if abs(self.base) < 2:
            raise ValueError("base must have absolute value >= 2")


@dataclass(frozen=True)
class ConstructionResult:
    matrix: RationalMatrix
    vector: SuperdiagonalVector | None
    claimed: SubsemigroupDesc
    verified: bool
    analysis: ExponentAnalysis


def _tally_entries(member, steps: int) -> list[int]:
    """The tally loop: one pass i = 1..steps, emitting -1 on the first gap
    after the running sum returns to 0 and +1 on the first member after it
    drops to -1."""
    entries = []
    sigma = 0
    for i in range(1, steps + 1):
        if member(i):
            x = 1 if sigma == -1 else 0
        else:
            x = -1 if sigma == 0 else 0
        entries.append(x)
        sigma += x
    return entries


def find_superdiagonal(s: SubsemigroupDesc, base: int = 2) -> SuperdiagonalVector:
    """Exponent vector realizing a proper nontrivial numerical semigroup."""
    if s.kind is not Kind.NUMERICAL:
        raise ValueError("superdiagonal vectors exist for proper numerical semigroups only")
    g = s.numerical_part.frobenius
    return SuperdiagonalVector(tuple(_tally_entries(s.contains, g)), base, s)


def nilpotent_matrix(v: SuperdiagonalVector) -> RationalMatrix:
    """The (g+1)x(g+1) superdiagonal matrix with entries base^x_i."""
    b = Fraction(v.base)
    return RationalMatrix.from_superdiagonal([b**x for x in v.entries])


def represent(
    s: SubsemigroupDesc, base: int = 2, budget: StateBudget | None = None
) -> ConstructionResult:
    """A rational matrix whose exponent semigroup is exactly `s`.

    N gets the 1x1 zero matrix and {0} the 1x1 matrix [1/2]; a numerical
    semigroup gets the nilpotent superdiagonal construction; content
    d0 >= 2 runs the same tally against the undivided semigroup for
    d0*g(S/d0) steps and adds a 2x2 block realizing <d0>.  The result is
    engine-verified before returning.
    """
    vector = None
    if s.kind is Kind.TRIVIAL:
        matrix = RationalMatrix([[Fraction(1, 2)]])
    elif s.kind is Kind.FULL:
        matrix = RationalMatrix.zero(1)
    elif s.kind is Kind.NUMERICAL:
        vector = find_superdiagonal(s, base)
        matrix = nilpotent_matrix(vector)
    else:
        d0 = s.content
        steps = d0 * s.numerical_part.frobenius
        vector = SuperdiagonalVector(tuple(_tally_entries(s.contains, steps)), base, s)
        block = RationalMatrix([[1, Fraction(1, d0)], [0, 1]])
        matrix = direct_sum(nilpotent_matrix(vector), block)
    analysis = exponent_semigroup(matrix, budget)
    verified = analysis.final and analysis.classification == s
    return ConstructionResult(matrix, vector, s, verified, analysis)


def family_2x2(kind: str, param: int, budget: StateBudget | None = None) -> ConstructionResult:
    """Closed-form 2x2 realizations.

    kind "cyclic" with m >= 2 realizes <m>; "tail" with m >= 2 realizes
    {0, m, m+1, ...}; "two_generator" with odd k >= 3 realizes <2, k>.
    """
    if kind == "cyclic":
        m = param
        if m < 2:
            raise ValueError("cyclic family needs m >= 2")
        matrix = RationalMatrix([[1, Fraction(1, m)], [0, 1]])
        claimed = from_generators([m])
    elif kind == "tail":
        m = param
        if m < 2:
            raise ValueError("tail family needs m >= 2")
        # A^n = [[2^n, 2^(n-m)], [0, 0]], so the first integral power is m
        matrix = RationalMatrix([[2, Fraction(1, 2 ** (m - 1))], [0, 0]])
        claimed = from_generators(list(range(m, 2 * m)))
    elif kind == "two_generator":
        k = param
        if k < 3 or k % 2 == 0:
            raise ValueError("two-generator family needs odd k >= 3")
        j = k // 2
        matrix = RationalMatrix([[0, Fraction(1, 2**j)], [2 ** (j + 1), 0]])
        claimed = from_generators([2, k])
    else:
        raise ValueError(f"unknown 2x2 family {kind!r}")
    analysis = exponent_semigroup(matrix, budget)
    verified = analysis.final and analysis.classification == claimed
    return ConstructionResult(matrix, None, claimed, verified, analysis)


def match_2x2_family(s: SubsemigroupDesc) -> tuple[str, int] | None:
    """Family (kind, param) realizing `s` in dimension 2, if one applies."""
    if s.kind is Kind.SCALED and s.numerical_part.is_full():
        return ("cyclic", s.content)
    if s.kind is Kind.NUMERICAL:
        part = s.numerical_part
        if part.frobenius == part.multiplicity - 1:
            return ("tail", part.multiplicity)
        gens = part.minimal_generators
        if len(gens) == 2 and gens[0] == 2:
            return ("two_generator", gens[1])
    return None
