"""Subsemigroups of the natural numbers.

Canonical descriptions (content gcd plus numerical part), membership,
Frobenius numbers via shortest paths over residue classes, gap sets,
minimal generators, and the symmetry classifications.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from enum import Enum


class Kind(str, Enum):
    """Coarse classification of a subsemigroup of N."""

    TRIVIAL = "trivial"              # {0}
    FULL = "full_n"                  # all of N
    NUMERICAL = "numerical"          # gcd 1, finite complement
    SCALED = "scaled_numerical"      # content d0 >= 2 times a numerical part


@dataclass(frozen=True)
class NumericalData:
    """Data of a numerical semigroup (gcd of elements is 1).

    `frobenius` is -1 when the semigroup is all of N.  `membership` covers
    exactly [0, frobenius + multiplicity + 1]; every larger integer is a
    member.
    """

    minimal_generators: tuple[int, ...]
    frobenius: int
    gaps: tuple[int, ...]
    membership: tuple[bool, ...]

    @property
    def multiplicity(self) -> int:
        return self.minimal_generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def is_full(self) -> bool:
        return self.frobenius == -1

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.frobenius:
            return True
        return self.membership[n]

    @classmethod
    def full(cls) -> "NumericalData":
        return cls((1,), -1, (), (True, True))

    @classmethod
    def from_membership(cls, bits, frobenius: int) -> "NumericalData":
        """Canonical constructor from a membership bit-vector.

        `bits` must cover [0, frobenius + multiplicity + 1]; it is cropped
        to that exact range so equal semigroups produce identical values.
        """
        bits = tuple(bool(b) for b in bits)
        if frobenius == -1:
            return cls.full()
        gens = minimal_generators_from_membership(bits, frobenius)
        m = gens[0]
        if len(bits) < frobenius + m + 2:
            raise ValueError("membership vector too short for its semigroup")
        gaps = tuple(i for i in range(1, frobenius + 1) if not bits[i])
        if not gaps or gaps[-1] != frobenius:
            raise ValueError("frobenius does not match the membership vector")
        return cls(gens, frobenius, gaps, bits[: frobenius + m + 2])


@dataclass(frozen=True)
class SubsemigroupDesc:
    """Canonical description of a subsemigroup of N.

    Any nontrivial subsemigroup is `content` times a numerical semigroup,
    stored in `numerical_part`.  Trivial ({0}) has neither.
    """

    kind: Kind
    content: int | None
    numerical_part: NumericalData | None

    @property
    def minimal_generators(self) -> tuple[int, ...]:
        if self.kind is Kind.TRIVIAL:
            return ()
        return tuple(self.content * g for g in self.numerical_part.minimal_generators)

    @property
    def multiplicity(self) -> int | None:
        gens = self.minimal_generators
        return gens[0] if gens else None

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def contains(self, n: int) -> bool:
        if n == 0:
            return True
        if n < 0 or self.kind is Kind.TRIVIAL:
            return False
        if n % self.content:
            return False
        return self.numerical_part.contains(n // self.content)

    def is_proper_nontrivial(self) -> bool:
        return self.kind in (Kind.NUMERICAL, Kind.SCALED)

    def __str__(self):
        if self.kind is Kind.TRIVIAL:
            return "{0}"
        if self.kind is Kind.FULL:
            return "N"
        gens = ", ".join(str(g) for g in self.minimal_generators)
        return f"<{gens}>"


TRIVIAL = SubsemigroupDesc(Kind.TRIVIAL, None, None)
FULL = SubsemigroupDesc(Kind.FULL, 1, NumericalData.full())


def _membership_bits(gens, limit: int) -> list[bool]:
    """Coin-change style membership of <gens> on [0, limit]."""
    bits = [False] * (limit + 1)
    bits[0] = True
    for i in range(1, limit + 1):
        for g in gens:
            if g <= i and bits[i - g]:
                bits[i] = True
                break
    return bits


def _validate_generators(gens) -> list[int]:
    gens = list(gens)
    if not gens:
        raise ValueError("generator list must be nonempty")
    for g in gens:
        if not isinstance(g, int) or g < 1:
            raise ValueError(f"generators must be integers >= 1, got {g!r}")
    return sorted(set(gens))


def from_generators(gens) -> SubsemigroupDesc:
    """Canonical description of the subsemigroup generated by `gens`.

    The input need not be minimal or sorted; the content gcd is factored
    out and the numerical part is fully computed.
    """
    gens = _validate_generators(gens)
    content = 0
    for g in gens:
        content = math.gcd(content, g)
    divided = sorted(g // content for g in gens)
    if divided[0] == 1:
        part = NumericalData.full()
    else:
        g = frobenius_number(divided)
        m = divided[0]
        bits = _membership_bits(divided, g + m + 1)
        part = NumericalData.from_membership(bits, g)
    if content == 1:
        kind = Kind.FULL if part.is_full() else Kind.NUMERICAL
    else:
        kind = Kind.SCALED
    return SubsemigroupDesc(kind, content, part)


def contains(s: SubsemigroupDesc, n: int) -> bool:
    return s.contains(n)


def apery_dijkstra(gens, modulus: int) -> list[int]:
    """Least element of <gens> in each residue class mod `modulus`, by
    shortest-path relaxation with the generators as edge weights."""
    dist = [None] * modulus
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] is not None and d > dist[r]:
            continue
        for g in gens:
            nr = (r + g) % modulus
            nd = d + g
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


def frobenius_number(gens) -> int:
    """Largest natural number not in <gens>; -1 when <gens> = N.

    Requires gcd(gens) = 1.
    """
    gens = _validate_generators(gens)
    content = 0
    for g in gens:
        content = math.gcd(content, g)
    if content != 1:
        raise ValueError(f"generators must have gcd 1, got gcd {content}")
    if gens[0] == 1:
        return -1
    dist = apery_dijkstra(gens, gens[0])
    return max(dist) - gens[0]


def apery_set(s: SubsemigroupDesc, n: int) -> list[int]:
    """For each residue r mod n, the least member of `s` congruent to r.

    `n` must be a nonzero member of a numerical semigroup (or of N).
    """
    if s.kind not in (Kind.NUMERICAL, Kind.FULL):
        raise ValueError("apery set requires a numerical semigroup")
    if n < 1 or not s.contains(n):
        raise ValueError(f"{n} is not a nonzero member")
    return apery_dijkstra(s.minimal_generators, n)


def minimal_generators_from_membership(bits, frobenius: int) -> tuple[int, ...]:
    """Minimal generating set from membership data.

    `bits` encodes membership of a semigroup on [0, frobenius + m + 1]
    where m is its smallest nonzero member; every integer above frobenius
    is a member.  A member s <= frobenius + m is minimal iff it is not a
    sum of two nonzero members; larger s always decompose as (s - m) + m.
    """
    bits = list(bits)
    if not bits or not bits[0]:
        raise ValueError("membership must contain 0")
    if frobenius == -1:
        return (1,)
    m = next((i for i in range(1, len(bits)) if bits[i]), None)
    if m is None:
        raise ValueError("no nonzero member in range")
    bound = frobenius + m + 1
    if len(bits) < bound + 1:
        raise ValueError("membership vector must cover [0, frobenius + m + 1]")

    def member(i):
        return bits[i] if i <= bound else True

    # additive closure on the covered range
    members = [i for i in range(1, bound + 1) if bits[i]]
    for i in members:
        for j in members:
            if i + j > bound:
                break
            if not bits[i + j]:
                raise ValueError(f"membership is not additively closed: {i}+{j}")
    for i in range(frobenius + 1, bound + 1):
        if not bits[i]:
            raise ValueError(f"member {i} above frobenius {frobenius} missing")

    gens = []
    for s in members:
        if not any(member(s - a) for a in members if a < s):
            gens.append(s)
    return tuple(gens)


def _require_proper_numerical(s: SubsemigroupDesc):
    if s.kind is Kind.FULL:
        raise ValueError("undefined for the full semigroup N")
    if s.kind is not Kind.NUMERICAL:
        raise ValueError("requires a numerical semigroup")


def is_symmetric(s: SubsemigroupDesc) -> bool:
    """Odd Frobenius number and every gap x reflects to a member g - x.

    Negative x are never members and reflect above g, so checking the
    finitely many gaps decides the condition.
    """
    _require_proper_numerical(s)
    g = s.numerical_part.frobenius
    if g % 2 == 0:
        return False
    return all(s.contains(g - x) for x in s.numerical_part.gaps)


def is_pseudosymmetric(s: SubsemigroupDesc) -> bool:
    """Even Frobenius number and every gap x other than g/2 reflects into
    the semigroup."""
    _require_proper_numerical(s)
    g = s.numerical_part.frobenius
    if g % 2 == 1:
        return False
    half = g // 2
    return all(x == half or s.contains(g - x) for x in s.numerical_part.gaps)
