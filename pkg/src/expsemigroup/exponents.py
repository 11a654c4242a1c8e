"""Exact computation of the exponent semigroup of a rational matrix.

The exponent semigroup of A collects every n >= 0 with A^n integral.  When
the characteristic polynomial is not integral the semigroup is {0};
otherwise a uniform denominator m exists and the residues of m*A^n mod m
satisfy the integer linear recurrence induced by the characteristic
polynomial, so the membership sequence is eventually periodic.  Windows of
consecutive residue matrices are streamed with cycle detection until the
sequence provably repeats, with an early exit as soon as d consecutive
members appear (from there on every exponent is a member).
"""

from __future__ import annotations

import math
from array import array
from collections import deque
from dataclasses import dataclass

from .linalg import Polynomial, RationalMatrix
from .power_integral import powers_upto, uniform_denominator
from .semigroups import (
    FULL,
    TRIVIAL,
    Kind,
    NumericalData,
    SubsemigroupDesc,
)


@dataclass(frozen=True)
class StateBudget:
    """Caps on the cycle search: number of stored windows and bytes of
    window storage, whichever is hit first."""

    max_states: int = 1_000_000
    max_bytes: int = 1 << 30


@dataclass(frozen=True)
class ExponentAnalysis:
    """Full description of an exponent semigroup.

    Membership for arbitrary n unrolls from `membership_prefix` on
    [0, preperiod + period) by periodicity.  `final` is False when the
    state budget ran out before the sequence repeated; then only
    `membership_prefix` (a plain prefix) is meaningful and `classification`
    is None.
    """

    classification: SubsemigroupDesc | None
    char_poly: Polynomial
    uniform_denominator: int | None
    preperiod: int | None
    period: int | None
    membership_prefix: tuple[bool, ...]
    certificates: tuple[tuple[int, bool], ...]
    final: bool
    early_exit: int | None = None

    def member(self, n: int) -> bool:
        """Membership of n, unrolled through the periodic description."""
        if n < 0:
            return False
        if n < len(self.membership_prefix):
            return self.membership_prefix[n]
        if not self.final:
            raise ValueError("analysis is partial; membership known only on the prefix")
        tau, rho = self.preperiod, self.period
        return self.membership_prefix[tau + (n - tau) % rho]

    def members_upto(self, n: int) -> list[int]:
        return [i for i in range(n + 1) if self.member(i)]


class _Stream:
    """Residue-state stream m*A^n mod m driven by the characteristic
    recurrence, with window hashing for cycle detection."""

    def __init__(self, a: RationalMatrix, m: int, char_coeffs: list[int]):
        d = a.dim
        self.d = d
        self.m = m
        # recurrence R_(n+d) = -(c_0 R_n + ... + c_(d-1) R_(n+d-1)) mod m
        self.neg_coeffs = [(-c) % m for c in char_coeffs]
        self.last: deque[list[int]] = deque(maxlen=d)
        self.bits: list[bool] = []
        self.typecode = next(
            (tc for tc, limit in (("B", 1 << 8), ("H", 1 << 16), ("L", 1 << 32), ("Q", 1 << 64))
             if m <= limit),
            None,
        )
        for p in powers_upto(a, d - 1):
            flat = [int(x * m) % m for row in p.rows for x in row]
            self._push(flat)

    def _push(self, flat: list[int]):
        self.last.append(flat)
        self.bits.append(not any(flat))

    def step(self):
        """Append R_(n+d) computed from the last d residues."""
        m = self.m
        size = self.d * self.d
        acc = [0] * size
        for c, res in zip(self.neg_coeffs, self.last):
            if c:
                for i in range(size):
                    acc[i] += c * res[i]
        self._push([x % m for x in acc])

    def encode(self, flat: list[int]) -> bytes:
        if self.typecode is None:
            return repr(flat).encode()
        return array(self.typecode, flat).tobytes()


def _classify(
    bits: list[bool], tau: int, rho: int
) -> tuple[SubsemigroupDesc, tuple[bool, ...]]:
    """Build the canonical subsemigroup description from an eventually
    periodic membership sequence (prefix on [0, tau), cycle on [tau, tau+rho))."""
    prefix = tuple(bits[: tau + rho])

    def member(n: int) -> bool:
        if n < tau + rho:
            return prefix[n]
        return prefix[tau + (n - tau) % rho]

    pre_members = [n for n in range(1, tau) if prefix[n]]
    cycle_members = [j for j in range(tau, tau + rho) if prefix[j]]
    if not pre_members and not cycle_members:
        return TRIVIAL, prefix
    if member(1):
        return FULL, prefix
    content = 0
    for n in pre_members:
        content = math.gcd(content, n)
    for j in cycle_members:
        # members j, j + rho, j + 2 rho, ... contribute gcd(j, rho)
        content = math.gcd(content, math.gcd(j, rho))
    # all non-members divisible by the content lie below the cycle, so a
    # short downward scan finds the frobenius number of the divided part
    hi = (tau + rho) // content + 2
    frob = next((k for k in range(hi, -1, -1) if not member(content * k)), None)
    if frob is None:
        part = NumericalData.full()
    else:
        part_bits = [member(content * k) for k in range(frob + 1)]
        mult = next((k for k, b in enumerate(part_bits) if k and b), frob + 1)
        part_bits += [True] * (mult + 1)
        part = NumericalData.from_membership(part_bits, frob)
    kind = Kind.NUMERICAL if content == 1 else Kind.SCALED
    return SubsemigroupDesc(kind, content, part), prefix


def _certificates(a: RationalMatrix, analysis_member, limit: int) -> tuple[tuple[int, bool], ...]:
    """Direct spot checks: 0, the first positive member, the first gap."""
    picks = [0]
    first_member = next((n for n in range(1, limit + 1) if analysis_member(n)), None)
    if first_member is not None:
        picks.append(first_member)
    first_gap = next((n for n in range(1, limit + 1) if not analysis_member(n)), None)
    if first_gap is not None:
        picks.append(first_gap)
    return tuple((n, verify_membership(a, n)) for n in picks)


def exponent_semigroup(a: RationalMatrix, budget: StateBudget | None = None) -> ExponentAnalysis:
    """Compute and classify the exponent semigroup of `a` exactly."""
    if a.dim == 0:
        raise ValueError("exponent semigroup needs a matrix of dimension >= 1")
    budget = budget or StateBudget()
    d = a.dim
    p = a.charpoly()
    if not p.is_integer():
        # a non-integer characteristic coefficient rules out every A^n, n >= 1
        prefix = (True, False)
        return ExponentAnalysis(
            classification=TRIVIAL,
            char_poly=p,
            uniform_denominator=None,
            preperiod=1,
            period=1,
            membership_prefix=prefix,
            certificates=_certificates(a, lambda n: n == 0, 2),
            final=True,
        )
    m = uniform_denominator(a)
    char_coeffs = [int(c) for c in p.coeffs[:-1]]
    stream = _Stream(a, m, char_coeffs)

    seen: dict[bytes, int] = {}
    window = deque(stream.encode(r) for r in stream.last)
    run = 0
    for i, b in enumerate(stream.bits):
        run = run + 1 if b else 0
        if run >= d:
            return _finish(a, p, m, stream.bits, tau=i - d + 1, rho=1, early=i - d + 1)
    bytes_used = 0
    index = 0
    while True:
        key = b"".join(window)
        if key in seen:
            tau = seen[key]
            rho = index - tau
            return _finish(a, p, m, stream.bits, tau=tau, rho=rho, early=None)
        seen[key] = index
        bytes_used += len(key)
        if len(seen) >= budget.max_states or bytes_used >= budget.max_bytes:
            return ExponentAnalysis(
                classification=None,
                char_poly=p,
                uniform_denominator=m,
                preperiod=None,
                period=None,
                membership_prefix=tuple(stream.bits),
                certificates=(),
                final=False,
            )
        stream.step()
        window.popleft()
        window.append(stream.encode(stream.last[-1]))
        b = stream.bits[-1]
        run = run + 1 if b else 0
        if run >= d:
            s = len(stream.bits) - d
            return _finish(a, p, m, stream.bits, tau=s, rho=1, early=s)
        index += 1


def _finish(a, p, m, bits, tau, rho, early) -> ExponentAnalysis:
    if len(bits) < tau + rho:
        raise AssertionError("membership bits shorter than the periodic description")
    desc, prefix = _classify(bits, tau, rho)

    def member(n):
        if n < len(prefix):
            return prefix[n]
        return prefix[tau + (n - tau) % rho]

    certs = _certificates(a, member, tau + rho + a.dim)
    return ExponentAnalysis(
        classification=desc,
        char_poly=p,
        uniform_denominator=m,
        preperiod=tau,
        period=rho,
        membership_prefix=prefix,
        certificates=certs,
        final=True,
        early_exit=early,
    )


def verify_membership(a: RationalMatrix, n: int) -> bool:
    """Direct certificate: compute A^n and test integrality."""
    if n < 0:
        raise ValueError("exponent must be a natural number")
    return (a ** n).is_integral()


def classify_cyclic(a: RationalMatrix, budget: StateBudget | None = None) -> int | None:
    """Generator of the exponent semigroup of a matrix with det +-1.

    Such a semigroup is always singly generated; it is nontrivial exactly
    when the characteristic polynomial is integral, in which case the
    generator is returned (1 means every power is integral).  Returns None
    when the semigroup is {0}.
    """
    det = a.det()
    if det != 1 and det != -1:
        raise ValueError(f"determinant must be +1 or -1, got {det}")
    if not a.charpoly().is_integer():
        return None
    analysis = exponent_semigroup(a, budget)
    desc = analysis.classification
    if desc is None:
        raise RuntimeError("state budget exhausted while classifying a cyclic semigroup")
    if desc.kind is Kind.FULL:
        return 1
    if desc.kind is Kind.SCALED and desc.numerical_part.is_full():
        return desc.content
    raise AssertionError(f"determinant +-1 semigroup came out non-cyclic: {desc}")
