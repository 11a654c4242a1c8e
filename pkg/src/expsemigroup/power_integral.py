"""Integrality of the spectrum of a rational matrix.

Six equivalent conditions are decided and certified: integer
characteristic polynomial, integer minimal polynomial, a uniform
denominator m with m*A^n always integral, an integral similarity
A = S B S^(-1) with S, B integer matrices, and integer power traces.
The certificates are exact and re-verifiable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    IntegerLattice,
    Polynomial,
    RationalMatrix,
    hnf_with_transform,
)


class NoIntegralSpectrum(ValueError):
    """The characteristic polynomial is not integral, so no integral
    similarity exists."""


@dataclass(frozen=True)
class Witness:
    """A cheap certificate that some power-integrality condition fails."""

    kind: str        # "determinant" | "trace_power" | "char_coefficient" | "rational_eigenvalue"
    value: Fraction
    power: int | None = None   # k for trace witnesses, coefficient index otherwise

    def describe(self) -> str:
        if self.kind == "determinant":
            return f"det(A) = {self.value} is not an integer"
        if self.kind == "trace_power":
            return f"tr(A^{self.power}) = {self.value} is not an integer"
        if self.kind == "rational_eigenvalue":
            return f"{self.value} is a rational non-integer eigenvalue"
        return f"characteristic coefficient of x^{self.power} is {self.value}"


@dataclass(frozen=True)
class TfaeReport:
    """Joint evaluation of the equivalent integrality conditions."""

    char_poly: Polynomial
    min_poly: Polynomial
    char_poly_integral: bool
    min_poly_integral: bool
    uniform_denominator: int | None
    similarity: tuple[RationalMatrix, RationalMatrix] | None
    trace_integral_upto: int
    trace_bound: int
    verdict: bool
    witness: Witness | None


def powers_upto(a: RationalMatrix, k: int) -> list[RationalMatrix]:
    """[I, A, ..., A^k] by repeated multiplication."""
    out = [RationalMatrix.identity(a.dim)]
    for _ in range(k):
        out.append(out[-1] * a)
    return out


def uniform_denominator(a: RationalMatrix) -> int:
    """lcm of the entry denominators of I, A, ..., A^(d-1).

    When the characteristic polynomial is integral, the power recurrence it
    induces shows m*A^n is integral for every n, not just n < d.
    """
    m = 1
    for p in powers_upto(a, max(a.dim - 1, 0)):
        pm = p.denominator_lcm()
        m = m * pm // math.gcd(m, pm)
    return m


def _kernel_mod(d_mat: list[list[int]], q: int) -> list[list[int]]:
    """Basis (as columns) of {u in Z^d : D u == 0 mod q}.

    Computed as the u-part of the integer kernel of the block [D | qI]:
    a kernel vector (u, v) satisfies D u + q v = 0, and v is determined
    by u, so projecting onto u preserves the lattice.
    """
    d = len(d_mat)
    block = [list(row) + [q if i == j else 0 for j in range(d)] for i, row in enumerate(d_mat)]
    h, u = hnf_with_transform(block)
    rank = sum(1 for j in range(2 * d) if any(h[i][j] for i in range(d)))
    kernel_cols = range(rank, 2 * d)
    basis_rows = [[u[i][j] for j in kernel_cols] for i in range(d)]
    return basis_rows


def invariant_lattice(a: RationalMatrix) -> IntegerLattice:
    """The largest sublattice L of Z^d with A L contained in L, i.e. all x
    with A^n x integral for every n.

    Computed as the fixpoint of L_0 = Z^d, L_(k+1) = {x in L_k : A x in L_k},
    canonicalizing with HNF each step.  Termination: m Z^d stays inside every
    iterate, so the index is bounded and each proper step grows it.
    """
    if not a.charpoly().is_integer():
        raise NoIntegralSpectrum("characteristic polynomial has a non-integer coefficient")
    d = a.dim
    lat = IntegerLattice.standard(d)
    while True:
        basis = RationalMatrix(lat.basis)
        conj = _rational_inverse(basis) * a * basis
        q = conj.denominator_lcm()
        if q == 1:
            return lat
        d_int = [[int(x * q) for x in row] for row in conj.rows]
        kernel = _kernel_mod(d_int, q)
        product = _int_matmul([list(r) for r in lat.basis], kernel)
        new_lat = IntegerLattice.from_generators(product)
        if new_lat == lat:
            return lat
        lat = new_lat


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n, k = len(a), len(b[0])
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(k)] for i in range(n)]


def _rational_inverse(m: RationalMatrix) -> RationalMatrix:
    det = m.det()
    if det == 0:
        raise ZeroDivisionError("matrix is singular")
    return m.adjugate().scale(Fraction(1, 1) / det)


def integral_similarity(a: RationalMatrix) -> tuple[RationalMatrix, RationalMatrix]:
    """Integer matrices (S, B) with A = S B S^(-1), S invertible.

    S holds the HNF basis of the invariant lattice as columns; B is the
    action of A on that basis.  Raises NoIntegralSpectrum when the
    characteristic polynomial is not integral.
    """
    lat = invariant_lattice(a)
    s = RationalMatrix(lat.basis)
    b = _rational_inverse(s) * a * s
    if not b.is_integral():
        raise AssertionError("invariant-lattice conjugation failed to be integral")
    return s, b


def _trace_run(a: RationalMatrix, bound: int) -> tuple[int, Witness | None]:
    """Largest K <= bound with tr(A^k) integral for all k <= K."""
    power = RationalMatrix.identity(a.dim)
    for k in range(1, bound + 1):
        power = power * a
        t = power.trace()
        if t.denominator != 1:
            return k - 1, Witness("trace_power", t, k)
    return bound, None


def _bounded_divisors(n: int, cap: int = 10**12, trial_limit: int = 10**6):
    """Divisors of |n| found by trial division; None when n is too large to
    factor cheaply (the caller then skips the eigenvalue search)."""
    n = abs(n)
    if n == 0 or n > cap:
        return None
    factors = {}
    rem = n
    p = 2
    while p * p <= rem and p <= trial_limit:
        while rem % p == 0:
            factors[p] = factors.get(p, 0) + 1
            rem //= p
        p += 1 if p == 2 else 2
    if rem > 1:
        if rem > trial_limit * trial_limit:
            return None
        factors[rem] = factors.get(rem, 0) + 1
    divs = [1]
    for prime, exp in factors.items():
        divs = [d * prime**e for d in divs for e in range(exp + 1)]
    return sorted(divs)


def rational_noninteger_root(p: Polynomial) -> Fraction | None:
    """A rational non-integer root of a monic rational polynomial, if one
    exists and the constant term is cheap to factor.

    Substituting x = y/L for L the lcm of coefficient denominators makes the
    polynomial monic over Z, whose rational roots are integer divisors of
    its constant term; roots of the original are those divided by L.
    """
    if p.is_integer() or p.degree < 1:
        return None   # integer monic polynomials have only integer rational roots
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    d = p.degree
    shifted_constant = int(p.coeffs[0] * lcm**d)
    if shifted_constant == 0:
        return None   # zero is an integer root; nothing non-integer guaranteed
    divisors = _bounded_divisors(shifted_constant)
    if divisors is None:
        return None
    for t in divisors:
        for sign in (1, -1):
            root = Fraction(sign * t, lcm)
            if root.denominator != 1 and p(root) == 0:
                return root
    return None


def quick_reject(a: RationalMatrix) -> Witness | None:
    """A cheap witness that A has no integral power beyond A^0, or None.

    Checks the determinant, the traces of A^1..A^d, and rational
    non-integer eigenvalues found by the rational root test.  Absence of a
    witness decides nothing.
    """
    det = a.det()
    if det.denominator != 1:
        return Witness("determinant", det)
    _, witness = _trace_run(a, a.dim)
    if witness is not None:
        return witness
    root = rational_noninteger_root(a.charpoly())
    if root is not None:
        return Witness("rational_eigenvalue", root)
    return None


def tfae_report(a: RationalMatrix, trace_bound: int | None = None) -> TfaeReport:
    """Evaluate all integrality conditions jointly, with certificates.

    `trace_bound` caps the power-trace check (default 2*dim); the unbounded
    trace condition is equivalent to the others, which are decided exactly.
    """
    d = a.dim
    if trace_bound is None:
        trace_bound = 2 * d
    if trace_bound < d:
        raise ValueError(f"trace_bound must be at least the dimension {d}")
    p = a.charpoly()
    mp = a.minpoly()
    a_holds = p.is_integer()
    b_holds = mp.is_integer()
    trace_upto, trace_witness = _trace_run(a, trace_bound)
    m = None
    similarity = None
    witness = None
    if a_holds:
        m = uniform_denominator(a)
        similarity = integral_similarity(a)
    else:
        witness = quick_reject(a)
        if witness is None:
            if trace_witness is not None:
                witness = trace_witness
            else:
                idx = next(i for i, c in enumerate(p.coeffs) if c.denominator != 1)
                witness = Witness("char_coefficient", p.coeffs[idx], idx)
    return TfaeReport(
        char_poly=p,
        min_poly=mp,
        char_poly_integral=a_holds,
        min_poly_integral=b_holds,
        uniform_denominator=m,
        similarity=similarity,
        trace_integral_upto=trace_upto,
        trace_bound=trace_bound,
        verdict=a_holds,
        witness=witness,
    )
