"""Exact linear algebra over the rationals.

Matrices with arbitrary-precision rational entries, characteristic and
minimal polynomials, Kronecker products, direct sums, and Hermite normal
forms of integer lattices.  Everything is exact; there is no floating
point anywhere in this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class DimensionMismatchError(ValueError):
    """Two matrices cannot be combined because their dimensions differ."""


class RankDeficientError(ValueError):
    """An integer matrix expected to span a full-rank lattice does not."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"matrix entries must be exact rationals, got {type(x).__name__}")


class RationalMatrix:
    """Immutable square matrix over the rationals.

    Entries are `fractions.Fraction`, which stores every value reduced with
    a positive denominator, so integrality is a denominator == 1 test per
    entry.  A 0x0 matrix is allowed; it is the identity of `direct_sum`.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(_as_fraction(x) for x in row) for row in rows)
        for row in rows:
            if len(row) != len(rows):
                raise ValueError("matrix must be square")
        self.rows = rows

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, d: int) -> "RationalMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls(tuple(tuple(one if i == j else zero for j in range(d)) for i in range(d)))

    @classmethod
    def zero(cls, d: int) -> "RationalMatrix":
        zero = Fraction(0)
        return cls(tuple(tuple(zero for _ in range(d)) for _ in range(d)))

    @classmethod
    def from_superdiagonal(cls, values) -> "RationalMatrix":
        """(g+1)x(g+1) matrix whose only nonzero entries sit on the first
        superdiagonal, taken from `values` (length g)."""
        vals = [_as_fraction(v) for v in values]
        d = len(vals) + 1
        zero = Fraction(0)
        rows = [[zero] * d for _ in range(d)]
        for i, v in enumerate(vals):
            rows[i][i + 1] = v
        return cls(rows)

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"RationalMatrix[{body}]"

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.dim != other.dim:
            raise DimensionMismatchError(f"{self.dim} != {other.dim}")
        return RationalMatrix(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows))
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.dim != other.dim:
            raise DimensionMismatchError(f"{self.dim} != {other.dim}")
        return RationalMatrix(
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows))
        )

    def scale(self, c) -> "RationalMatrix":
        c = _as_fraction(c)
        return RationalMatrix(tuple(tuple(c * x for x in row) for row in self.rows))

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if not isinstance(other, RationalMatrix):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionMismatchError(f"{self.dim} != {other.dim}")
        d = self.dim
        zero = Fraction(0)
        brows = other.rows
        out = []
        for arow in self.rows:
            acc = [zero] * d
            # skip zero entries; powers of superdiagonal matrices stay sparse
            for k, a in enumerate(arow):
                if a:
                    for j, b in enumerate(brows[k]):
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return RationalMatrix(tuple(out))

    def __pow__(self, n: int) -> "RationalMatrix":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a natural number")
        result = RationalMatrix.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def is_integral(self) -> bool:
        """True iff every entry has denominator 1."""
        return all(x.denominator == 1 for row in self.rows for x in row)

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.dim)), Fraction(0))

    def denominator_lcm(self) -> int:
        """Least common multiple of all entry denominators (1 for 0x0)."""
        m = 1
        for row in self.rows:
            for x in row:
                m = m * x.denominator // math.gcd(m, x.denominator)
        return m

    def _leverrier(self):
        """Faddeev-LeVerrier recursion; returns the characteristic
        coefficients [a_1, ..., a_d] of x^d + a_1 x^(d-1) + ... + a_d."""
        d = self.dim
        coeffs = []
        ident = RationalMatrix.identity(d)
        m = self
        for k in range(1, d + 1):
            a_k = -m.trace() / k
            coeffs.append(a_k)
            if k < d:
                m = self * (m + a_k * ident)
        return coeffs

    def charpoly(self) -> "Polynomial":
        """Monic characteristic polynomial det(xI - A), exactly."""
        if self.dim == 0:
            return Polynomial.from_coeffs([1])
        a = self._leverrier()
        return Polynomial.from_coeffs(list(reversed(a)) + [Fraction(1)])

    def det(self) -> Fraction:
        if self.dim == 0:
            return Fraction(1)
        a = self._leverrier()
        return a[-1] if self.dim % 2 == 0 else -a[-1]

    def adjugate(self) -> "RationalMatrix":
        """Adjugate matrix, satisfying A * adj(A) = adj(A) * A = det(A) * I."""
        d = self.dim
        if d == 0:
            return self
        a = self._leverrier()
        # Horner evaluation of A^(d-1) + a_1 A^(d-2) + ... + a_(d-1) I
        ident = RationalMatrix.identity(d)
        acc = ident
        for k in range(1, d):
            acc = self * acc + a[k - 1] * ident
        return acc if d % 2 == 1 else acc.scale(-1)

    def minpoly(self) -> "Polynomial":
        """Monic minimal polynomial, by finding the least k such that the
        vectorized powers I, A, ..., A^k are linearly dependent."""
        d = self.dim
        if d == 0:
            return Polynomial.from_coeffs([1])
        zero = Fraction(0)
        # echelon basis of vectorized powers, with combination tracking
        basis = []  # (pivot index, reduced vector, combination over earlier powers)
        power = RationalMatrix.identity(d)
        k = 0
        while True:
            vec = [x for row in power.rows for x in row]
            combo = [zero] * k + [Fraction(1)]
            for pivot, bvec, bcombo in basis:
                f = vec[pivot]
                if f:
                    ratio = f / bvec[pivot]
                    vec = [a - ratio * b for a, b in zip(vec, bvec)]
                    for i, c in enumerate(bcombo):
                        combo[i] -= ratio * c
            pivot = next((i for i, x in enumerate(vec) if x), None)
            if pivot is None:
                # A^k = -(combo[0] I + ... + combo[k-1] A^(k-1)) up to sign fix
                lead = combo[k]
                coeffs = [c / lead for c in combo[:k]] + [Fraction(1)]
                return Polynomial.from_coeffs(coeffs)
            basis.append((pivot, vec, combo))
            power = power * self
            k += 1


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return a * b


def mat_pow(a: RationalMatrix, n: int) -> RationalMatrix:
    return a ** n


def kron(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Kronecker product; dimensions multiply and (A x B)^n = A^n x B^n."""
    db = b.dim
    rows = []
    for arow in a.rows:
        for brow in b.rows:
            rows.append(tuple(x * y for x in arow for y in brow))
    out_dim = a.dim * db
    assert all(len(r) == out_dim for r in rows)
    return RationalMatrix(tuple(rows))


def direct_sum(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Block-diagonal sum; dimensions add and (A + B)^n = A^n + B^n blockwise."""
    da, db = a.dim, b.dim
    zero = Fraction(0)
    rows = [tuple(row) + (zero,) * db for row in a.rows]
    rows += [(zero,) * da + tuple(row) for row in b.rows]
    return RationalMatrix(tuple(rows))


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with rational coefficients, constant term first.

    The zero polynomial is the empty tuple; otherwise the leading
    coefficient is nonzero.
    """

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coeffs) -> "Polynomial":
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __call__(self, x) -> Fraction:
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def of_matrix(self, a: RationalMatrix) -> RationalMatrix:
        """Evaluate at a square matrix (constant term times the identity)."""
        acc = RationalMatrix.zero(a.dim)
        ident = RationalMatrix.identity(a.dim)
        for c in reversed(self.coeffs):
            acc = a * acc + c * ident
        return acc

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        den = other.coeffs
        quot = [Fraction(0)] * max(0, len(rem) - len(den) + 1)
        while len(rem) >= len(den):
            factor = rem[-1] / den[-1]
            shift = len(rem) - len(den)
            quot[shift] = factor
            for i, c in enumerate(den):
                rem[shift + i] -= factor * c
            while rem and rem[-1] == 0:
                rem.pop()
            if not rem:
                break
        return Polynomial.from_coeffs(quot), Polynomial.from_coeffs(rem)

    def divides(self, other: "Polynomial") -> bool:
        """True iff self divides other exactly (zero remainder)."""
        _, rem = other.divmod(self)
        return rem.is_zero()

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" + (f"^{i}" if i > 1 else "")
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def char_poly(a: RationalMatrix) -> Polynomial:
    return a.charpoly()


def min_poly(a: RationalMatrix) -> Polynomial:
    return a.minpoly()


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        return -g, -x, -y
    return g, x, y


def hnf_with_transform(matrix) -> tuple[list[list[int]], list[list[int]]]:
    """Column-style Hermite normal form with its unimodular transform.

    Returns (H, U) with M*U = H, U unimodular.  Convention used everywhere
    in this package: pivots walk down and right, each pivot is positive,
    entries in a pivot row to the left of the pivot are reduced into
    [0, pivot), and non-pivot columns of H are zero.  For a square
    full-rank input H is lower triangular and canonically unique.
    """
    h = [list(map(int, row)) for row in matrix]
    nrows = len(h)
    ncols = len(h[0]) if nrows else 0
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def colop(j1, j2, a, b, c, d):
        # (col j1, col j2) <- (a*col j1 + b*col j2, c*col j1 + d*col j2)
        for rows in (h, u):
            for row in rows:
                x, y = row[j1], row[j2]
                row[j1] = a * x + b * y
                row[j2] = c * x + d * y

    col = 0
    for row in range(nrows):
        if col >= ncols:
            break
        j = next((jj for jj in range(col, ncols) if h[row][jj]), None)
        if j is None:
            continue
        if j != col:
            colop(col, j, 0, 1, 1, 0)
        for j in range(col + 1, ncols):
            if h[row][j]:
                a, b = h[row][col], h[row][j]
                g, x, y = _xgcd(a, b)
                # pivot column becomes the gcd combination, column j is zeroed
                colop(col, j, x, y, -(b // g), a // g)
        if h[row][col] < 0:
            for rows in (h, u):
                for r in rows:
                    r[col] = -r[col]
        p = h[row][col]
        for j in range(col):
            q = h[row][j] // p
            if q:
                for rows in (h, u):
                    for r in rows:
                        r[j] -= q * r[col]
        col += 1
    return h, u


def hnf(matrix) -> list[list[int]]:
    """Canonical column HNF basis of the lattice spanned by the columns of a
    square integer matrix.  Raises RankDeficientError if the columns do not
    span a full-rank lattice."""
    rows = [list(map(int, r)) for r in matrix]
    d = len(rows)
    if any(len(r) != d for r in rows):
        raise ValueError("expected a square matrix")
    h, _ = hnf_with_transform(rows)
    if any(h[i][i] == 0 for i in range(d)):
        raise RankDeficientError("columns do not span a full-rank lattice")
    return h


@dataclass(frozen=True)
class IntegerLattice:
    """Full-rank sublattice of Z^d, stored by its canonical HNF basis.

    `basis` is a square integer matrix whose columns are the basis; it is
    lower triangular with positive diagonal, so two descriptions of the
    same lattice compare equal.
    """

    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_generators(cls, matrix) -> "IntegerLattice":
        h = hnf(matrix)
        return cls(tuple(tuple(row) for row in h))

    @classmethod
    def standard(cls, d: int) -> "IntegerLattice":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def index(self) -> int:
        """Index in Z^d (product of the diagonal)."""
        out = 1
        for i in range(self.dim):
            out *= self.basis[i][i]
        return out

    def contains(self, vector) -> bool:
        """Membership by forward substitution against the triangular basis."""
        v = [int(x) for x in vector]
        b = self.basis
        for i in range(self.dim):
            r = v[i]
            if r % b[i][i]:
                return False
            q = r // b[i][i]
            if q:
                for k in range(i, self.dim):
                    v[k] -= q * b[k][i]
        return True
