"""
Exact Algebra Module

Integer homology of a torus (rank 2), gluing-matrix actions and positive
rationals in lowest terms. Python integers are unbounded, so every value here
is exact; nothing is ever converted to float.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import List, Optional, Tuple

from .errors import BasisError, GluingMatrixError, ZeroSlopeError

logger = logging.getLogger(__name__)

# Raw (p, q, r, s) entries of a 2x2 integer matrix
MatrixEntries = Tuple[int, int, int, int]


@dataclass(frozen=True)
class HomologyClass:
    """
    A class a[alpha] + b[beta] in H_1 of one side of a torus.

    Attributes:
        a: coefficient on the section (boundary) curve alpha
        b: coefficient on the fiber beta
        basis: tag of the torus side whose (alpha, beta) basis is meant
    """
    a: int
    b: int
    basis: str

    @property
    def is_horizontal(self) -> bool:
        """Horizontal-admissible iff the section coefficient is nonzero."""
        return self.a != 0

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(-self.a, -self.b, self.basis)

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        _require_same_basis(self, other)
        return HomologyClass(self.a + other.a, self.b + other.b, self.basis)

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        return self + (-other)

    def coefficients(self) -> Tuple[int, int]:
        return (self.a, self.b)

    def same_curve(self, other: "HomologyClass") -> bool:
        """True if the classes agree up to orientation of the curve."""
        _require_same_basis(self, other)
        return self == other or self == -other


def _require_same_basis(u: HomologyClass, v: HomologyClass) -> None:
    if u.basis != v.basis:
        raise BasisError(f"basis mismatch: {u.basis!r} vs {v.basis!r}")


def wedge(u: HomologyClass, v: HomologyClass) -> int:
    """
    Algebraic intersection number u . v on the torus.

    Args:
        u: first class
        v: second class, in the same basis as u

    Returns:
        int: u.a * v.b - u.b * v.a

    Raises:
        BasisError: if the classes carry different basis tags

    Example:
        >>> wedge(HomologyClass(1, 2, "T"), HomologyClass(3, -2, "T"))
        -8
    """
    _require_same_basis(u, v)
    return u.a * v.b - u.b * v.a


def determinant(entries: MatrixEntries) -> int:
    p, q, r, s = entries
    return p * s - q * r


def apply_entries(
    entries: MatrixEntries,
    c: HomologyClass,
    target_basis: str
) -> HomologyClass:
    """Apply a raw matrix to a class without checking any matrix invariant."""
    p, q, r, s = entries
    return HomologyClass(p * c.a + q * c.b, r * c.a + s * c.b, target_basis)


def matrix_violations(entries: MatrixEntries) -> List[str]:
    """
    List the gluing-matrix invariants that the raw entries break.

    Returns:
        list: human-readable messages, empty if the matrix is a valid
              simple gluing matrix
    """
    problems = []
    det = determinant(entries)
    if abs(det) != 1:
        problems.append(f"|det| = {abs(det)}, expected 1 (not a torus homeomorphism)")
    q = entries[1]
    if abs(q) != 1:
        problems.append(
            f"|q| = {abs(q)}, expected 1 (fibers must meet with intersection number 1)"
        )
    return problems


@dataclass(frozen=True)
class GluingMatrix:
    """
    Matrix J = (p q / r s) of a JSJ torus, acting near side -> far side.

    Construction rejects matrices that are not simple gluings.
    """
    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        problems = matrix_violations(self.entries)
        if problems:
            raise GluingMatrixError(
                f"invalid gluing matrix {self.rows()}: " + "; ".join(problems)
            )

    @property
    def entries(self) -> MatrixEntries:
        return (self.p, self.q, self.r, self.s)

    @property
    def det(self) -> int:
        return determinant(self.entries)

    def rows(self) -> List[List[int]]:
        return [[self.p, self.q], [self.r, self.s]]

    def inverse(self) -> MatrixEntries:
        """Entries of J^-1; integral because det = +-1."""
        d = self.det
        return (d * self.s, -d * self.q, -d * self.r, d * self.p)


def transport(
    J: GluingMatrix,
    c: HomologyClass,
    far_basis: str,
    near_basis: Optional[str] = None
) -> HomologyClass:
    """
    Push a near-side class across the torus into the far-side basis.

    Args:
        J: gluing matrix of the torus
        c: class in the near-side basis
        far_basis: tag given to the result
        near_basis: if given, c must carry this tag

    Returns:
        HomologyClass: (p*a + q*b, r*a + s*b) tagged far_basis

    Raises:
        BasisError: if near_basis is given and c is tagged otherwise
    """
    if near_basis is not None and c.basis != near_basis:
        raise BasisError(f"expected a class in {near_basis!r}, got {c.basis!r}")
    return apply_entries(J.entries, c, far_basis)


def transport_back(
    J: GluingMatrix,
    c: HomologyClass,
    near_basis: str,
    far_basis: Optional[str] = None
) -> HomologyClass:
    """Inverse of transport: far-side class back into the near-side basis."""
    if far_basis is not None and c.basis != far_basis:
        raise BasisError(f"expected a class in {far_basis!r}, got {c.basis!r}")
    return apply_entries(J.inverse(), c, near_basis)


@total_ordering
@dataclass(frozen=True)
class PositiveRational:
    """
    Exact positive rational number in lowest terms.

    Used for slopes, spiralities and governors. Always prints as "p/q",
    including when q = 1.
    """
    numerator: int
    denominator: int

    def __post_init__(self):
        if self.numerator <= 0 or self.denominator <= 0:
            raise ValueError(f"not positive: {self.numerator}/{self.denominator}")
        if gcd(self.numerator, self.denominator) != 1:
            raise ValueError(f"not in lowest terms: {self.numerator}/{self.denominator}")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "PositiveRational":
        return reduce(value.numerator, value.denominator)

    @classmethod
    def one(cls) -> "PositiveRational":
        return cls(1, 1)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def reciprocal(self) -> "PositiveRational":
        return PositiveRational(self.denominator, self.numerator)

    def is_one(self) -> bool:
        return self.numerator == 1 and self.denominator == 1

    def __mul__(self, other: "PositiveRational") -> "PositiveRational":
        if not isinstance(other, PositiveRational):
            return NotImplemented
        return PositiveRational.from_fraction(self.as_fraction() * other.as_fraction())

    def __truediv__(self, other: "PositiveRational") -> "PositiveRational":
        if not isinstance(other, PositiveRational):
            return NotImplemented
        return self * other.reciprocal()

    def __pow__(self, exponent: int) -> "PositiveRational":
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        return PositiveRational(self.numerator ** exponent, self.denominator ** exponent)

    def __lt__(self, other: "PositiveRational") -> bool:
        if not isinstance(other, PositiveRational):
            return NotImplemented
        # cross-multiplication, denominators are positive
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def reduce(num: int, den: int) -> PositiveRational:
    """
    |num| / |den| in lowest terms.

    Raises:
        ZeroSlopeError: if either argument is zero

    Example:
        >>> str(reduce(6, -4))
        '3/2'
    """
    if num == 0 or den == 0:
        raise ZeroSlopeError(f"cannot form a slope from {num}/{den}")
    num, den = abs(num), abs(den)
    g = gcd(num, den)
    return PositiveRational(num // g, den // g)


def product(values) -> PositiveRational:
    """Exact product of positive rationals; the empty product is 1/1."""
    total = Fraction(1)
    for value in values:
        total *= value.as_fraction()
    return PositiveRational.from_fraction(total)
