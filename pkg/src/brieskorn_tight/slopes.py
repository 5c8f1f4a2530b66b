"""Exact slope arithmetic on the boundary tori of a small Seifert fibered space.

A slope is the isotopy class of an essential curve on a torus, recorded as a
coprime integer pair (p, q) with value q/p and infinity = (0, 1).  Unimodular
2x2 matrices act on slopes by acting on curve classes; this is how boundary
slopes are transported between a solid-torus neighborhood of a singular fiber
and its complement.  Negative continued fractions with all entries <= -2 back
the count of tight contact structures on solid tori.

Everything here is exact unbounded-integer arithmetic; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class SlopeError(ValueError):
    """Raised for slope inputs outside an operation's domain."""


@dataclass(frozen=True)
class Slope:
    """Curve class (p, q) on a torus, normalized; the slope value is q/p."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if (self.p, self.q) == (0, 0):
            raise SlopeError("zero curve class has no slope")
        if gcd(abs(self.p), abs(self.q)) != 1:
            raise SlopeError(f"non-primitive class ({self.p}, {self.q})")
        if self.p < 0 or (self.p == 0 and self.q != 1):
            raise SlopeError(f"non-normalized class ({self.p}, {self.q})")

    @property
    def is_infinite(self) -> bool:
        return self.p == 0

    def value(self) -> Fraction:
        if self.is_infinite:
            raise SlopeError("infinite slope has no rational value")
        return Fraction(self.q, self.p)

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.p == 1:
            return str(self.q)
        return f"{self.q}/{self.p}"


INFINITY = Slope(0, 1)


def normalize_slope(p: int, q: int) -> Slope:
    """Reduce (p, q) to the unique normalized representative of its slope."""
    if (p, q) == (0, 0):
        raise SlopeError("cannot normalize the zero pair")
    g = gcd(abs(p), abs(q))
    p, q = p // g, q // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return Slope(p, q)


def slope_from_value(value: Fraction | int) -> Slope:
    value = Fraction(value)
    return normalize_slope(value.denominator, value.numerator)


@dataclass(frozen=True)
class UnimodularMatrix:
    """2x2 integer matrix with determinant +-1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if abs(self.det) != 1:
            raise ValueError(f"matrix {self.rows()} is not unimodular")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __matmul__(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        return UnimodularMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "UnimodularMatrix":
        s = self.det  # +-1, so the adjugate divided by det stays integral
        return UnimodularMatrix(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    @staticmethod
    def identity() -> "UnimodularMatrix":
        return UnimodularMatrix(1, 0, 0, 1)


def mobius_apply(m: UnimodularMatrix, s: Slope) -> Slope:
    """Slope of the image curve class m . (p, q)."""
    return normalize_slope(*m.apply((s.p, s.q)))


# Attaching maps of the three solid-torus neighborhoods, and the gluing matrix
# of the fibering of the boundary-at-infinity manifold over the circle.


def attach_map_v1() -> UnimodularMatrix:
    return UnimodularMatrix(2, -1, 1, 0)


def attach_map_v2() -> UnimodularMatrix:
    return UnimodularMatrix(3, 1, -1, 0)


def attach_map_v3(n: int) -> UnimodularMatrix:
    if n < 2:
        raise ValueError("family parameter n must be >= 2")
    return UnimodularMatrix(6 * n - 1, 6, -n, -1)


def fiber_monodromy() -> UnimodularMatrix:
    return UnimodularMatrix(1, 1, -1, 0)


@dataclass(frozen=True)
class NcfExpansion:
    """Negative continued fraction [a_0, ..., a_k], all entries <= -2.

    Evaluates to a_0 - 1/(a_1 - 1/(... - 1/a_k)); this is the unique such
    expansion of any rational < -1 (and of the integers <= -2).
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("empty expansion")
        if any(a > -2 for a in self.coefficients):
            raise ValueError(f"entries must be <= -2: {self.coefficients}")

    def __len__(self) -> int:
        return len(self.coefficients)


def neg_continued_fraction(p: int, q: int) -> NcfExpansion:
    """Expand the rational p/q (q >= 1, p/q <= -1, not exactly -1)."""
    if q < 1:
        raise SlopeError("denominator must be >= 1")
    if p >= 0:
        raise SlopeError(f"{p}/{q} is non-negative; no negative expansion")
    coefficients = []
    while True:
        a = p // q  # floor; the tail keeps p/q < -1 so a <= -2 after step one
        if a > -2:
            raise SlopeError(f"no expansion with entries <= -2 exists for {p}/{q}")
        coefficients.append(a)
        rem = p - a * q
        if rem == 0:
            break
        p, q = -q, rem
    return NcfExpansion(tuple(coefficients))


def eval_ncf(e: NcfExpansion) -> Slope:
    value = Fraction(e.coefficients[-1])
    for a in reversed(e.coefficients[:-1]):
        value = a - 1 / value
    return slope_from_value(value)


def tight_count_solid_torus(s: Slope) -> int:
    """Number of tight contact structures on a solid torus with boundary slope s.

    For slope -p/q with p >= q >= 1 this is |(a_0+1)(a_1+1)...(a_{k-1}+1) a_k|
    over the expansion -p/q = [a_0, ..., a_k]; slope -1 carries the single
    standard-neighborhood structure.
    """
    if s.is_infinite:
        raise SlopeError("infinite boundary slope is out of domain")
    value = s.value()
    if value >= 0:
        raise SlopeError(f"slope {s} is not negative")
    if value == -1:
        return 1
    if value > -1:
        raise SlopeError(f"slope {s} is not of the form -p/q with p >= q >= 1")
    e = neg_continued_fraction(value.numerator, value.denominator)
    count = 1
    for a in e.coefficients[:-1]:
        count *= abs(a + 1)
    count *= abs(e.coefficients[-1])
    return count


def upper_bound_count(n: int) -> int:
    """Total solid-torus count over the admissible twisting levels: n(n-1)/2."""
    if n < 2:
        raise ValueError("n must be >= 2")
    total = sum(tight_count_solid_torus(Slope(1, -(n - k))) for k in range(1, n))
    assert total == n * (n - 1) // 2
    return total


def max_twisting_values(n: int) -> list[int]:
    """Candidate maximal twisting numbers -6k+1 for k = 1..n-1.

    The admissible range is taken as k = 1..n-1: that is the range the total
    count n(n-1)/2 forces, although the statement it comes from bounds k by
    0 < k < n-1.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    return [-6 * k + 1 for k in range(1, n)]


def exterior_slope_v3(n: int, boundary: Slope) -> Slope:
    """Slope in the complement of the third singular fiber for a given boundary slope."""
    return mobius_apply(attach_map_v3(n), boundary)


def edge_rounding_candidates(n: int, k: int) -> tuple[Slope, Slope]:
    """Both complement slopes -k/(6k-1) and -k/(6k+1), from -n+k and -n-k.

    The source text is ambiguous about which sign convention the rounded torus
    picks up; the internally consistent pairing sends -n+k to -k/(6k-1).
    Both images are exposed so callers can pin either convention.
    """
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    from_plus = exterior_slope_v3(n, slope_from_value(Fraction(-n + k)))
    from_minus = exterior_slope_v3(n, slope_from_value(Fraction(-n - k)))
    return from_plus, from_minus
