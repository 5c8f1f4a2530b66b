"""Exact Laurent polynomials in one variable with exponents in (1/2)Z.

Exponents are stored as doubled integers so that half-integers stay exact;
coefficients are unbounded Python integers.  Values are immutable and hashable,
and the ring operations are implemented directly on sparse exponent maps.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Iterator


class HalfLaurent:
    """Sparse Laurent polynomial over Z in t^(1/2)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | Iterable[tuple[int, int]] = ()):
        cleaned: dict[int, int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exp2, coeff in items:
            if coeff:
                cleaned[int(exp2)] = cleaned.get(int(exp2), 0) + int(coeff)
        object.__setattr__(self, "_terms", {e: c for e, c in cleaned.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("HalfLaurent is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "HalfLaurent":
        return HalfLaurent()

    @staticmethod
    def one() -> "HalfLaurent":
        return HalfLaurent({0: 1})

    @staticmethod
    def monomial(coeff: int, doubled_exponent: int) -> "HalfLaurent":
        """coeff * t^(doubled_exponent / 2)."""
        return HalfLaurent({doubled_exponent: coeff})

    @staticmethod
    def half_power(doubled_exponent: int) -> "HalfLaurent":
        return HalfLaurent.monomial(1, doubled_exponent)

    # -- queries -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, doubled_exponent: int) -> int:
        return self._terms.get(doubled_exponent, 0)

    def terms(self) -> Iterator[tuple[int, int]]:
        """(doubled exponent, coefficient) pairs in ascending exponent order."""
        return iter(sorted(self._terms.items()))

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    def exponents(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(e, 2) for e in self.support())

    # -- ring structure ------------------------------------------------------

    def __add__(self, other: "HalfLaurent") -> "HalfLaurent":
        merged = dict(self._terms)
        for e, c in other._terms.items():
            merged[e] = merged.get(e, 0) + c
        return HalfLaurent(merged)

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "HalfLaurent") -> "HalfLaurent":
        return self + (-other)

    def __mul__(self, other: "HalfLaurent") -> "HalfLaurent":
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return HalfLaurent(out)

    def scale(self, k: int) -> "HalfLaurent":
        return HalfLaurent({e: k * c for e, c in self._terms.items()})

    def __pow__(self, n: int) -> "HalfLaurent":
        if n < 0:
            raise ValueError("only non-negative powers are defined")
        result = HalfLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "HalfLaurent":
        """The involution t^(1/2) -> t^(-1/2)."""
        return HalfLaurent({-e: c for e, c in self._terms.items()})

    # -- comparisons and output ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HalfLaurent) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"HalfLaurent({sorted(self._terms.items())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for e, c in self.terms():
            body = _power_str(e)
            if body == "1":
                term = str(abs(c))
            elif abs(c) == 1:
                term = body
            else:
                term = f"{abs(c)}*{body}"
            if not chunks:
                chunks.append(term if c > 0 else f"-{term}")
            else:
                chunks.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(chunks)

    def to_pairs(self) -> list[list[int]]:
        return [[e, c] for e, c in self.terms()]

    @staticmethod
    def from_pairs(pairs: Iterable[Iterable[int]]) -> "HalfLaurent":
        return HalfLaurent((int(e), int(c)) for e, c in pairs)


def _power_str(doubled: int) -> str:
    if doubled == 0:
        return "1"
    if doubled == 2:
        return "t"
    if doubled % 2 == 0:
        return f"t^{doubled // 2}"
    return f"t^({doubled}/2)"


T = HalfLaurent.half_power(2)
T_HALF = HalfLaurent.half_power(1)
STEP = T_HALF - HalfLaurent.half_power(-1)  # t^(1/2) - t^(-1/2)


def binomial_difference_power(i: int, doubled_shift: int = 0) -> HalfLaurent:
    """(t^(1/2) - t^(-1/2))^i * t^(doubled_shift / 2), expanded term by term."""
    if i < 0:
        raise ValueError("negative power")
    return HalfLaurent(
        (doubled_shift + i - 2 * k, (-1) ** k * comb(i, k)) for k in range(i + 1)
    )
