"""Exact contact-invariant calculus for the census, in a half-integer Laurent ring.

Representatives are normalized so that the bottom-row structures map to the
monomials t^(j/2); with that choice the cobordism down the family acts as
multiplication by t^(1/2) - t^(-1/2), and the invariant of the structure at
(i, j) is (t^(1/2) - t^(-1/2))^i * t^(j/2).

The alternating binomial combination of bottom-row invariants equals that
canonical representative up to the global sign (-1)^i; both forms are exposed
and the sign relation is asserted by the test suite.  Conjugation is the ring
involution t^(1/2) -> t^(-1/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Optional

from .census import ContactDescriptor, descriptors, index_set
from .laurent import STEP, HalfLaurent


def basis_monomial(j: int) -> HalfLaurent:
    """Normalized invariant t^(j/2) of the bottom-row structure with rotation j."""
    return HalfLaurent.half_power(j)


def invariant(d: ContactDescriptor) -> HalfLaurent:
    """Canonical representative (t^(1/2) - t^(-1/2))^i * t^(j/2)."""
    return (STEP ** d.i) * basis_monomial(d.j)


def invariant_closed_form(d: ContactDescriptor) -> HalfLaurent:
    return invariant(d)


def binomial_combination(d: ContactDescriptor) -> HalfLaurent:
    """Alternating binomial combination of bottom-row invariants.

    Sum over k of (-1)^k C(i, k) t^((j-i+2k)/2); equals (-1)^i times the
    canonical representative.
    """
    total = HalfLaurent.zero()
    for k in range(d.i + 1):
        total = total + basis_monomial(d.j - d.i + 2 * k).scale((-1) ** k * comb(d.i, k))
    return total


def conjugate(p: HalfLaurent) -> HalfLaurent:
    return p.conjugate()


def map_step_multiplication(p: HalfLaurent) -> HalfLaurent:
    """Multiplication by t^(1/2) - t^(-1/2)."""
    return STEP * p


# The cobordism staying on the torus bundle and the one descending the family
# act identically on normalized representatives.
map_f_w_inf = map_step_multiplication
map_f_w_n = map_step_multiplication


def map_f_v_inf(p: HalfLaurent) -> HalfLaurent:
    """The capping cobordism acts by the conjugation t -> t^(-1)."""
    return p.conjugate()


def map_f_v_n(d: ContactDescriptor) -> HalfLaurent:
    """Normalization map: the invariant of d as a concrete Laurent polynomial."""
    return invariant(d)


@dataclass(frozen=True)
class CobordismMapSpec:
    """Tag for one of the four cobordism maps used in the commuting square."""

    kind: str  # "V_n", "W_n", "W_inf", "V_inf"
    n: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in ("V_n", "W_n", "W_inf", "V_inf"):
            raise ValueError(f"unknown map kind {self.kind!r}")
        if self.kind in ("V_n", "W_n") and (self.n is None or self.n < 2):
            raise ValueError(f"map {self.kind} needs a family parameter n >= 2")

    def apply(self, value):
        if self.kind == "V_n":
            if not isinstance(value, ContactDescriptor) or value.n != self.n:
                raise ValueError("V_n applies to descriptors at level n")
            return map_f_v_n(value)
        if self.kind == "V_inf":
            return map_f_v_inf(value)
        return map_step_multiplication(value)


@dataclass(frozen=True)
class InvariantVector:
    """Coordinates of an invariant over the bottom-row basis t^(j'/2)."""

    n: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.n - 1:
            raise ValueError("coordinate vector must have length n-1")

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __neg__(self) -> "InvariantVector":
        return InvariantVector(self.n, tuple(-c for c in self.coords))


def basis_exponents(n: int) -> list[int]:
    """Rotation numbers of the bottom-row basis: -n+2, -n+4, ..., n-2."""
    return list(range(-n + 2, n - 1, 2))


def coordinates(d: ContactDescriptor) -> InvariantVector:
    p = invariant(d)
    return InvariantVector(d.n, tuple(p.coefficient(j) for j in basis_exponents(d.n)))


def coordinate_matrix(n: int) -> list[list[int]]:
    """Rows are the coordinate vectors of all census members, canonical order."""
    return [list(coordinates(d).coords) for d in descriptors(n)]


def verify_distinctness(n: int) -> tuple[bool, Optional[tuple[ContactDescriptor, ContactDescriptor]]]:
    """All invariants nonzero and pairwise distinct, even up to sign."""
    ds = descriptors(n)
    vectors = [coordinates(d) for d in ds]
    for d, v in zip(ds, vectors):
        if v.is_zero:
            return False, (d, d)
    for a in range(len(ds)):
        for b in range(a + 1, len(ds)):
            if vectors[a] == vectors[b] or vectors[a] == -vectors[b]:
                return False, (ds[a], ds[b])
    return True, None


def verify_diagram(n: int) -> bool:
    """Commutativity of the square on every census member at level n.

    Descending the family then normalizing agrees with normalizing then
    multiplying by t^(1/2) - t^(-1/2); at i = 0 this is the three-term
    recurrence expressing the (1, j) invariant from its neighbors.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    for i, j in index_set(n):
        down = invariant(ContactDescriptor(n + 1, i + 1, j))
        across = map_step_multiplication(invariant(ContactDescriptor(n, i, j)))
        if down != across:
            return False
        if i == 0:
            three_term = basis_monomial(j + 1) - basis_monomial(j - 1)
            if across != three_term:
                return False
    return map_step_multiplication(HalfLaurent.zero()) == HalfLaurent.zero()


def pascal_recurrence_holds(n: int) -> bool:
    """invariant(i+1, j) = invariant(i, j+1) - invariant(i, j-1), one level up."""
    for i, j in index_set(n):
        lhs = invariant(ContactDescriptor(n + 1, i + 1, j))
        rhs = invariant(ContactDescriptor(n + 1, i, j + 1)) - invariant(ContactDescriptor(n + 1, i, j - 1))
        if lhs != rhs:
            return False
    return True


# -- gradings ----------------------------------------------------------------


def gompf_theta(c1_squared: int, euler: int, signature: int) -> int:
    """Three-dimensional homotopy invariant from filling characteristic numbers."""
    return c1_squared - 2 * euler - 3 * signature


def contact_degree(theta: int) -> Fraction:
    """Degree of the contact class: -theta/4 - 1/2."""
    return Fraction(-theta, 4) - Fraction(1, 2)


def degree_shift(k: int) -> int:
    """Degree shift of the k-th summand of the surgery-triangle map: -k(k+1) <= 0."""
    c1_squared = -((2 * k + 1) ** 2)
    shift4 = c1_squared - 2 * 1 - 3 * (-1)
    assert shift4 % 4 == 0
    shift = shift4 // 4
    assert shift == -k * (k + 1) and shift <= 0
    return shift


def spinc_pairing(k: int) -> int:
    """Pairing of the k-th first Chern class with the capped surface: 2k+1."""
    return 2 * k + 1


@dataclass(frozen=True)
class GradingData:
    c1_squared: int
    euler: int
    signature: int

    @property
    def theta(self) -> int:
        return gompf_theta(self.c1_squared, self.euler, self.signature)

    @property
    def degree(self) -> Fraction:
        return contact_degree(self.theta)


@dataclass(frozen=True)
class HfRankData:
    """Ranks and degrees of the Floer summands housing the contact classes."""

    label: str
    summands: tuple[tuple[Fraction, int], ...]  # (degree, rank)


def hf_rank_data(n: Optional[int]) -> HfRankData:
    """None means the fibered limit manifold; each integer n >= 2 is a sphere."""
    if n is None:
        return HfRankData("bundle", ((Fraction(1, 2), 1), (Fraction(3, 2), 1)))
    if n < 2:
        raise ValueError("n must be >= 2")
    return HfRankData(f"sphere[{n}]", ((Fraction(1), n - 1),))


# -- output formats ----------------------------------------------------------


def invariant_record(d: ContactDescriptor) -> dict:
    return {"n": d.n, "i": d.i, "j": d.j, "monomials": invariant(d).to_pairs()}


def invariant_records(n: int) -> list[dict]:
    return [invariant_record(d) for d in descriptors(n)]


def records_to_json(records: Iterable[dict]) -> str:
    import json

    return json.dumps(list(records), indent=None, separators=(",", ":"), sort_keys=True)


def invariant_table(n: int) -> str:
    lines = []
    for d in descriptors(n):
        lines.append(f"({d.i},{d.j})  {invariant(d)}")
    return "\n".join(lines) + "\n"
