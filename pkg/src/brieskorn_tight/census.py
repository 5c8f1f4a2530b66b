"""Census of the tight contact structures on the n-th member of the family.

The isotopy classes are indexed by pairs (i, j) with 0 <= i <= n-2,
|j| <= n-i-2 and j = n-i (mod 2); there are n(n-1)/2 of them, arranged as a
triangle with (n-2, 0) on top.  The index i counts full-twist layers carried
over from the infinite-twisting limit, and j is the rotation number of the
stabilized fiber knot the surgery is performed on.

The canonical ordering everywhere is ascending lexicographic in (i, j).
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class DescriptorError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ContactDescriptor:
    n: int
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DescriptorError("n must be >= 2")
        if not 0 <= self.i <= self.n - 2:
            raise DescriptorError(f"index i={self.i} out of range for n={self.n}")
        if abs(self.j) > self.n - self.i - 2:
            raise DescriptorError(f"index j={self.j} out of range for (n, i)=({self.n}, {self.i})")
        if (self.j - (self.n - self.i)) % 2 != 0:
            raise DescriptorError(f"parity violated: j={self.j} with n-i={self.n - self.i}")

    def __str__(self) -> str:
        return f"({self.i},{self.j})@{self.n}"


def index_set(n: int) -> list[tuple[int, int]]:
    """All (i, j) pairs for the given n, ascending lexicographic."""
    if n < 2:
        raise DescriptorError("n must be >= 2")
    pairs = []
    for i in range(n - 1):
        width = n - i - 2
        pairs.extend((i, j) for j in range(-width, width + 1, 2))
    return pairs


def descriptors(n: int) -> list[ContactDescriptor]:
    return [ContactDescriptor(n, i, j) for i, j in index_set(n)]


def subtriangle(n: int, i: int, j: int) -> list[tuple[int, int]]:
    """Sub-triangle with top vertex (i, j): pairs (k, l) with k <= i, |l - j| <= i - k.

    Its bottom row is (0, j-i), (0, j-i+2), ..., (0, j+i): exactly the index
    range of the alternating binomial combination attached to (i, j).
    """
    ContactDescriptor(n, i, j)
    members = set(index_set(n))
    out = []
    for k in range(i + 1):
        for l in range(j - (i - k), j + (i - k) + 1):
            if (k, l) in members:
                out.append((k, l))
    return sorted(out)


def triangle_rows(n: int) -> list[list[tuple[int, int]]]:
    """Rows of the display triangle, top row i = n-2 first."""
    if n < 2:
        raise DescriptorError("n must be >= 2")
    rows = []
    for i in range(n - 2, -1, -1):
        width = n - i - 2
        rows.append([(i, j) for j in range(-width, width + 1, 2)])
    return rows


@dataclass(frozen=True)
class LegendrianPresentation:
    """Stabilization record of the fiber knot inside the i-th twisted structure."""

    twisting: int
    rotation: int
    pos_stabs: int
    neg_stabs: int
    torsion_index: int

    def __post_init__(self) -> None:
        if self.pos_stabs < 0 or self.neg_stabs < 0 or self.torsion_index < 0:
            raise ValueError("stabilization counts must be non-negative")
        if self.rotation != self.pos_stabs - self.neg_stabs:
            raise ValueError("rotation must equal pos_stabs - neg_stabs")
        if self.twisting != -self.torsion_index - 1 - (self.pos_stabs + self.neg_stabs):
            raise ValueError("twisting must drop by one per stabilization from -i-1")


def fiber_knot(i: int) -> LegendrianPresentation:
    """The unstabilized fiber knot: twisting -i-1, rotation 0."""
    if i < 0:
        raise ValueError("torsion index must be non-negative")
    return LegendrianPresentation(-i - 1, 0, 0, 0, i)


def stabilize(p: LegendrianPresentation, sign: int) -> LegendrianPresentation:
    """One stabilization: twisting -1, rotation +-1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return LegendrianPresentation(
        p.twisting - 1,
        p.rotation + sign,
        p.pos_stabs + (sign == 1),
        p.neg_stabs + (sign == -1),
        p.torsion_index,
    )


def descriptor_from_stabs(i: int, l: int, r: int) -> ContactDescriptor:
    """Descriptor reached by surgery after l positive and r negative stabilizations."""
    if i < 0 or l < 0 or r < 0:
        raise ValueError("counts must be non-negative")
    return ContactDescriptor(l + r + i + 2, i, l - r)


def stabs_from_descriptor(d: ContactDescriptor) -> tuple[int, int, int]:
    """Unique (i, l, r) with n = l+r+i+2 and j = l-r."""
    total = d.n - d.i - 2
    l = (total + d.j) // 2
    r = (total - d.j) // 2
    return d.i, l, r


def stabilization_count(n: int, i: int) -> int:
    """Stabilizations applied to the fiber knot to present a structure at (n, i).

    This is n-i-2: the surgery coefficient is one less than the contact
    framing, so -i-1 - s - 1 = -n forces s = n-i-2, and only that value has
    the parity the rotation constraint j = n-i (mod 2) requires.  (The prose
    definition this implements says n-i-1; both checks above pin n-i-2.)
    """
    if not 0 <= i <= n - 2:
        raise DescriptorError(f"index i={i} out of range for n={n}")
    return n - i - 2


def legendrian_for(d: ContactDescriptor) -> LegendrianPresentation:
    i, l, r = stabs_from_descriptor(d)
    p = fiber_knot(i)
    for _ in range(l):
        p = stabilize(p, +1)
    for _ in range(r):
        p = stabilize(p, -1)
    return p


def surgery_data_for_fiber(i: int) -> tuple[int, str]:
    """Twisting of the fiber knot in the i-th structure, and what -n surgery on it yields."""
    if i < 0:
        raise ValueError("torsion index must be non-negative")
    return -i - 1, "surgery with coefficient -n on the fiber knot yields the n-th sphere"


@dataclass(frozen=True)
class SurgeryTag:
    """Name of a contact manifold appearing in a surgery factorization."""

    manifold: str  # "bundle" or "sphere"
    n: int | None
    i: int
    j: int | None

    def __str__(self) -> str:
        if self.manifold == "bundle":
            return f"bundle:xi_{self.i}"
        return f"sphere[{self.n}]:({self.i},{self.j})"


@dataclass(frozen=True)
class SurgeryFactorization:
    """The two factorizations of the surgery reaching a given structure.

    Route A attaches the torsion-reducing link first (staying on the bundle,
    dropping the twisting index by one), then the stabilized fiber knot.
    Route B attaches the fiber knot first (landing one sphere up the family),
    then the torsion-reducing link.  Both end at ``target``.
    """

    source: SurgeryTag
    route_a: tuple[SurgeryTag, SurgeryTag]
    route_b: tuple[SurgeryTag, SurgeryTag]
    handle_counts: tuple[int, int]  # (torsion link, fiber knot)

    @property
    def target(self) -> SurgeryTag:
        return self.route_a[1]

    def __post_init__(self) -> None:
        if self.route_a[1] != self.route_b[1]:
            raise ValueError("routes must reach the same target")


def factorizations(d: ContactDescriptor) -> SurgeryFactorization:
    target = SurgeryTag("sphere", d.n, d.i, d.j)
    return SurgeryFactorization(
        source=SurgeryTag("bundle", None, d.i + 1, None),
        route_a=(SurgeryTag("bundle", None, d.i, None), target),
        route_b=(SurgeryTag("sphere", d.n + 1, d.i + 1, d.j), target),
        handle_counts=(1, 1),
    )


# -- output formats ----------------------------------------------------------


def census_record(d: ContactDescriptor) -> dict:
    i, l, r = stabs_from_descriptor(d)
    p = legendrian_for(d)
    return {
        "n": d.n,
        "i": d.i,
        "j": d.j,
        "l": l,
        "r": r,
        "twisting": p.twisting,
        "rotation": p.rotation,
    }


def census_json(n: int) -> str:
    records = [census_record(d) for d in descriptors(n)]
    return json.dumps(records, indent=None, separators=(",", ":"), sort_keys=True)


def parse_census_json(text: str) -> list[dict]:
    return json.loads(text)


def census_table(n: int) -> str:
    """ASCII triangle of (i, j) labels, mirroring the display ordering."""
    rows = triangle_rows(n)
    cells = [[f"({i},{j})" for i, j in row] for row in rows]
    width = max(len(c) for row in cells for c in row) + 2
    lines = []
    total = len(rows[-1]) * width
    for row in cells:
        line = "".join(c.center(width) for c in row)
        lines.append(line.center(total).rstrip())
    return "\n".join(lines) + "\n"
