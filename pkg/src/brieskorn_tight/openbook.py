"""Symbolic open books: signed twist words, homology transvections, rewriting.

A page is a surface with named curves; each curve carries a class in a fixed
integer coordinate system, and the page carries a skew intersection form on
that coordinate system.  A Dehn twist acts on homology as the transvection
x -> x + sign * <x, c> * c, and a twist word acts by the left-to-right product
of those matrices.  That action, the Euler characteristic, and the reduction
of the fibered family to an SL(2, Z) monodromy are the three levels at which
word rewrites are verified here; the full mapping class group word problem is
out of scope.

The fibered family of books (one per torsion level i, with l and r
stabilization bands along the fiber knot) is generated combinatorially:
a base cell of one boundary-parallel positive twist and one negative meridian
twist, followed by i torsion regions of six such cells each (a full-twist
layer: the six-fold product of the two crossing generators is the identity),
followed by the stabilization bands.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .homology import IntMatrix
from .slopes import UnimodularMatrix


class OpenBookError(ValueError):
    pass


def standard_form(genus: int, boundary_count: int) -> IntMatrix:
    """Intersection form in the standard layout: symplectic genus pairs, then holes."""
    dim = 2 * genus + boundary_count - 1
    rows = [[0] * dim for _ in range(dim)]
    for t in range(genus):
        rows[2 * t][2 * t + 1] = 1
        rows[2 * t + 1][2 * t] = -1
    return IntMatrix.from_rows(rows)


@dataclass(frozen=True)
class PageSurface:
    genus: int
    boundary_count: int
    curve_names: tuple[str, ...]
    curve_classes: tuple[tuple[int, ...], ...]
    form: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.genus < 0 or self.boundary_count < 1:
            raise OpenBookError("page must have non-negative genus and boundary")
        if len(set(self.curve_names)) != len(self.curve_names):
            raise OpenBookError("duplicate curve names")
        dim = len(self.form)
        for row in self.form:
            if len(row) != dim:
                raise OpenBookError("intersection form must be square")
        for i in range(dim):
            for j in range(dim):
                if self.form[i][j] != -self.form[j][i]:
                    raise OpenBookError("intersection form must be skew-symmetric")
        for name, cls in zip(self.curve_names, self.curve_classes):
            if len(cls) != dim:
                raise OpenBookError(f"class of {name} has wrong length")

    @property
    def dim(self) -> int:
        return len(self.form)

    def index(self, name: str) -> int:
        try:
            return self.curve_names.index(name)
        except ValueError:
            raise OpenBookError(f"unknown curve {name!r}") from None

    def class_of(self, name: str) -> tuple[int, ...]:
        return self.curve_classes[self.index(name)]

    def pairing_vectors(self, x: tuple[int, ...], y: tuple[int, ...]) -> int:
        return sum(x[i] * self.form[i][j] * y[j] for i in range(self.dim) for j in range(self.dim))

    def pairing(self, a: str, b: str) -> int:
        return self.pairing_vectors(self.class_of(a), self.class_of(b))

    def with_curve(self, name: str, cls: tuple[int, ...]) -> "PageSurface":
        if name in self.curve_names:
            raise OpenBookError(f"curve {name!r} already present")
        return replace(
            self,
            curve_names=self.curve_names + (name,),
            curve_classes=self.curve_classes + (tuple(cls),),
        )


def make_page(genus: int, boundary_count: int, curves: dict[str, tuple[int, ...]],
              form: Optional[IntMatrix] = None) -> PageSurface:
    omega = form if form is not None else standard_form(genus, boundary_count)
    names = tuple(curves)
    return PageSurface(genus, boundary_count, names, tuple(tuple(curves[n]) for n in names), omega.data)


@dataclass(frozen=True)
class MarkedArc:
    """Properly embedded arc marker; destabilizing data for the curve it crosses."""

    name: str
    curve: str
    joins_distinct_boundaries: bool
    crossings_with_curve: int = 1


@dataclass(frozen=True)
class TorsionRegion:
    """One full-twist layer: six (hole twist, meridian twist, arc) cells."""

    name: str
    cells: tuple[tuple[str, str, str], ...]


@dataclass(frozen=True)
class AbstractOpenBook:
    page: PageSurface
    word: tuple[tuple[str, int], ...]
    arcs: tuple[MarkedArc, ...] = ()
    regions: tuple[TorsionRegion, ...] = ()
    roles: tuple[tuple[str, str], ...] = ()
    sweep: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        for name, sign in self.word:
            self.page.index(name)
            if sign not in (1, -1):
                raise OpenBookError("twist signs must be +1 or -1")
        if self.sweep is not None:
            for name in self.sweep:
                self.page.index(name)

    def role(self, key: str) -> Optional[str]:
        for k, name in self.roles:
            if k == key:
                return name
        return None


def euler_characteristic(book: AbstractOpenBook) -> int:
    return 2 - 2 * book.page.genus - book.page.boundary_count


def twist_matrix(page: PageSurface, name: str, sign: int) -> IntMatrix:
    """Transvection x -> x + sign * <x, c> * c as a matrix on the coordinate system."""
    c = page.class_of(name)
    dim = page.dim
    omega = page.form
    rows = []
    for x in range(dim):
        row = []
        for y in range(dim):
            # (c c^T Omega)_{xy} = c_x * sum_z c_z Omega_{z y}
            val = c[x] * sum(c[z] * omega[z][y] for z in range(dim))
            row.append((1 if x == y else 0) - sign * val)
        rows.append(row)
    return IntMatrix.from_rows(rows) if dim else IntMatrix(0, 0, ())


def h1_action(book: AbstractOpenBook) -> IntMatrix:
    """Word action on curve-class coordinates, twists applied left to right."""
    m = IntMatrix.identity(book.page.dim)
    for name, sign in book.word:
        m = twist_matrix(book.page, name, sign) @ m
    return m


def braid_relation_check(page: PageSurface, a: str, b: str) -> Optional[bool]:
    """T_a T_b T_a == T_b T_a T_b on homology; None when |<a, b>| != 1."""
    if abs(page.pairing(a, b)) != 1:
        return None
    ta = twist_matrix(page, a, +1)
    tb = twist_matrix(page, b, +1)
    return (ta @ tb @ ta).data == (tb @ ta @ tb).data


def braid_applicable_pairs(book: AbstractOpenBook) -> list[tuple[str, str]]:
    names = book.page.curve_names
    out = []
    for x in range(len(names)):
        for y in range(x + 1, len(names)):
            if abs(book.page.pairing(names[x], names[y])) == 1:
                out.append((names[x], names[y]))
    return out


# ---------------------------------------------------------------------------
# Lantern relation


@dataclass(frozen=True)
class LanternSite:
    """A four-holed sphere configuration: boundary curves d1..d4, interior s1..s3.

    s1 encircles (d1, d2), s2 encircles (d2, d3), s3 encircles (d1, d3).
    """

    boundary: tuple[str, str, str, str]
    interior: tuple[str, str, str]


def validate_lantern_site(page: PageSurface, site: LanternSite) -> None:
    c = [page.class_of(name) for name in site.boundary]
    s = [page.class_of(name) for name in site.interior]
    dim = page.dim
    if any(sum(c[k][z] for k in range(4)) != 0 for z in range(dim)):
        raise OpenBookError("site boundary classes must sum to zero")
    for x in range(4):
        for y in range(x + 1, 4):
            if page.pairing_vectors(c[x], c[y]) != 0:
                raise OpenBookError("site boundary classes must pair trivially")
    expected = [
        tuple(c[0][z] + c[1][z] for z in range(dim)),
        tuple(c[1][z] + c[2][z] for z in range(dim)),
        tuple(c[0][z] + c[2][z] for z in range(dim)),
    ]
    for got, want, name in zip(s, expected, site.interior):
        if tuple(got) != want:
            raise OpenBookError(f"interior curve {name!r} has the wrong class for its site")


def lantern_rewrite(book: AbstractOpenBook, site: LanternSite) -> AbstractOpenBook:
    """Swap one contiguous side of the lantern relation for the other.

    The word must contain the three interior positive twists consecutively,
    or the four boundary positive twists consecutively.  Homology action and
    Euler characteristic are unchanged and re-checked.
    """
    validate_lantern_site(book.page, site)
    interior = tuple((name, 1) for name in site.interior)
    boundary = tuple((name, 1) for name in site.boundary)
    word = book.word
    rewritten = None
    for pos in range(len(word)):
        if word[pos:pos + 3] == interior:
            rewritten = word[:pos] + boundary + word[pos + 3:]
            break
        if word[pos:pos + 4] == boundary:
            rewritten = word[:pos] + interior + word[pos + 4:]
            break
    if rewritten is None:
        raise OpenBookError("word contains neither side of the relation contiguously")
    out = replace(book, word=rewritten)
    if h1_action(out).data != h1_action(book).data:
        raise OpenBookError("rewrite changed the homology action; invalid site data")
    return out


# ---------------------------------------------------------------------------
# Hopf plumbing


def hopf_stabilize(book: AbstractOpenBook, new_curve: str,
                   joins_distinct_boundaries: bool = False,
                   band_pairings: Optional[tuple[int, ...]] = None) -> AbstractOpenBook:
    """Plumb a positive Hopf band along an arc; chi drops by exactly one.

    ``band_pairings`` gives the intersection numbers of the new twist curve
    with the old coordinate basis (zero for a band attached away from
    everything).  The new curve gets the fresh coordinate, and one positive
    twist along it is appended to the word.
    """
    page = book.page
    dim = page.dim
    pairings = tuple(band_pairings) if band_pairings is not None else (0,) * dim
    if len(pairings) != dim:
        raise OpenBookError("band pairing vector has the wrong length")
    if joins_distinct_boundaries:
        if page.boundary_count < 2:
            raise OpenBookError("need two boundary components to join")
        genus, boundary = page.genus + 1, page.boundary_count - 1
    else:
        genus, boundary = page.genus, page.boundary_count + 1
    form = [list(row) + [pairings[i]] for i, row in enumerate(page.form)]
    form.append([-pairings[j] for j in range(dim)] + [0])
    classes = tuple(cls + (0,) for cls in page.curve_classes) + (tuple([0] * dim + [1]),)
    new_page = PageSurface(genus, boundary, page.curve_names + (new_curve,), classes, tuple(tuple(r) for r in form))
    arc = MarkedArc(f"arc:{new_curve}", new_curve, joins_distinct_boundaries)
    return replace(
        book,
        page=new_page,
        word=book.word + ((new_curve, 1),),
        arcs=book.arcs + (arc,),
    )


def hopf_destabilize(book: AbstractOpenBook, curve: Optional[str] = None) -> AbstractOpenBook:
    """Remove a positive Hopf band: inverse of stabilization at a marked arc.

    Requires a marked arc crossing the twist curve exactly once, a unique
    positive twist along that curve, and a curve class that is (up to sign) a
    coordinate vector removable without disturbing the other curves.
    """
    arc = None
    if curve is None:
        if not book.arcs:
            raise OpenBookError("no destabilizing configuration found")
        arc = book.arcs[-1]
        curve = arc.curve
    else:
        for candidate in book.arcs:
            if candidate.curve == curve:
                arc = candidate
                break
        if arc is None:
            raise OpenBookError("no destabilizing configuration found")
    if abs(arc.crossings_with_curve) != 1:
        raise OpenBookError("marked arc does not cross the twist curve exactly once")
    occurrences = [k for k, (name, _) in enumerate(book.word) if name == curve]
    if len(occurrences) != 1 or book.word[occurrences[0]][1] != 1:
        raise OpenBookError("need exactly one positive twist along the destabilizing curve")
    page = book.page
    cls = page.class_of(curve)
    support = [z for z, v in enumerate(cls) if v != 0]
    if len(support) != 1 or abs(cls[support[0]]) != 1:
        raise OpenBookError("destabilizing curve class is not a coordinate vector")
    k = support[0]
    row_zero = all(v == 0 for v in page.form[k])
    others_clear = all(
        page.curve_classes[idx][k] == 0
        for idx, name in enumerate(page.curve_names)
        if name != curve
    )
    if not (row_zero or others_clear):
        raise OpenBookError("coordinate is entangled with other curves; cannot remove")
    if arc.joins_distinct_boundaries:
        if page.genus < 1:
            raise OpenBookError("cannot lower genus below zero")
        genus, boundary = page.genus - 1, page.boundary_count + 1
    else:
        if page.boundary_count < 2:
            raise OpenBookError("cannot remove the last boundary component")
        genus, boundary = page.genus, page.boundary_count - 1

    def drop(vec: tuple[int, ...]) -> tuple[int, ...]:
        return vec[:k] + vec[k + 1:]

    keep = [idx for idx, name in enumerate(page.curve_names) if name != curve]
    new_page = PageSurface(
        genus,
        boundary,
        tuple(page.curve_names[idx] for idx in keep),
        tuple(drop(page.curve_classes[idx]) for idx in keep),
        tuple(drop(tuple(row)) for z, row in enumerate(page.form) if z != k),
    )
    word = tuple(entry for entry in book.word if entry[0] != curve)
    arcs = tuple(a for a in book.arcs if a is not arc)
    sweep = None if book.sweep is None else tuple(x for x in book.sweep if x != curve)
    return replace(book, page=new_page, word=word, arcs=arcs, sweep=sweep)


def insert_twist(book: AbstractOpenBook, position: int, curve: str, sign: int) -> AbstractOpenBook:
    book.page.index(curve)
    if not 0 <= position <= len(book.word):
        raise OpenBookError("twist position out of range")
    return replace(book, word=book.word[:position] + ((curve, sign),) + book.word[position:])


def cancel_adjacent_inverse(book: AbstractOpenBook, curve: str) -> AbstractOpenBook:
    """Delete the first adjacent (curve, s), (curve, -s) pair from the word."""
    for pos in range(len(book.word) - 1):
        (n1, s1), (n2, s2) = book.word[pos], book.word[pos + 1]
        if n1 == curve and n2 == curve and s1 == -s2:
            return replace(book, word=book.word[:pos] + book.word[pos + 2:])
    raise OpenBookError(f"no adjacent inverse pair along {curve!r}")


# ---------------------------------------------------------------------------
# The fibered family


HOLE_CROSSING = UnimodularMatrix(1, 0, -1, 1)
MERIDIAN_TWIST = UnimodularMatrix(1, 1, 0, 1)
REFERENCE_MONODROMY = UnimodularMatrix(1, 1, -1, 0)
CELLS_PER_REGION = 6  # order of the reference monodromy: a full-twist layer


def figure_family_book(i: int, l: int, r: int, with_surgery_twist: bool = False) -> AbstractOpenBook:
    """Genus-one open book of the family member with torsion level i.

    The fiber knot sits on the page for every parameter choice; the surgery
    knot is the fiber knot after l left and r right stabilization bands, and
    ``with_surgery_twist`` appends the positive surgery twist along it.
    """
    if i < 0 or l < 0 or r < 0:
        raise OpenBookError("parameters must be non-negative")
    boundary = 1 + CELLS_PER_REGION * i + l + r
    dim = 2 + (boundary - 1)
    hole_names: list[str] = []
    for t in range(1, i + 1):
        hole_names.extend(f"b{t}.{c}" for c in range(1, CELLS_PER_REGION + 1))
    hole_names.extend(f"sl{k}" for k in range(1, l + 1))
    hole_names.extend(f"sr{k}" for k in range(1, r + 1))

    def unit(z: int) -> tuple[int, ...]:
        return tuple(1 if w == z else 0 for w in range(dim))

    a_class = unit(0)
    f_class = unit(1)
    curves: dict[str, tuple[int, ...]] = {}
    curves["b0"] = tuple(-1 if w >= 2 else 0 for w in range(dim))
    curves["m0"] = a_class
    for idx, name in enumerate(hole_names):
        curves[name] = unit(2 + idx)
    for t in range(1, i + 1):
        for c in range(1, CELLS_PER_REGION + 1):
            curves[f"m{t}.{c}"] = a_class
    curves["F"] = f_class
    curves["L"] = f_class

    word: list[tuple[str, int]] = [("b0", 1), ("m0", -1)]
    sweep: list[str] = ["b0", "m0"]
    regions = []
    arcs = []
    for t in range(1, i + 1):
        cells = []
        for c in range(1, CELLS_PER_REGION + 1):
            hole, meridian = f"b{t}.{c}", f"m{t}.{c}"
            arc_name = f"arc:{hole}"
            word += [(hole, 1), (meridian, -1)]
            sweep += [hole, meridian]
            arcs.append(MarkedArc(arc_name, hole, joins_distinct_boundaries=False))
            cells.append((hole, meridian, arc_name))
        regions.append(TorsionRegion(f"torsion{t}", tuple(cells)))
    for k in range(1, l + 1):
        word.append((f"sl{k}", 1))
        arcs.append(MarkedArc(f"arc:sl{k}", f"sl{k}", joins_distinct_boundaries=False))
    for k in range(1, r + 1):
        word.append((f"sr{k}", 1))
        arcs.append(MarkedArc(f"arc:sr{k}", f"sr{k}", joins_distinct_boundaries=False))
    if with_surgery_twist:
        word.append(("L", 1))
    page = make_page(1, boundary, curves)
    return AbstractOpenBook(
        page=page,
        word=tuple(word),
        arcs=tuple(arcs),
        regions=tuple(regions),
        roles=(("fiber", "F"), ("surgery", "L")),
        sweep=tuple(sweep),
    )


@dataclass(frozen=True)
class MonodromyResult:
    matrix: UnimodularMatrix
    conjugator: UnimodularMatrix
    region_matrices: tuple[tuple[str, UnimodularMatrix], ...]

    @property
    def reference(self) -> UnimodularMatrix:
        return REFERENCE_MONODROMY


def _sl2_conjugator(m: UnimodularMatrix, target: UnimodularMatrix, depth: int = 8) -> Optional[UnimodularMatrix]:
    """Breadth-first search for g with m == g target g^-1, over SL(2, Z) generators."""
    gens = [MERIDIAN_TWIST, MERIDIAN_TWIST.inverse(), HOLE_CROSSING, HOLE_CROSSING.inverse()]
    frontier = [UnimodularMatrix.identity()]
    seen = {UnimodularMatrix.identity().rows()}
    for _ in range(depth + 1):
        for g in frontier:
            if (g @ target @ g.inverse()).rows() == m.rows():
                return g
        nxt = []
        for g in frontier:
            for h in gens:
                cand = h @ g
                if cand.rows() not in seen:
                    seen.add(cand.rows())
                    nxt.append(cand)
        frontier = nxt
    return None


def torus_bundle_monodromy(book: AbstractOpenBook) -> MonodromyResult:
    """SL(2, Z) monodromy of the fibered book: walk the meridian sweep.

    Each boundary-circle crossing with a positive twist and each negative
    meridian twist contributes one fixed generator; the ordered product is the
    bundle monodromy.  Books carrying the surgery twist, or without sweep
    data, are outside the recognized family.
    """
    surgery = book.role("surgery")
    if surgery is not None and any(name == surgery for name, _ in book.word):
        raise OpenBookError("book carries the surgery twist; not a fibered-family book")
    if book.sweep is None:
        raise OpenBookError("book outside the recognized fibered family")
    signs = {}
    for name, sign in book.word:
        if name in signs and signs[name] != sign:
            raise OpenBookError(f"sweep curve {name!r} twisted with mixed signs")
        signs[name] = sign
    total = UnimodularMatrix.identity()
    for name in book.sweep:
        if name not in signs:
            raise OpenBookError(f"sweep curve {name!r} has no twist in the word")
        total = total @ (HOLE_CROSSING if signs[name] > 0 else MERIDIAN_TWIST)
    region_matrices = []
    for region in book.regions:
        m = UnimodularMatrix.identity()
        for hole, meridian, _ in region.cells:
            m = m @ HOLE_CROSSING @ MERIDIAN_TWIST
        region_matrices.append((region.name, m))
    conj = _sl2_conjugator(total, REFERENCE_MONODROMY)
    if conj is None:
        raise OpenBookError("monodromy is not conjugate to the reference; book outside family")
    return MonodromyResult(total, conj, tuple(region_matrices))


def excise_last_torsion_region(book: AbstractOpenBook) -> AbstractOpenBook:
    """Drop one full-twist layer: add the torsion-reducing positive twists and reduce.

    For each cell, a positive twist along the cell meridian is inserted next
    to the negative one (the attached surgery circle), the inverse pair is
    cancelled, and the cell hole is destabilized at its marked arc.  The net
    effect takes the level-(i+1) book to the level-i book.
    """
    if not book.regions:
        raise OpenBookError("no torsion region to excise")
    region = book.regions[-1]
    current = book
    for hole, meridian, _ in region.cells:
        pos = next(
            (idx for idx, entry in enumerate(current.word) if entry == (meridian, -1)),
            None,
        )
        if pos is None:
            raise OpenBookError(f"cell meridian {meridian!r} has no negative twist")
        current = insert_twist(current, pos, meridian, +1)
        current = cancel_adjacent_inverse(current, meridian)
        current = hopf_destabilize(current, hole)
    names = {name for cell in region.cells for name in cell[:2]}
    sweep = None if current.sweep is None else tuple(x for x in current.sweep if x not in names)
    return replace(current, regions=current.regions[:-1], sweep=sweep)


# ---------------------------------------------------------------------------
# Serialization


def format_book(book: AbstractOpenBook) -> str:
    page = book.page
    if page.form != standard_form(page.genus, page.boundary_count).data:
        raise OpenBookError("page form is not in the standard layout; cannot serialize")
    lines = [f"page {page.genus} {page.boundary_count}"]
    for name, cls in zip(page.curve_names, page.curve_classes):
        lines.append("curve " + name + " " + " ".join(str(x) for x in cls))
    for x in range(len(page.curve_names)):
        for y in range(x + 1, len(page.curve_names)):
            val = page.pairing(page.curve_names[x], page.curve_names[y])
            if val:
                lines.append(f"pair {page.curve_names[x]} {page.curve_names[y]} {val}")
    for name, sign in book.word:
        lines.append(f"twist {name} {'+' if sign > 0 else '-'}")
    return "\n".join(lines) + "\n"


def parse_book(text: str) -> AbstractOpenBook:
    genus = boundary = None
    curves: dict[str, tuple[int, ...]] = {}
    declared_pairs: list[tuple[str, str, int]] = []
    word: list[tuple[str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "page" and len(parts) == 3:
            genus, boundary = int(parts[1]), int(parts[2])
        elif parts[0] == "curve" and len(parts) >= 2:
            curves[parts[1]] = tuple(int(x) for x in parts[2:])
        elif parts[0] == "pair" and len(parts) == 4:
            declared_pairs.append((parts[1], parts[2], int(parts[3])))
        elif parts[0] == "twist" and len(parts) == 3 and parts[2] in ("+", "-"):
            word.append((parts[1], 1 if parts[2] == "+" else -1))
        else:
            raise OpenBookError(f"line {lineno}: unrecognized statement {line!r}")
    if genus is None:
        raise OpenBookError("missing page line")
    page = make_page(genus, boundary, curves)
    stated = {(a, b): v for a, b, v in declared_pairs}
    for (a, b), v in stated.items():
        if page.pairing(a, b) != v:
            raise OpenBookError(f"declared pairing <{a},{b}> = {v} contradicts the classes")
    return AbstractOpenBook(page=page, word=tuple(word))
