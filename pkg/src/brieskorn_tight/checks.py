"""Named verification suites over the whole artifact.

Each check returns a CheckResult; a suite is a list of results.  The CLI
``verify`` subcommand prints one line per check and fails on the first
counterexample.  Bounds scale with ``max_n`` where sweeping a family makes
sense; fixed-size checks ignore it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import census, homology, invariants, openbook, slopes
from .laurent import HalfLaurent


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check(name: str, fn: Callable[[], str | None]) -> CheckResult:
    try:
        detail = fn()
    except Exception as exc:  # a crash is a failure with the exception as witness
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    if detail is None:
        return CheckResult(name, True)
    return CheckResult(name, False, detail)


# ---------------------------------------------------------------------------
# census


def census_suite(max_n: int) -> list[CheckResult]:
    def counts():
        for n in range(2, max_n + 1):
            got = len(census.index_set(n))
            if got != n * (n - 1) // 2:
                return f"n={n}: {got} != n(n-1)/2"
        return None

    def triangle_five():
        want = [
            [(3, 0)],
            [(2, -1), (2, 1)],
            [(1, -2), (1, 0), (1, 2)],
            [(0, -3), (0, -1), (0, 1), (0, 3)],
        ]
        got = census.triangle_rows(5)
        return None if got == want else f"rows {got}"

    def constraints():
        for n in range(2, max_n + 1):
            for i, j in census.index_set(n):
                if not (0 <= i <= n - 2 and abs(j) <= n - i - 2 and (j - (n - i)) % 2 == 0):
                    return f"bad pair (n,i,j)=({n},{i},{j})"
        return None

    def stabs_inverse():
        for n in range(2, min(max_n, 30) + 1):
            for d in census.descriptors(n):
                i, l, r = census.stabs_from_descriptor(d)
                if census.descriptor_from_stabs(i, l, r) != d:
                    return f"round trip failed at {d}"
        return None

    def subtriangles():
        for n in range(2, min(max_n, 12) + 1):
            members = set(census.index_set(n))
            for i, j in census.index_set(n):
                sub = census.subtriangle(n, i, j)
                if not set(sub) <= members:
                    return f"subtriangle ({n},{i},{j}) escapes the index set"
                base = [(k, l) for k, l in sub if k == 0]
                want = [(0, j - i + 2 * t) for t in range(i + 1)]
                if base != want:
                    return f"base row of ({n},{i},{j}) is {base}"
        return None

    def mirror():
        for n in range(2, max_n + 1):
            members = set(census.index_set(n))
            for i, j in members:
                if (i, -j) not in members:
                    return f"({i},{j}) in P_{n} but ({i},{-j}) is not"
        return None

    def json_roundtrip():
        for n in (2, 3, 5, 8):
            text = census.census_json(n)
            records = census.parse_census_json(text)
            want = [census.census_record(d) for d in census.descriptors(n)]
            if records != want:
                return f"n={n}: JSON round trip differs"
        return None

    return [
        _check("census-count", counts),
        _check("census-triangle-n5", triangle_five),
        _check("census-constraints", constraints),
        _check("census-stabilization-inverse", stabs_inverse),
        _check("census-subtriangle-base", subtriangles),
        _check("census-mirror-symmetry", mirror),
        _check("census-json-roundtrip", json_roundtrip),
    ]


# ---------------------------------------------------------------------------
# slopes


def slopes_suite(max_n: int) -> list[CheckResult]:
    def anchors():
        a1, a2 = slopes.attach_map_v1(), slopes.attach_map_v2()
        for k in range(-50, 0):
            got1 = slopes.mobius_apply(a1, slopes.normalize_slope(k, 1))
            if got1 != slopes.slope_from_value(Fraction(k, 2 * k - 1)):
                return f"first map at k={k}: {got1}"
            got2 = slopes.mobius_apply(a2, slopes.normalize_slope(k, 1))
            if got2 != slopes.slope_from_value(Fraction(-k, 3 * k + 1)):
                return f"second map at k={k}: {got2}"
        for n in range(2, 21):
            a3 = slopes.attach_map_v3(n)
            if slopes.mobius_apply(a3, slopes.slope_from_value(-n)) != slopes.slope_from_value(0):
                return f"third map at n={n} misses 0"
            src = slopes.slope_from_value(Fraction(-6 * n + 1, 6))
            if slopes.mobius_apply(a3, src) != slopes.INFINITY:
                return f"third map at n={n} misses infinity"
        return None

    def exterior_formula():
        for n in range(2, 21):
            a3 = slopes.attach_map_v3(n)
            for k in range(-50, 0):
                got = slopes.mobius_apply(a3, slopes.normalize_slope(k, 1))
                want = slopes.slope_from_value(Fraction(-(n * k + 1), (6 * n - 1) * k + 6))
                if got != want:
                    return f"(n,k)=({n},{k}): {got} != {want}"
        return None

    def determinants():
        for m in (slopes.attach_map_v1(), slopes.attach_map_v2(), slopes.attach_map_v3(5)):
            if m.det != 1:
                return f"{m.rows()} has det {m.det}"
        return None

    def mobius_inverse():
        rng = random.Random(20110607)
        mats = [slopes.UnimodularMatrix.identity()]
        gens = [slopes.UnimodularMatrix(1, 1, 0, 1), slopes.UnimodularMatrix(1, 0, 1, 1)]
        for _ in range(200):
            m = slopes.UnimodularMatrix.identity()
            for _ in range(rng.randrange(1, 9)):
                m = m @ gens[rng.randrange(2)]
            mats.append(m)
        for m in mats:
            for val in (-3, 0, 2, Fraction(5, 7), Fraction(-11, 2)):
                s = slopes.slope_from_value(val)
                if slopes.mobius_apply(m.inverse(), slopes.mobius_apply(m, s)) != s:
                    return f"{m.rows()} at slope {s}"
        return None

    def ncf_roundtrip():
        for p in range(-60, -1):
            for q in range(1, 30):
                if Fraction(p, q) >= -1:
                    continue
                e = slopes.neg_continued_fraction(p, q)
                if slopes.eval_ncf(e) != slopes.slope_from_value(Fraction(p, q)):
                    return f"{p}/{q} -> {e.coefficients}"
        return None

    def counts():
        for m in range(1, 31):
            if slopes.tight_count_solid_torus(slopes.slope_from_value(-m)) != m:
                return f"integer slope -{m}"
        for n in range(2, max(max_n, 50) + 1):
            slopes.upper_bound_count(n)  # asserts n(n-1)/2 internally
        return None

    def twisting():
        if slopes.max_twisting_values(2) != [-5]:
            return "n=2 twisting list"
        if slopes.max_twisting_values(3) != [-5, -11]:
            return "n=3 twisting list"
        return None

    def rounding():
        for n in range(2, 21):
            for k in range(1, n):
                plus, minus = slopes.edge_rounding_candidates(n, k)
                if plus != slopes.slope_from_value(Fraction(-k, 6 * k - 1)):
                    return f"(n,k)=({n},{k}) plus image {plus}"
                if minus != slopes.slope_from_value(Fraction(-k, 6 * k + 1)):
                    return f"(n,k)=({n},{k}) minus image {minus}"
        return None

    return [
        _check("slope-anchors", anchors),
        _check("slope-exterior-formula", exterior_formula),
        _check("slope-attach-determinants", determinants),
        _check("slope-mobius-inverse", mobius_inverse),
        _check("slope-ncf-roundtrip", ncf_roundtrip),
        _check("slope-tight-counts", counts),
        _check("slope-max-twisting", twisting),
        _check("slope-edge-rounding-pair", rounding),
    ]


# ---------------------------------------------------------------------------
# homology


def _random_matrix(rng: random.Random) -> homology.IntMatrix:
    rows = rng.randrange(1, 13)
    cols = rng.randrange(1, 13)
    return homology.IntMatrix.from_rows(
        [[rng.randrange(-9, 10) for _ in range(cols)] for _ in range(rows)]
    )


def snf_property_failures(count: int, seed: int = 1963) -> str | None:
    rng = random.Random(seed)
    for trial in range(count):
        m = _random_matrix(rng)
        d, u, v = homology.smith_normal_form(m)
        if (u @ m @ v).data != d.data:
            return f"trial {trial}: u m v != d"
        if abs(homology.matrix_det(u)) != 1 or abs(homology.matrix_det(v)) != 1:
            return f"trial {trial}: transforms not unimodular"
        diag = d.diagonal()
        for a in range(d.rows):
            for b in range(d.cols):
                if a != b and d.data[a][b] != 0:
                    return f"trial {trial}: not diagonal"
        for a in range(len(diag) - 1):
            if diag[a] < 0 or (diag[a] != 0 and diag[a + 1] % diag[a] != 0):
                return f"trial {trial}: divisibility chain broken: {diag}"
            if diag[a] == 0 and diag[a + 1] != 0:
                return f"trial {trial}: zero before nonzero: {diag}"
    return None


def homology_suite(max_n: int, snf_trials: int = 1000) -> list[CheckResult]:
    def family_dets():
        for n in range(2, 21):
            g = homology.expand_rational_framings(homology.brieskorn_graph(n))
            det = homology.matrix_det(homology.linking_matrix(g))
            if abs(det) != 1:
                return f"n={n}: det {det}"
            if not homology.h1_of_surgery(homology.brieskorn_graph(n)).is_trivial:
                return f"n={n}: H1 not trivial"
            residue = Fraction(-1, 2) + Fraction(1, 3) + Fraction(n, 6 * n - 1)
            if 2 * 3 * (6 * n - 1) * residue not in (1, -1):
                return f"n={n}: rational cross-check failed"
        return None

    def torus_bundle():
        got = homology.h1_torus_bundle(slopes.fiber_monodromy())
        if got != homology.AbelianGroupSpec(1, ()):
            return f"bundle H1 = {got}"
        ident = slopes.UnimodularMatrix.identity()
        if homology.h1_torus_bundle(ident) != homology.AbelianGroupSpec(3, ()):
            return "identity monodromy"
        if homology.h1_torus_bundle(slopes.UnimodularMatrix(1, 1, 0, 1)) != homology.AbelianGroupSpec(2, ()):
            return "parabolic monodromy"
        return None

    def cokernel_invariance():
        rng = random.Random(271828)

        def random_unimodular(size: int) -> homology.IntMatrix:
            square = homology.IntMatrix.from_rows(
                [[rng.randrange(-9, 10) for _ in range(size)] for _ in range(size)]
            )
            _, u, _ = homology.smith_normal_form(square)
            return u

        for _ in range(60):
            m = _random_matrix(rng)
            u = random_unimodular(m.rows)
            v = random_unimodular(m.cols)
            if homology.cokernel(m) != homology.cokernel(u @ m @ v):
                return "cokernel not invariant under unimodular transforms"
        return None

    def reorder_invariance():
        g = homology.brieskorn_graph(4)
        reordered = homology.PlumbingGraph(tuple(reversed(g.vertices)), g.edges)
        if homology.h1_of_surgery(g) != homology.h1_of_surgery(reordered):
            return "vertex reorder changed H1"
        return None

    def kernels():
        for n in range(2, 21):
            if homology.cobordism_kernel(homology.cobordism_v(n)) != homology.AbelianGroupSpec(1, ()):
                return f"K(V) at n={n}"
            if not homology.cobordism_kernel(homology.cobordism_w(n)).is_trivial:
                return f"K(W) at n={n}"
            if homology.cobordism_kernel(homology.cobordism_z(n)) != homology.AbelianGroupSpec(1, ()):
                return f"K(Z) at n={n}"
        if homology.cobordism_kernel(homology.cobordism_w_inf()) != homology.AbelianGroupSpec(1, ()):
            return "K of the self-cobordism"
        return None

    def ksequence():
        for n in range(2, 11):
            if not homology.ksequence_rank_check(homology.cobordism_w_inf(), homology.cobordism_v_after_w_inf(n), 0):
                return f"torsion-first route at n={n}"
            if not homology.ksequence_rank_check(homology.cobordism_v(n + 1), homology.cobordism_w(n), 0):
                return f"fiber-first route at n={n}"
        if not homology.ksequence_rank_check(homology.trivial_cobordism(), homology.trivial_cobordism(), 0):
            return "trivial composite"
        return None

    def text_roundtrip():
        for g in (homology.brieskorn_graph(3), homology.trefoil_zero_graph()):
            if homology.parse_plumbing(homology.format_plumbing(g)) != g:
                return "plumbing text round trip"
        return None

    return [
        _check("homology-snf-random-suite", lambda: snf_property_failures(snf_trials)),
        _check("homology-family-determinants", family_dets),
        _check("homology-torus-bundle", torus_bundle),
        _check("homology-cokernel-invariance", cokernel_invariance),
        _check("homology-reorder-invariance", reorder_invariance),
        _check("homology-cobordism-kernels", kernels),
        _check("homology-ksequence-ranks", ksequence),
        _check("homology-plumbing-roundtrip", text_roundtrip),
    ]


# ---------------------------------------------------------------------------
# invariants


def invariants_suite(max_n: int) -> list[CheckResult]:
    def closed_form():
        for n in range(2, max_n + 1):
            for d in census.descriptors(n):
                lhs = invariants.binomial_combination(d)
                rhs = invariants.invariant(d).scale((-1) ** d.i)
                if lhs != rhs:
                    return f"sign relation fails at {d}"
        return None

    def distinct():
        for n in range(2, max_n + 1):
            ok, witness = invariants.verify_distinctness(n)
            if not ok:
                return f"n={n}: collision {witness}"
        return None

    def diagram():
        for n in range(2, max_n + 1):
            if not invariants.verify_diagram(n):
                return f"square fails at n={n}"
            if not invariants.pascal_recurrence_holds(n):
                return f"recurrence fails at n={n}"
        return None

    def conj():
        for n in range(2, max_n + 1):
            for d in census.descriptors(n):
                mirror = census.ContactDescriptor(n, d.i, -d.j)
                want = invariants.invariant(mirror).scale((-1) ** d.i)
                if invariants.conjugate(invariants.invariant(d)) != want:
                    return f"conjugation at {d}"
            top = census.ContactDescriptor(n, n - 2, 0)
            p = invariants.invariant(top)
            if invariants.conjugate(p) != p.scale((-1) ** (n - 2)):
                return f"top invariant at n={n} not symmetric up to sign"
        return None

    def ranks():
        for n in range(2, min(max_n, 25) + 1):
            matrix = homology.IntMatrix.from_rows(invariants.coordinate_matrix(n))
            if homology.matrix_rank(matrix) != n - 1:
                return f"coordinate rank at n={n}"
            bottom = [list(invariants.coordinates(census.ContactDescriptor(n, 0, j)).coords)
                      for j in invariants.basis_exponents(n)]
            if bottom != [list(row) for row in homology.IntMatrix.identity(n - 1).data]:
                return f"bottom rows not the identity block at n={n}"
        return None

    def gradings():
        if invariants.gompf_theta(0, 2, 0) != -4:
            return "theta of the filling"
        if invariants.contact_degree(-4) != Fraction(1, 2) or invariants.contact_degree(-6) != 1:
            return "contact degrees"
        for k in range(-5, 6):
            if invariants.degree_shift(k) != -k * (k + 1) or invariants.degree_shift(k) > 0:
                return f"degree shift at k={k}"
            if invariants.spinc_pairing(k) != 2 * k + 1:
                return f"chern pairing at k={k}"
        return None

    def hf_ranks():
        limit = invariants.hf_rank_data(None)
        if limit.summands != ((Fraction(1, 2), 1), (Fraction(3, 2), 1)):
            return "limit manifold summands"
        for n in range(2, min(max_n, 20) + 1):
            data = invariants.hf_rank_data(n)
            if data.summands != ((Fraction(1), n - 1),):
                return f"rank data at n={n}"
            if len(invariants.basis_exponents(n)) != n - 1:
                return f"basis size at n={n}"
        return None

    def ring_laws():
        rng = random.Random(1728)

        def rand_poly():
            return HalfLaurent(
                (rng.randrange(-6, 7), rng.randrange(-5, 6)) for _ in range(rng.randrange(0, 5))
            )

        for _ in range(200):
            a, b, c = rand_poly(), rand_poly(), rand_poly()
            if (a + b) + c != a + (b + c) or (a * b) * c != a * (b * c):
                return "associativity"
            if a * (b + c) != a * b + a * c:
                return "distributivity"
            if a * HalfLaurent.one() != a or a + HalfLaurent.zero() != a:
                return "units"
            if a.conjugate().conjugate() != a:
                return "conjugation involution"
        return None

    def json_roundtrip():
        for n in (2, 3, 6):
            records = invariants.invariant_records(n)
            rebuilt = [
                {**rec, "monomials": HalfLaurent.from_pairs(rec["monomials"]).to_pairs()}
                for rec in records
            ]
            if rebuilt != records:
                return f"n={n}: polynomial records round trip"
        return None

    return [
        _check("invariant-closed-form-sign", closed_form),
        _check("invariant-distinctness", distinct),
        _check("invariant-square-commutes", diagram),
        _check("invariant-conjugation", conj),
        _check("invariant-coordinate-ranks", ranks),
        _check("invariant-gradings", gradings),
        _check("invariant-floer-ranks", hf_ranks),
        _check("invariant-ring-laws", ring_laws),
        _check("invariant-json-roundtrip", json_roundtrip),
    ]


# ---------------------------------------------------------------------------
# open books


def random_lantern_case(rng: random.Random) -> tuple[openbook.AbstractOpenBook, openbook.LanternSite]:
    """Random book whose word contains one lantern side contiguously."""
    extra = rng.randrange(0, 3)
    dim = 5 + extra  # symplectic pair + three hole coordinates + extras
    form_rows = [[0] * dim for _ in range(dim)]
    form_rows[0][1], form_rows[1][0] = 1, -1
    for z in range(5, dim):
        w = rng.randrange(0, 2)
        if w:
            form_rows[0][z], form_rows[z][0] = 1, -1
    form = homology.IntMatrix.from_rows(form_rows)

    def unit(z):
        return tuple(1 if t == z else 0 for t in range(dim))

    c1, c2, c3 = unit(2), unit(3), unit(4)
    c4 = tuple(-(c1[z] + c2[z] + c3[z]) for z in range(dim))
    curves = {
        "d1": c1, "d2": c2, "d3": c3, "d4": c4,
        "s1": tuple(c1[z] + c2[z] for z in range(dim)),
        "s2": tuple(c2[z] + c3[z] for z in range(dim)),
        "s3": tuple(c1[z] + c3[z] for z in range(dim)),
        "x": unit(0),
        "y": unit(1),
    }
    for t in range(extra):
        curves[f"e{t}"] = tuple(rng.randrange(-1, 2) for _ in range(dim))
    page = openbook.make_page(0, 4 + rng.randrange(1, 3), curves, form)
    site = openbook.LanternSite(("d1", "d2", "d3", "d4"), ("s1", "s2", "s3"))
    names = [n for n in curves if n not in ("d1", "d2", "d3", "d4")]
    word: list[tuple[str, int]] = [
        (rng.choice(names), rng.choice((1, -1))) for _ in range(rng.randrange(0, 6))
    ]
    side = [("s1", 1), ("s2", 1), ("s3", 1)] if rng.randrange(2) else [("d1", 1), ("d2", 1), ("d3", 1), ("d4", 1)]
    pos = rng.randrange(0, len(word) + 1)
    word[pos:pos] = side
    return openbook.AbstractOpenBook(page=page, word=tuple(word)), site


def openbook_suite(max_n: int, lantern_trials: int = 100) -> list[CheckResult]:
    def monodromy_base():
        res = openbook.torus_bundle_monodromy(openbook.figure_family_book(0, 0, 0))
        if res.matrix.rows() != ((1, 1), (-1, 0)):
            return f"base monodromy {res.matrix.rows()}"
        conj = res.conjugator
        if (conj @ res.reference @ conj.inverse()).rows() != res.matrix.rows():
            return "conjugator does not conjugate"
        if res.matrix.trace != 1 or res.matrix.det != 1:
            return "trace/det"
        return None

    def monodromy_family():
        base = openbook.torus_bundle_monodromy(openbook.figure_family_book(0, 0, 0)).matrix
        for i in range(7):
            res = openbook.torus_bundle_monodromy(openbook.figure_family_book(i, 1, 2))
            if res.matrix.rows() != base.rows():
                return f"monodromy depends on torsion level at i={i}"
            for name, m in res.region_matrices:
                if m.rows() != ((1, 0), (0, 1)):
                    return f"region {name} product {m.rows()}"
            h1 = homology.h1_torus_bundle(res.matrix)
            if h1 != homology.AbelianGroupSpec(1, ()):
                return f"bundle H1 at i={i}: {h1}"
        return None

    def braid_pairs():
        book = openbook.figure_family_book(2, 1, 1)
        pairs = openbook.braid_applicable_pairs(book)
        if not pairs:
            return "no applicable pairs registered"
        for a, b in pairs:
            if openbook.braid_relation_check(book.page, a, b) is not True:
                return f"braid relation fails on ({a}, {b})"
        return None

    def lantern_random():
        rng = random.Random(40351)
        for trial in range(lantern_trials):
            book, site = random_lantern_case(rng)
            before = openbook.h1_action(book)
            out = openbook.lantern_rewrite(book, site)
            if openbook.h1_action(out).data != before.data:
                return f"trial {trial}: action changed"
            if openbook.euler_characteristic(out) != openbook.euler_characteristic(book):
                return f"trial {trial}: chi changed"
            if abs(len(out.word) - len(book.word)) != 1:
                return f"trial {trial}: word length change"
            back = openbook.lantern_rewrite(out, site)
            if openbook.h1_action(back).data != before.data:
                return f"trial {trial}: inverse rewrite changed action"
        return None

    def hopf_roundtrip():
        base = openbook.figure_family_book(1, 0, 0)
        for joins in (False, True):
            stabbed = openbook.hopf_stabilize(base, "new", joins_distinct_boundaries=joins)
            if openbook.euler_characteristic(stabbed) != openbook.euler_characteristic(base) - 1:
                return "chi bookkeeping"
            undone = openbook.hopf_destabilize(stabbed, "new")
            same = (
                undone.page.genus == base.page.genus
                and undone.page.boundary_count == base.page.boundary_count
                and undone.word == base.word
            )
            if not same:
                return f"round trip (joins={joins})"
        disk = openbook.AbstractOpenBook(page=openbook.make_page(0, 1, {}), word=())
        annulus = openbook.hopf_stabilize(disk, "core")
        if (annulus.page.genus, annulus.page.boundary_count) != (0, 2) or annulus.word != (("core", 1),):
            return "disk base case"
        return None

    def excision():
        for i, l, r in ((0, 0, 0), (1, 1, 0), (2, 1, 2)):
            big = openbook.figure_family_book(i + 1, l, r, with_surgery_twist=True)
            small = openbook.figure_family_book(i, l, r, with_surgery_twist=True)
            reduced = openbook.excise_last_torsion_region(big)
            if openbook.euler_characteristic(reduced) != openbook.euler_characteristic(small):
                return f"chi at (i,l,r)=({i},{l},{r})"
            if reduced.page.boundary_count != small.page.boundary_count:
                return f"boundary count at ({i},{l},{r})"
            if openbook.h1_action(reduced).data != openbook.h1_action(small).data:
                return f"homology action at ({i},{l},{r})"
            if reduced.page.class_of("L") != small.page.class_of("L"):
                return f"marker class moved at ({i},{l},{r})"
        return None

    def serialization():
        book = openbook.figure_family_book(1, 2, 0, with_surgery_twist=True)
        text = openbook.format_book(book)
        parsed = openbook.parse_book(text)
        if parsed.word != book.word:
            return "word round trip"
        if parsed.page.curve_names != book.page.curve_names:
            return "curve roster round trip"
        if parsed.page.curve_classes != book.page.curve_classes:
            return "classes round trip"
        return None

    return [
        _check("openbook-monodromy-base", monodromy_base),
        _check("openbook-monodromy-family", monodromy_family),
        _check("openbook-braid-pairs", braid_pairs),
        _check("openbook-lantern-random", lantern_random),
        _check("openbook-hopf-roundtrip", hopf_roundtrip),
        _check("openbook-torsion-excision", excision),
        _check("openbook-serialization", serialization),
    ]


SUITES: dict[str, Callable[[int], list[CheckResult]]] = {
    "census": census_suite,
    "slopes": slopes_suite,
    "homology": homology_suite,
    "invariants": invariants_suite,
    "openbook": openbook_suite,
}


def run_suite(name: str, max_n: int) -> list[CheckResult]:
    if name == "all":
        results = []
        for key in ("census", "slopes", "homology", "invariants", "openbook"):
            results.extend(SUITES[key](max_n))
        return results
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](max_n)
