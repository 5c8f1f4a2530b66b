import random

import pytest

from brieskorn_tight import openbook as ob
from brieskorn_tight.checks import random_lantern_case
from brieskorn_tight.homology import AbelianGroupSpec, IntMatrix, h1_torus_bundle, matrix_det
from brieskorn_tight.openbook import (
    AbstractOpenBook,
    LanternSite,
    MarkedArc,
    OpenBookError,
    braid_applicable_pairs,
    braid_relation_check,
    cancel_adjacent_inverse,
    euler_characteristic,
    excise_last_torsion_region,
    figure_family_book,
    format_book,
    h1_action,
    hopf_destabilize,
    hopf_stabilize,
    insert_twist,
    lantern_rewrite,
    make_page,
    parse_book,
    standard_form,
    torus_bundle_monodromy,
    twist_matrix,
    validate_lantern_site,
)
from brieskorn_tight.slopes import UnimodularMatrix


def torus_page(extra=None):
    curves = {"a": (1, 0), "b": (0, 1)}
    if extra:
        curves.update(extra)
    return make_page(1, 1, curves)


class TestTransvections:
    def test_positive_twist_on_dual_pair(self):
        page = torus_page()
        book = AbstractOpenBook(page=page, word=(("a", 1),))
        m = h1_action(book)
        assert m.data == ((1, -1), (0, 1))  # unipotent, one off-diagonal unit

    def test_boundary_parallel_twist_acts_trivially(self):
        page = make_page(1, 2, {"a": (1, 0, 0), "b": (0, 1, 0), "h": (0, 0, 1)})
        book = AbstractOpenBook(page=page, word=(("h", 1), ("h", -1), ("h", 1)))
        assert h1_action(book).data == IntMatrix.identity(3).data

    def test_trefoil_book(self):
        page = torus_page()
        book = AbstractOpenBook(page=page, word=(("a", 1), ("b", 1)))
        m = h1_action(book)
        assert matrix_det(m) == 1
        assert m.data[0][0] + m.data[1][1] == 1
        shifted = IntMatrix.from_rows([[m.data[0][0] - 1, m.data[0][1]], [m.data[1][0], m.data[1][1] - 1]])
        assert abs(matrix_det(shifted)) == 1

    def test_word_order_is_left_to_right(self):
        page = torus_page()
        ab = h1_action(AbstractOpenBook(page=page, word=(("a", 1), ("b", 1))))
        ta = twist_matrix(page, "a", 1)
        tb = twist_matrix(page, "b", 1)
        assert ab.data == (tb @ ta).data

    def test_unknown_curve(self):
        with pytest.raises(OpenBookError):
            AbstractOpenBook(page=torus_page(), word=(("zzz", 1),))


class TestBraidRelation:
    def test_dual_pair(self):
        assert braid_relation_check(torus_page(), "a", "b") is True

    def test_disjoint_is_inapplicable(self):
        page = make_page(1, 2, {"a": (1, 0, 0), "h": (0, 0, 1)})
        assert braid_relation_check(page, "a", "h") is None

    def test_negative_pairing(self):
        assert braid_relation_check(torus_page(), "b", "a") is True


def lantern_page():
    # planar page: three hole coordinates plus a symplectic pair acted on
    form = IntMatrix.from_rows([
        [0, 1, 0, 0, 0],
        [-1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
    ])
    curves = {
        "d1": (0, 0, 1, 0, 0),
        "d2": (0, 0, 0, 1, 0),
        "d3": (0, 0, 0, 0, 1),
        "d4": (0, 0, -1, -1, -1),
        "s1": (0, 0, 1, 1, 0),
        "s2": (0, 0, 0, 1, 1),
        "s3": (0, 0, 1, 0, 1),
        "x": (1, 0, 0, 0, 0),
    }
    return make_page(0, 4, curves, form)


SITE = LanternSite(("d1", "d2", "d3", "d4"), ("s1", "s2", "s3"))


class TestLantern:
    def test_interior_to_boundary(self):
        book = AbstractOpenBook(page=lantern_page(), word=(("x", 1), ("s1", 1), ("s2", 1), ("s3", 1)))
        out = lantern_rewrite(book, SITE)
        assert out.word == (("x", 1), ("d1", 1), ("d2", 1), ("d3", 1), ("d4", 1))
        assert h1_action(out).data == h1_action(book).data
        assert euler_characteristic(out) == euler_characteristic(book)

    def test_boundary_to_interior(self):
        book = AbstractOpenBook(page=lantern_page(), word=(("d1", 1), ("d2", 1), ("d3", 1), ("d4", 1), ("x", -1)))
        out = lantern_rewrite(book, SITE)
        assert out.word == (("s1", 1), ("s2", 1), ("s3", 1), ("x", -1))

    def test_no_contiguous_site(self):
        book = AbstractOpenBook(page=lantern_page(), word=(("s1", 1), ("x", 1), ("s2", 1), ("s3", 1)))
        with pytest.raises(OpenBookError):
            lantern_rewrite(book, SITE)

    def test_site_validation(self):
        page = lantern_page()
        bad = LanternSite(("d1", "d2", "d3", "s1"), ("s1", "s2", "s3"))
        with pytest.raises(OpenBookError):
            validate_lantern_site(page, bad)

    def test_randomized_words(self):
        rng = random.Random(7011)
        for _ in range(100):
            book, site = random_lantern_case(rng)
            before = h1_action(book)
            out = lantern_rewrite(book, site)
            assert h1_action(out).data == before.data
            assert euler_characteristic(out) == euler_characteristic(book)
            assert abs(len(out.word) - len(book.word)) == 1


class TestHopf:
    def test_disk_to_annulus(self):
        disk = AbstractOpenBook(page=make_page(0, 1, {}), word=())
        annulus = hopf_stabilize(disk, "core")
        assert (annulus.page.genus, annulus.page.boundary_count) == (0, 2)
        assert annulus.word == (("core", 1),)
        assert euler_characteristic(annulus) == euler_characteristic(disk) - 1

    def test_chi_drop(self):
        base = figure_family_book(1, 1, 0)
        for joins in (False, True):
            stabbed = hopf_stabilize(base, "extra", joins_distinct_boundaries=joins)
            assert euler_characteristic(stabbed) == euler_characteristic(base) - 1

    def test_roundtrip(self):
        base = figure_family_book(0, 1, 1)
        for joins in (False, True):
            stabbed = hopf_stabilize(base, "extra", joins_distinct_boundaries=joins)
            undone = hopf_destabilize(stabbed, "extra")
            assert undone.page.genus == base.page.genus
            assert undone.page.boundary_count == base.page.boundary_count
            assert undone.word == base.word
            assert undone.page.curve_names == base.page.curve_names

    def test_roundtrip_with_band_pairings(self):
        base = figure_family_book(0, 0, 0)
        dim = base.page.dim
        pairings = tuple(1 if z == 0 else 0 for z in range(dim))
        stabbed = hopf_stabilize(base, "band", band_pairings=pairings)
        assert stabbed.page.pairing("band", "m0") != 0 or stabbed.page.pairing("m0", "band") != 0
        undone = hopf_destabilize(stabbed, "band")
        assert undone.word == base.word

    def test_destabilize_requires_configuration(self):
        base = figure_family_book(0, 0, 0)
        with pytest.raises(OpenBookError):
            hopf_destabilize(base, "m0")  # no marked arc for the meridian
        with pytest.raises(OpenBookError):
            hopf_destabilize(AbstractOpenBook(page=make_page(0, 1, {}), word=()))

    def test_destabilize_requires_single_positive_twist(self):
        base = figure_family_book(1, 0, 0)
        doubled = insert_twist(base, 0, "b1.1", 1)
        with pytest.raises(OpenBookError):
            hopf_destabilize(doubled, "b1.1")


class TestWordEdits:
    def test_cancel_adjacent_inverse(self):
        base = figure_family_book(0, 0, 0)
        longer = insert_twist(base, 2, "m0", 1)
        longer = insert_twist(longer, 3, "m0", -1)
        cancelled = cancel_adjacent_inverse(longer, "m0")
        assert cancelled.word == base.word

    def test_cancel_requires_adjacent_pair(self):
        base = figure_family_book(0, 0, 0)
        with pytest.raises(OpenBookError):
            cancel_adjacent_inverse(base, "b0")

    def test_insert_bounds(self):
        base = figure_family_book(0, 0, 0)
        with pytest.raises(OpenBookError):
            insert_twist(base, 99, "m0", 1)


class TestFiberedFamily:
    def test_roster_and_counts(self):
        for i, l, r in ((0, 0, 0), (1, 0, 0), (2, 3, 1)):
            book = figure_family_book(i, l, r)
            assert book.page.genus == 1
            assert book.page.boundary_count == 1 + 6 * i + l + r
            assert euler_characteristic(book) == -(1 + 6 * i + l + r)
            assert book.role("fiber") == "F"
            assert book.role("surgery") == "L"
            book.page.index("F")
            book.page.index("L")

    def test_surgery_twist_appended(self):
        plain = figure_family_book(1, 1, 1)
        twisted = figure_family_book(1, 1, 1, with_surgery_twist=True)
        assert twisted.word == plain.word + (("L", 1),)

    def test_monodromy_base_case(self):
        res = torus_bundle_monodromy(figure_family_book(0, 0, 0))
        assert res.matrix == UnimodularMatrix(1, 1, -1, 0)
        assert res.matrix.trace == 1 and res.matrix.det == 1
        conj = res.conjugator
        assert (conj @ res.reference @ conj.inverse()).rows() == res.matrix.rows()

    def test_monodromy_independent_of_parameters(self):
        base = torus_bundle_monodromy(figure_family_book(0, 0, 0)).matrix
        for i in range(7):
            res = torus_bundle_monodromy(figure_family_book(i, 2, 1))
            assert res.matrix == base
            for _, m in res.region_matrices:
                assert m == UnimodularMatrix.identity()

    def test_monodromy_gives_infinite_cyclic_h1(self):
        for i in range(4):
            res = torus_bundle_monodromy(figure_family_book(i, 0, 0))
            assert h1_torus_bundle(res.matrix) == AbelianGroupSpec(1, ())

    def test_monodromy_rejects_surgery_twist(self):
        with pytest.raises(OpenBookError):
            torus_bundle_monodromy(figure_family_book(0, 0, 0, with_surgery_twist=True))

    def test_monodromy_rejects_unknown_books(self):
        book = AbstractOpenBook(page=torus_page(), word=(("a", 1),))
        with pytest.raises(OpenBookError):
            torus_bundle_monodromy(book)

    def test_braid_pairs_on_family_books(self):
        book = figure_family_book(2, 1, 1)
        pairs = braid_applicable_pairs(book)
        assert ("m0", "F") in pairs or ("F", "m0") in pairs
        for a, b in pairs:
            assert braid_relation_check(book.page, a, b) is True


class TestTorsionExcision:
    @pytest.mark.parametrize("params", [(0, 0, 0), (1, 1, 0), (2, 1, 2)])
    def test_matches_lower_level(self, params):
        i, l, r = params
        big = figure_family_book(i + 1, l, r, with_surgery_twist=True)
        small = figure_family_book(i, l, r, with_surgery_twist=True)
        reduced = excise_last_torsion_region(big)
        assert euler_characteristic(reduced) == euler_characteristic(small)
        assert reduced.page.boundary_count == small.page.boundary_count
        assert h1_action(reduced).data == h1_action(small).data
        assert reduced.word == small.word
        assert reduced.page.class_of("L") == small.page.class_of("L")
        assert reduced.page.class_of("F") == small.page.class_of("F")

    def test_requires_a_region(self):
        with pytest.raises(OpenBookError):
            excise_last_torsion_region(figure_family_book(0, 0, 0))

    def test_monodromy_survives_excision(self):
        reduced = excise_last_torsion_region(figure_family_book(2, 0, 0))
        res = torus_bundle_monodromy(reduced)
        assert res.matrix == UnimodularMatrix(1, 1, -1, 0)


class TestSerialization:
    def test_roundtrip(self):
        book = figure_family_book(1, 2, 0, with_surgery_twist=True)
        parsed = parse_book(format_book(book))
        assert parsed.word == book.word
        assert parsed.page.curve_names == book.page.curve_names
        assert parsed.page.curve_classes == book.page.curve_classes
        assert parsed.page.form == book.page.form

    def test_nonstandard_form_not_serializable(self):
        base = figure_family_book(0, 0, 0)
        pairings = tuple(1 if z == 0 else 0 for z in range(base.page.dim))
        stabbed = hopf_stabilize(base, "band", band_pairings=pairings)
        with pytest.raises(OpenBookError):
            format_book(stabbed)

    def test_pair_lines_validate(self):
        text = "page 1 1\ncurve a 1 0\ncurve b 0 1\npair a b 5\ntwist a +\n"
        with pytest.raises(OpenBookError):
            parse_book(text)

    def test_parse_errors(self):
        with pytest.raises(OpenBookError):
            parse_book("curve a 1\n")  # missing page line
        with pytest.raises(OpenBookError):
            parse_book("page 1 1\nbogus\n")

    def test_standard_form_layout(self):
        form = standard_form(1, 3)
        assert form.rows == form.cols == 4
        assert form.data[0][1] == 1 and form.data[1][0] == -1
        assert all(form.data[2][z] == 0 for z in range(4))
