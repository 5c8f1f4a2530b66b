"""Batch command-line front end.

Subcommands: census, invariants, slopes, homology, openbook, verify.  Output
is deterministic ASCII; JSON where requested.  Exit codes: 0 success (or all
checks verified), 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import census, checks, homology, invariants, openbook, slopes


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brieskorn-tight",
        description="Census, invariants, and verification for a family of "
        "tight contact structures on Brieskorn homology spheres.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_census = sub.add_parser("census", help="list the tight-structure index triangle")
    p_census.add_argument("--n", type=int, required=True)
    p_census.add_argument("--format", choices=("table", "json"), default="table")

    p_inv = sub.add_parser("invariants", help="exact invariant polynomials of the census")
    p_inv.add_argument("--n", type=int, required=True)
    p_inv.add_argument("--format", choices=("table", "json"), default="table")

    p_slopes = sub.add_parser("slopes", help="slope bookkeeping for one family member")
    p_slopes.add_argument("--n", type=int, required=True)

    p_hom = sub.add_parser("homology", help="first homology of a plumbing description")
    group = p_hom.add_mutually_exclusive_group(required=True)
    group.add_argument("--builtin", choices=("yn", "yinf"))
    group.add_argument("--file", type=str)
    p_hom.add_argument("--n", type=int, help="family parameter for --builtin yn")

    p_ob = sub.add_parser("openbook", help="generate a fibered-family open book")
    p_ob.add_argument("--i", type=int, required=True)
    p_ob.add_argument("--l", type=int, required=True)
    p_ob.add_argument("--r", type=int, required=True)
    p_ob.add_argument("--with-surgery", action="store_true")
    p_ob.add_argument("--emit", choices=("monodromy", "word", "serialize"), required=True)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument(
        "--suite",
        choices=("all", "invariants", "slopes", "homology", "openbook", "census"),
        default="all",
    )
    p_verify.add_argument("--max-n", type=int, default=30)

    return parser


def _cmd_census(args) -> int:
    if args.format == "json":
        print(census.census_json(args.n))
    else:
        print(census.census_table(args.n), end="")
    return 0


def _cmd_invariants(args) -> int:
    if args.format == "json":
        print(invariants.records_to_json(invariants.invariant_records(args.n)))
    else:
        print(invariants.invariant_table(args.n), end="")
    return 0


def _cmd_slopes(args) -> int:
    n = args.n
    print(f"family member n={n}")
    print(f"upper bound on tight structures: {slopes.upper_bound_count(n)}")
    print("maximal twisting candidates: " + " ".join(str(t) for t in slopes.max_twisting_values(n)))
    counts = " ".join(
        f"-{n - k}:{slopes.tight_count_solid_torus(slopes.slope_from_value(-(n - k)))}"
        for k in range(1, n)
    )
    print(f"solid-torus counts by boundary slope: {counts}")
    e = slopes.neg_continued_fraction(-(6 * n - 1), n)
    print("third framing expansion: " + " ".join(str(a) for a in e.coefficients))
    a3 = slopes.attach_map_v3(n)
    img_n = slopes.mobius_apply(a3, slopes.slope_from_value(-n))
    img_inf = slopes.mobius_apply(a3, slopes.slope_from_value(Fraction(-6 * n + 1, 6)))
    print(f"third attach map: -{n} -> {img_n}, -{n}+1/6 -> {img_inf}")
    for k in range(1, min(n, 6)):
        plus, minus = slopes.edge_rounding_candidates(n, k)
        print(f"edge rounding k={k}: -{n}+{k} -> {plus}, -{n}-{k} -> {minus}")
    return 0


def _cmd_homology(args) -> int:
    if args.builtin == "yn":
        if args.n is None:
            print("error: --builtin yn requires --n", file=sys.stderr)
            return 2
        graph = homology.brieskorn_graph(args.n)
    elif args.builtin == "yinf":
        graph = homology.trefoil_zero_graph()
    else:
        try:
            with open(args.file, "r", encoding="ascii") as handle:
                graph = homology.parse_plumbing(handle.read())
        except OSError as exc:
            print(f"error: cannot read {args.file}: {exc}", file=sys.stderr)
            return 2
    expanded = homology.expand_rational_framings(graph)
    matrix = homology.linking_matrix(expanded)
    d, _, _ = homology.smith_normal_form(matrix)
    print(f"vertices {len(expanded.vertices)}")
    print("h1 " + str(homology.cokernel(matrix)))
    print("snf-diagonal " + " ".join(str(x) for x in d.diagonal()))
    if matrix.rows == matrix.cols:
        print(f"det {homology.matrix_det(matrix)}")
    return 0


def _cmd_openbook(args) -> int:
    book = openbook.figure_family_book(args.i, args.l, args.r, with_surgery_twist=args.with_surgery)
    if args.emit == "serialize":
        print(openbook.format_book(book), end="")
    elif args.emit == "word":
        for name, sign in book.word:
            print(f"{name} {'+' if sign > 0 else '-'}")
    else:
        if args.with_surgery:
            print("error: monodromy is defined for books without the surgery twist", file=sys.stderr)
            return 2
        result = openbook.torus_bundle_monodromy(book)
        (a, b), (c, d) = result.matrix.rows()
        print(f"monodromy {a} {b} {c} {d}")
        (a, b), (c, d) = result.conjugator.rows()
        print(f"conjugator {a} {b} {c} {d}")
        for name, m in result.region_matrices:
            (a, b), (c, d) = m.rows()
            print(f"region {name} {a} {b} {c} {d}")
    return 0


def _cmd_verify(args) -> int:
    results = checks.run_suite(args.suite, args.max_n)
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "ok" if r.passed else "FAIL"
        line = f"{status:<4} {r.name}"
        if not r.passed and r.detail:
            line += f": {r.detail}"
        print(line)
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "census": _cmd_census,
        "invariants": _cmd_invariants,
        "slopes": _cmd_slopes,
        "homology": _cmd_homology,
        "openbook": _cmd_openbook,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, homology.PlumbingError, openbook.OpenBookError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
