"""Command line front end.

Negative integers may be given directly (``dp7 cohom -2 2``), after a
``--`` guard (``dp7 cohom -- -2 2``) or as ``--c1=-1,2`` style options.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional

from . import bundle, classify, cohomology, surface
from .chow import F, H, XI, ChowClass, curve, divisor, intersect
from .render import FORMATS, Table, render

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


# -- tables -------------------------------------------------------------------

def cohomology_output(l1: int, l2: int) -> Table:
    L = cohomology.LineBundle(l1, l2)
    t = cohomology.cohomology_table(L)
    return Table(
        f"Cohomology of {L}",
        ["l1", "l2", "h0", "h1", "h2", "h3", "chi"],
        [[l1, l2, t.h0, t.h1, t.h2, t.h3, t.euler]],
    )


def classification_output(table: str) -> Table:
    rows = classify.table_a() if table == "A" else classify.table_b()
    return Table(
        f"Table {table}",
        ["name", "alpha", "D=c1", "beta", "verdict"],
        [[*row.cells(), row.verdict.value] for row in rows],
        records=[row.to_record() for row in rows],
    )


def divisors_output() -> Table:
    return Table(
        "Possible divisorial parts D",
        ["d1", "d2", "class"],
        [[d1, d2, str(divisor(d1, d2))] for d1, d2 in classify.divisor_candidates()],
    )


def acm_lines_output(box: int = 10) -> Table:
    lines = cohomology.enumerate_acm_initialized_lines(box)
    return Table(
        f"{len(lines)} initialized aCM line bundles",
        ["l1", "l2", "bundle", "h0"],
        [[L.l1, L.l2, str(L), cohomology.cohomology_table(L).h0] for L in lines],
    )


def ulrich_output() -> Table:
    alpha = classify.ulrich_c1_solve()
    rows = []
    for beta in classify.ulrich_c2_enumeration():
        B = bundle.rank2(alpha, beta)
        c1c2, hc2 = bundle.invariant_c1c2_hc2(alpha, beta)
        rows.append([B.c1, B.c2, tuple(beta), bundle.chi_rr(B), hc2, c1c2])
    return Table(
        f"Ulrich bundles of rank 2: c1 = {divisor(*alpha)}",
        ["c1", "c2", "beta", "chi", "h*c2", "c1*c2"],
        rows,
    )


def chi_output(rank: int, c1, c2, c3) -> Table:
    B = bundle.ChernData(rank, divisor(*c1), curve(*c2), ChowClass(pt=c3))
    return Table(
        "Euler characteristic",
        ["rank", "c1", "c2", "c3", "chi_rr", "chi_hrr"],
        [[rank, B.c1, B.c2, c3, bundle.chi_rr(B), bundle.chi_hrr(B)]],
    )


def lines_output() -> Table:
    return Table(
        "Classes of lines on F",
        ["class", "h.E", "xi.E", "f.E", "(xi-f).E"],
        [
            [E, intersect(H, E), intersect(XI, E), intersect(F, E), intersect(XI - F, E)]
            for E in surface.enumerate_line_classes()
        ],
    )


def theorem_a_output() -> Table:
    return Table(
        "Indecomposable initialized aCM bundles of rank 2",
        ["case", "c1", "c2", "zero locus", "deg E", "chi"],
        [
            [c.label, c.c1, c.c2, c.curve, c.zero_locus_degree, c.chi]
            for c in classify.theorem_a_table()
        ],
    )


def end_bundle_output() -> Table:
    alpha = (2, 2)
    self_chi = bundle.end_bundle_chi(alpha, (3, 3), alpha, (3, 3))
    cross_chi = bundle.end_bundle_chi(alpha, (3, 3), alpha, (4, 1))
    return Table(
        "Endomorphisms and extensions of Ulrich bundles",
        ["bundle", "chi", "h0", "h2", "h3", "h1"],
        [
            ["End(E), c2 = 3xi^2+3f^2", self_chi, 1, 0, 0,
             bundle.h1_from_chi(self_chi, 1, 0, 0)],
            ["B (x) A^dual, A != B", cross_chi, 0, 0, 0,
             bundle.h1_from_chi(cross_chi, 0, 0, 0)],
        ],
    )


def report_text() -> str:
    acm = acm_lines_output()
    ends = end_bundle_output()
    (_, self_chi, *_, self_h1), (_, cross_chi, *_, cross_h1) = ends.rows
    sections = [
        "# Rank 2 aCM bundles on the del Pezzo threefold of degree 7\n",
        f"{len(acm.rows)} initialized aCM line bundles; none has h^0 = 7, "
        "so there is no Ulrich line bundle.\n",
        render(acm, "md"),
        render(divisors_output(), "md"),
        render(classification_output("A"), "md"),
        render(classification_output("B"), "md"),
        render(ulrich_output(), "md"),
        render(theorem_a_output(), "md"),
        render(ends, "md"),
        f"h^1(End) = {self_h1} (chi = {self_chi}); "
        f"h^1(B (x) A^dual) = {cross_h1} (chi = {cross_chi}).\n",
        render(lines_output(), "md"),
    ]
    return "\n".join(sections)


# -- argument parsing ---------------------------------------------------------

def _int_pair(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer pair: {text!r}") from None


def _rational_pair(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma separated rationals, got {text!r}")
    try:
        return tuple(Fraction(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a rational pair: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                     help="output format (default: md)")

    parser = argparse.ArgumentParser(
        prog="dp7",
        description="Line bundle cohomology and rank 2 aCM classification on the "
                    "del Pezzo threefold of degree 7.",
        epilog="Negative numbers: 'dp7 cohom -2 2', 'dp7 cohom -- -2 2' or '--c1=-1,2'.",
    )
    parser.add_argument("--format", choices=FORMATS, default="md",
                        help="output format (default: md)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohom", parents=[fmt], help="cohomology of O_F(l1 xi + l2 f)")
    p.add_argument("l1", type=int)
    p.add_argument("l2", type=int)

    p = sub.add_parser("classify", parents=[fmt], help="reproduce table A or B")
    p.add_argument("table", choices=["A", "B"])
    p.add_argument("--verify", action="store_true",
                   help="run the cross checks and compare with the golden file")

    sub.add_parser("divisors", parents=[fmt], help="possible divisorial parts of a zero locus")

    p = sub.add_parser("acm-lines", parents=[fmt], help="initialized aCM line bundles")
    p.add_argument("--box", type=int, default=10)

    sub.add_parser("ulrich", parents=[fmt], help="Chern classes of rank 2 Ulrich bundles")

    p = sub.add_parser("chi", parents=[fmt], help="Euler characteristic from Chern data")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--c1", type=_int_pair, default=(0, 0), metavar="A1,A2")
    p.add_argument("--c2", type=_rational_pair, default=(0, 0), metavar="B1,B2")
    p.add_argument("--c3", type=Fraction, default=Fraction(0))

    sub.add_parser("lines", parents=[fmt], help="classes of lines on F")

    p = sub.add_parser("report", help="write a markdown report of all results")
    p.add_argument("path")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout

    if args.command == "report":
        try:
            with open(args.path, "w", encoding="utf-8") as fh:
                fh.write(report_text())
        except OSError as exc:
            print(f"dp7: cannot write report: {exc}", file=sys.stderr)
            return EXIT_IO
        return EXIT_OK

    if args.command == "cohom":
        table = cohomology_output(args.l1, args.l2)
    elif args.command == "classify":
        table = classification_output(args.table)
    elif args.command == "divisors":
        table = divisors_output()
    elif args.command == "acm-lines":
        if args.box < 5:
            parser.error("--box must be at least 5")
        table = acm_lines_output(args.box)
    elif args.command == "ulrich":
        table = ulrich_output()
    elif args.command == "chi":
        if args.rank < 1:
            parser.error("--rank must be positive")
        table = chi_output(args.rank, args.c1, args.c2, args.c3)
    else:
        table = lines_output()
    out.write(render(table, args.format))

    if args.command == "classify" and args.verify:
        problems = [f"{r.name}: {r.detail}" for r in classify.cross_check_tables().failures]
        problems += classify.compare_with_golden(args.table)
        for p in problems:
            print(f"MISMATCH {p}", file=sys.stderr)
        return EXIT_MISMATCH if problems else EXIT_OK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
