from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dp7.bundle import (
    chi_hrr,
    chi_rr,
    dual,
    dual_twist,
    invariant_c1c2_hc2,
    rank2,
    twist,
    zero_locus_class,
)
from dp7.chow import F2, H, XI2, curve, divisor, intersect
from dp7.classify import (
    ClassificationRow,
    Family,
    NoSolution,
    SectionData,
    Unique,
    Verdict,
    a3_beta_refinement,
    admissible_divisors,
    compare_with_golden,
    cross_check_tables,
    divisor_candidates,
    effectiveness_defect,
    load_golden,
    rows_to_csv,
    section_rhs,
    solve_beta,
    table_a,
    table_b,
    theorem_a_table,
    ulrich_c1_solve,
    ulrich_c2_enumeration,
)
from dp7.cohomology import LineBundle, cohomology_table

F_ = Fraction
NO, YES = SectionData.for_case(False), SectionData.for_case(True)

# Cell-for-cell copies of the two printed tables.
TABLE_A = [
    ((1, -1), False, (F_(1, 2), 0)),
    ((1, -1), True, (0, 0)),
    ((2, -1), False, (0, 0)),
    ((2, -1), True, (F_(-2, 3), F_(1, 3))),
    ((2, -2), False, (-1, 1)),
    ((2, -2), True, (F_(-3, 2), 1)),
    ((3, -1), False, (F_(1, 4), F_(1, 2))),
    ((3, -2), False, (F_(-8, 5), F_(6, 5))),
    ((3, -3), False, (F_(-10, 3), F_(8, 3))),
    ((4, -1), False, (F_(8, 5), F_(4, 5))),
    ((4, -2), False, (F_(-4, 3), F_(5, 3))),
    ((4, -3), False, (-4, 3)),
    ((4, -4), False, (F_(-13, 2), 5)),
]

TABLE_B = [
    ("A0", (0, 1), False, (0, 1)),
    ("A1", (1, 0), False, (1, -1)),
    ("A2", (0, 2), False, (0, 1)),
    ("A3", (1, 1), False, None),  # the family (beta, 2(1 - beta))
    ("A4", (2, 0), False, (1, 0)),
    ("A5", (1, 2), False, (2, 0)),
    ("A6", (2, 1), False, (2, 1)),
    ("A7", (0, 1), True, (0, 0)),
    ("A8", (1, 0), True, (0, 0)),
    ("A9", (0, 2), True, (0, 0)),
]


# -- divisorial parts ---------------------------------------------------------

def test_divisor_candidates():
    assert divisor_candidates() == [(0, 1), (0, 2), (0, 3), (0, 4), (1, -1), (1, 0), (2, -2), (2, -1)]
    assert (1, 1) not in divisor_candidates()
    assert (0, 5) not in divisor_candidates()


def test_divisor_candidates_satisfy_constraints():
    for d1, d2 in divisor_candidates():
        D = LineBundle(d1, d2)
        assert cohomology_table(D).h0 > 0  # effective
        assert cohomology_table(D.twist(-1)).h0 == 0
        assert d1 <= 2 and d1 + d2 <= 4


def test_admissible_divisors():
    assert admissible_divisors((0, 1), True) == [(0, 1)]
    ds = admissible_divisors((2, 0), False)
    assert (0, 0) in ds and (0, 1) in ds and (2, 0) not in ds
    for d in ds:
        assert cohomology_table(LineBundle(2 - d[0], 0 - d[1])).h0 > 0


# -- the linear system --------------------------------------------------------

def test_solve_examples():
    assert solve_beta((1, -1), NO) == Unique((F_(1, 2), F_(0)))
    assert solve_beta((2, -1), YES) == Unique((F_(-2, 3), F_(1, 3)))
    assert solve_beta((0, 1), YES) == Unique((F_(0), F_(0)))
    fam = solve_beta((1, 1), NO)
    assert isinstance(fam, Family)
    assert str(fam) == "(beta,2(1-beta))"
    assert fam.at(3) == (3, -4)


def test_solve_no_solution():
    # a1 == a2 with inconsistent right hand sides
    sol = solve_beta((1, 1), SectionData(1, 0))
    assert isinstance(sol, NoSolution)
    assert not sol.contains((0, 0))
    assert str(sol) == "none"


sections = st.builds(SectionData, st.integers(0, 5), st.integers(0, 5))
alphas = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


@given(alphas, sections)
def test_solutions_satisfy_both_equations(alpha, s):
    rhs = section_rhs(alpha, s)
    sol = solve_beta(alpha, s)
    if isinstance(sol, Unique):
        assert invariant_c1c2_hc2(alpha, sol.beta) == rhs
    elif isinstance(sol, Family):
        for b in (-3, 0, F_(1, 2), 4):
            assert invariant_c1c2_hc2(alpha, sol.at(b)) == rhs
    else:
        assert alpha[0] == alpha[1]


@given(alphas, sections)
def test_solutions_match_riemann_roch_on_duals(alpha, s):
    # independent oracle: the section counts are chi(E^dual(-h)) and chi(E^dual)
    sol = solve_beta(alpha, s)
    betas = [sol.beta] if isinstance(sol, Unique) else [sol.at(b) for b in (0, 2)] \
        if isinstance(sol, Family) else []
    for beta in betas:
        E_dual = dual(rank2(alpha, beta))
        assert chi_hrr(twist(E_dual, LineBundle(-1, -1))) == s.h0_dual_minus_h
        assert chi_hrr(E_dual) == s.h0_dual


def test_section_data_cases():
    assert YES == SectionData(0, 1)
    assert NO == SectionData(0, 0)


# -- tables -------------------------------------------------------------------

def test_table_a_matches_printed_table():
    rows = table_a()
    assert len(rows) == 13
    for row, (alpha, d_eq, beta) in zip(rows, TABLE_A):
        assert row.alpha == alpha and row.d_equals_c1 == d_eq
        assert row.beta == Unique(tuple(F_(b) for b in beta))


def test_table_a_verdicts():
    for row in table_a():
        if not row.beta.is_integral:
            assert row.verdict is Verdict.RULED_OUT_NONINTEGRAL
        elif row.alpha == (4, -3):
            assert row.verdict is Verdict.RULED_OUT_POSITIVITY
        else:
            assert row.verdict is Verdict.SPLIT_BUNDLE


def test_table_b_matches_printed_table():
    rows = table_b()
    assert len(rows) == 10
    for row, (name, alpha, d_eq, beta) in zip(rows, TABLE_B):
        assert (row.name, row.alpha, row.d_equals_c1) == (name, alpha, d_eq)
        if beta is None:
            assert row.beta == Family(F_(2))
        else:
            assert row.beta == Unique(tuple(F_(b) for b in beta))


def test_table_b_verdicts():
    v = {row.name: row.verdict for row in table_b()}
    assert v["A0"] is v["A6"] is Verdict.REALIZED
    assert all(v[f"A{i}"] is Verdict.SPLIT_BUNDLE for i in range(1, 6))
    assert all(v[f"A{i}"] is Verdict.RULED_OUT_DUALITY for i in (7, 8, 9))


def test_table_b_round_trip_consistency():
    for row in table_b():
        if isinstance(row.beta, Unique) and not row.d_equals_c1:
            assert invariant_c1c2_hc2(row.alpha, row.beta.beta) == section_rhs(row.alpha, NO)


def test_dual_twist_pairs_rows():
    by_name = {r.name: r for r in table_b()}
    for i in range(3):
        src, dst = by_name[f"A{i}"], by_name[f"A{6 - i}"]
        alpha, beta = dual_twist(src.alpha, src.beta.beta, 1)
        assert alpha == dst.alpha
        assert dst.beta.contains(beta)


def test_golden_files():
    assert compare_with_golden("A") == []
    assert compare_with_golden("B") == []
    assert load_golden("B")[3] == ("A3", "(1,1)", "no", "(beta,2(1-beta))")


def test_rows_to_csv_header():
    text = rows_to_csv(table_b())
    assert text.splitlines()[0] == "name,alpha,d_equals_c1,beta"
    assert len(text.splitlines()) == 11


def test_row_record_round_trip():
    for row in table_a() + table_b():
        assert ClassificationRow.from_record(row.to_record()) == row


def test_row_record_rejects_unknown_kind():
    rec = table_b()[0].to_record()
    rec["beta"] = {"kind": "cone"}
    with pytest.raises(ValueError):
        ClassificationRow.from_record(rec)


def test_cross_checks_pass():
    report = cross_check_tables()
    assert report.ok, [(r.name, r.detail) for r in report.failures]
    assert len(report.results) > 20


def test_a3_refinement():
    assert a3_beta_refinement() == [1, 2]
    # the class of E for D = f is (beta - 1)(xi^2 - 2f^2)
    fam = solve_beta((1, 1), NO)
    for b in range(-3, 5):
        assert zero_locus_class((1, 1), fam.at(b), (0, 1)) == (b - 1) * (XI2 - 2 * F2)


# -- Ulrich bundles -----------------------------------------------------------

def test_ulrich_c1():
    assert ulrich_c1_solve() == (2, 2)
    assert 4 * 2 + 3 * 2 == 14
    for a1 in range(5):
        for a2 in (0, 1, 3, 4):
            assert 14 - 4 * a1 - 3 * a2 != 0


def test_ulrich_c2():
    found = ulrich_c2_enumeration()
    assert found == [(3, 3), (4, 1)]
    fam = solve_beta((2, 2), NO)
    assert isinstance(fam, Family) and fam.hc2 == 9
    for beta in found:
        assert fam.contains(beta)
        assert chi_rr(rank2((2, 2), beta)) == 14 == 7 * 2
        assert invariant_c1c2_hc2((2, 2), beta) == (18, 9)


def test_dual_twist_euler_characteristic():
    # with no sections of E^dual, chi(E^dual(h)) = 14 - 4 a1 - 3 a2; it vanishes only at c1 = 2h
    for a1 in range(-4, 5):
        for a2 in range(-4, 5):
            sol = solve_beta((a1, a2), NO)
            betas = [sol.beta] if isinstance(sol, Unique) else \
                [sol.at(0), sol.at(3)] if isinstance(sol, Family) else []
            for beta in betas:
                E_dual_h = twist(dual(rank2((a1, a2), beta)), LineBundle(1, 1))
                assert chi_rr(E_dual_h) == 14 - 4 * a1 - 3 * a2


# -- effectiveness defect -----------------------------------------------------

@pytest.mark.parametrize("lam,expected", [(2, 2), (3, 5), (4, 8)])
def test_effectiveness_defect_examples(lam, expected):
    assert effectiveness_defect(lam) == expected


def test_effectiveness_defect_matches_cohomology():
    for lam in range(2, 15):
        L = LineBundle(-1, lam)
        h1 = lambda M: cohomology_table(M).h1
        assert effectiveness_defect(lam) == 2 * h1(L.twist(-1)) - h1(L) - h1(L.twist(-2))


def test_effectiveness_defect_rejects_small():
    with pytest.raises(ValueError):
        effectiveness_defect(1)


# -- final list ---------------------------------------------------------------

def test_theorem_a_table():
    rows = theorem_a_table()
    assert [r.zero_locus_degree for r in rows] == [1, 1, 1, 5, 9, 9]
    assert [(r.c1, r.c2) for r in rows] == [
        (divisor(0, 0), F2),
        (divisor(0, 0), XI2 - F2),
        (divisor(0, 1), F2),
        (divisor(2, 1), curve(2, 1)),
        (2 * H, curve(3, 3)),
        (2 * H, curve(4, 1)),
    ]
    assert [r.chi for r in rows] == [1, 1, 3, 11, 14, 14]


def test_theorem_a_rows_are_initialized_table_entries():
    # c1 = 0, f, 2xi+f, 2h each correspond to a row of the tables or the Ulrich case
    b = {r.alpha: r for r in table_b() if not r.d_equals_c1}
    for case in theorem_a_table():
        if case.alpha in b:
            assert b[case.alpha].beta.contains(case.beta)
        degree = intersect(H, case.c2)
        assert degree == case.zero_locus_degree
