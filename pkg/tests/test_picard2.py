import pytest

from k3siegel.intpoly import IntPoly, gcd as zgcd
from k3siegel.algnum import RationalFunctionW
from k3siegel.picard2 import (
    CASE_II_SEPTIC,
    CASE_IV_FACTOR,
    S20_1,
    ST20_1,
    CertificationError,
    classify_grid,
    eliminate,
    exclude_case_iv,
    exclude_cases_ii_iii,
    expected_P,
    expected_Q,
    fp_divmod,
    fp_gcd,
    full_analysis,
    solve_B_and_P,
    trace_check,
)

EXPECTED_PM = ["S", "S", "H", "S", "S", "S", "H", "H", "S"]
EXPECTED_P = ["S", "S", "S", "S", "S", "S", "S", "S", "H"]


def test_trace_check():
    assert trace_check()
    # the degree-4 Salem polynomial has Tr(F^3) > 1: different pattern
    assert not trace_check(IntPoly([1, -1, -1, -1, 1]))


def test_eliminant_degrees():
    e3 = eliminate(3)
    e7 = eliminate(7)
    assert len(e3) - 1 == 4      # (B - Q) times a cubic
    assert len(e7) - 1 == 12     # (B - Q) times a degree-11 factor
    g = fp_gcd(e3, e7)
    assert len(g) - 1 == 1


def test_remaining_factors_coprime():
    e3, e7 = eliminate(3), eliminate(7)
    g = fp_gcd(e3, e7)
    r3, rem3 = fp_divmod(e3, g)
    r7, rem7 = fp_divmod(e7, g)
    assert not rem3 and not rem7
    assert len(r3) - 1 == 3 and len(r7) - 1 == 11
    assert len(fp_gcd(r3, r7)) - 1 == 0  # no common roots


def test_solve_matches_closed_forms():
    report = solve_B_and_P()
    assert report.q_func == expected_Q()
    assert report.p_func == expected_P()
    assert report.certificates["h3_separation"]
    assert report.certificates["h7_separation"]


def test_exclusion_case_iv():
    numerator = exclude_case_iv()
    assert (IntPoly([1, 1]) * CASE_IV_FACTOR).divides(numerator)
    assert zgcd(numerator, S20_1).degree == 0
    assert zgcd(IntPoly([1, 1]) * CASE_IV_FACTOR, S20_1).degree == 0


def test_exclusion_cases_ii_iii():
    numerator = exclude_cases_ii_iii()
    assert CASE_II_SEPTIC.divides(numerator)
    assert zgcd(numerator, ST20_1).degree == 0
    assert zgcd(CASE_II_SEPTIC, ST20_1).degree == 0
    assert zgcd(ST20_1, ST20_1) == ST20_1


def test_verdict_grid():
    report = classify_grid(solve_B_and_P())
    pm = [str(report.grid[("p_pm", j)]) for j in range(1, 10)]
    p = [str(report.grid[("p", j)]) for j in range(1, 10)]
    assert pm == EXPECTED_PM
    assert p == EXPECTED_P
    # every Siegel verdict on the p_pm row has a conjugate witness
    for j in range(1, 10):
        v = report.grid[("p_pm", j)]
        if v.kind == "S":
            assert v.rule == "1-i"


def test_full_analysis_certificates():
    report = full_analysis()
    assert "case_iv_numerator" in report.certificates
    assert "case_ii_iii_numerator" in report.certificates
    assert report.e3_degree == 4 and report.e7_degree == 12


def test_grid_reproduces_rank2_search_patterns():
    # the S/H letters of the fifteen rank-2 search rows are the grid
    # columns at each row's special trace index
    report = classify_grid(solve_B_and_P())
    rows = [(7, "HS"), (6, "SS"), (9, "SH"), (6, "SS"), (5, "SS"),
            (3, "HS"), (4, "SS"), (7, "HS"), (1, "SS"), (6, "SS"),
            (3, "HS"), (3, "HS"), (5, "SS"), (1, "SS"), (3, "HS")]
    for j, letters in rows:
        got = f"{report.grid[('p_pm', j)]}{report.grid[('p', j)]}"
        assert got == letters
