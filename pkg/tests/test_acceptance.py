"""One test per acceptance criterion, at the stated tolerance and time budget.

Each test prints a PASS/FAIL line (also collected into the terminal summary).
Criteria 7 and 10(b) cannot hold as stated; they are strict xfails so that
an unexpected pass is reported.
"""

import pytest

from conftest import ACCEPTANCE_LINES
from weberbox import verify


def report(result, label=None, passed=None, detail=None):
    ok = result.passed if passed is None else passed
    line = f"{'PASS' if ok else 'FAIL'}  criterion {label or result.id}: {detail or result.detail} ({result.seconds:.2f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def test_01_harmonic_limit():
    assert report(verify.harmonic_limit())


def test_02_critical_width_and_wall_nodes():
    assert report(verify.critical_width())


def test_03_spectrum_shape():
    assert report(verify.spectrum_shape())


def test_04_box_limit_ratios():
    assert report(verify.box_limit())


def test_05_series_vs_numerov():
    assert report(verify.oracle_equivalence())


def test_06_asymptotic_law():
    assert report(verify.asymptotic_law())


@pytest.mark.xfail(
    strict=True,
    reason="at omega=300, lambda=0.9 the head T(omega,1,[lambda omega]) is 0.048 and the tail 0.041; "
    "both decay only like exp(-0.005 omega) and exp(-0.0048 omega)",
)
def test_07_sandwich_bounds():
    assert report(verify.sandwich_bounds())


def test_08_weber_identity():
    assert report(verify.weber_identity())


def test_09_ode_residual():
    assert report(verify.ode_residual())


@pytest.fixture(scope="module")
def hydrogen_result():
    return verify.hydrogen_checks()


def test_10a_termination(hydrogen_result):
    d = hydrogen_result.data
    assert report(hydrogen_result, "10a", d["a"], f"c_(N+1) = 0 for (L, N) in {{0,1,2}}^2: {d['a']}")
    assert hydrogen_result.seconds < hydrogen_result.budget


@pytest.mark.xfail(
    strict=True,
    reason="the literal law omits Gamma(2L+2)/Gamma(L+1-xi/2) = 0.3928; the ratio settles there, not at 1",
)
def test_10b_asymptotic_ratio(hydrogen_result):
    r = hydrogen_result.data["b_ratio"]
    ok = abs(r - 1) < 0.05
    report(hydrogen_result, "10b", ok, f"F(100)/predicted = {r:.4f} (needs |ratio - 1| < 0.05)")
    assert ok


def test_10c_coefficient_ratio(hydrogen_result):
    c = hydrogen_result.data["c"]
    ok = all(abs(q - 1) < 0.05 for q in c)
    assert report(hydrogen_result, "10c", ok, f"n c_(n+1)/(2 c_n) at n=200: {[round(q, 4) for q in c]}")


def test_11_piecewise_coulomb():
    assert report(verify.coulomb_sanity())
