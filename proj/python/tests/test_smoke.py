from fractions import Fraction

import pytest

import instanton_zeta as iz


def test_suites_listed():
    assert "identities" in iz.suite_names()
    assert "wall-oracle" in iz.suite_names()


def test_verify_section1():
    (r,) = iz.verify("identities", order=10)
    assert r["passed"]
    assert all(i["checked_to"] == "10" for i in r["items"])


def test_eta24_series():
    s = iz.series("eta", trunc=4)
    # eta itself sits on the 1/24 grid
    assert s[Fraction(1, 24)] == 1
    assert s[Fraction(25, 24)] == -1
    with pytest.raises(iz.TruncationError):
        s[5]


def test_e2_and_scaling():
    e2 = iz.series("E2", trunc=3)
    assert [e2[n] for n in range(4)] == [1, -24, -72, -96]
    t = iz.series("theta3", trunc=2, scaling=2)
    assert t[1] == 2 and t[Fraction(1, 2)] == 0


def test_odd_table():
    rows = iz.euler_table("odd", Fraction(7, 2), order=20)
    assert [r["delta"] for r in rows] == [Fraction(1, 2), Fraction(3, 2), Fraction(5, 2), Fraction(7, 2)]
    assert [r["euler"] for r in rows] == [0, 20, 792, 15768]
    assert rows[1]["betti"] == [1, 0, 9, 0, 9, 0, 1]


def test_v0_singular_rows():
    rows = iz.euler_table("v0", 4, order=10)
    assert rows[0]["euler"] == Fraction(-1, 4)
    assert [r["singular"] for r in rows] == [True, False, True, False, True]


def test_ztilde_label():
    z = iz.ztilde("odd", trunc=6)
    assert z.label == "Zt_vOdd"
    assert z[Fraction(1, 2)] == 20


def test_numeric():
    re, im = iz.evaluate("theta3", "i", digits=30)
    assert re.startswith("1.0864348112")
    assert abs(float(im)) < 1e-25
    r = iz.sduality("0.3+1.1i", digits=40)
    assert r["pass"] is True
    assert float(r["rel_error"]) < 1e-30
    assert iz.sduality("i", digits=30, e2="holomorphic")["pass"] is None


def test_errors():
    with pytest.raises(iz.DomainError):
        iz.evaluate("theta3", "1.0")
    with pytest.raises(iz.DomainError):
        iz.series("theta9")
    with pytest.raises(iz.Error):
        iz.euler_table("odd", 30, order=20)
