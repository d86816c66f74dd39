from fractions import Fraction

import pytest

import pierce


def test_codec():
    assert pierce.encode(Fraction(97, 400)) == [4, 33, 100]
    assert pierce.encode(0) == []
    assert pierce.decode([1, 3, 7]) == Fraction(5, 7)
    assert pierce.step("2/3") == (1, Fraction(1, 3))
    assert pierce.step(0) == (None, 0)
    assert pierce.enclose([2, 3, 4, 5], 3) == (Fraction(11, 30), Fraction(3, 8))


def test_intervals():
    iv = pierce.fundamental_interval([1, 4])
    assert (iv["left"], iv["right"]) == (Fraction(3, 4), Fraction(4, 5))
    assert not iv["left_open"] and iv["right_open"]
    sigma = pierce.find_interval_within("7/10", "4/5")
    got = pierce.fundamental_interval(sigma)
    assert got["left"] >= Fraction(7, 10) and got["right"] <= Fraction(4, 5)


def test_calendar():
    assert pierce.is_leap("gregorian", 2028)
    assert not pierce.is_leap((4, 25, 4), 2100)
    assert pierce.count_leaps("gregorian", 400) == 97
    assert pierce.count_leaps("gregorian", 400, "direct") == 97
    assert pierce.series_value("gregorian") == (Fraction(97, 400), Fraction(97, 400))


def test_law():
    assert pierce.construct_digits(1, 3) == [3, 8, 21]
    assert pierce.construct_digits("inf", 2) == [3, 55]
    rows = pierce.trajectory(1, 1)
    assert rows[0]["branch"] == "N" and rows[0]["year"] == 482 and rows[0]["thm2"] is True
    assert rows[1]["branch"] == "M" and rows[1]["year"] == 22 and rows[1]["thm2"] is None
    lo, hi = pierce.growth_rate([3, 8, 21], 3)
    assert Fraction(101484081, 100000000) < lo <= hi < Fraction(101484082, 100000000)


def test_zc():
    assert len(pierce.enumerate_zc(1, 1, 3)) == 4
    assert pierce.enumerate_zc("1/2", 1, 5) == [([1, 2, 3, 4, 5], [])]


def test_errors():
    with pytest.raises(pierce.PierceError) as info:
        pierce.encode("3/2")
    assert info.value.code == "OutOfDomain"
    with pytest.raises(ValueError):
        pierce.decode([3, 2])
