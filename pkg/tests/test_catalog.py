import math
from fractions import Fraction as F

import pytest

from rectbilliard import OddPeriodError, enumerate_classes, representative_orbit
from rectbilliard.errors import BilliardError
from rectbilliard.simulator import simulate
from rectbilliard.table import Generator


def test_period_ten_types():
    cat = enumerate_classes(10)
    assert [e.type_pair for e in cat.entries] == [(2, 8), (4, 6), (6, 4), (8, 2)]
    assert [e.class_name for e in cat.entries] == ["C_10(2)", "C_10(4)", "C_10(6)", "C_10(8)"]


def test_period_fourteen_count_by_brute_force():
    # coprime m in 1..6 with 7: all six of them
    expected = sum(1 for m in range(1, 7) if math.gcd(m, 7) == 1)
    assert len(enumerate_classes(14)) == expected == 6


@pytest.mark.parametrize("rho", [F(1), F(3, 4), F(2)])
def test_representatives_close_at_K(rho):
    for K in range(4, 31, 2):
        for e in enumerate_classes(K, rho).entries:
            t = representative_orbit(e)
            assert t.outcome.K == K and t.type_pair == e.type_pair
            assert e.physical_slope == rho * e.slope
            assert e.representative.p0 == F(1, e.type_pair[0])


def test_period_two_limiting():
    cat = enumerate_classes(2, F(3, 2))
    assert [e.type_pair for e in cat.entries] == [(0, 2), (2, 0)]
    for e in cat.entries:
        assert e.limiting
        assert representative_orbit(e).type_pair == e.type_pair


def test_period_ten_member_at_3_20():
    e = enumerate_classes(10).entries[2]
    g = Generator(e.representative.start_side, F(3, 20), e.representative.slope, e.representative.table)
    t = simulate(g)
    assert t.outcome.K == 10 and t.horizontal_count == 6


def test_bad_periods():
    for K in (1, 3, 11):
        with pytest.raises(OddPeriodError):
            enumerate_classes(K)
    with pytest.raises(BilliardError):
        enumerate_classes(0)
