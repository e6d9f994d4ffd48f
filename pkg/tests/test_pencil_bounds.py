from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gcover.divisor_algebra import (DELTA_0_C2, DELTA_0_C3, LAMBDA, DivisorClass, delta_base,
                                    delta_i_c3, delta_prime)
from gcover.errors import IndexOutOfRange, InvalidQuery
from gcover.group_core import builtin
from gcover.monodromy import CoverCountQuery, count_with_image_class
from gcover.pencil_bounds import (ASSUMPTION_EQ00, check, min_b_c3, min_b_prime,
                                  pencil_numbers)

rationals = st.fractions(max_denominator=20).filter(lambda q: abs(q) < 100)


def test_b2_numbers():
    b = pencil_numbers("B_i", 2)
    assert b[LAMBDA] == 3 and b[delta_base(0)] == 30 and b[delta_base(2)] == -1
    assert b[delta_base(1)] == 0


def test_a1_tn_numbers():
    a = pencil_numbers("A_i_TN", 1)
    assert a[LAMBDA] == 6 and a[delta_prime(0)] == 72
    assert a[DELTA_0_C2] == 0 and a[DELTA_0_C3] == 0
    assert a[delta_prime(1)] == -3


def test_a_c3_numbers_are_per_unit_degree():
    for i in range(1, 8):
        p = pencil_numbers("A_i_c3", i)
        assert p.per_unit_d and p[delta_i_c3(i)] == -1 and p[LAMBDA] == i + 1
        assert list(p.totals.values()) == [6 * i + 18]
        with pytest.raises(InvalidQuery):
            p.intersect(DivisorClass(13, {LAMBDA: 1}))


@pytest.mark.parametrize("i", [1, 2, 3])
def test_lambda_number_matches_mu2_cover_count(i):
    mu2 = builtin("mu2")
    covers = count_with_image_class(CoverCountQuery(mu2, i, (), mu2.full_class)).count
    assert pencil_numbers("A_i_TN", i)[LAMBDA] == covers * (i + 1)


@pytest.mark.parametrize("i", range(1, 12))
def test_tn_entries_are_integers(i):
    p = pencil_numbers("A_i_TN", i)
    assert all(v.denominator == 1 for v in p.numbers.values())
    # over each point of B_i.delta_0 the covers split between the two unramified pieces
    b = pencil_numbers("B_i", i)
    cov = 2 ** (2 * i) - 1
    assert p[delta_prime(0)] + p[DELTA_0_C2] == cov * b[delta_base(0)]


def solve_b_prime(i, a, b0p, b0c2):
    """Bound on b_i' from A.E >= 0 with E = a lambda - sum b delta, via intersect()."""
    p = pencil_numbers("A_i_TN", i)
    rest = DivisorClass(13, {LAMBDA: a, delta_prime(0): -b0p, DELTA_0_C2: -b0c2})
    return -p.intersect(rest) / -p[delta_prime(i)]


@given(st.integers(1, 20), rationals, rationals, rationals)
def test_min_b_prime_is_the_effectivity_threshold(i, a, b0p, b0c2):
    assert min_b_prime(i, a, b0p, b0c2) == solve_b_prime(i, a, b0p, b0c2)


def test_worked_values():
    assert min_b_prime(1, 13, 2, 3) == 22
    assert min_b_prime(1, 0, 2, 3) == 48
    assert min_b_c3(1, 13) == 34
    for i in range(1, 30):
        assert min_b_c3(i, 13) == 2 * i + 32
        assert min_b_c3(i, 0) == 15 * i + 45


@pytest.mark.parametrize("i", range(1, 21))
def test_bounds_hold(i):
    assert min_b_prime(i, 13, 2, 3) >= 3
    assert min_b_c3(i, 13) > 7
    out = check(i, 13, 2, 3)
    assert out["passes"] and out["exceptional_i10"] == (i == 10)
    assert out["assumptions"] == [ASSUMPTION_EQ00]
    assert Fraction(out["bound_b_prime"]) == min_b_prime(i, 13, 2, 3)


@given(st.integers(1, 20), rationals, rationals)
def test_monotone_in_a(i, a, da):
    if da <= 0:
        return
    assert min_b_prime(i, a + da, 2, 3) < min_b_prime(i, a, 2, 3)
    assert min_b_c3(i, a + da) < min_b_c3(i, a)


def test_exceptional_flag():
    assert pencil_numbers("B_i", 10).exceptional
    assert pencil_numbers("A_i_TN", 10).to_dict()["exceptional_i10"]
    assert not pencil_numbers("B_i", 9).exceptional


def test_errors():
    with pytest.raises(IndexOutOfRange):
        pencil_numbers("B_i", 0)
    with pytest.raises(IndexOutOfRange):
        min_b_prime(0, 13, 2, 3)
    with pytest.raises(InvalidQuery):
        pencil_numbers("C_i", 2)
