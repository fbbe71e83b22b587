from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from otau import identities as iden
from otau.core.params import TauParams


@pytest.mark.parametrize("k", range(2, 9))
def test_F_bruteforce_matches_closed_form(k):
    for idx in range(2 * k + 1):
        case = iden.F_case(k, idx)
        assert case.passed, case.case_id


@pytest.mark.parametrize("k", range(2, 7))
def test_F_simplified_agrees_with_bruteforce(k):
    for idx in range(2 * k - 1):
        assert iden.F_simplified(k, idx) == iden.F_bruteforce(k, idx)


def test_F_small_values():
    # F_{2,0} = C(2,1) (z+1) and F_{2,1} = -C(2,2) (z+2)(z+1)
    z = iden.zgen()
    assert iden.F_closed(2, 0) == (z + 1) * 2
    assert iden.F_closed(2, 1) == -((z + 2) * (z + 1))
    assert iden.F_closed(2, 3).is_zero()


@pytest.mark.parametrize("k", range(2, 11))
def test_H_identity(k):
    for l in range(k + 1):
        assert iden.H_check(k, l).passed


@pytest.mark.parametrize("k,l", [(2, 0), (3, 1), (5, 2), (6, 3), (7, 7)])
def test_H_finite_differences(k, l):
    assert all(iden.H_difference_checks(k, l).values())


@pytest.mark.parametrize("k", range(2, 7))
def test_recursion_and_shift(k):
    for l in range(k + 1):
        rec, shift = iden.Fhat_recursion_check(k, l)
        assert rec.passed and shift.passed


@pytest.mark.parametrize("k", range(1, 7))
def test_change_of_basis(k):
    assert iden.change_of_basis_check(k) == {"C_Cinv": True, "diagonalises": True}


@pytest.mark.parametrize("shift,n", [(0, 0), (0, 1), (3, 4), (-2, 5)])
def test_delta_pochhammer(shift, n):
    assert iden.delta_pochhammer_check(shift, n).passed


@pytest.mark.parametrize("n", range(0, 11))
def test_corner_power(n):
    assert iden.corner_power_check(n, TauParams.symbolic_z()).passed


def test_corner_power_numeric():
    tp = TauParams.numeric(Fraction(2, 7), Fraction(3, 11))
    assert all(iden.corner_power_check(n, tp).passed for n in range(6))


def test_appendix_cases_cover_ranges():
    cases = iden.appendix_cases(kmax=4, hmax=4)
    names = {c.name for c in cases}
    assert names == {"F_even", "F_odd", "H", "Fhat_relation", "Hhat_shift"}
    assert all(c.passed for c in cases)


def test_identity_case_json_roundtrip_shape():
    case = iden.H_check(3, 1)
    js = case.to_json()
    assert js["pass"] is True and js["params"] == {"k": 3, "l": 1}
    assert case.case_id == "H(k=3,l=1)"


@given(st.integers(2, 8), st.integers(0, 7))
def test_F_degree_and_leading_coefficient(k, l):
    if l > k - 1:
        assert iden.F_closed(k, 2 * l).is_zero()
        return
    even = iden.F_closed(k, 2 * l)
    assert even.degree() == 2 * l + 1
    assert even.leading() == comb(k + l, 2 * l + 1)
    if l <= k - 2:
        odd = iden.F_closed(k, 2 * l + 1)
        assert odd.degree() == 2 * l + 2
        assert odd.leading() == -comb(k + l, 2 * l + 2)


@given(st.integers(-5, 5), st.integers(1, 8), st.integers(1, 8))
def test_pochhammer_product_split(shift, a, b):
    # (z+s)_{a+b} = (z+s)_a (z+s-a)_b
    assert iden.poch(shift, a + b) == iden.poch(shift, a) * iden.poch(shift - a, b)
