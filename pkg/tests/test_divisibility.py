"""The divisibility law for solution counts M_i."""

from fractions import Fraction

from igusa.context import PadicContext
from igusa.counting import count_naive, poincare_truncation
from igusa.divisibility import (
    check_divisibility,
    constructive_shift,
    divisibility_property_check,
    min_shift,
    smallest_real_pole,
)
from igusa.families import zeta_sum_squares, zeta_xy_zi
from igusa.poly import parse_poly
from igusa.qpoly import QPoly
from igusa.zeta import PoincareSeries, ZetaRational, one_var_integral, series_coeffs


def test_smallest_real_pole_xy_z2():
    z = zeta_xy_zi(PadicContext(3, 3), 2)
    assert smallest_real_pole(z) == Fraction(-3, 2)


def test_smallest_real_pole_linear():
    assert smallest_real_pole(one_var_integral(5, 0, 1, 1)) == Fraction(-1)


def test_smallest_real_pole_inert_circle():
    z, _ = zeta_sum_squares(PadicContext(3, 2))
    assert smallest_real_pole(z) == Fraction(-1)


def test_check_divisibility_xy_z2():
    f = parse_poly("x*y+z^2")
    for p in (2, 3):
        M = poincare_truncation(f, p, 6)
        a = min_shift(M, Fraction(-3, 2))
        report = check_divisibility(M, Fraction(-3, 2), a)
        assert report.ok
        assert report.violations == []


def test_check_divisibility_flat_counts():
    # f = x, n = 1, l = -1: n + l = 0, any a >= 0 passes
    M = PoincareSeries(3, 1, [Fraction(3) ** (-i) for i in range(6)])
    assert M.counts() == [1] * 6
    assert check_divisibility(M, Fraction(-1), 0).ok


def test_check_divisibility_detects_wrong_l():
    f = parse_poly("x*y+z^2")
    M = poincare_truncation(f, 2, 6)
    report = check_divisibility(M, Fraction(-1), 0)
    assert not report.ok
    assert report.violations


def test_min_shift_is_minimal():
    f = parse_poly("x*y+z^2")
    for p in (2, 3):
        M = poincare_truncation(f, p, 6)
        a = min_shift(M, Fraction(-3, 2))
        assert check_divisibility(M, Fraction(-3, 2), a).ok
        if a > 0:
            assert not check_divisibility(M, Fraction(-3, 2), a - 1).ok


def test_min_shift_monomial_counts():
    # f = x^3 over Z_2: M_i = 2^(i - ceil(i/3)), l = -1/3
    m = 3
    coeffs = [Fraction(2 ** (i - -(-i // m)), 2**i) for i in range(10)]
    M = PoincareSeries(2, 1, coeffs)
    a = min_shift(M, Fraction(-1, m))
    assert a in (0, 1)
    assert check_divisibility(M, Fraction(-1, m), a).ok


def test_min_shift_single_entry():
    M = PoincareSeries(5, 2, [Fraction(1)])
    assert min_shift(M, Fraction(-1)) == 0


def test_min_shift_counter_agreement():
    f = parse_poly("x*y+z^3")
    M_h = poincare_truncation(f, 2, 6)
    M_n = poincare_truncation(f, 2, 6, counter=count_naive)
    l = Fraction(-4, 3)
    assert M_h.counts() == M_n.counts()
    assert min_shift(M_h, l) == min_shift(M_n, l)


def test_property_geometric_factor():
    # 1/(1 - p^-3 t^2): 3*2 - 3 = 3 >= 2*(3/2)
    for p in (2, 3):
        coeffs = series_coeffs(
            ZetaRational(p, QPoly.const(Fraction(1)), {(2, 3): 1}), 10
        )
        assert divisibility_property_check(coeffs, 3, Fraction(-3, 2), p, 10)


def test_property_constant():
    assert divisibility_property_check([Fraction(1)], 3, Fraction(-3, 2), 2, 0)


def test_property_product_closure():
    for p in (2, 3):
        prod = series_coeffs(
            ZetaRational(p, QPoly.const(Fraction(1)), {(2, 3): 1, (4, 6): 1}), 10
        )
        assert divisibility_property_check(prod, 3, Fraction(-3, 2), p, 10)


def test_property_below_threshold_fails():
    # the factor (1,2) has real part -2 < -3/2 and breaks the property
    prod = series_coeffs(
        ZetaRational(2, QPoly.const(Fraction(1)), {(2, 3): 1, (1, 2): 1}), 10
    )
    assert not divisibility_property_check(prod, 3, Fraction(-3, 2), 2, 10)


def test_constructive_shift_xy_z2():
    f = parse_poly("x*y+z^2")
    for p in (2, 3):
        z = zeta_xy_zi(PadicContext(p, 3), 2)
        a, C = constructive_shift(z, 3, Fraction(-3, 2))
        M = poincare_truncation(f, p, 6)
        assert check_divisibility(M, Fraction(-3, 2), a).ok


def test_report_json():
    f = parse_poly("x*y+z^2")
    M = poincare_truncation(f, 2, 4)
    report = check_divisibility(M, Fraction(-3, 2), 1)
    data = report.to_json()
    assert data["l"] == "-3/2"
    assert data["checked_up_to"] == 4
