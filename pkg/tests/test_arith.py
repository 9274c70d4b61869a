"""Exact rational-function arithmetic, radical scalars, Laurent data."""

from fractions import Fraction

import pytest

from igusa.qpoly import QPoly
from igusa.radical import RadicalScalar, ResidueValue
from igusa.zeta import (
    ZetaRational,
    eval_at_one,
    laurent_at,
    one_var_integral,
    poincare_from_zeta,
    series_coeffs,
)
from igusa.poly import parse_poly
from igusa.counting import count_naive


def test_qpoly_divmod_and_gcd():
    # (t^2 - 1) = (t - 1)(t + 1)
    a = QPoly([Fraction(-1), Fraction(0), Fraction(1)])
    b = QPoly([Fraction(-1), Fraction(1)])
    q, r = a.divmod(b)
    assert r.is_zero()
    assert q == QPoly([Fraction(1), Fraction(1)])
    g = a.gcd(b)
    assert g.degree == 1
    assert a.divmod(g)[1].is_zero()
    assert b.divmod(g)[1].is_zero()


def test_radical_scalar_root_identity():
    # w represents p^(1/M): w^M must reduce to p
    w = RadicalScalar(5, 6, [0, 1])
    assert (w ** 6).as_rational() == 5


def test_radical_scalar_inverse():
    x = RadicalScalar(3, 4, [2, 1, 0, Fraction(-1, 7)])
    one = x * x.inverse()
    assert one.as_rational() == 1


def test_radical_scalar_sign():
    # 3^(1/2) - 2 < 0 < 3^(1/2) - 1
    assert RadicalScalar(3, 2, [-2, 1]).sign() == -1
    assert RadicalScalar(3, 2, [-1, 1]).sign() == 1
    assert RadicalScalar(3, 2, []).sign() == 0


def test_one_var_integral_j0():
    z = one_var_integral(5, 0, 1, 1)
    assert z.numerator == QPoly.const(Fraction(4, 5))
    assert dict(z.denominator) == {(1, 1): 1}


def test_one_var_integral_j2():
    z = one_var_integral(3, 2, 1, 1)
    # (2/3) * (t^2/9) / (1 - t/3)
    assert z.numerator == QPoly.monomial(Fraction(2, 27), 2)
    assert dict(z.denominator) == {(1, 1): 1}


def test_one_var_integral_cube_counts():
    # f = x^3 on Z_2: M_i = 2^(i - ceil(i/3)), checked against enumeration
    z = one_var_integral(2, 0, 3, 1)
    counts = poincare_from_zeta(z, 1, 6).counts()
    f = parse_poly("x^3")
    for i in range(1, 7):
        expected = 2 ** (i - -(-i // 3))
        assert counts[i] == expected
        assert count_naive(f, 2, i) == expected


def test_laurent_single_factor():
    for p in (2, 3, 5, 7):
        z = one_var_integral(p, 0, 1, 1)
        le = laurent_at(z, Fraction(-1))
        assert le.pole_order == 1
        b1 = le.b(1)
        assert b1.logpow == 1
        assert b1.value.as_rational() == Fraction(p - 1, p)


def test_laurent_regular_point():
    z = one_var_integral(5, 0, 1, 1)
    le = laurent_at(z, Fraction(-1, 2))
    assert le.pole_order == 0
    assert le.b(1).is_zero()


def test_laurent_double_pole_product():
    p = 5
    z = one_var_integral(p, 0, 1, 1) * one_var_integral(p, 0, 1, 1)
    le = laurent_at(z, Fraction(-1))
    assert le.pole_order == 2
    assert le.b(2).value.as_rational() == Fraction((p - 1) ** 2, p * p)
    assert le.b(2).logpow == 2


def test_eval_at_one_single_factor():
    assert eval_at_one(one_var_integral(7, 0, 1, 1)) == 1


def test_eval_at_one_constant():
    z = ZetaRational(3, QPoly.const(Fraction(1, 2)), {})
    assert eval_at_one(z) == Fraction(1, 2)


def test_poincare_linear():
    z = one_var_integral(3, 0, 1, 1)
    assert poincare_from_zeta(z, 1, 2).counts() == [1, 1, 1]


def test_poincare_unit_constant():
    z = ZetaRational(5, QPoly.const(Fraction(1)), {})
    assert poincare_from_zeta(z, 2, 3).counts() == [1, 0, 0, 0]


def test_poincare_rejects_value_not_one():
    z = ZetaRational(3, QPoly.const(Fraction(1, 2)), {})
    with pytest.raises(ValueError):
        poincare_from_zeta(z, 1, 3)


def test_poincare_rejects_non_integer_counts():
    z = one_var_integral(3, 0, 1, 1)
    with pytest.raises(ValueError):
        poincare_from_zeta(z, 0, 3)


def test_zeta_mul_add_series_consistency():
    p = 3
    a = one_var_integral(p, 0, 2, 3)
    b = one_var_integral(p, 1, 1, 1)
    s = a + b
    prod = a * b
    k = 8
    sa, sb = series_coeffs(a, k), series_coeffs(b, k)
    ss, sp = series_coeffs(s, k), series_coeffs(prod, k)
    for i in range(k + 1):
        assert ss[i] == sa[i] + sb[i]
        assert sp[i] == sum(sa[j] * sb[i - j] for j in range(i + 1))


def test_zeta_json_round_trip():
    z = one_var_integral(3, 1, 2, 3) + one_var_integral(3, 0, 1, 1)
    data = z.to_json()
    back = ZetaRational.from_json(data)
    assert back.p == z.p
    assert back.numerator == z.numerator
    assert dict(back.denominator) == dict(z.denominator)
    assert isinstance(data["numerator"][0][0], str)


def test_residue_value_json():
    rv = ResidueValue(RadicalScalar(2, 2, [Fraction(1, 3)]), 1)
    data = rv.to_json()
    assert data["M"] == 2
    assert data["logpow"] == 1


def test_reduced_cancels_whole_factors():
    p = 5
    z = one_var_integral(p, 0, 2, 2)
    # multiply numerator and denominator by the same factor
    bloated = ZetaRational(
        p,
        z.numerator * QPoly([Fraction(1), Fraction(0), Fraction(0, 1)])
        - z.numerator * QPoly.monomial(Fraction(1, p), 1),
        dict(z.denominator) | {(1, 1): 1},
    )
    red = bloated.reduced()
    assert dict(red.denominator) == {(2, 2): 1}
    assert series_coeffs(red, 6) == series_coeffs(z, 6)
