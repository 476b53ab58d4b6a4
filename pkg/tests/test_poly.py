from fractions import Fraction as F

import pytest

from subalg.errors import DivisionByZeroPoly, SubalgError
from subalg.fields import NumberField, QQ
from subalg.parsing import parse_poly
from subalg.poly import Poly, format_poly, poly_gcd, squarefree_decompose


def P(src):
    return parse_poly(src)


def test_construction_and_degree():
    p = Poly((F(-1), F(0), F(1)))
    assert p.degree == 2
    assert p.coeff(2) == 1 and p.coeff(1) == 0 and p.coeff(0) == -1
    assert Poly.constant(F(5)).degree == 0
    assert Poly.x(QQ) == Poly((0, 1))


def test_arithmetic():
    p, q = P("x^2 + 1"), P("x - 1")
    assert p + q == P("x^2 + x")
    assert p - q == P("x^2 - x + 2")
    assert p * q == P("x^3 - x^2 + x - 1")
    assert (-q) == P("1 - x")


def test_evaluation():
    p = P("x^3 - x")
    assert p(F(1)) == 0 and p(F(-1)) == 0 and p(F(2)) == 6


def test_divmod():
    p, q = P("x^3 - 2*x + 4"), P("x - 1")
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree
    with pytest.raises((DivisionByZeroPoly, SubalgError)):
        divmod(p, Poly.zero(QQ))


def test_derivative_orders():
    p = P("x^4")
    assert p.derivative() == P("4*x^3")
    assert p.derivative(2) == P("12*x^2")
    assert p.derivative(5).is_zero()


def test_taylor_shift():
    p = P("x^2 - 1")
    shifted = p.taylor_shift(F(1))       # p(x + 1)
    assert shifted == P("x^2 + 2*x")


def test_from_roots_and_monic():
    p = Poly.from_roots([F(1), F(-1)], QQ)
    assert p == P("x^2 - 1")
    q = P("2*x^2 - 2")
    assert q.monic() == P("x^2 - 1")


def test_gcd():
    assert poly_gcd(P("x^2"), P("x^3 - x")) == P("x")
    assert poly_gcd(P("x^2 - 1"), P("x^2 - 2*x + 1")) == P("x - 1")


def test_squarefree_decompose():
    parts = squarefree_decompose(P("x^2 * (x - 1)^3"))
    assert sorted(((format_poly(f), m) for f, m in parts)) == \
        [("x", 2), ("x - 1", 3)]


def test_number_field_coefficients():
    nf = NumberField([1, 0, 1], label="t^2+1")
    p = parse_poly("t*x^2 + 1", field=nf)
    assert p.degree == 2
    # p(t) = t * t^2 + 1 = -t + 1 since t^2 = -1
    assert p(nf.gen()) == nf.one - nf.gen()


def test_format_parse_round_trip():
    import random
    rng = random.Random(7)
    for _ in range(200):
        coeffs = [F(rng.randint(-9, 9), rng.randint(1, 9))
                  for _ in range(rng.randint(1, 7))]
        if all(c == 0 for c in coeffs):
            coeffs[-1] = F(1)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = Poly(coeffs)
        assert parse_poly(format_poly(p)) == p
