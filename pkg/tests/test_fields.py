from fractions import Fraction as F

import pytest

from subalg.errors import NonInvertible, SubalgError
from subalg.fields import (FieldElem, NumberField, QQ, common_field,
                           field_of, is_zero_scalar, scalar_to_json)


def test_rational_field_basics():
    assert QQ.coerce(3) == F(3)
    assert QQ.zero == 0 and QQ.one == 1
    assert is_zero_scalar(QQ.zero)
    assert not is_zero_scalar(F(1, 7))


def test_number_field_arithmetic():
    nf = NumberField([1, 0, 1], label="t^2+1")   # i^2 = -1
    i = nf.gen()
    assert i * i == nf.coerce(-1)
    assert (i + nf.one) * (i - nf.one) == nf.coerce(-2)
    inv = nf.one / i
    assert inv * i == nf.one


def test_number_field_division_by_zero():
    nf = NumberField([1, 0, 1])
    with pytest.raises((NonInvertible, ZeroDivisionError)):
        nf.one / nf.zero


def test_cyclotomic_powers():
    nf = NumberField([1, 0, 0, 0, 1], label="t^4+1")
    t = nf.gen()
    p = nf.one
    for _ in range(8):
        p = p * t
    assert p == nf.one


def test_common_field_widening():
    nf = NumberField([1, 0, 1])
    assert common_field(QQ, QQ) is QQ
    assert common_field(QQ, nf) is nf
    assert common_field(nf, QQ) is nf


def test_field_of():
    nf = NumberField([1, 0, 1])
    assert field_of(F(1, 2)) is QQ
    assert field_of(nf.gen()) is nf


def test_incompatible_fields_rejected():
    a = NumberField([1, 0, 1])
    b = NumberField([2, 0, 1])
    with pytest.raises(SubalgError):
        common_field(a, b)


def test_scalar_json_round_trip_forms():
    nf = NumberField([1, 0, 1])
    assert scalar_to_json(F(3, 2)) == "3/2"
    as_json = scalar_to_json(nf.gen())
    assert as_json == {"t_coeffs": ["0", "1"]}
