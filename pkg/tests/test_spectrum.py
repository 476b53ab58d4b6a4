from fractions import Fraction as F

import pytest

from subalg.conditions import LinearFunctional, Subalgebra, kernel_subalgebra
from subalg.errors import NoDegreeTwoElement, SpectrumNotExact
from subalg.fields import NumberField
from subalg.parsing import parse_poly
from subalg.spectrum import (characteristic_polynomial, compute_clusters,
                             compute_spectrum, deg2_description,
                             deg2_from_description, spectrum_size_check)


def alg(*srcs, field=None):
    return Subalgebra.from_generators(
        [parse_poly(s, field=field) for s in srcs])


def test_pair_spectrum_exact():
    pts = alg("x^3 - x", "x^2").spectrum()
    assert sorted(p.value for p in pts) == [F(-1), F(1)]
    assert all(p.kind == "paired" and p.exact for p in pts)
    partners = {p.value: p.partner for p in pts}
    assert partners[F(1)] == F(-1) and partners[F(-1)] == F(1)


def test_derivative_spectrum():
    pts = alg("x^2", "x^5").spectrum()
    assert len(pts) == 1
    assert pts[0].value == F(0) and pts[0].kind == "derivative"


def test_exact_mode_raises_without_field():
    A = alg("x^4", "x^3 - x")
    with pytest.raises(SpectrumNotExact):
        A.spectrum(mode="exact")


def test_exact_mode_with_cyclotomic_field():
    nf = NumberField([1, 0, 0, 0, 1], label="t^4+1")
    pts = alg("x^4", "x^3 - x").spectrum(mode="exact", nf=nf)
    assert len(pts) == 6 and all(p.exact for p in pts)


def test_characteristic_polynomial_matches_pair():
    A = alg("x^3 - x", "x^2")
    chi = characteristic_polynomial(A)
    assert chi == parse_poly("x^2 - 1")


def test_clusters_partition_spectrum():
    A = kernel_subalgebra([LinearFunctional.difference(F(0), F(1)),
                           LinearFunctional.difference(F(0), F(2))])
    clusters = A.clusters()
    assert len(clusters) == 1
    assert sorted(p.value for p in clusters[0].members) == \
        [F(0), F(1), F(2)]


def test_size_bound_report():
    report = spectrum_size_check(alg("x^2", "x^3"))
    assert report["ok"] and report["spectrum_size"] == 1
    assert report["bound"] == 2


def test_deg2_description_round_trip():
    A = alg("x^2", "x^3 - x")
    desc = deg2_description(A)
    assert desc.alpha0 == 0 and desc.m0 == 0
    again = deg2_from_description(desc)
    assert again == A


def test_deg2_description_shifted():
    A = alg("(x-1)^2", "(x-1)^5")
    desc = deg2_description(A)
    assert desc.alpha0 == 1 and desc.m0 == 2 and desc.pairs == []


def test_deg2_requires_degree_two():
    with pytest.raises(NoDegreeTwoElement):
        deg2_description(alg("x^3", "x^4"))
