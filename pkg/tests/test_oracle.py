from fractions import Fraction as F

from subalg.oracle import (oracle_codimension, oracle_member,
                           oracle_multi_char_roots, oracle_span)
from subalg.parsing import parse_poly as P
from subalg.sagbi import membership, sagbi_complete


def test_span_pivots():
    span = oracle_span([P("x^3 - x"), P("x^2")], 12)
    pivots = set(span.pivot_degrees)
    assert 0 in pivots and 2 in pivots and 3 in pivots
    assert 1 not in pivots


def test_codimension_values():
    assert oracle_codimension([P("x^3 - x"), P("x^2")]) == 1
    assert oracle_codimension([P("x^3"), P("x^4")]) == 3
    assert oracle_codimension([P("x^4"), P("x^3 - x")]) == 3
    assert oracle_codimension([P("x")]) == 0


def test_member_against_subduction():
    gens = [P("x^3 - x"), P("x^2")]
    basis = sagbi_complete(gens)
    probes = [P("x^7 - x"), P("x"), P("x^4"), P("x^5 - x^3"),
              P("x^2 + 5"), P("x^3")]
    for f in probes:
        assert oracle_member(f, gens) == membership(f, basis)[0]


def test_multi_char_roots_pair_case():
    roots = oracle_multi_char_roots([P("x^3 - x"), P("x^2")])
    values = sorted(round(z.real, 6) for z in roots)
    assert values == [-1.0, 1.0]
    assert all(abs(z.imag) < 1e-8 for z in roots)


def test_multi_char_roots_match_char_poly():
    from subalg.resultants import char_poly_multi
    gens = [P("x^6 + x^3"), P("x^4"), P("x^9")]
    chi = char_poly_multi(gens)
    roots = oracle_multi_char_roots(gens)
    for z in roots:
        val = 0j
        for k in range(chi.degree, -1, -1):
            val = val * z + complex(chi.coeff(k))
        assert abs(val) < 1e-6
