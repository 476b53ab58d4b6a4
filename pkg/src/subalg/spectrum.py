"""Spectrum of a subalgebra: characteristic roots, pairing, clusters.

The spectrum of A consists of the points α where either every element of A
has vanishing derivative (derivative-kind) or some β ≠ α satisfies
f(α) = f(β) for all f in A (paired).  Both kinds are roots of the
characteristic polynomial, computed here as a gcd of pairwise
characteristic polynomials of coprime-degree elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from .errors import (BoundViolated, NoDegreeTwoElement, SpectrumNotExact,
                     SubalgError, UnpairedRoot)
from .fields import QQ, format_scalar, is_zero_scalar, scalar_to_json
from .poly import Poly, poly_gcd, squarefree_decompose
from .resultants import char_poly_multi, char_poly_pair
from .roots import RESIDUAL_TOL, aberth_roots, field_roots, rational_roots

PAIR_TOL = 1e-8


@dataclass
class SpectrumPoint:
    """One point of the spectrum with its classification."""

    value: object                  # exact scalar or complex
    multiplicity: int
    kind: str                      # "derivative" or "paired"
    partner: object = None         # paired partner's value
    exact: bool = True

    def to_json(self):
        if self.exact:
            value = scalar_to_json(self.value)
        else:
            value = {"re": self.value.real, "im": self.value.imag}
        out = {"value": value, "multiplicity": self.multiplicity,
               "kind": self.kind, "exact": self.exact}
        if self.partner is not None:
            out["partner"] = scalar_to_json(self.partner) if self.exact \
                else {"re": self.partner.real, "im": self.partner.imag}
        return out

    def __repr__(self):
        v = format_scalar(self.value) if self.exact else str(self.value)
        return f"SpectrumPoint({v}, {self.kind})"


@dataclass
class Cluster:
    """An equivalence class of spectrum points under value-agreement."""

    members: list
    witnesses: dict = dc_field(default_factory=dict)

    def __len__(self):
        return len(self.members)


def _basis_of(A):
    return A.sagbi_basis() if hasattr(A, "sagbi_basis") else A


def characteristic_polynomial(A, max_pairs=6):
    """Monic candidate χ: gcd of pairwise characteristic polynomials.

    Uses coprime-degree pairs of basis products up to the conductor,
    stopping when the gcd is unchanged twice; falls back to the
    multi-generator characteristic polynomial when no coprime pair exists.
    """
    basis = _basis_of(A)
    S = basis.semigroup
    degrees = [d for d in range(1, S.conductor + max(basis.degrees) + 1)
               if S.contains(d)]
    products = {d: basis.product_for(S.represent(d)) for d in degrees}
    pairs = []
    for i, d1 in enumerate(degrees):
        for d2 in degrees[i + 1:]:
            if gcd(d1, d2) == 1:
                pairs.append((d1, d2))
    pairs.sort(key=lambda t: t[0] + t[1])
    if not pairs:
        return char_poly_multi(list(basis.elements))
    chi = None
    unchanged = 0
    for d1, d2 in pairs[:max_pairs]:
        c = char_poly_pair(products[d1], products[d2])
        new = c.monic() if chi is None else poly_gcd(chi, c).monic()
        if chi is not None and new.degree == chi.degree:
            unchanged += 1
        else:
            unchanged = 0
        chi = new
        if unchanged >= 2 or chi.degree == 0:
            break
    return chi.monic()


def compute_spectrum(A, mode="hybrid", nf=None, candidates=None,
                     tol=PAIR_TOL):
    """The spectrum of A as classified SpectrumPoints.

    mode = "exact": all roots must be rational or found in the field;
    mode = "numeric": complex double-precision roots;
    mode = "hybrid" (default): exact where possible, numeric otherwise.
    """
    basis = _basis_of(A)
    chi = characteristic_polynomial(basis)
    if chi.degree < 1:
        return []
    if nf is None and basis.field is not QQ:
        nf = basis.field
    if nf is not None and candidates is None:
        candidates = _default_candidates(nf)

    exact, numeric = [], []
    for factor, mult in squarefree_decompose(chi):
        remaining = factor
        rat = remaining.to_rational()
        if rat is not None and rat.degree >= 1:
            for v, _ in rational_roots(rat):
                val = v if nf is None else nf.coerce(v)
                exact.append((val, mult))
                remaining = remaining.exact_div(
                    Poly((-v, 1), QQ).coerce_to(remaining.field))
        if nf is not None and remaining.degree >= 1:
            found, leftover = field_roots(remaining, nf, candidates)
            exact.extend((v, mult) for v, _ in found)
            remaining = Poly.constant(nf.one, nf)
            for f, _ in leftover:
                remaining = remaining * f
        if remaining.degree >= 1:
            if mode == "exact":
                raise SpectrumNotExact(
                    f"irreducible factor of degree {remaining.degree} has "
                    "no root in the supplied field")
            roots, _ = aberth_roots(remaining, tol=RESIDUAL_TOL)
            numeric.extend((z, mult) for z in roots)
    if mode == "numeric":
        numeric = [(complex(_embed(v)), m) for v, m in exact] + numeric
        exact = []

    points = []
    all_vals = [(v, True) for v, _ in exact] + [(v, False) for v, _ in numeric]
    for value, mult in exact:
        points.append(_classify(basis, value, mult, True, all_vals, tol))
    for value, mult in numeric:
        points.append(_classify(basis, value, mult, False, all_vals, tol))
    return points


def _default_candidates(nf):
    out = []
    t = nf.gen()
    power = nf.one
    for _ in range(6 * nf.degree + 13):
        for c in (power, -power):
            if c not in out:
                out.append(c)
        power = power * t
    for r in (0, 1, -1, 2, -2):
        c = nf.coerce(r)
        if c not in out:
            out.append(c)
    return out


def _embed(value):
    from fractions import Fraction
    if isinstance(value, (int, Fraction)):
        return float(value)
    r = value.to_rational()
    if r is None:
        raise SpectrumNotExact("cannot embed a number-field point "
                               "numerically without an embedding")
    return float(r)


def _classify(basis, value, mult, exact, all_vals, tol):
    elements = basis.elements
    if exact:
        deriv = all(is_zero_scalar(e.derivative()(value)) for e in elements)
    else:
        deriv = all(abs(e.derivative()(value)) < tol for e in elements)
    if deriv:
        return SpectrumPoint(value, mult, "derivative", exact=exact)
    for other, other_exact in all_vals:
        if other_exact != exact:
            continue
        if exact:
            if other == value:
                continue
            if all(e(value) == e(other) for e in elements):
                return SpectrumPoint(value, mult, "paired", partner=other,
                                     exact=True)
        else:
            if abs(other - value) < tol:
                continue
            if all(abs(e(value) - e(other)) < tol * _scale(e, value)
                   for e in elements):
                return SpectrumPoint(value, mult, "paired", partner=other,
                                     exact=False)
    raise UnpairedRoot(
        f"characteristic root {value!r} is neither derivative-kind nor "
        "pairable")


def _scale(e, z):
    az, acc, power = abs(z), 1.0, 1.0
    for c in e.coeffs:
        try:
            acc += abs(complex(_embed(c))) * power
        except SpectrumNotExact:
            acc += power
        power *= az
    return acc


def compute_clusters(A, spectrum=None, tol=PAIR_TOL):
    """Partition of the spectrum: α ∼ β iff all basis elements agree."""
    basis = _basis_of(A)
    if spectrum is None:
        spectrum = A.spectrum() if hasattr(A, "spectrum") \
            else compute_spectrum(A)
    n = len(spectrum)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    witnesses = {}
    for i in range(n):
        for j in range(i + 1, n):
            p, q = spectrum[i], spectrum[j]
            if p.exact and q.exact:
                same = all(e(p.value) == e(q.value) for e in basis.elements)
            elif not p.exact and not q.exact:
                same = all(abs(e(p.value) - e(q.value)) <
                           tol * _scale(e, p.value) for e in basis.elements)
            else:
                same = False
            witnesses[(i, j)] = same
            if same:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    clusters = []
    for idxs in groups.values():
        members = [spectrum[i] for i in idxs]
        w = {(i, j): witnesses[(min(i, j), max(i, j))]
             for i in idxs for j in idxs if i < j}
        clusters.append(Cluster(members=members, witnesses=w))
    clusters.sort(key=lambda c: -len(c.members))
    return clusters


def spectrum_size_check(A, spectrum=None):
    """Check |Sp(A)| ≤ 2·codim; report, raising BoundViolated on failure."""
    basis = _basis_of(A)
    n = basis.semigroup.genus
    if spectrum is None:
        spectrum = A.spectrum() if hasattr(A, "spectrum") \
            else compute_spectrum(A)
    size = len(spectrum)
    report = {"codimension": n, "spectrum_size": size, "bound": 2 * n,
              "ok": size <= 2 * n, "all_differences": None}
    if size > 2 * n:
        raise BoundViolated(
            f"spectrum size {size} exceeds 2·codim = {2 * n}")
    if size == 2 * n and all(p.exact for p in spectrum):
        from .conditions import conditions_from_subalgebra
        conds = conditions_from_subalgebra(basis, spectrum)
        report["all_differences"] = all(L.kind == "diff" for L in conds)
    return report


# ---------------------------------------------------------------------------
# Algebras containing a degree-2 element
# ---------------------------------------------------------------------------


@dataclass
class Deg2Description:
    """Normal form of an algebra containing a monic degree-2 polynomial.

    After the shift x → x + α0 the degree-2 element is x² and the odd
    generator is x^(2·m0+1) · Π_i (x² − (α_i − α0)²)^(m_i + 1); spectrum
    pairs are (α_i, β_i) with β_i = 2·α0 − α_i.
    """

    alpha0: object
    m0: int
    pairs: list          # [(alpha_i, beta_i, m_i)]
    field: object


def deg2_description(A):
    """Extract the normal form; raises NoDegreeTwoElement otherwise."""
    basis = _basis_of(A)
    field = basis.field
    deg2 = next((e for e in basis.elements if e.degree == 2), None)
    if deg2 is None:
        raise NoDegreeTwoElement("no degree-2 element in the SAGBI basis")
    two = field.coerce(2)
    alpha0 = -deg2.coeff(1) / two
    odd_elem = next((e for e in basis.elements if e.degree % 2 == 1), None)
    if odd_elem is None:
        raise SubalgError("degenerate basis: no odd-degree element")
    shifted = odd_elem.taylor_shift(alpha0)          # p(x + α0)
    odd_part_coeffs = [shifted.coeff(k) if k % 2 == 1 else field.zero
                       for k in range(shifted.degree + 1)]
    odd = Poly(odd_part_coeffs, field)
    if odd.degree != shifted.degree:
        raise SubalgError("odd generator lost its leading term")
    # odd = x · h(x²)
    h = Poly([odd.coeff(2 * k + 1) for k in range((odd.degree + 1) // 2)],
             field)
    m0 = 0
    while m0 < h.degree + 1 and is_zero_scalar(h.coeff(m0)):
        m0 += 1
    h = Poly(h.coeffs[m0:], field)
    pairs = []
    remaining = h.monic()
    rat = remaining.to_rational()
    roots = []
    if rat is not None:
        roots = [(v, m) for v, m in rational_roots(rat)]
    else:
        found, leftover = field_roots(remaining, field,
                                      _default_candidates(field))
        if any(f.degree >= 1 for f, _ in leftover):
            raise SpectrumNotExact("odd-generator roots not exact")
        roots = found_with_mult(found, remaining, field)
    total = 0
    for r, m in roots:
        gamma = _exact_sqrt(r, field)
        if gamma is None:
            raise SpectrumNotExact(
                f"square root of {format_scalar(field.coerce(r))} not in "
                "the field")
        alpha_i = field.coerce(alpha0) + gamma
        beta_i = field.coerce(alpha0) - gamma
        pairs.append((alpha_i, beta_i, m - 1))
        total += m
    if total != remaining.degree:
        raise SpectrumNotExact("odd-generator roots not exact")
    return Deg2Description(alpha0=alpha0, m0=m0, pairs=pairs, field=field)


def _exact_sqrt(r, field):
    """A square root of r inside the field, or None."""
    from fractions import Fraction
    from math import isqrt
    value = field.coerce(r)
    rat = value if isinstance(value, (int, Fraction)) else \
        value.to_rational()
    if rat is not None:
        rat = Fraction(rat)
        if rat < 0:
            num = den = None
        else:
            num, den = isqrt(rat.numerator), isqrt(rat.denominator)
            if num * num != rat.numerator or den * den != rat.denominator:
                num = None
        if num is not None:
            return field.coerce(Fraction(num, den))
        if field is QQ:
            return None
    for cand in _default_candidates(field):
        if cand * cand == value:
            return cand
    return None


def found_with_mult(found, poly, field):
    """Multiplicities of the found roots by repeated exact division."""
    out = []
    for v, _ in found:
        m = 0
        lin = Poly((-v, field.one), field)
        while poly.degree >= 1:
            q, r = divmod(poly, lin)
            if not r.is_zero():
                break
            poly = q
            m += 1
        out.append((v, m))
    return out


def deg2_from_description(desc):
    """Inverse constructor: the two generators from the normal form."""
    field = desc.field
    x = Poly.x(field)
    alpha0 = field.coerce(desc.alpha0)
    y = x - alpha0
    g2 = y * y
    odd = y ** (2 * desc.m0 + 1)
    for alpha_i, beta_i, m_i in desc.pairs:
        gamma = field.coerce(alpha_i) - alpha0
        odd = odd * (y * y - gamma * gamma) ** (m_i + 1)
    from .conditions import Subalgebra
    return Subalgebra(generators=[g2, odd])
