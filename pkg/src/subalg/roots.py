"""Root extraction: rational roots, number-field candidate roots, and
numeric complex roots by simultaneous (Aberth–Ehrlich) iteration.

Square-free decomposition lives in :mod:`subalg.poly`; it is re-exported
here because root finding is its main consumer.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd as int_gcd, isqrt

from .errors import NonConvergence, SubalgError, ZeroInput
from .fields import QQ, is_zero_scalar
from .poly import Poly, squarefree_decompose, squarefree_part  # noqa: F401

RESIDUAL_TOL = 1e-12
MAX_ITERATIONS = 200


@dataclass
class RootSet:
    """Roots of a polynomial, exact where possible."""

    source: Poly
    exact_roots: list = dc_field(default_factory=list)     # (value, mult)
    numeric_roots: list = dc_field(default_factory=list)   # (complex, mult, residual)

    def all_values(self):
        vals = [(v, m, True) for v, m in self.exact_roots]
        vals += [(v, m, False) for v, m, _ in self.numeric_roots]
        return vals

    def total_multiplicity(self):
        return sum(m for _, m in self.exact_roots) + \
            sum(m for _, m, _ in self.numeric_roots)


# ---------------------------------------------------------------------------
# Rational roots
# ---------------------------------------------------------------------------


def _factorize(n):
    """Prime factorization of n > 0 (trial division + Pollard rho)."""
    factors = {}

    def add(p):
        factors[p] = factors.get(p, 0) + 1

    d = 2
    while d * d <= n and d < 100000:
        while n % d == 0:
            add(d)
            n //= d
        d += 1 if d == 2 else 2
    if n == 1:
        return factors

    def is_probable_prime(m):
        if m < 2:
            return False
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
            if m % p == 0:
                return m == p
        d, s = m - 1, 0
        while d % 2 == 0:
            d //= 2
            s += 1
        for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
            v = pow(a, d, m)
            if v in (1, m - 1):
                continue
            for _ in range(s - 1):
                v = v * v % m
                if v == m - 1:
                    break
            else:
                return False
        return True

    def rho(m):
        if m % 2 == 0:
            return 2
        c = 1
        while True:
            x = y = 2
            d = 1
            while d == 1:
                x = (x * x + c) % m
                y = (y * y + c) % m
                y = (y * y + c) % m
                d = int_gcd(abs(x - y), m)
            if d != m:
                return d
            c += 1

    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            add(m)
            continue
        d = rho(m)
        stack.extend([d, m // d])
    return factors


def _divisors(n):
    if n == 0:
        return []
    out = [1]
    for p, e in _factorize(abs(n)).items():
        out = [d * p ** k for d in out for k in range(e + 1)]
    return out


def rational_roots(p):
    """All rational roots of p with multiplicities (exact)."""
    if p.field is not QQ:
        p = p.to_rational()
        if p is None:
            raise SubalgError("rational_roots: polynomial not over Q")
    if p.is_zero():
        raise ZeroInput("rational_roots of the zero polynomial")
    out = []
    for factor, mult in squarefree_decompose(p):
        # integer-primitive form
        denom = 1
        for c in factor.coeffs:
            denom = denom * c.denominator // int_gcd(denom, c.denominator)
        ints = [int(c * denom) for c in factor.coeffs]
        low = next(i for i, c in enumerate(ints) if c)
        if low > 0:
            out.append((Fraction(0), mult))
            ints = ints[low:]
        if len(ints) <= 1:
            continue
        a0, an = ints[0], ints[-1]
        for num in _divisors(a0):
            for den in _divisors(an):
                if int_gcd(num, den) != 1:
                    continue
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if not _eval_int(ints, cand):
                        out.append((cand, mult))
    out.sort(key=lambda t: (t[0], t[1]))
    return out


def _eval_int(ints, r):
    acc = Fraction(0)
    for c in reversed(ints):
        acc = acc * r + c
    return acc


# ---------------------------------------------------------------------------
# Numeric roots (Aberth–Ehrlich)
# ---------------------------------------------------------------------------


def aberth_roots(p, tol=RESIDUAL_TOL, max_iter=MAX_ITERATIONS):
    """All complex roots of a square-free polynomial, double precision.

    Returns (roots, residual_bound).  Residuals are backward-error scaled:
    |p(z)| <= tol * sum |c_i| |z|^i.
    """
    coeffs = [complex(_to_float(c)) for c in p.coeffs]
    lead = coeffs[-1]
    coeffs = [c / lead for c in coeffs]
    n = len(coeffs) - 1
    if n == 0:
        return [], 0.0
    if n == 1:
        return [-coeffs[0]], 0.0
    radius = 1.0 + max(abs(c) for c in coeffs[:-1])
    roots = [radius * cmath.exp(2j * cmath.pi * (k / n) + 0.4j)
             for k in range(n)]
    deriv = [i * c for i, c in enumerate(coeffs)][1:]

    def horner(cs, z):
        acc = 0j
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    def scale_at(z):
        az, acc, power = abs(z), 0.0, 1.0
        for c in coeffs:
            acc += abs(c) * power
            power *= az
        return acc

    for _ in range(max_iter):
        converged = True
        for k in range(n):
            z = roots[k]
            pz = horner(coeffs, z)
            if abs(pz) <= tol * scale_at(z):
                continue
            converged = False
            dz = horner(deriv, z)
            if dz == 0:
                roots[k] = z + 1e-6 * (1 + abs(z))
                continue
            w = pz / dz
            s = sum(1.0 / (z - roots[j]) for j in range(n) if j != k)
            denom = 1.0 - w * s
            if denom == 0:
                roots[k] = z + 1e-6 * (1 + abs(z))
                continue
            roots[k] = z - w / denom
        if converged:
            break
    else:
        raise NonConvergence(
            f"Aberth iteration did not converge in {max_iter} steps")
    residual = max(abs(horner(coeffs, z)) for z in roots)
    return roots, residual


def _to_float(c):
    from .fields import FieldElem
    if isinstance(c, FieldElem):
        r = c.to_rational()
        if r is None:
            raise SubalgError("numeric mode on non-rational coefficients")
        return float(r)
    return float(c)


# ---------------------------------------------------------------------------
# Field-mode roots
# ---------------------------------------------------------------------------


def field_roots(p, nf, candidates):
    """Roots of p found among the candidates over the number field nf.

    Returns (roots_with_mult, unsplit_remainder_factors).
    """
    p = p.coerce_to(nf)
    found = []
    leftovers = []
    for factor, mult in squarefree_decompose(p):
        f = factor.coerce_to(nf)
        seen = set()
        for cand in candidates:
            c = nf.coerce(cand)
            if c in seen:
                continue
            seen.add(c)
            if f.degree < 1:
                break
            if is_zero_scalar(f(c)):
                found.append((c, mult))
                f = f.exact_div(Poly((-c, nf.one), nf))
        if f.degree >= 1:
            leftovers.append((f, mult))
    return found, leftovers


# ---------------------------------------------------------------------------
# Unified entry point
# ---------------------------------------------------------------------------


def find_roots(p, mode="numeric", nf=None, candidates=None,
               tol=RESIDUAL_TOL):
    """Root finding in one of three modes.

    mode = "exact-rational": all rational roots with multiplicity.
    mode = "numeric": all complex roots via Aberth iteration per factor.
    mode = "field": linear factors over the given NumberField found by trial
    evaluation on the candidate list (plus all rational roots).
    """
    if p.is_zero() or p.degree < 1:
        raise ZeroInput("find_roots needs a nonconstant polynomial")
    rs = RootSet(source=p)
    if mode == "exact-rational":
        rs.exact_roots = rational_roots(p)
        return rs
    if mode == "numeric":
        for factor, mult in squarefree_decompose(p):
            roots, residual = aberth_roots(factor, tol=tol)
            rs.numeric_roots.extend((z, mult, residual) for z in roots)
        return rs
    if mode == "field":
        if nf is None or candidates is None:
            raise SubalgError("field mode needs a field and candidates")
        rats = rational_roots(p) if p.to_rational() is not None else []
        covered = set()
        for v, m in rats:
            rs.exact_roots.append((v, m))
            covered.add(nf.coerce(v))
        found, _ = field_roots(p, nf, candidates)
        for v, m in found:
            if v not in covered:
                rs.exact_roots.append((v, m))
        return rs
    raise SubalgError(f"unknown root-finding mode {mode!r}")


def hybrid_roots(p, nf=None, candidates=None, tol=RESIDUAL_TOL):
    """Exact roots where possible, numeric for the rest.

    Returns a RootSet whose exact and numeric parts together account for
    every root of p (multiplicity-correct).
    """
    if p.degree < 1:
        raise ZeroInput("hybrid_roots needs a nonconstant polynomial")
    rs = RootSet(source=p)
    for factor, mult in squarefree_decompose(p):
        remaining = factor
        rat = remaining.to_rational()
        if rat is not None:
            for v, _ in rational_roots(rat):
                val = v if nf is None else nf.coerce(v)
                rs.exact_roots.append((val, mult))
                remaining = remaining.exact_div(
                    Poly((-v, 1), QQ).coerce_to(remaining.field))
        if nf is not None and remaining.degree >= 1 and candidates:
            found, leftover = field_roots(remaining, nf, candidates)
            for v, _ in found:
                rs.exact_roots.append((v, mult))
            remaining = Poly.constant(nf.one, nf)
            for f, _ in leftover:
                remaining = remaining * f
        if remaining.degree >= 1:
            roots, residual = aberth_roots(remaining, tol=tol)
            rs.numeric_roots.extend((z, mult, residual) for z in roots)
    return rs
