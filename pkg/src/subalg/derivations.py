"""Point derivations of a subalgebra.

An α-derivation of A is a linear functional D with D(fg) = D(f)·g(α) +
f(α)·D(g); equivalently D annihilates constants and the square of the
maximal ideal M_α = {f ∈ A : f(α) = 0}.  The number k_α = dim M_α/M_α²
bounds the derivation space and is conjectured to equal its dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .conditions import LinearFunctional
from .errors import EvenInput, NoStabilization, SubalgError
from .fields import common_field, field_of, is_zero_scalar
from .linalg import nullspace, rank, rref
from .poly import Poly
from .sagbi import subduce


class NotIntegral:
    """Returned when a·f′ fails to stay inside B for some f in A."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotIntegral"

    def __bool__(self):
        return False


NOT_INTEGRAL = NotIntegral()


@dataclass
class DerivationSpace:
    """Solution space of α-derivations expressed as derivative combos."""

    alpha: object
    k_alpha: int
    combo_basis: list          # LinearFunctional, orders >= 1
    quotient_witnesses: list   # Poly representatives of M_alpha / M_alpha^2

    @property
    def dimension(self):
        return len(self.combo_basis)


def _basis_of(A):
    return A.sagbi_basis() if hasattr(A, "sagbi_basis") else A


def _degree_products(basis, bound):
    """One algebra element per semigroup degree 1..bound."""
    from .semigroup import NOT_MEMBER
    S = basis.semigroup
    out = []
    for d in range(1, bound + 1):
        rep = S.represent(d)
        if rep is not NOT_MEMBER:
            out.append(basis.product_for(rep))
    return out


def _coeff_rows(polys, bound, field):
    return [[field.coerce(p.coeff(k)) if k <= p.degree else field.zero
             for k in range(bound + 1)] for p in polys]


def _ideal_spans(basis, alpha, bound):
    """Spanning sets of M_α and M_α² up to the degree bound."""
    field = common_field(basis.field, field_of(alpha))
    basis = basis.coerce_to(field)
    alpha = field.coerce(alpha) if field is not basis.field else alpha
    m_alpha = [p - p(alpha) for p in _degree_products(basis, bound)]
    m_alpha = [p for p in m_alpha if p.degree >= 1]
    squares = []
    for i, p in enumerate(m_alpha):
        for q in m_alpha[i:]:
            if p.degree + q.degree <= bound:
                squares.append(p * q)
    return m_alpha, squares, field


def k_alpha(A, alpha, max_bound=None):
    """dim M_α/M_α², stabilized over a doubling degree bound."""
    basis = _basis_of(A)
    conductor = basis.semigroup.conductor
    step = max(conductor, 4)
    bound = max(2 * conductor + 4, 8)
    cap = max_bound or bound + 12 * step
    prev = None
    stable = 0
    while bound <= cap:
        m1, m2, field = _ideal_spans(basis, alpha, bound)
        d1 = rank(_coeff_rows(m1, bound, field), bound + 1, field)
        d2 = rank(_coeff_rows(m2, bound, field), bound + 1, field)
        value = d1 - d2
        if value == prev:
            stable += 1
            if stable >= 2:
                return value
        else:
            stable = 0
        prev = value
        bound += step
    raise NoStabilization(
        f"k_alpha did not stabilize below degree bound {cap}")


def _cluster_points(A, alpha, field):
    """Spectrum points equivalent to α (α itself always included)."""
    points = [field.coerce(alpha)]
    if not hasattr(A, "clusters"):
        return points
    try:
        clusters = A.clusters()
    except SubalgError:
        return points
    for cluster in clusters:
        values = [p.value for p in cluster.members if p.exact]
        if any(field.coerce(v) == points[0] for v in values):
            for v in values:
                cv = field.coerce(v)
                if cv not in points:
                    points.append(cv)
            break
    return points


def derivation_space(A, alpha, max_order=None):
    """All α-derivations of A as combinations of derivatives at the
    cluster of α.

    Solves exactly for coefficients c_ij with Σ c_ij f^(i)(α_j) = 0 on a
    spanning set of M_α²; the Leibniz identity is then re-verified on
    products.  For α outside the spectrum the space is span{f ↦ f′(α)}.
    """
    basis = _basis_of(A)
    field = common_field(basis.field, field_of(alpha))
    basis = basis.coerce_to(field)
    conductor = basis.semigroup.conductor
    if max_order is None:
        max_order = conductor + 2
    if max_order < 2:
        max_order = 2
    k = k_alpha(basis, alpha)
    points = _cluster_points(A, alpha, field)
    bound = max(2 * conductor + 4, 2 * max_order + 4)

    for attempt in range(2):
        coords = [(order, j) for order in range(1, max_order + 1)
                  for j in range(len(points))]
        _, squares, _ = _ideal_spans(basis, field.coerce(alpha), bound)
        equations = []
        for h in squares:
            equations.append([h.derivative(order)(points[j])
                              for order, j in coords])
        vectors = nullspace(equations, len(coords), field)
        vectors, _ = rref(vectors, len(coords), field)
        # drop functionals that vanish on all of A: they act as the zero
        # derivation and must not inflate the dimension
        aprods = _degree_products(basis, bound)
        value_rows = []
        chosen = []
        for vec in vectors:
            row = []
            for p in aprods:
                acc = field.zero
                for (order, j), coeff in zip(coords, vec):
                    acc = acc + coeff * p.derivative(order)(points[j])
                row.append(acc)
            if rank(value_rows + [row], len(aprods), field) > len(chosen):
                chosen.append(vec)
                value_rows.append(row)
        vectors = chosen
        if len(vectors) >= k or attempt == 1:
            break
        max_order += conductor + 2

    combos = []
    for vec in vectors:
        terms = [(order, points[j], coeff)
                 for (order, j), coeff in zip(coords, vec)
                 if not is_zero_scalar(coeff)]
        combos.append(LinearFunctional.derivative_combo(terms))

    _verify_leibniz(combos, basis, field.coerce(alpha), conductor + 4)

    # quotient witnesses: elements of M_alpha completing M_alpha^2
    m1, m2, _ = _ideal_spans(basis, field.coerce(alpha), bound)
    red2, piv2 = rref(_coeff_rows(m2, bound, field), bound + 1, field)
    witnesses = []
    rows, pivots = list(red2), list(piv2)
    for p in m1:
        row = _coeff_rows([p], bound, field)[0]
        new, new_piv = rref(rows + [row], bound + 1, field)
        if len(new) > len(rows):
            witnesses.append(p)
            rows, pivots = list(new), list(new_piv)
    return DerivationSpace(alpha=field.coerce(alpha), k_alpha=k,
                           combo_basis=combos,
                           quotient_witnesses=witnesses)


def _verify_leibniz(combos, basis, alpha, degree_bound):
    products = _degree_products(basis, degree_bound)
    for D in combos:
        for i, f in enumerate(products):
            for g in products[i:]:
                left = D.apply(f * g)
                right = D.apply(f) * g(alpha) + f(alpha) * D.apply(g)
                if not is_zero_scalar(left - right):
                    raise SubalgError(
                        "solved functional violates the Leibniz identity")


def conjecture_dim_check(A, alpha):
    """Compare dim of the derivation space with k_α; returns a report."""
    basis = _basis_of(A)
    space = derivation_space(A, alpha)
    report = {
        "alpha": alpha,
        "k_alpha": space.k_alpha,
        "dim_combo": space.dimension,
        "equal": space.k_alpha == space.dimension,
        "codimension": basis.semigroup.genus,
        "proved_region": basis.semigroup.genus <= 3,
    }
    return report


def ln_coefficients(n):
    """Coefficients C_i of the functional L_n = Σ C_i c^(n−i) D_i.

    C_n = 1; all other odd entries and even entries above n vanish; the
    even entries below n are determined descending by
    Σ_k binom(m, k) · C_{2m+k} = 0.
    """
    if n < 1 or n % 2 == 0:
        raise EvenInput(f"L_n is defined for odd n >= 1, got {n}")
    coeffs = {n: 1}
    if n == 1:
        return coeffs
    for m in range((n - 1) // 2, 0, -1):
        total = 0
        for k in range(1, m + 1):
            total += comb(m, k) * coeffs.get(2 * m + k, 0)
        coeffs[2 * m] = -total
    return {i: c for i, c in coeffs.items() if c != 0}


def integral_derivation(B, A, L, a):
    """The derivation f ↦ L(a·f′) of B when a is an integral for (B, A).

    Requires a·f′ ∈ B for every SAGBI element f of A (checked by
    subduction); returns NOT_INTEGRAL otherwise.  The result is expanded
    into a derivative combination via the Leibniz rule.
    """
    B_basis = _basis_of(B)
    A_basis = _basis_of(A)
    field = common_field(B_basis.field, common_field(A_basis.field, a.field))
    a = a.coerce_to(field)
    for f in A_basis.elements:
        rem, _ = subduce(a * f.coerce_to(field).derivative(), B_basis)
        if rem.degree >= 1:
            return NOT_INTEGRAL
    terms = {}
    for order, point, coeff in L.terms:
        point = field.coerce(point)
        coeff = field.coerce(coeff)
        for k in range(order + 1):
            new_order = order + 1 - k
            c = coeff * comb(order, k) * a.derivative(k)(point)
            if is_zero_scalar(c):
                continue
            key = (new_order, point)
            terms[key] = terms.get(key, field.zero) + c
    combo = [(order, point, c) for (order, point), c in terms.items()
             if not is_zero_scalar(c)]
    if not combo:
        return NOT_INTEGRAL
    D = LinearFunctional.derivative_combo(combo)
    return D
