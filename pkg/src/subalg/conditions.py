"""Linear conditions on polynomials and the subalgebras they cut out.

A condition is a linear functional built from point evaluations and
derivatives that annihilates constants; a finite independent set of such
functionals whose joint kernel is closed under multiplication defines a
subalgebra of finite codimension.  This module converts both ways between
the condition presentation and the generator presentation.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (DegenerateConditions, NotSubalgebraConditions,
                     PowerBoundExceeded, SpectrumNotExact, SubalgError)
from .fields import (QQ, common_field, field_of, format_scalar,
                     is_zero_scalar, scalar_to_json)
from .linalg import nullspace, rank, rref
from .poly import Poly
from .sagbi import SagbiBasis, sagbi_complete, subduce


class LinearFunctional:
    """A condition f ↦ f(α) − f(β) or f ↦ Σ c_j f^(i_j)(α_j).

    Difference conditions require α ≠ β.  Derivative combinations whose
    order-0 coefficients do not sum to zero would fail on constants and are
    rejected.
    """

    __slots__ = ("kind", "alpha", "beta", "terms", "field")

    def __init__(self, kind, *, alpha=None, beta=None, terms=None):
        self.kind = kind
        if kind == "diff":
            field = common_field(field_of(alpha), field_of(beta))
            self.alpha = _coerce(alpha, field)
            self.beta = _coerce(beta, field)
            if self.alpha == self.beta:
                raise SubalgError("difference condition needs two distinct "
                                  "points")
            self.terms = ((0, self.alpha, field.one),
                          (0, self.beta, -field.one))
            self.field = field
        elif kind == "deriv":
            if not terms:
                raise SubalgError("empty derivative combination")
            field = QQ
            for order, point, coeff in terms:
                field = common_field(field, field_of(point))
                field = common_field(field, field_of(coeff))
            norm = tuple((int(order), _coerce(point, field),
                          _coerce(coeff, field))
                         for order, point, coeff in terms)
            zero_sum = field.zero
            for order, _, coeff in norm:
                if order == 0:
                    zero_sum = zero_sum + coeff
            if not is_zero_scalar(zero_sum):
                raise SubalgError("order-0 coefficients must sum to zero "
                                  "so constants satisfy the condition")
            self.alpha = self.beta = None
            self.terms = norm
            self.field = field
        else:
            raise SubalgError(f"unknown functional kind {kind!r}")

    @classmethod
    def difference(cls, alpha, beta):
        return cls("diff", alpha=alpha, beta=beta)

    @classmethod
    def derivative_combo(cls, terms):
        return cls("deriv", terms=list(terms))

    def apply(self, f):
        field = common_field(self.field, f.field)
        f = f.coerce_to(field)
        acc = field.zero
        for order, point, coeff in self.terms:
            value = f.derivative(order)(_coerce(point, field))
            acc = acc + _coerce(coeff, field) * value
        return acc

    def points(self):
        return [point for _, point, _ in self.terms]

    def max_order(self):
        return max(order for order, _, _ in self.terms)

    def to_json(self):
        if self.kind == "diff":
            return {"kind": "diff", "alpha": scalar_to_json(self.alpha),
                    "beta": scalar_to_json(self.beta)}
        return {"kind": "deriv",
                "terms": [{"order": order, "point": scalar_to_json(point),
                           "coeff": scalar_to_json(coeff)}
                          for order, point, coeff in self.terms]}

    @classmethod
    def from_json(cls, data, field=None):
        if data.get("kind") == "diff":
            return cls.difference(_scalar_from_json(data["alpha"], field),
                                  _scalar_from_json(data["beta"], field))
        if data.get("kind") == "deriv":
            return cls.derivative_combo(
                [(t["order"], _scalar_from_json(t["point"], field),
                  _scalar_from_json(t["coeff"], field))
                 for t in data["terms"]])
        raise SubalgError(f"unknown functional kind {data.get('kind')!r}")

    def __repr__(self):
        if self.kind == "diff":
            return (f"f({format_scalar(self.alpha)}) - "
                    f"f({format_scalar(self.beta)})")
        parts = []
        for order, point, coeff in self.terms:
            d = "f" + "'" * order if order <= 3 else f"f^({order})"
            c = format_scalar(coeff)
            if c == "1":
                prefix = ""
            elif c == "-1":
                prefix = "-"
            elif any(op in c[1:] for op in "+-"):
                prefix = f"({c})*"
            else:
                prefix = c + "*"
            parts.append(f"{prefix}{d}({format_scalar(point)})")
        return " + ".join(parts).replace("+ -", "- ")


def apply(functional, f):
    """Exact value of the functional on the polynomial."""
    return functional.apply(f)


def _coerce(value, field):
    if field is QQ:
        return Fraction(value) if not hasattr(value, "field") else \
            value.to_rational()
    return field.coerce(value)


def _scalar_from_json(data, field):
    if isinstance(data, dict) and "t_coeffs" in data:
        if field is None:
            raise SubalgError("field element in JSON but no field supplied")
        return field.from_coeffs([Fraction(c) for c in data["t_coeffs"]])
    value = Fraction(str(data))
    return value if field is None else field.coerce(value)


def _conditions_field(conds):
    field = QQ
    for L in conds:
        field = common_field(field, L.field)
    return field


def _monomial_kernel(conds, degree_bound, field):
    """Polynomials of degree <= bound annihilated by every condition."""
    x = Poly.x(field)
    equations = []
    for L in conds:
        equations.append([L.apply(x ** k) for k in range(degree_bound + 1)])
    vectors = nullspace(equations, degree_bound + 1, field)
    return [Poly(v, field) for v in vectors]


def is_subalgebra_condition_set(conds, degree_bound=None):
    """Does the joint kernel of the conditions form a subalgebra?

    Computes a kernel basis up to the degree bound and checks that every
    pairwise product still satisfies all conditions.
    """
    if not conds:
        return True
    field = _conditions_field(conds)
    n = len(conds)
    bound = degree_bound if degree_bound is not None else 2 * n + 2
    if bound < 2 * n + 2:
        bound = 2 * n + 2
    kernel = _monomial_kernel(conds, bound, field)
    for i, p in enumerate(kernel):
        for q in kernel[i:]:
            prod = p * q
            for L in conds:
                if not is_zero_scalar(L.apply(prod)):
                    return False
    return True


class Subalgebra:
    """A finite-codimension subalgebra of K[x].

    Presented by generators, by conditions, or both; the SAGBI basis,
    degree semigroup, codimension, and spectrum are computed lazily and
    cached.
    """

    def __init__(self, generators=None, conditions=None, _sagbi=None):
        if generators is None and conditions is None and _sagbi is None:
            raise SubalgError("subalgebra needs generators or conditions")
        self._generators = list(generators) if generators else None
        self._conditions = list(conditions) if conditions else None
        self._sagbi = _sagbi
        self._spectrum = None
        self._clusters = None

    @classmethod
    def from_generators(cls, generators):
        return cls(generators=generators)

    @classmethod
    def from_conditions(cls, conditions):
        return kernel_subalgebra(conditions)

    @property
    def generators(self):
        if self._generators is None:
            self._generators = list(self.sagbi_basis().elements)
        return self._generators

    def sagbi_basis(self):
        if self._sagbi is None:
            self._sagbi = sagbi_complete(self._generators)
        return self._sagbi

    def semigroup(self):
        return self.sagbi_basis().semigroup

    def codimension(self):
        return self.semigroup().genus

    @property
    def field(self):
        return self.sagbi_basis().field

    def conditions(self):
        if self._conditions is None:
            spectrum = self.spectrum(mode="exact")
            self._conditions = conditions_from_subalgebra(self, spectrum)
        return self._conditions

    def spectrum(self, mode="hybrid", nf=None, candidates=None, tol=1e-8):
        if self._spectrum is None:
            from .spectrum import compute_spectrum
            self._spectrum = compute_spectrum(self, mode=mode, nf=nf,
                                              candidates=candidates, tol=tol)
        return self._spectrum

    def clusters(self, **kwargs):
        if self._clusters is None:
            from .spectrum import compute_clusters
            self._clusters = compute_clusters(self, **kwargs)
        return self._clusters

    def contains(self, f):
        rem, _ = subduce(f, self.sagbi_basis())
        return rem.degree < 1

    def __eq__(self, other):
        if not isinstance(other, Subalgebra):
            return NotImplemented
        b1, b2 = self.sagbi_basis(), other.sagbi_basis()
        if b1.degrees != b2.degrees:
            return False
        return all(other.contains(e) for e in b1.elements) and \
            all(self.contains(e) for e in b2.elements)

    def __repr__(self):
        if self._sagbi is not None or self._generators is not None:
            gens = ", ".join(str(g) for g in self.sagbi_basis().elements)
            return f"Subalgebra(<{gens}>)"
        return f"Subalgebra(conditions={self._conditions!r})"


def kernel_subalgebra(conds):
    """The subalgebra of all polynomials satisfying the conditions.

    Exact nullspace of the condition matrix on monomials up to degree
    N·s + 2n + 2 (N = max derivative order + 1, s = point count, n =
    condition count), echelonized and completed to a SAGBI basis.
    """
    if not conds:
        raise SubalgError("kernel_subalgebra needs at least one condition")
    field = _conditions_field(conds)
    n = len(conds)
    points = []
    for L in conds:
        for p in L.points():
            if p not in points:
                points.append(p)
    s = len(points)
    N = max(L.max_order() for L in conds) + 1
    bound = N * s + 2 * n + 2
    x = Poly.x(field)
    matrix = [[L.apply(x ** k) for k in range(bound + 1)] for L in conds]
    r = rank(matrix, bound + 1, field)
    if r < n:
        raise DegenerateConditions(
            f"only {r} of {n} conditions are independent", reduced_count=r)
    kernel = _monomial_kernel(conds, bound, field)
    kernel = [p for p in kernel if p.degree >= 1]
    basis = sagbi_complete(kernel)
    if basis.semigroup.genus != n:
        raise NotSubalgebraConditions(
            "kernel is not multiplicatively closed: its algebra has "
            f"codimension {basis.semigroup.genus}, expected {n}")
    for e in basis.elements:
        for L in conds:
            if not is_zero_scalar(L.apply(e)):
                raise NotSubalgebraConditions(
                    "kernel is not closed under multiplication")
    return Subalgebra(conditions=_normalize_conditions(conds), _sagbi=basis)


def _normalize_conditions(conds):
    """Difference conditions first where the exchange is legal.

    Greedy left-to-right: a difference condition may move before a
    derivative condition when every prefix of the reordered list still
    passes the subalgebra check.
    """
    conds = list(conds)
    changed = True
    while changed:
        changed = False
        for i in range(len(conds) - 1):
            a, b = conds[i], conds[i + 1]
            if a.kind == "deriv" and b.kind == "diff":
                swapped = conds[:i] + [b, a] + conds[i + 2:]
                if all(is_subalgebra_condition_set(swapped[:k + 1])
                       for k in range(len(swapped))):
                    conds = swapped
                    changed = True
                    break
    return conds


def _algebra_degree_basis(basis, degree_bound):
    """One algebra element per semigroup degree <= bound (spans A there)."""
    from .semigroup import NOT_MEMBER
    S = basis.semigroup
    out = [Poly.constant(basis.field.one, basis.field)]
    for d in range(1, degree_bound + 1):
        rep = S.represent(d)
        if rep is not NOT_MEMBER:
            out.append(basis.product_for(rep))
    return out


def conditions_from_subalgebra(A, spectrum):
    """Independent conditions cutting out A, derived from its spectrum.

    Searches for the smallest power N such that x^i · π^N lies in A for
    all i (π = product of x − α over the spectrum), then finds all
    derivative-evaluation functionals of order < N at spectrum points that
    annihilate A up to the induced degree bound.  Exactly codim(A) such
    functionals exist; order-0 parts are rewritten as point differences
    where possible.
    """
    basis = A.sagbi_basis() if hasattr(A, "sagbi_basis") else A
    n = basis.semigroup.genus
    points = []
    for p in spectrum:
        value = getattr(p, "value", p)
        if isinstance(value, complex):
            raise SpectrumNotExact(
                "conditions need exact (rational or number-field) spectrum "
                "points")
        if value not in points:
            points.append(value)
    field = basis.field
    for p in points:
        field = common_field(field, field_of(p))
    basis = basis.coerce_to(field)
    points = [_coerce(p, field) for p in points]
    s = len(points)
    if s == 0:
        raise SpectrumNotExact("empty spectrum")

    pi = Poly.from_roots(points, field)
    conductor = basis.semigroup.conductor
    N = None
    for cand in range(1, 2 * n + 3):
        power = pi ** cand
        ok = True
        probe = Poly.constant(field.one, field)
        x = Poly.x(field)
        for i in range(conductor + 2):
            rem, _ = subduce(probe * power, basis)
            if rem.degree >= 1:
                ok = False
                break
            probe = probe * x
        if ok:
            N = cand
            break
    if N is None:
        raise PowerBoundExceeded(
            f"no power up to {2 * n + 2} of the spectrum polynomial "
            "multiplies into A: spectrum likely inexact or incomplete")

    bound = max(N * s, conductor) + 2 * n + 2
    for _ in range(4):
        span = _algebra_degree_basis(basis, bound)
        # coordinates: (order, point) with higher orders first, so reduced
        # rows with only order-0 support surface as pure differences
        coords = [(order, j) for order in range(N - 1, -1, -1)
                  for j in range(s)]
        equations = []
        for g in span:
            row = []
            for order, j in coords:
                row.append(g.derivative(order)(points[j]))
            equations.append(row)
        W = nullspace(equations, len(coords), field)
        if len(W) == n:
            break
        bound += conductor + 4
    else:
        raise SubalgError(
            f"annihilator dimension {len(W)} never stabilized at "
            f"codimension {n}")
    W, _ = rref(W, len(coords), field)

    functionals = []
    for vec in W:
        terms = []
        for (order, j), coeff in zip(coords, vec):
            if not is_zero_scalar(coeff):
                terms.append((order, points[j], coeff))
        if len(terms) == 2 and terms[0][0] == 0 and terms[1][0] == 0 \
                and is_zero_scalar(terms[0][2] + terms[1][2]):
            functionals.append(
                LinearFunctional.difference(terms[0][1], terms[1][1]))
        else:
            functionals.append(LinearFunctional.derivative_combo(terms))
    for L in functionals:
        for e in basis.elements:
            if not is_zero_scalar(L.apply(e)):
                raise SubalgError("derived condition fails on a basis "
                                  "element")
    return _normalize_conditions(functionals)


def intersect_and_join(A1, A2):
    """(A1 ∩ A2, algebra generated by A1 ∪ A2).

    The intersection is the kernel of the union of the condition lists
    (dependencies removed); the join is the SAGBI completion of the union
    of the generators.
    """
    conds = list(A1.conditions())
    for L in A2.conditions():
        conds.append(L)
    # drop dependent conditions
    field = _conditions_field(conds)
    n = len(conds)
    bound = (max(L.max_order() for L in conds) + 1) * \
        len({p for L in conds for p in L.points()}) + 2 * n + 2
    x = Poly.x(field)
    kept = []
    rows = []
    for L in conds:
        row = [L.apply(x ** k) for k in range(bound + 1)]
        if rank(rows + [row], bound + 1, field) > len(kept):
            kept.append(L)
            rows.append(row)
    intersection = kernel_subalgebra(kept)

    gens = list(A1.sagbi_basis().elements) + list(A2.sagbi_basis().elements)
    join_basis = sagbi_complete(gens)
    if join_basis.semigroup.genus == 0 and 1 in join_basis.degrees:
        # the join is all of K[x]; present it canonically
        join_basis = SagbiBasis([Poly.x(join_basis.field)])
    return intersection, Subalgebra(_sagbi=join_basis)
