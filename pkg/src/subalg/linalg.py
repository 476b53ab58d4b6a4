"""Exact linear algebra over Q or a number field (dense, fraction-based).

Matrices are plain lists of row lists whose entries are Fractions or
FieldElems of one common field.  Everything here is small (desk scale), so
classical Gauss-Jordan with exact division is the right tool.
"""

from __future__ import annotations

from .fields import is_zero_scalar


def rref(rows, ncols, field):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_cols); zero rows are dropped.  The input is
    not mutated.
    """
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if not is_zero_scalar(mat[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = field.one / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and not is_zero_scalar(mat[i][c]):
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows, ncols, field):
    return len(rref(rows, ncols, field)[0])


def nullspace(rows, ncols, field):
    """Basis of {v : M v = 0} where the rows of M are the given equations."""
    red, pivots = rref(rows, ncols, field)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for row, pc in zip(red, pivots):
            vec[pc] = -row[fc]
        basis.append(vec)
    return basis


def reduce_vector(vec, red, pivots):
    """Subtract multiples of echelon rows; returns the residual vector."""
    vec = list(vec)
    for row, pc in zip(red, pivots):
        c = vec[pc]
        if not is_zero_scalar(c):
            vec = [a - c * b for a, b in zip(vec, row)]
    return vec


def in_row_space(vec, red, pivots):
    return all(is_zero_scalar(v) for v in reduce_vector(vec, red, pivots))


def intersect_row_spaces(rows_a, rows_b, ncols, field):
    """Basis of the intersection of two row spaces."""
    red_a, piv_a = rref(rows_a, ncols, field)
    red_b, piv_b = rref(rows_b, ncols, field)
    if not red_a or not red_b:
        return []
    # v = x.A = y.B  <=>  (x, y) in nullspace of [A^T | -B^T]
    stacked = []
    for c in range(ncols):
        stacked.append([row[c] for row in red_a] +
                       [-row[c] for row in red_b])
    sols = nullspace(stacked, len(red_a) + len(red_b), field)
    result = []
    for s in sols:
        vec = [field.zero] * ncols
        for coef, row in zip(s[:len(red_a)], red_a):
            if not is_zero_scalar(coef):
                vec = [a + coef * b for a, b in zip(vec, row)]
        if any(not is_zero_scalar(v) for v in vec):
            result.append(vec)
    red, _ = rref(result, ncols, field) if result else ([], [])
    return red


def same_row_space(rows_a, rows_b, ncols, field):
    red_a, piv_a = rref(rows_a, ncols, field)
    red_b, piv_b = rref(rows_b, ncols, field)
    return piv_a == piv_b and all(
        all(a == b for a, b in zip(ra, rb)) for ra, rb in zip(red_a, red_b))
