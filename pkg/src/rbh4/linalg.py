"""Exact Gaussian elimination over any :class:`~rbh4.exactalg.Field`.

Vectors are tuples of scalars; matrices are tuples of rows. Only fields with
a decidable zero test are supported (Q and F_p), not rational functions.
"""

from __future__ import annotations

from typing import Sequence

from .exactalg import Field, field_of


def rref(rows: Sequence[Sequence], field: Field | None = None):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    field = field or field_of(rows[0][0])
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not field.is_zero(rows[i][c])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


def rank(rows, field: Field | None = None) -> int:
    return len(rref(rows, field)[0])


def transpose(m):
    return tuple(zip(*m))


def null_space(matrix, field: Field | None = None):
    """Basis of {v : matrix v = 0} (matrix given as rows), in echelon form."""
    field = field or field_of(matrix[0][0])
    ncols = len(matrix[0])
    red, pivots = rref(matrix, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(tuple(v))
    if not basis:
        return []
    return rref(basis, field)[0]


def mat_vec(matrix, v, field: Field | None = None):
    field = field or field_of(v[0])
    out = []
    for row in matrix:
        acc = field.zero
        for a, b in zip(row, v):
            acc = acc + a * b
        out.append(acc)
    return tuple(out)


def mat_mul(a, b, field: Field | None = None):
    field = field or field_of(a[0][0])
    bt = transpose(b)
    return tuple(tuple(_dot(r, c, field) for c in bt) for r in a)


def _dot(r, c, field):
    acc = field.zero
    for x, y in zip(r, c):
        acc = acc + x * y
    return acc


def identity(n: int, field: Field):
    return tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n))


def inverse(matrix, field: Field | None = None):
    """Inverse of a square matrix; raises ValueError if singular."""
    field = field or field_of(matrix[0][0])
    n = len(matrix)
    aug = [list(row) + list(e) for row, e in zip(matrix, identity(n, field))]
    red, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)
