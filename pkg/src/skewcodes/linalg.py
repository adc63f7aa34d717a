"""Exact Gaussian elimination over F_q on tuples of field elements.

Desk-scale only: everything is dense, pure Python, and exact.
"""

from __future__ import annotations

from .gf import FieldSpec


def rref(rows):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns); zero rows are dropped.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if not rows[i][col].is_zero), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][col].is_zero:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return [tuple(r) for r in rows[:rank]], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def reduce_vector(vec, reduced_rows, pivots):
    """Residual of vec after elimination against an RREF basis."""
    vec = list(vec)
    for row, col in zip(reduced_rows, pivots):
        if not vec[col].is_zero:
            factor = vec[col]
            vec = [x - factor * y for x, y in zip(vec, row)]
    return tuple(vec)


def in_span(vec, reduced_rows, pivots) -> bool:
    return all(x.is_zero for x in reduce_vector(vec, reduced_rows, pivots))


class Span:
    """Row space of a set of vectors with membership queries."""

    def __init__(self, rows, ncols=None, spec: FieldSpec | None = None):
        rows = [tuple(r) for r in rows]
        self.rows, self.pivots = rref(rows)
        self.ncols = ncols if ncols is not None else (len(rows[0]) if rows else 0)
        self.spec = spec if spec is not None else (rows[0][0].spec if rows else None)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, vec) -> bool:
        return in_span(vec, self.rows, self.pivots)

    def contains_all(self, vecs) -> bool:
        return all(self.contains(v) for v in vecs)

    def __eq__(self, other):
        if not isinstance(other, Span):
            return NotImplemented
        return self.dim == other.dim and self.contains_all(other.rows)


def nullspace(rows, ncols: int, spec: FieldSpec):
    """Basis of {x : r . x = 0 for every row r}, i.e. the classical dual."""
    reduced, pivots = rref(rows)
    basis = []
    free_cols = [c for c in range(ncols) if c not in pivots]
    for fc in free_cols:
        vec = [spec.zero] * ncols
        vec[fc] = spec.one
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[fc]
        basis.append(tuple(vec))
    return basis


def inner_product(x, y):
    spec = x[0].spec
    acc = spec.zero
    for a, b in zip(x, y):
        acc = acc + a * b
    return acc
