"""Exact Gauss-Jordan elimination over a cyclotomic field.

Rows are sparse: ``{column: scalar}`` with zero entries omitted.
"""

from __future__ import annotations

from .scalars import CyclotomicField, CycScalar

__all__ = ["solve_linear", "invert_matrix", "rank"]


def _eliminate(rows, ncols, field: CyclotomicField, rhs=None):
    """Reduced row echelon form in place; returns pivot list [(row, col)]."""
    rows = [dict(r) for r in rows]
    rhs = list(rhs) if rhs is not None else None
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if c in rows[i]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        if rhs is not None:
            rhs[r], rhs[pivot] = rhs[pivot], rhs[r]
        inv = rows[r][c].inverse()
        rows[r] = {k: v * inv for k, v in rows[r].items()}
        if rhs is not None:
            rhs[r] = rhs[r] * inv
        prow = rows[r]
        for i in range(len(rows)):
            if i == r:
                continue
            f = rows[i].get(c)
            if f is None:
                continue
            row = rows[i]
            for k, v in prow.items():
                nv = row.get(k, field.zero) - f * v
                if nv.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = nv
            if rhs is not None:
                rhs[i] = rhs[i] - f * rhs[r]
        pivots.append((r, c))
        r += 1
        if r == len(rows):
            break
    return rows, rhs, pivots


def solve_linear(rows, rhs, nvars: int, field: CyclotomicField):
    """Solve ``A x = b`` exactly.

    Returns ``(particular, nullspace)`` where ``particular`` is a list of
    scalars (free variables set to zero) or ``None`` when the system is
    inconsistent, and ``nullspace`` is a list of basis vectors.
    """
    rhs = [field(b) for b in rhs]
    red, rhs, pivots = _eliminate(rows, nvars, field, rhs)
    for i in range(len(pivots), len(red)):
        if not rhs[i].is_zero():
            return None, []
    x = [field.zero] * nvars
    pivot_cols = set()
    for r, c in pivots:
        x[c] = rhs[r]
        pivot_cols.add(c)
    null = []
    for free in range(nvars):
        if free in pivot_cols:
            continue
        v = [field.zero] * nvars
        v[free] = field.one
        for r, c in pivots:
            coeff = red[r].get(free)
            if coeff is not None:
                v[c] = -coeff
        null.append(v)
    return x, null


def rank(rows, ncols: int, field: CyclotomicField) -> int:
    _, _, pivots = _eliminate(rows, ncols, field)
    return len(pivots)


def invert_matrix(cols, n: int, field: CyclotomicField):
    """Invert a square matrix given as ``n`` sparse columns ``{row: value}``.

    Returns the inverse as sparse columns, or ``None`` when singular.
    """
    # rows of [A | I]
    rows = [dict() for _ in range(n)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows[i][j] = v
    for i in range(n):
        rows[i][n + i] = field.one
    red, _, pivots = _eliminate(rows, 2 * n, field)
    if len(pivots) < n or any(c >= n for _, c in pivots[:n]):
        return None
    inv_cols = [dict() for _ in range(n)]
    for r, c in pivots:
        for k, v in red[r].items():
            if k >= n:
                inv_cols[k - n][c] = v
    return inv_cols
