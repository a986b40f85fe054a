"""Dense exact linear algebra over a FieldSpec.

Matrices are lists of lists of int-encoded field elements.  Elimination
always picks the first nonzero pivot, so every result is deterministic.
"""

from __future__ import annotations


def rref(F, rows):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(F, rows):
    if not rows:
        return 0
    return len(rref(F, rows)[1])


def nullspace(F, rows, ncols=None):
    """Basis of {v : M v = 0}, one vector per free column, free entry = 1."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[1 if j == i else 0 for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(F, rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(red[r][free])
        basis.append(v)
    return basis


def solve(F, rows, rhs):
    """One solution of M x = rhs, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(F, aug)
    for row in red:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    x = [0] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = red[r][-1]
    return x


def in_span(F, basis_rows, v):
    """Whether v lies in the row span of basis_rows; returns coefficient
    vector or None."""
    if not basis_rows:
        return [] if all(x == 0 for x in v) else None
    cols = [[row[j] for row in basis_rows] for j in range(len(v))]
    return solve(F, cols, v)
