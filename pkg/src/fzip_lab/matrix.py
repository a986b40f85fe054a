"""Square matrices over F_q as tuples of tuples of int encodings.

Tuples keep matrices hashable (orbit bookkeeping) and their row-major
flattening is the canonical lexicographic order used for orbit
representatives and golden files.
"""

from __future__ import annotations

from . import linalg


def identity(F, d):
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def zero(F, d):
    return tuple((0,) * d for _ in range(d))

def from_rows(rows):
    return tuple(tuple(r) for r in rows)


def mat_add(F, A, B):
    return tuple(tuple(F.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(F, A, B):
    return tuple(tuple(F.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_neg(F, A):
    return tuple(tuple(F.neg(x) for x in r) for r in A)


def mat_scale(F, c, A):
    return tuple(tuple(F.mul(c, x) for x in r) for r in A)


def mat_mul(F, A, B):
    d = len(A)
    n = len(B[0])
    m = len(B)
    mul = F.mul_table
    add = F.add_table
    out = []
    for i in range(d):
        Ai = A[i]
        row = []
        for j in range(n):
            acc = 0
            for k in range(m):
                a = Ai[k]
                if a:
                    acc = add[acc][mul[a][B[k][j]]]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_pow(F, A, e):
    d = len(A)
    out = identity(F, d)
    base = A
    while e:
        if e & 1:
            out = mat_mul(F, out, base)
        base = mat_mul(F, base, base)
        e >>= 1
    return out


def mat_det(F, A):
    d = len(A)
    m = [list(r) for r in A]
    det = 1
    for c in range(d):
        pivot = None
        for i in range(c, d):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = F.neg(det)
        det = F.mul(det, m[c][c])
        inv = F.inv(m[c][c])
        for i in range(c + 1, d):
            if m[i][c] != 0:
                f = F.mul(inv, m[i][c])
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[c])]
    return det


def mat_inv(F, A):
    d = len(A)
    aug = [list(A[i]) + [1 if j == i else 0 for j in range(d)] for i in range(d)]
    red, pivots = linalg.rref(F, aug)
    if pivots != list(range(d)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(red[i][d:]) for i in range(d))


def mat_frob(F, A):
    """Entrywise p-th power: the absolute Frobenius on F_q-points."""
    t = F.frob_table
    return tuple(tuple(t[x] for x in r) for r in A)


def mat_eq_zero(A):
    return all(x == 0 for r in A for x in r)


def mat_key(A):
    """Row-major flattening; integer-lex order on these tuples is the
    canonical matrix order."""
    return tuple(x for r in A for x in r)


def mat_str(F, A):
    return "[" + "; ".join(" ".join(str(x) for x in r) for r in A) + "]"
