"""Exact linear algebra over any field whose elements support the usual
Python arithmetic (+, -, *, /) and truthiness for zero-testing.  Used with
FieldElem and RatFun coefficients alike.

Matrices are lists of lists.  Every routine needs a zero and one of the
field, supplied either explicitly or scraped from the matrix entries.
"""

from __future__ import annotations


def mat_shape(m):
    return len(m), len(m[0]) if m else 0


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_mul(a, b):
    n, k = mat_shape(a)
    k2, m = mat_shape(b)
    if k != k2:
        raise ValueError("shape mismatch in matrix product")
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = a[i][0] * b[0][j]
            for l in range(1, k):
                s = s + a[i][l] * b[l][j]
            row.append(s)
        out.append(row)
    return out


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_vec(a, v):
    return [row[0] for row in mat_mul(a, [[x] for x in v])]


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_identity(n, one):
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_bracket(a, b):
    """Commutator [a, b] = ab - ba."""
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def rref(m):
    """Reduced row echelon form, in place on a copy.

    Returns (R, pivots) where pivots lists the pivot column of each
    nonzero row.
    """
    a = [list(row) for row in m]
    rows, cols = mat_shape(a)
    pivots = []
    r = 0
    for c in range(cols):
        p = None
        for i in range(r, rows):
            if a[i][c]:
                p = i
                break
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m):
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def nullspace(m, one):
    """Basis of the right kernel, as a list of vectors."""
    rows, cols = mat_shape(m)
    zero = one - one
    if rows == 0 or cols == 0:
        return [[one if i == j else zero for j in range(cols)]
                for i in range(cols)]
    r, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * cols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][fc]
        basis.append(v)
    return basis


def solve(m, rhs, one):
    """One solution of m x = rhs, or None when inconsistent."""
    rows, cols = mat_shape(m)
    zero = one - one
    aug = [list(row) + [rhs[i]] for i, row in enumerate(m)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [zero] * cols
    for i, pc in enumerate(pivots):
        x[pc] = r[i][cols]
    return x


def inverse(m, one):
    n, n2 = mat_shape(m)
    if n != n2:
        raise ValueError("inverse of a non-square matrix")
    aug = [list(row) + list(idr) for row, idr in zip(m, mat_identity(n, one))]
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r]


def det(m, one):
    n, n2 = mat_shape(m)
    if n != n2:
        raise ValueError("determinant of a non-square matrix")
    a = [list(row) for row in m]
    zero = one - one
    d = one
    for c in range(n):
        p = None
        for i in range(c, n):
            if a[i][c]:
                p = i
                break
        if p is None:
            return zero
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d = d * a[c][c]
        inv = a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def in_span(vectors, v, one):
    """Is v in the row span of vectors?"""
    if not vectors:
        return not any(v)
    m = [list(w) for w in vectors]
    base = rank(m)
    return rank(m + [list(v)]) == base
