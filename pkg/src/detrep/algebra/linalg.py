"""Exact linear algebra over fields and fraction-free routines over polynomial rings.

Scalar matrices are tuples of row tuples.  A matrix with ``cols == 0`` is
represented by a tuple of empty rows, so its row count survives.
"""
from itertools import combinations

from ..errors import DimensionMismatch, SingularMatrix
from .field import scalar


def matrix(rows):
    """Build an immutable scalar matrix from nested sequences."""
    rows = tuple(tuple(scalar(x) for x in row) for row in rows)
    if len({len(r) for r in rows}) > 1:
        raise DimensionMismatch("ragged matrix")
    return rows


def shape(m):
    return len(m), (len(m[0]) if m else 0)


def identity(n, one=1):
    return tuple(tuple(scalar(one) if i == j else scalar(one) * 0 for j in range(n)) for i in range(n))


def transpose(m):
    rows, cols = shape(m)
    return tuple(tuple(m[i][j] for i in range(rows)) for j in range(cols))


def mat_mul(a, b):
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise DimensionMismatch(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    bt = transpose(b)
    zero = x0(a, b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), zero) for col in bt) for row in a)


def x0(*ms):
    # a zero of the right field, taken from the first available entry
    for m in ms:
        for row in m:
            for x in row:
                return x * 0
    return scalar(0)


def mat_scale(m, c):
    return tuple(tuple(x * c for x in row) for row in m)


def rref(m):
    """Reduced row echelon form over the field; returns ``(rows, pivot_columns)``."""
    a = [list(row) for row in m]
    rows, cols = shape(m)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def mat_rank(m):
    """Exact rank.

    >>> mat_rank(matrix([[1, 2], [2, 4]]))
    1
    """
    return len(rref(m)[1])


def mat_kernel(m):
    """Basis of the right kernel, as the columns of the returned matrix."""
    rows, cols = shape(m)
    a, pivots = rref(m)
    zero = x0(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * cols
        v[f] = zero + 1
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][f]
        basis.append(v)
    if not basis:
        return tuple(() for _ in range(cols))
    return transpose(basis)


def mat_inverse(m):
    rows, cols = shape(m)
    if rows != cols:
        raise DimensionMismatch("inverse of a non-square matrix")
    zero = x0(m)
    aug = [list(row) + [zero + (1 if i == j else 0) for j in range(rows)] for i, row in enumerate(m)]
    a, pivots = rref(aug)
    if pivots[:rows] != list(range(rows)):
        raise SingularMatrix("matrix is singular")
    return tuple(tuple(row[rows:]) for row in a)


def solve(m, rhs_columns):
    """Solve ``m x = b`` for each column ``b``; returns solutions or None where inconsistent."""
    rows, cols = shape(m)
    k = len(rhs_columns)
    aug = [list(m[i]) + [b[i] for b in rhs_columns] for i in range(rows)]
    a, pivots = rref(aug)
    zero = x0(m)
    out = []
    for j in range(k):
        col = cols + j
        if col in pivots:
            out.append(None)
            continue
        x = [zero] * cols
        for r, pc in enumerate(pivots):
            if pc < cols:
                x[pc] = a[r][col]
        out.append(tuple(x))
    return out


def _exact_div(a, b):
    div = getattr(a, "exact_div", None)
    return div(b) if div is not None else a / b


def bareiss_det(m):
    """Fraction-free (Bareiss) determinant over any exact integral domain.

    Entries must support ``+ - *``, truthiness for zero tests, and either
    ``exact_div`` (polynomials) or ``/`` (field elements).
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return scalar(1)
    a = [list(row) for row in m]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return a[k][k] * 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = a[i][j] * piv - a[i][k] * a[k][j]
                a[i][j] = v if prev is None else _exact_div(v, prev)
            a[i][k] = a[i][k] * 0
        prev = piv
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def mat_det(m):
    return bareiss_det(m)


def det_multipoly_matrix(m):
    """Exact determinant of a square matrix of MultiPoly entries.

    >>> from detrep.algebra.multipoly import MultiPoly
    >>> x1, x2, x3, x4 = MultiPoly.variables(4)
    >>> str(det_multipoly_matrix([[x1, x2], [x3, x4]]))
    'x1*x4 - x2*x3'

    Division-free: minors over the last rows are built up by Laplace
    expansion and memoized by column set, ``O(n 2^n)`` products in all.
    Multivariate exact division is far costlier than multiplication, so
    this beats Bareiss at the sizes in use.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return scalar(1)
    # layer[cols] = det of rows n-k..n-1 restricted to the sorted column tuple cols
    layer = {(j,): m[n - 1][j] for j in range(n)}
    for k in range(2, n + 1):
        row = m[n - k]
        nxt = {}
        for cols in combinations(range(n), k):
            acc = None
            for pos, j in enumerate(cols):
                if not row[j]:
                    continue
                sub = layer[cols[:pos] + cols[pos + 1:]]
                if not sub:
                    continue
                term = row[j] * sub
                if acc is None:
                    acc = term if pos % 2 == 0 else -term
                else:
                    acc = acc + term if pos % 2 == 0 else acc - term
            nxt[cols] = acc if acc is not None else row[0] * 0
        layer = nxt
    return layer[tuple(range(n))]


def fraction_free_rank(m):
    """Rank over the fraction field of an integral domain, without divisions."""
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    rank = 0
    prev = None
    for c in range(cols):
        p = next((i for i in range(rank, rows) if a[i][c]), None)
        if p is None:
            continue
        a[rank], a[p] = a[p], a[rank]
        piv = a[rank][c]
        for i in range(rank + 1, rows):
            for j in range(c + 1, cols):
                v = a[i][j] * piv - a[i][c] * a[rank][j]
                a[i][j] = v if prev is None else _exact_div(v, prev)
            a[i][c] = a[i][c] * 0
        prev = piv
        rank += 1
        if rank == rows:
            break
    return rank


def minors(m, k):
    """Yield ``(row_indices, col_indices, det)`` for every k x k minor."""
    rows = len(m)
    cols = len(m[0]) if m else 0
    for ri in combinations(range(rows), k):
        for ci in combinations(range(cols), k):
            yield ri, ci, bareiss_det([[m[i][j] for j in ci] for i in ri])


def independent_columns(m, rank_fn=fraction_free_rank):
    """Greedy choice of column indices spanning the column space over the fraction field."""
    chosen = []
    cols = len(m[0]) if m else 0
    for c in range(cols):
        trial = chosen + [c]
        if rank_fn([[row[j] for j in trial] for row in m]) == len(trial):
            chosen = trial
    return chosen
