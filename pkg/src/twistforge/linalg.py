"""Small exact linear algebra over a coefficient domain (lists of lists)."""

from __future__ import annotations


def identity(dom, n):
    return [[dom.one if i == j else dom.zero for j in range(n)] for i in range(n)]


def mat_mul(a, b, dom):
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    out = [[dom.zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for kk in range(k):
            c = ai[kk]
            if dom.is_zero(c):
                continue
            brow = b[kk]
            orow = out[i]
            for j in range(m):
                orow[j] = dom.add(orow[j], dom.mul(c, brow[j]))
    return out


def mat_vec(a, v, dom):
    return [
        _dot(row, v, dom)
        for row in a
    ]


def _dot(row, v, dom):
    acc = dom.zero
    for c, x in zip(row, v):
        if not dom.is_zero(c):
            acc = dom.add(acc, dom.mul(c, x))
    return acc


def mat_det(m, dom):
    """Determinant by Gaussian elimination over a field domain."""
    n = len(m)
    m = [row[:] for row in m]
    det = dom.one
    neg = False
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if not dom.is_zero(m[i][k]):
                pivot = i
                break
        if pivot is None:
            return dom.zero
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            neg = not neg
        pk = m[k][k]
        det = dom.mul(det, pk)
        inv_pk = dom.inv(pk)
        for i in range(k + 1, n):
            if dom.is_zero(m[i][k]):
                continue
            factor = dom.mul(m[i][k], inv_pk)
            for j in range(k, n):
                m[i][j] = dom.sub(m[i][j], dom.mul(factor, m[k][j]))
    return dom.neg(det) if neg else det


def mat_inv(m, dom):
    """Inverse over a field domain; raises ZeroDivisionError if singular."""
    n = len(m)
    aug = [row[:] + [dom.one if i == j else dom.zero for j in range(n)] for i, row in enumerate(m)]
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if not dom.is_zero(aug[i][k]):
                pivot = i
                break
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        if pivot != k:
            aug[k], aug[pivot] = aug[pivot], aug[k]
        inv_pk = dom.inv(aug[k][k])
        aug[k] = [dom.mul(c, inv_pk) for c in aug[k]]
        for i in range(n):
            if i == k or dom.is_zero(aug[i][k]):
                continue
            factor = aug[i][k]
            aug[i] = [dom.sub(c, dom.mul(factor, ck)) for c, ck in zip(aug[i], aug[k])]
    return [row[n:] for row in aug]


def solve_first_dependency(vectors, dom):
    """Smallest k with vectors[k] in the span of the previous ones.

    Returns (k, coeffs) where coeffs has length k and
    vectors[k] = sum(coeffs[i] * vectors[i]).  Returns None if independent.
    """
    if not vectors:
        return None
    width = len(vectors[0])
    basis = []  # rows in echelon form
    trail = []  # expression of each basis row in terms of original vectors
    for k, vec in enumerate(vectors):
        row = list(vec)
        expr = [dom.zero] * k
        for brow, bexpr, piv in basis:
            c = row[piv]
            if dom.is_zero(c):
                continue
            row = [dom.sub(a, dom.mul(c, b)) for a, b in zip(row, brow)]
            expr = [
                dom.sub(a, dom.mul(c, b)) for a, b in zip(expr, bexpr + [dom.zero] * (k - len(bexpr)))
            ]
        piv = None
        for j in range(width):
            if not dom.is_zero(row[j]):
                piv = j
                break
        if piv is None:
            return k, [dom.neg(c) for c in expr]
        inv = dom.inv(row[piv])
        row = [dom.mul(c, inv) for c in row]
        expr = [dom.mul(c, inv) for c in expr]
        basis.append((row, expr, piv))
    return None


def lagrange_interpolate(points, values, dom):
    """Coefficients (constant first) of the unique poly through the given points."""
    n = len(points)
    assert n == len(values) and n > 0
    coeffs = [dom.zero] * n
    for i in range(n):
        # numerator polynomial prod_{j != i} (x - x_j), denominator scalar
        num = [dom.one]
        den = dom.one
        xi = points[i]
        for j in range(n):
            if j == i:
                continue
            xj = points[j]
            new = [dom.zero] * (len(num) + 1)
            for k, c in enumerate(num):
                new[k] = dom.sub(new[k], dom.mul(c, xj))
                new[k + 1] = dom.add(new[k + 1], c)
            num = new
            den = dom.mul(den, dom.sub(xi, xj))
        scale = dom.div(values[i], den)
        for k, c in enumerate(num):
            coeffs[k] = dom.add(coeffs[k], dom.mul(c, scale))
    return coeffs
