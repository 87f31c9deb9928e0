"""Dense univariate polynomial kernel over prime fields F_p.

Polynomials are plain lists of ints in [0, p), constant term first, with no
trailing zeros; the zero polynomial is the empty list.  Keeping the kernel on
raw int lists keeps the factorization loops cheap; the UPoly wrapper converts
at the boundary.
"""

from __future__ import annotations

import random

from .primes import is_prime


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a):
    return len(a) - 1


def add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def neg(a, p):
    return [(-c) % p for c in a]


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return trim([c % p for c in out])


def scalar_mul(a, s, p):
    s %= p
    if s == 0:
        return []
    return trim([c * s % p for c in a])


def divmod_(a, b, p):
    """Quotient and remainder; b nonzero."""
    assert b, "division by zero polynomial"
    r = list(a)
    db = deg(b)
    inv_lc = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        c = r[-1] * inv_lc % p
        q[k] = c
        for i, cb in enumerate(b):
            r[i + k] = (r[i + k] - c * cb) % p
        trim(r)
    return trim(q), r


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def monic(a, p):
    if not a:
        return []
    inv_lc = pow(a[-1], -1, p)
    return [c * inv_lc % p for c in a]


def gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    c = pow(r0[-1], -1, p)
    return scalar_mul(r0, c, p), scalar_mul(s0, c, p), scalar_mul(t0, c, p)


def pow_mod(a, e, f, p):
    """a**e mod f."""
    result = [1]
    base = rem(a, f, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), f, p)
        base = rem(mul(base, base, p), f, p)
        e >>= 1
    return result


def deriv(a, p):
    return trim([i * c % p for i, c in enumerate(a)][1:])


def eval_at(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def _pth_root(a, p):
    # In F_p[x], a perfect p-th power has the shape sum c_i x^(p*i) and its
    # root keeps the same coefficients (Frobenius fixes F_p).
    out = []
    for i in range(0, len(a), p):
        out.append(a[i])
    return trim(out)


def squarefree_decomposition(f, p):
    """Yun-style decomposition in characteristic p: list of (monic factor, multiplicity)."""
    f = monic(f, p)
    out = []
    c = gcd(f, deriv(f, p), p)
    w = divmod_(f, c, p)[0]
    i = 1
    while deg(w) > 0:
        y = gcd(w, c, p)
        z = divmod_(w, y, p)[0]
        if deg(z) > 0:
            out.append((z, i))
        i += 1
        w = y
        c = divmod_(c, y, p)[0]
    if deg(c) > 0:
        for g, m in squarefree_decomposition(_pth_root(c, p), p):
            out.append((g, m * p))
    return out


def distinct_degree(f, p):
    """f monic squarefree; list of (product of irreducible factors of degree d, d)."""
    out = []
    h = [0, 1]  # x
    x = [0, 1]
    d = 0
    while deg(f) >= 2 * (d + 1):
        d += 1
        h = pow_mod(h, p, f, p)
        g = gcd(sub(h, x, p), f, p)
        if deg(g) > 0:
            out.append((g, d))
            f = divmod_(f, g, p)[0]
            h = rem(h, f, p)
    if deg(f) > 0:
        out.append((f, deg(f)))
    return out


def _split_equal_degree(f, d, p, rng):
    """f monic squarefree, all irreducible factors of degree d; full split."""
    n = deg(f)
    if n == d:
        return [f]
    while True:
        h = [rng.randrange(p) for _ in range(n)]
        trim(h)
        if deg(h) < 1:
            continue
        if p == 2:
            t = list(h)
            cur = list(h)
            for _ in range(d - 1):
                cur = rem(mul(cur, cur, p), f, p)
                t = add(t, cur, p)
            g = gcd(t, f, p)
        else:
            t = sub(pow_mod(h, (p ** d - 1) // 2, f, p), [1], p)
            g = gcd(t, f, p)
        if 0 < deg(g) < n:
            return _split_equal_degree(g, d, p, rng) + _split_equal_degree(
                divmod_(f, g, p)[0], d, p, rng
            )


def factor(f, p, seed=0x5EED):
    """Cantor-Zassenhaus factorization.

    Returns (leading coefficient, [(monic irreducible, multiplicity), ...])
    with the factor list sorted deterministically.  The random splitting uses
    a fixed-seed generator so repeated runs agree.
    """
    if not is_prime(p):
        raise ValueError("modulus %d is not prime" % p)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    lc = f[-1]
    if deg(f) == 0:
        return lc, []
    rng = random.Random(seed)
    out = []
    for g, m in squarefree_decomposition(f, p):
        for h, d in distinct_degree(g, p):
            for irr in _split_equal_degree(h, d, p, rng):
                out.append((irr, m))
    out.sort(key=lambda pair: (deg(pair[0]), pair[0]))
    prod = [lc]
    for g, m in out:
        for _ in range(m):
            prod = mul(prod, g, p)
    assert prod == [c % p for c in f], "factorization does not re-multiply"
    return lc, out


def factor_degrees(f, p):
    """Multiset of irreducible factor degrees of a squarefree f (no splitting)."""
    f = monic(f, p)
    assert deg(gcd(f, deriv(f, p), p)) == 0, "factor_degrees needs squarefree input"
    out = []
    for g, d in distinct_degree(f, p):
        out.extend([d] * (deg(g) // d))
    return sorted(out)


def is_irreducible(f, p):
    if deg(f) <= 0:
        return False
    if deg(f) == 1:
        return True
    g = gcd(f, deriv(f, p), p)
    if deg(g) != 0:
        return False
    dd = distinct_degree(monic(f, p), p)
    return len(dd) == 1 and dd[0][1] == deg(f)
