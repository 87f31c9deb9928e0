"""Factorization over Q: Zassenhaus with Hensel lifting and Mignotte bounds.

The driver clears denominators, splits off squarefree parts (Yun), certifies
irreducibility by a mod-p spot check when a small prime obliges, and only then
runs the full lift-and-recombine machinery on primitive integer polynomials
(plain int lists, constant term first).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd as int_gcd, isqrt

from . import gfp
from .domains import QQ
from .primes import primes_from
from .upoly import UPoly, upoly_gcd

MAX_DEGREE = 128  # documented desk-scale bound


# -- integer polynomial helpers (int lists, constant first) ----------------------


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _int_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def _int_content(a):
    c = 0
    for x in a:
        c = int_gcd(c, abs(x))
    return c


def _int_primitive(a):
    """Content-free copy with positive leading coefficient."""
    if not a:
        return []
    c = _int_content(a)
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def _int_try_divide(a, b):
    """Exact division of integer polynomials; returns quotient or None."""
    if not b:
        return None
    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while _trim(r) and len(r) >= len(b):
        if r[-1] % lb != 0:
            return None
        c = r[-1] // lb
        k = len(r) - len(b)
        q[k] = c
        for i, cb in enumerate(b):
            r[i + k] -= c * cb
    return q if not _trim(r) else None


# -- modular polynomial helpers (coefficients in [0, M)) --------------------------


def _mod_trim(a, M):
    a = [c % M for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod_add(a, b, M):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % M
    return _trim(out)


def _mod_sub(a, b, M):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % M
    return _trim(out)


def _mod_mul(a, b, M):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _mod_trim(out, M)


def _mod_divmod_monic(a, b, M):
    """Division by a monic b over Z/M."""
    assert b and b[-1] == 1, "modular division requires a monic divisor"
    r = [c % M for c in a]
    q = [0] * max(len(r) - len(b) + 1, 0)
    while _trim(r) and len(r) >= len(b):
        c = r[-1]
        k = len(r) - len(b)
        q[k] = c
        for i, cb in enumerate(b):
            r[i + k] = (r[i + k] - c * cb) % M
    return _trim(q), r


def _symmetric(a, M):
    half = M // 2
    return _trim([c - M if c > half else c for c in [x % M for x in a]])


# -- Hensel lifting ----------------------------------------------------------------


def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: from mod m to mod m**2.

    Preconditions: f = g*h (mod m), s*g + t*h = 1 (mod m), h monic,
    deg f = deg g + deg h, deg s < deg h, deg t < deg g.
    """
    M = m * m
    e = _mod_sub(_mod_trim(f, M), _mod_mul(g, h, M), M)
    q, r = _mod_divmod_monic(_mod_mul(s, e, M), h, M)
    g1 = _mod_add(g, _mod_add(_mod_mul(t, e, M), _mod_mul(q, g, M), M), M)
    h1 = _mod_add(h, r, M)
    b = _mod_sub(_mod_add(_mod_mul(s, g1, M), _mod_mul(t, h1, M), M), [1], M)
    c, d = _mod_divmod_monic(_mod_mul(s, b, M), h1, M)
    s1 = _mod_sub(s, d, M)
    t1 = _mod_sub(t, _mod_add(_mod_mul(t, b, M), _mod_mul(c, g1, M), M), M)
    return g1, h1, s1, t1


def _lift_modulus(p, target):
    m = p
    while m < target:
        m = m * m
    return m


def _bezout_mod_p(g, h, p):
    """s, t with s*g + t*h = 1 mod p, deg s < deg h, deg t < deg g."""
    one, s, t = gfp.xgcd(g, h, p)
    assert one == [1], "lift factors are not coprime mod p"
    s = gfp.rem(s, h, p)
    num = gfp.sub([1], gfp.mul(s, g, p), p)
    t, r = gfp.divmod_(num, h, p)
    assert not r
    return s, t


def _hensel_lift_list(f, facs, p, target):
    """Lift mod-p monic factors of f to a common modulus >= target.

    f: integer polynomial with p not dividing lc; facs: pairwise coprime monic
    factors mod p with lc(f) * prod(facs) = f (mod p).  Returns (monic lifted
    factors, modulus).
    """
    M = _lift_modulus(p, target)
    if len(facs) == 1:
        inv = pow(f[-1] % M, -1, M)
        return [_mod_trim([c * inv for c in f], M)], M
    mid = len(facs) // 2
    g = [f[-1] % p]
    for fac in facs[:mid]:
        g = gfp.mul(g, fac, p)
    h = [1]
    for fac in facs[mid:]:
        h = gfp.mul(h, fac, p)
    s, t = _bezout_mod_p(g, h, p)
    m = p
    while m < M:
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    assert _mod_sub(_mod_trim(f, m), _mod_mul(g, h, m), m) == []
    left, _ = _hensel_lift_list(_symmetric(g, m), facs[:mid], p, target)
    right, _ = _hensel_lift_list(_symmetric(h, m), facs[mid:], p, target)
    return left + right, M


# -- Zassenhaus core ----------------------------------------------------------------


def _mignotte_bound(f):
    n = len(f) - 1
    return (isqrt(n + 1) + 1) * (1 << n) * max(abs(c) for c in f) * abs(f[-1])


def _pick_prime(f):
    """Smallest-r choice among a few usable primes; returns (p, factors) or None if irreducible."""
    lc = f[-1]
    best = None
    seen = 0
    for p in primes_from(3):
        if lc % p == 0:
            continue
        fp = _mod_trim(f, p)
        if len(fp) != len(f):
            continue
        if gfp.deg(gfp.gcd(fp, gfp.deriv(fp, p), p)) != 0:
            continue
        _, pairs = gfp.factor(gfp.monic(fp, p), p)
        facs = [g for g, _ in pairs]
        if len(facs) == 1:
            return None
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        seen += 1
        if seen >= 6 or len(best[1]) <= 3:
            break
    return best


def _zassenhaus(f):
    """Factor a primitive squarefree integer polynomial into primitive irreducibles."""
    if len(f) - 1 <= 1:
        return [_int_primitive(f)]
    picked = _pick_prime(f)
    if picked is None:
        return [_int_primitive(f)]
    p, facs = picked
    bound = _mignotte_bound(f)
    lifted, M = _hensel_lift_list(f, facs, p, 2 * bound + 1)
    found = []
    idxs = list(range(len(lifted)))
    current = list(f)
    size = 1
    while 2 * size <= len(idxs):
        progress = False
        for combo in combinations(idxs, size):
            lc = current[-1]
            if current[0] != 0:
                const = lc % M
                for i in combo:
                    const = const * lifted[i][0] % M
                const = const - M if const > M // 2 else const
                if const == 0 or (lc * current[0]) % const != 0:
                    continue
            cand = [lc % M]
            for i in combo:
                cand = _mod_mul(cand, lifted[i], M)
            cand = _int_primitive(_symmetric(cand, M))
            quot = _int_try_divide(current, cand)
            if quot is not None:
                found.append(cand)
                current = quot
                idxs = [i for i in idxs if i not in combo]
                progress = True
                break
        if not progress:
            size += 1
    if len(current) - 1 > 0:
        found.append(_int_primitive(current))
    check = [1]
    for g in found:
        check = _int_mul(check, g)
    assert _int_primitive(check) == _int_primitive(list(f)), "recombination lost factors"
    return found


def _mod_p_irreducible_spot_check(f):
    """True if some small prime not dividing lc*disc shows f irreducible mod p."""
    lc = f[-1]
    seen = 0
    for p in primes_from(3):
        if lc % p == 0:
            continue
        fp = _mod_trim(f, p)
        if len(fp) != len(f):
            continue
        if gfp.deg(gfp.gcd(fp, gfp.deriv(fp, p), p)) != 0:
            seen += 1
            if gfp.is_irreducible(fp, p):
                return True
        if seen >= 8:
            return False
        if p > 200:
            return False
    return False


def _to_int_poly(f: UPoly):
    """(primitive integer coefficient list, rational unit) with f = unit * list."""
    den_lcm = 1
    for c in f.cs:
        den_lcm = den_lcm * c.denominator // int_gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in f.cs]
    content = _int_content(ints)
    if ints[-1] < 0:
        content = -content
    prim = [c // content for c in ints]
    return prim, Fraction(content, den_lcm)


def _yun_squarefree(f: UPoly):
    """Characteristic-zero squarefree decomposition: [(monic factor, multiplicity)]."""
    out = []
    fp = f.derivative()
    g = upoly_gcd(f, fp)
    if g.degree == 0:
        return [(f.monic(), 1)]
    w = f // g
    y = fp // g
    z = y - w.derivative()
    i = 1
    while w.degree > 0:
        h = upoly_gcd(w, z)
        if h.degree > 0:
            out.append((h.monic(), i))
        w = w // h
        y = z // h
        z = y - w.derivative()
        i += 1
    return out


def factor_over_Q(f: UPoly):
    """Full factorization over Q.

    Returns (unit, [(monic irreducible UPoly, multiplicity), ...]) with
    unit * prod(factor**mult) == f exactly.
    """
    if f.dom != QQ:
        raise ValueError("factor_over_Q expects rational coefficients")
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > MAX_DEGREE:
        raise ValueError("degree %d beyond configured bound %d" % (f.degree, MAX_DEGREE))
    unit = f.lc
    if f.degree == 0:
        return unit, []
    work = f.monic()
    pairs = []
    # split off powers of t so integer recombination sees a nonzero constant term
    v = 0
    while QQ.is_zero(work.coeff(0)):
        work = work // UPoly.x(QQ)
        v += 1
    if v:
        pairs.append((UPoly.x(QQ), v))
    if work.degree > 0:
        for sqf, mult in _yun_squarefree(work):
            prim, _ = _to_int_poly(sqf)
            if len(prim) - 1 == 0:
                continue
            if _mod_p_irreducible_spot_check(prim):
                int_factors = [prim]
            else:
                int_factors = _zassenhaus(prim)
            for g in sorted(int_factors, key=lambda h: (len(h), h)):
                pairs.append((UPoly(QQ, [Fraction(c) for c in g]).monic(), mult))
    check = UPoly.const(QQ, unit)
    for g, m in pairs:
        check = check * g ** m
    assert check == f, "factor_over_Q product mismatch"
    return unit, pairs


def is_irreducible_over_Q(f: UPoly) -> bool:
    if f.degree < 1:
        return False
    _, pairs = factor_over_Q(f)
    return len(pairs) == 1 and pairs[0][1] == 1
