"""Dense univariate polynomials over a coefficient domain."""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .domains import QQ


class UPoly:
    """Immutable dense univariate polynomial, constant term first."""

    __slots__ = ("dom", "cs")

    def __init__(self, dom, coeffs, trusted=False):
        if trusted:
            cs = list(coeffs)
        else:
            cs = [dom.coerce(c) for c in coeffs]
        while cs and dom.is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UPoly is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, dom):
        return cls(dom, (), trusted=True)

    @classmethod
    def const(cls, dom, c):
        return cls(dom, (c,))

    @classmethod
    def x(cls, dom):
        return cls(dom, (dom.zero, dom.one), trusted=True)

    @classmethod
    def from_json(cls, doc, dom):
        return cls(dom, [dom.coeff_from_json(c) for c in doc["coeffs"]], trusted=True)

    def to_json(self):
        return {"coeffs": [self.dom.coeff_to_json(c) for c in self.cs]}

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self):
        return len(self.cs) - 1

    def is_zero(self):
        return not self.cs

    def is_one(self):
        return len(self.cs) == 1 and self.dom.eq(self.cs[0], self.dom.one)

    @property
    def lc(self):
        if not self.cs:
            return self.dom.zero
        return self.cs[-1]

    def coeff(self, i):
        if 0 <= i < len(self.cs):
            return self.cs[i]
        return self.dom.zero

    def is_monic(self):
        return bool(self.cs) and self.dom.eq(self.cs[-1], self.dom.one)

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        if self.dom != other.dom or len(self.cs) != len(other.cs):
            return False
        return all(self.dom.eq(a, b) for a, b in zip(self.cs, other.cs))

    def __hash__(self):
        return hash((self.dom, self.cs))

    def __repr__(self):
        if not self.cs:
            return "UPoly(0)"
        parts = []
        for i in range(len(self.cs) - 1, -1, -1):
            c = self.cs[i]
            if self.dom.is_zero(c):
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%s*t" % (c,))
            else:
                parts.append("%s*t^%d" % (c, i))
        return "UPoly(%s)" % " + ".join(parts)

    # -- arithmetic -------------------------------------------------------------

    def _same_domain(self, other):
        if self.dom != other.dom:
            raise ValueError("mixed coefficient domains: %r vs %r" % (self.dom, other.dom))

    def __add__(self, other):
        self._same_domain(other)
        dom = self.dom
        n = max(len(self.cs), len(other.cs))
        out = [dom.zero] * n
        for i, c in enumerate(self.cs):
            out[i] = c
        for i, c in enumerate(other.cs):
            out[i] = dom.add(out[i], c)
        return UPoly(dom, out, trusted=True)

    def __sub__(self, other):
        self._same_domain(other)
        dom = self.dom
        n = max(len(self.cs), len(other.cs))
        out = [dom.zero] * n
        for i, c in enumerate(self.cs):
            out[i] = c
        for i, c in enumerate(other.cs):
            out[i] = dom.sub(out[i], c)
        return UPoly(dom, out, trusted=True)

    def __neg__(self):
        return UPoly(self.dom, [self.dom.neg(c) for c in self.cs], trusted=True)

    def __mul__(self, other):
        dom = self.dom
        if not isinstance(other, UPoly):
            s = dom.coerce(other)
            return UPoly(dom, [dom.mul(c, s) for c in self.cs], trusted=True)
        self._same_domain(other)
        if not self.cs or not other.cs:
            return UPoly.zero(dom)
        out = [dom.zero] * (len(self.cs) + len(other.cs) - 1)
        for i, a in enumerate(self.cs):
            if dom.is_zero(a):
                continue
            for j, b in enumerate(other.cs):
                out[i + j] = dom.add(out[i + j], dom.mul(a, b))
        return UPoly(dom, out, trusted=True)

    __rmul__ = __mul__

    def __pow__(self, e):
        assert e >= 0
        result = UPoly.const(self.dom, self.dom.one)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, s):
        dom = self.dom
        s = dom.coerce(s)
        return UPoly(dom, [dom.mul(c, s) for c in self.cs], trusted=True)

    def divmod(self, other):
        """Euclidean division; the coefficient domain must be a field."""
        self._same_domain(other)
        dom = self.dom
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.cs)
        db = other.degree
        inv_lc = dom.inv(other.lc)
        q = [dom.zero] * max(len(r) - db, 0)
        while len(r) > db:
            while r and dom.is_zero(r[-1]):
                r.pop()
            if len(r) <= db:
                break
            k = len(r) - 1 - db
            c = dom.mul(r[-1], inv_lc)
            q[k] = c
            for i, cb in enumerate(other.cs):
                r[i + k] = dom.sub(r[i + k], dom.mul(c, cb))
        return UPoly(dom, q, trusted=True), UPoly(dom, r, trusted=True)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        dom = self.dom
        inv_lc = dom.inv(self.lc)
        return UPoly(dom, [dom.mul(c, inv_lc) for c in self.cs], trusted=True)

    def derivative(self):
        dom = self.dom
        out = []
        for i in range(1, len(self.cs)):
            out.append(dom.mul(self.cs[i], dom.coerce(i)))
        return UPoly(dom, out, trusted=True)

    def eval(self, x):
        """Horner evaluation; x may live in any ring accepting the coefficients."""
        if not self.cs:
            return x * 0
        acc = x * 0 + self.cs[-1]
        for c in reversed(self.cs[:-1]):
            acc = acc * x + c
        return acc

    def eval_in_domain(self, x):
        dom = self.dom
        x = dom.coerce(x)
        acc = dom.zero
        for c in reversed(self.cs):
            acc = dom.add(dom.mul(acc, x), c)
        return acc

    def compose(self, other):
        """self(other(t))."""
        self._same_domain(other)
        dom = self.dom
        acc = UPoly.zero(dom)
        for c in reversed(self.cs):
            acc = acc * other + UPoly.const(dom, c)
        return acc

    def shift(self, c):
        """self(t + c)."""
        dom = self.dom
        t_plus = UPoly(dom, (dom.coerce(c), dom.one))
        return self.compose(t_plus)

    def map_domain(self, new_dom, fn=None):
        if fn is None:
            fn = new_dom.coerce
        return UPoly(new_dom, [fn(c) for c in self.cs])


# -- gcd, resultant, discriminant ------------------------------------------------


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd by the Euclidean algorithm over a field domain."""
    if a.dom != b.dom:
        raise ValueError("mixed coefficient domains: %r vs %r" % (a.dom, b.dom))
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def upoly_xgcd(a: UPoly, b: UPoly):
    """(g, s, t) with s*a + t*b = g, g monic."""
    if a.dom != b.dom:
        raise ValueError("mixed coefficient domains")
    dom = a.dom
    r0, r1 = a, b
    s0, s1 = UPoly.const(dom, dom.one), UPoly.zero(dom)
    t0, t1 = UPoly.zero(dom), UPoly.const(dom, dom.one)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv_lc = dom.inv(r0.lc)
    return r0.scale(inv_lc), s0.scale(inv_lc), t0.scale(inv_lc)


def _int_bareiss_det(m):
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q, r = divmod(val, prev)
                assert r == 0, "Bareiss division must be exact"
                m[i][j] = q
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _field_det(m, dom):
    """Determinant over a field domain by Gaussian elimination."""
    n = len(m)
    m = [row[:] for row in m]
    sign_flip = False
    det = dom.one
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
            sign_flip = not sign_flip
        pk = m[k][k]
        det = dom.mul(det, pk)
        inv_pk = dom.inv(pk)
        for i in range(k + 1, n):
            if dom.is_zero(m[i][k]):
                continue
            factor = dom.mul(m[i][k], inv_pk)
            for j in range(k, n):
                m[i][j] = dom.sub(m[i][j], dom.mul(factor, m[k][j]))
    if sign_flip:
        det = dom.neg(det)
    return det


def _sylvester_rows(a_cs, b_cs, zero):
    da = len(a_cs) - 1
    db = len(b_cs) - 1
    n = da + db
    rows = []
    for i in range(db):
        row = [zero] * n
        for j, c in enumerate(reversed(a_cs)):
            row[i + j] = c
        rows.append(row)
    for i in range(da):
        row = [zero] * n
        for j, c in enumerate(reversed(b_cs)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant(a: UPoly, b: UPoly):
    """Sylvester-matrix resultant, computed by fraction-free elimination."""
    if a.dom != b.dom:
        raise ValueError("mixed coefficient domains")
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of the zero polynomial is not defined")
    dom = a.dom
    da, db = a.degree, b.degree
    if da == 0:
        out = dom.one
        for _ in range(db):
            out = dom.mul(out, a.cs[0])
        return out
    if db == 0:
        out = dom.one
        for _ in range(da):
            out = dom.mul(out, b.cs[0])
        return out
    if dom == QQ:
        # Fast path: clear denominators and run integer Bareiss.
        da_lcm = 1
        for c in a.cs:
            da_lcm = da_lcm * c.denominator // int_gcd(da_lcm, c.denominator)
        db_lcm = 1
        for c in b.cs:
            db_lcm = db_lcm * c.denominator // int_gcd(db_lcm, c.denominator)
        ia = [int(c * da_lcm) for c in a.cs]
        ib = [int(c * db_lcm) for c in b.cs]
        det = _int_bareiss_det(_sylvester_rows(ia, ib, 0))
        return Fraction(det, da_lcm ** db * db_lcm ** da)
    return _field_det(_sylvester_rows(list(a.cs), list(b.cs), dom.zero), dom)


def discriminant(f: UPoly):
    """disc(f) = (-1)^(n(n-1)/2) * resultant(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    dom = f.dom
    res = resultant(f, f.derivative())
    res = dom.div(res, f.lc)
    if (n * (n - 1) // 2) % 2 == 1:
        res = dom.neg(res)
    return res


def squarefree_part(f: UPoly) -> UPoly:
    """f / gcd(f, f') in characteristic zero."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    g = upoly_gcd(f, f.derivative())
    if g.degree == 0:
        return f.monic()
    return (f // g).monic()
