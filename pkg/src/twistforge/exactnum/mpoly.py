"""Sparse multivariate polynomials over a coefficient domain."""

from __future__ import annotations


class MPoly:
    """Map from exponent tuples to nonzero coefficients."""

    __slots__ = ("dom", "nvars", "terms")

    def __init__(self, dom, nvars, terms=None, trusted=False):
        tbl = {}
        if terms:
            for e, c in terms.items() if isinstance(terms, dict) else terms:
                e = tuple(int(x) for x in e)
                assert len(e) == nvars, "exponent vector length mismatch"
                assert all(x >= 0 for x in e)
                if not trusted:
                    c = dom.coerce(c)
                if e in tbl:
                    c = dom.add(tbl[e], c)
                if not dom.is_zero(c):
                    tbl[e] = c
                elif e in tbl:
                    del tbl[e]
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", tbl)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    @classmethod
    def zero(cls, dom, nvars):
        return cls(dom, nvars)

    @classmethod
    def const(cls, dom, nvars, c):
        c = dom.coerce(c)
        if dom.is_zero(c):
            return cls(dom, nvars)
        return cls(dom, nvars, {(0,) * nvars: c}, trusted=True)

    @classmethod
    def variable(cls, dom, nvars, i, power=1):
        e = [0] * nvars
        e[i] = power
        return cls(dom, nvars, {tuple(e): dom.one}, trusted=True)

    @classmethod
    def monomial(cls, dom, e, c):
        return cls(dom, len(e), {tuple(e): c})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        if self.dom != other.dom or self.nvars != other.nvars:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.dom.eq(c, other.terms[e]) for e, c in self.terms.items())

    def __hash__(self):
        return hash((self.dom, self.nvars, frozenset(self.terms)))

    def _same_ring(self, other):
        if self.dom != other.dom or self.nvars != other.nvars:
            raise ValueError("mixed polynomial rings")

    def __add__(self, other):
        self._same_ring(other)
        dom = self.dom
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = dom.add(out[e], c)
                if dom.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MPoly(dom, self.nvars, out, trusted=True)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        dom = self.dom
        return MPoly(
            dom, self.nvars, {e: dom.neg(c) for e, c in self.terms.items()}, trusted=True
        )

    def __mul__(self, other):
        dom = self.dom
        if not isinstance(other, MPoly):
            s = dom.coerce(other)
            if dom.is_zero(s):
                return MPoly.zero(dom, self.nvars)
            return MPoly(
                dom, self.nvars, {e: dom.mul(c, s) for e, c in self.terms.items()}, trusted=True
            )
        self._same_ring(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = dom.mul(c1, c2)
                if e in out:
                    s = dom.add(out[e], prod)
                    if dom.is_zero(s):
                        del out[e]
                    else:
                        out[e] = s
                else:
                    out[e] = prod
        return MPoly(dom, self.nvars, out, trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k):
        assert k >= 0
        result = MPoly.const(self.dom, self.nvars, self.dom.one)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, s):
        return self * s

    def deriv(self, i):
        """Partial derivative with respect to variable i."""
        dom = self.dom
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            coeff = dom.mul(c, dom.coerce(e[i]))
            if dom.is_zero(coeff):
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = coeff
        return MPoly(dom, self.nvars, out, trusted=True)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, d=None):
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def coeff(self, e):
        return self.terms.get(tuple(e), self.dom.zero)

    def map_coeffs(self, new_dom, fn=None):
        if fn is None:
            fn = new_dom.coerce
        return MPoly(new_dom, self.nvars, {e: fn(c) for e, c in self.terms.items()})

    def sorted_terms(self):
        """Terms in a deterministic order (descending exponent tuples)."""
        return sorted(self.terms.items(), key=lambda item: item[0], reverse=True)

    def to_json(self):
        return {
            "vars": self.nvars,
            "terms": [
                {"e": list(e), "c": self.dom.coeff_to_json(c)} for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, doc, dom):
        nvars = int(doc["vars"])
        terms = {}
        for item in doc["terms"]:
            e = tuple(int(x) for x in item["e"])
            if len(e) != nvars:
                raise ValueError("terms.e length does not match vars")
            terms[e] = dom.coeff_from_json(item["c"])
        return cls(dom, nvars, terms)

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                "X%d^%d" % (i, k) if k > 1 else "X%d" % i for i, k in enumerate(e) if k
            )
            bits.append("(%s)%s" % (c, "*" + mono if mono else ""))
        return "MPoly(%s)" % " + ".join(bits)
