"""Coefficient domains for the polynomial types.

A domain bundles the handful of operations UPoly/MPoly need (zero, one,
ring arithmetic, coercion, serialization).  Rationals are plain
fractions.Fraction values, prime-field elements are plain ints in [0, p);
number fields implement the same protocol in twistforge.numfield.
"""

from __future__ import annotations

from fractions import Fraction

from .primes import is_prime


class RationalDomain:
    """The field Q with Fraction coefficients."""

    zero = Fraction(0)
    one = Fraction(1)
    char = 0

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError("cannot coerce %r into Q" % (x,))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def inv(self, a):
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def coeff_to_json(self, a):
        return str(a)

    def coeff_from_json(self, s):
        return Fraction(s)

    def __eq__(self, other):
        return isinstance(other, RationalDomain)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalDomain()


class PrimeFieldDomain:
    """F_p with int coefficients reduced into [0, p)."""

    char = None  # set per instance

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError("modulus %d is not prime" % p)
        self.p = p
        self.zero = 0
        self.one = 1 % p
        self.char = p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError("denominator of %s vanishes mod %d" % (x, self.p))
            return x.numerator * pow(den, -1, self.p) % self.p
        if isinstance(x, str):
            return self.coerce(Fraction(x))
        raise TypeError("cannot coerce %r into F_%d" % (x, self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def coeff_to_json(self, a):
        return str(a)

    def coeff_from_json(self, s):
        return int(s) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeFieldDomain) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


_gf_cache: dict[int, PrimeFieldDomain] = {}


def GF(p: int) -> PrimeFieldDomain:
    dom = _gf_cache.get(p)
    if dom is None:
        dom = _gf_cache[p] = PrimeFieldDomain(p)
    return dom
