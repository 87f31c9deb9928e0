"""Exact scalar and polynomial kernels: Q, F_p, dense univariate, sparse multivariate."""

from .domains import GF, QQ, PrimeFieldDomain, RationalDomain
from .mpoly import MPoly
from .primes import is_prime, primes_from
from .upoly import (
    UPoly,
    discriminant,
    resultant,
    squarefree_part,
    upoly_gcd,
    upoly_xgcd,
)
from .zfactor import factor_over_Q, is_irreducible_over_Q
from . import gfp

__all__ = [
    "GF",
    "QQ",
    "MPoly",
    "PrimeFieldDomain",
    "RationalDomain",
    "UPoly",
    "discriminant",
    "factor_mod_p",
    "factor_over_Q",
    "gfp",
    "is_irreducible_over_Q",
    "is_prime",
    "primes_from",
    "resultant",
    "squarefree_part",
    "upoly_gcd",
    "upoly_xgcd",
]


def factor_mod_p(f: UPoly):
    """Factor a UPoly over a prime field.

    Returns (leading coefficient, [(monic irreducible UPoly, multiplicity), ...]).
    """
    dom = f.dom
    if not isinstance(dom, PrimeFieldDomain):
        raise ValueError("factor_mod_p expects coefficients in a prime field")
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    lc, pairs = gfp.factor(list(f.cs), dom.p)
    return lc, [(UPoly(dom, g, trusted=True), m) for g, m in pairs]
