"""Multi-index combinatorics for monomial bases.

A multi-index is a plain tuple of non-negative ints; its degree is the sum.
Bases are ordered graded-lexicographically with x0 > x1 > ... > xn, so inside
one degree ``(d, 0, ..., 0)`` comes first and ``(0, ..., 0, d)`` last.
"""

from functools import lru_cache
from math import comb, factorial, prod

from .errors import DomainError

MultiIndex = tuple


def degree(index):
    return sum(index)


def _check_same(i, j):
    if len(i) != len(j):
        raise DomainError(f"multi-indices of different length: {i} vs {j}")


def add(i, j):
    _check_same(i, j)
    return tuple(a + b for a, b in zip(i, j))


def try_sub(i, j):
    """Componentwise ``i - j``, or None if some component would go negative."""
    _check_same(i, j)
    out = tuple(a - b for a, b in zip(i, j))
    if any(c < 0 for c in out):
        return None
    return out


def factorial_product(index):
    return prod(factorial(e) for e in index)


def unit(nvars, j):
    return tuple(1 if i == j else 0 for i in range(nvars))


def basis_size(nvars, deg):
    if nvars < 1:
        raise DomainError("nvars must be positive")
    if deg < 0:
        return 0
    return comb(nvars - 1 + deg, deg)


def _gen(nvars, deg):
    if nvars == 1:
        yield (deg,)
        return
    for first in range(deg, -1, -1):
        for rest in _gen(nvars - 1, deg - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_basis(nvars, deg):
    """All exponent vectors of total degree ``deg`` in ``nvars`` variables,
    in graded-lex order (x0 > x1 > ...)."""
    if nvars < 1:
        raise DomainError("nvars must be positive")
    if deg < 0:
        raise DomainError("degree must be non-negative")
    return tuple(_gen(nvars, deg))


class MonomialBasis:
    """Ranked monomial basis of one graded piece."""

    def __init__(self, nvars, deg):
        self.nvars = nvars
        self.degree = deg
        self.order = "grlex"
        self.monomials = enumerate_basis(nvars, deg)
        self._rank = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def rank(self, index):
        try:
            return self._rank[index]
        except KeyError:
            raise DomainError(f"{index} is not in the degree-{self.degree} basis") from None

    def unrank(self, i):
        return self.monomials[i]

    def __contains__(self, index):
        return index in self._rank

    def __repr__(self):
        return f"MonomialBasis(nvars={self.nvars}, degree={self.degree})"


@lru_cache(maxsize=None)
def monomial_basis(nvars, deg):
    return MonomialBasis(nvars, deg)
