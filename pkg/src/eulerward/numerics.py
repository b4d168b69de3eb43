"""Exact arithmetic kernel.

Integers are plain Python ints (arbitrary precision) and rationals are
``fractions.Fraction`` (always lowest terms, positive denominator), so the
whole package computes without rounding.  On top of those this module
provides the generalized binomial coefficient, rising and falling factorials
that also accept polynomial arguments, Stirling subset numbers, their
associated variant (every block of size at least 2), and ``PolyST``, a small
sparse polynomial type in the two indeterminates s and t used by the triangle
builders when s and t are left symbolic.

Everything here is immutable and pure; values can be shared freely between
threads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "binomial",
    "rising_factorial",
    "falling_factorial",
    "stirling_subset",
    "assoc_stirling_subset",
    "PolyST",
]


def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient C(n, k) for arbitrary integers.

    For k < 0 the value is 0.  For n >= 0 it is the usual coefficient, 0 when
    k > n.  For n < 0 the polynomial convention n(n-1)...(n-k+1)/k! applies,
    computed through the reflection C(n, k) = (-1)^k C(k-n-1, k).  The
    negative-n branch matters for the inverse-pair sums, where factors like
    C(n-j-1, k-j) can probe C(-1, 0) = 1.

    >>> binomial(5, 2)
    10
    >>> binomial(3, -1)
    0
    >>> binomial(3, 5)
    0
    >>> binomial(-1, 0)
    1
    >>> binomial(-2, 3)
    -4
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    return (-1) ** k * math.comb(k - n - 1, k)


def rising_factorial(x, j: int):
    """Rising factorial x (x+1) ... (x+j-1), the empty product 1 when j = 0.

    ``x`` may be an int, a Fraction, or a PolyST; the result has the same
    flavour (except that the j = 0 value is the plain int 1, which mixes
    fine with all three).

    >>> rising_factorial(3, 2)
    12
    >>> rising_factorial(Fraction(1, 2), 3)
    Fraction(15, 8)
    """
    if j < 0:
        raise ValueError("rising_factorial needs j >= 0, got %r" % (j,))
    out = 1
    for i in range(j):
        out = out * (x + i)
    return out


def falling_factorial(x, j: int):
    """Falling factorial x (x-1) ... (x-j+1), the empty product 1 when j = 0.

    >>> falling_factorial(5, 3)
    60
    >>> falling_factorial(2, 4)
    0
    """
    if j < 0:
        raise ValueError("falling_factorial needs j >= 0, got %r" % (j,))
    out = 1
    for i in range(j):
        out = out * (x - i)
    return out


@lru_cache(maxsize=None)
def stirling_subset(n: int, k: int) -> int:
    """Stirling subset number: partitions of an n-set into k nonempty blocks.

    Recurrence {n, k} = k {n-1, k} + {n-1, k-1} with {0, 0} = 1.

    >>> stirling_subset(0, 0)
    1
    >>> stirling_subset(4, 2)
    7
    >>> stirling_subset(3, 0)
    0
    """
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * stirling_subset(n - 1, k) + stirling_subset(n - 1, k - 1)


@lru_cache(maxsize=None)
def assoc_stirling_subset(n: int, k: int) -> int:
    """Partitions of an n-set into k blocks, every block of size >= 2.

    Recurrence {{n, k}} = k {{n-1, k}} + (n-1) {{n-2, k-1}} with {{0, 0}} = 1:
    element n either joins one of the k existing blocks or forms a new block
    together with one of the other n-1 elements.

    >>> assoc_stirling_subset(0, 0)
    1
    >>> assoc_stirling_subset(4, 2)
    3
    >>> assoc_stirling_subset(3, 2)
    0
    """
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return k * assoc_stirling_subset(n - 1, k) + (n - 1) * assoc_stirling_subset(n - 2, k - 1)


class PolyST:
    """Polynomial in the two indeterminates s and t with integer coefficients.

    Immutable and sparse: a map (degree in s, degree in t) -> coefficient with
    no zero coefficients stored.  Mixed arithmetic with plain ints works on
    either side, and :meth:`evaluate` at an integer point (s0, t0) is a ring
    homomorphism onto the integers, which is what lets a symbolically built
    triangle be checked against its integer-mode twin.

    >>> p = (PolyST.s() + PolyST.t()) * (PolyST.s() + PolyST.t() + 1)
    >>> p.evaluate(1, 0)
    2
    >>> (2 * PolyST.s() + 1).render()
    '1*s^0*t^0+2*s^1*t^0'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        clean: dict[tuple[int, int], int] = {}
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError("PolyST exponents must be nonnegative")
            key = (int(a), int(b))
            acc = clean.get(key, 0) + c
            if acc:
                clean[key] = acc
            elif key in clean:
                del clean[key]
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PolyST is immutable")

    @classmethod
    def constant(cls, c: int) -> "PolyST":
        return cls({(0, 0): int(c)})

    @classmethod
    def s(cls) -> "PolyST":
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> "PolyST":
        return cls({(0, 1): 1})

    @property
    def terms(self) -> dict:
        """Copy of the sparse term map."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @staticmethod
    def _coerce(other) -> "PolyST | None":
        if isinstance(other, PolyST):
            return other
        if isinstance(other, int):
            return PolyST.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        merged = dict(self._terms)
        for key, c in o._terms.items():
            acc = merged.get(key, 0) + c
            if acc:
                merged[key] = acc
            elif key in merged:
                del merged[key]
        return PolyST(merged)

    __radd__ = __add__

    def __neg__(self):
        return PolyST({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in o._terms.items():
                key = (a1 + a2, b1 + b2)
                acc = out.get(key, 0) + c1 * c2
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return PolyST(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("PolyST powers must be nonnegative integers")
        out = PolyST.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def evaluate(self, s0: int, t0: int) -> int:
        """Substitute integers for s and t."""
        return sum(c * s0**a * t0**b for (a, b), c in self._terms.items())

    def render(self) -> str:
        """Canonical text form: 'c*s^a*t^b' terms joined by '+'.

        Terms are sorted by (degree in s, degree in t) and exponents are
        always written, so the output parses unambiguously and is identical
        across runs.  The zero polynomial renders as '0'.
        """
        if not self._terms:
            return "0"
        parts = [
            "%d*s^%d*t^%d" % (c, a, b)
            for (a, b), c in sorted(self._terms.items())
        ]
        return "+".join(parts)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return "PolyST(%s)" % self.render()


if __name__ == "__main__":
    import doctest

    doctest.testmod(verbose=True)
