"""Triangles of nu-order (s,t)-Eulerian numbers.

The triangle is defined by the two-term recurrence

    E(n, k) = (k + s) E(n-1, k) + (nu n - k + t + 1 - nu) E(n-1, k-1)

with E(0, 0) = 1 and E(n, k) = 0 outside 0 <= k <= n.  Row n counts the
generalized Stirling permutations of order n by their number of ascents (see
``stirlingperm``), and sums to prod_{k=0}^{n-1} (k nu + t + s).

Entries are polynomials in s and t, so every builder here accepts either
concrete integers ("int" mode) or the symbolic indeterminates of
``numerics.PolyST`` ("poly" mode).  The recurrence itself never requires
s >= 1 or t >= 0; those constraints belong to the combinatorial models, and
the engine deliberately accepts things like (s, t) = (0, 1) or t = -s, both
of which have closed forms of their own (see ``s_minus_s_closed_forms``).

Besides the recurrence, this module evaluates the explicit summation formulas
for orders 1 and 2, the classic Eulerian and second-order Eulerian numbers in
both of their usual indexings, and the degenerate t = -s forms.  All of them
are exact; divisions by k! are asserted to be exact rather than trusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .numerics import PolyST, binomial, falling_factorial, rising_factorial

__all__ = [
    "Params",
    "TriangleRows",
    "EulerTriangle",
    "recurrence_rows",
    "eulerian_table",
    "satisfies_recurrence",
    "eulerian_poly",
    "row_sum_product",
    "closed_form_order1",
    "closed_form_order2",
    "classic_eulerian",
    "classic_second_order",
    "s_minus_s_closed_forms",
]

INT_MODE = "int"
POLY_MODE = "poly"


@dataclass(frozen=True)
class Params:
    """Parameter triple (nu, s, t) plus an optional composition of t.

    ``tvec`` splits t into s nonnegative parts (t_1, ..., t_s); when absent,
    operations that need one default to (t, 0, ..., 0).  The ascent
    statistics only depend on t through its total, so the default is as good
    as any composition, but enumeration and the forest model are defined per
    part and accept an explicit split.
    """

    nu: int
    s: int
    t: int
    tvec: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.nu < 1:
            raise ValueError("nu must be a positive integer, got %r" % (self.nu,))
        if self.tvec is not None:
            vec = tuple(int(x) for x in self.tvec)
            object.__setattr__(self, "tvec", vec)
            if len(vec) != self.s:
                raise ValueError("tvec must have s = %d parts, got %r" % (self.s, vec))
            if any(x < 0 for x in vec):
                raise ValueError("tvec parts must be nonnegative, got %r" % (vec,))
            if sum(vec) != self.t:
                raise ValueError("tvec must sum to t = %d, got %r" % (self.t, vec))

    @property
    def composition(self) -> tuple[int, ...]:
        """The composition of t in force, defaulting to (t, 0, ..., 0)."""
        if self.tvec is not None:
            return self.tvec
        if self.s < 1:
            raise ValueError("a composition of t needs s >= 1")
        if self.t < 0:
            raise ValueError("a composition of t needs t >= 0")
        return (self.t,) + (0,) * (self.s - 1)


def recurrence_rows(nmax, upper_coeff, diag_coeff, one=1):
    """Rows 0..nmax of the triangle |n,k| = upper(n,k) |n-1,k| + diag(n,k) |n-1,k-1|.

    ``upper_coeff`` and ``diag_coeff`` are callables (n, k) -> coefficient;
    coefficients may be ints or PolyST.  Row 0 is (one,), the delta seed.
    This one builder drives both the Eulerian and the Ward triangles, which
    differ only in their diagonal coefficient.
    """
    rows = [(one,)]
    for n in range(1, nmax + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            v = 0
            if k <= n - 1:
                v = v + upper_coeff(n, k) * prev[k]
            if k >= 1:
                v = v + diag_coeff(n, k) * prev[k - 1]
            row.append(v)
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class TriangleRows:
    """Dense lower-triangular table; entry(n, k) = 0 outside 0 <= k <= n."""

    params: Params
    mode: str
    rows: tuple

    @property
    def nmax(self) -> int:
        return len(self.rows) - 1

    def row(self, n: int) -> tuple:
        return self.rows[n]

    def entry(self, n: int, k: int):
        if n < 0 or k < 0 or k > n or n > self.nmax:
            return 0
        return self.rows[n][k]


class EulerTriangle(TriangleRows):
    """Triangle built by the Eulerian recurrence (see eulerian_table)."""


def _symbols(p: Params, mode: str):
    if mode == INT_MODE:
        return p.s, p.t, 1
    if mode == POLY_MODE:
        return PolyST.s(), PolyST.t(), PolyST.constant(1)
    raise ValueError("mode must be 'int' or 'poly', got %r" % (mode,))


def eulerian_table(p: Params, nmax: int, mode: str = INT_MODE) -> EulerTriangle:
    """Build rows 0..nmax of the nu-order (s,t)-Eulerian triangle."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    s, t, one = _symbols(p, mode)
    nu = p.nu
    rows = recurrence_rows(
        nmax,
        lambda n, k: k + s,
        lambda n, k: nu * n - k + 1 - nu + t,
        one,
    )
    return EulerTriangle(p, mode, rows)


def satisfies_recurrence(tri: TriangleRows) -> bool:
    """Re-check every stored entry against the Eulerian recurrence.

    Exposed as a validator pass so a triangle can be audited independently of
    how it was built; ward has the matching check for its own diagonal.
    """
    p, mode = tri.params, tri.mode
    s, t, one = _symbols(p, mode)
    nu = p.nu
    if tri.entry(0, 0) != one:
        return False
    for n in range(1, tri.nmax + 1):
        for k in range(n + 1):
            want = (k + s) * tri.entry(n - 1, k)
            if k >= 1:
                want = want + (nu * n - k + 1 - nu + t) * tri.entry(n - 1, k - 1)
            if tri.entry(n, k) != want:
                return False
    return True


def eulerian_poly(p: Params, n: int) -> list:
    """Coefficients, degree ascending, of P_n(x) = sum_k E(n, k) x^k.

    Trailing zero entries of the row are structural (for nu >= 2 the top
    entry E(n, n) vanishes for n >= 2), so they are dropped: the result is a
    genuine coefficient vector of the polynomial.
    """
    row = list(eulerian_table(p, n).row(n))
    while len(row) > 1 and row[-1] == 0:
        row.pop()
    return row


def row_sum_product(p: Params, n: int) -> int:
    """The row sum sum_k E(n, k) in product form: prod_{k=0}^{n-1} (k nu + t + s)."""
    return math.prod(k * p.nu + p.t + p.s for k in range(n))


def _exact_div(total: int, divisor: int) -> int:
    q, r = divmod(total, divisor)
    if r:
        raise ArithmeticError(
            "inexact division %r / %r; the summation formula was transcribed wrong" % (total, divisor)
        )
    return q


def closed_form_order1(n: int, k: int, s: int, t: int) -> int:
    """Order-1 (s,t)-Eulerian number by its explicit alternating sum.

    (1/k!) sum_{j=0}^{k} (-1)^(k-j) C(k,j) (n+s+t)^falling(k-j)
                         (s+t)^rising(j) (s+j)^n

    The division by k! must come out exact; anything else raises.
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    total = 0
    for j in range(k + 1):
        total += (
            (-1) ** (k - j)
            * math.comb(k, j)
            * falling_factorial(n + s + t, k - j)
            * rising_factorial(s + t, j)
            * (s + j) ** n
        )
    return _exact_div(total, math.factorial(k))


def closed_form_order2(n: int, k: int, s: int, t: int) -> int:
    """Order-2 (s,t)-Eulerian number by its explicit triple sum.

    (1/k!) sum_r C(k,r) (s+t+2n)^falling(k-r)
           sum_p C(r,p) sum_j (-1)^(k-p) C(p,j) (s+t)^rising(j) (s+j)
                              (p+s)^(n+r-j-1)

    For n >= 1 every exponent n+r-j-1 is >= n-1 >= 0 and integer powers are
    safe; n = 0 would hit (p+s)^(-1), so that row is returned directly from
    the base case E(0, 0) = 1.
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    if n == 0:
        return 1
    total = 0
    for r in range(k + 1):
        inner = 0
        for p in range(r + 1):
            for j in range(p + 1):
                inner += (
                    math.comb(r, p)
                    * (-1) ** (k - p)
                    * math.comb(p, j)
                    * rising_factorial(s + t, j)
                    * (s + j)
                    * (p + s) ** (n + r - j - 1)
                )
        total += math.comb(k, r) * falling_factorial(s + t + 2 * n, k - r) * inner
    return _exact_div(total, math.factorial(k))


def classic_eulerian(n: int, k: int, indexing: str = "standard") -> int:
    """Classic Eulerian numbers in either of the two common indexings.

    "standard" counts permutations of [n] with k ascents:
        <n, k> = sum_{j=0}^{k} (-1)^j C(n+1, j) (k+1-j)^n
    "traditional" is the shifted variant
        A(n, k) = sum_{j=0}^{k} (-1)^j C(n+1, j) (k-j)^n,
    which agrees with <n, k-1> for n >= 1 and 1 <= k <= n (not at (0, 1),
    where A vanishes but <0, 0> = 1).
    """
    if n < 0 or k < 0:
        raise ValueError("need n, k >= 0")
    if indexing == "standard":
        return sum((-1) ** j * math.comb(n + 1, j) * (k + 1 - j) ** n for j in range(k + 1))
    if indexing == "traditional":
        return sum((-1) ** j * math.comb(n + 1, j) * (k - j) ** n for j in range(k + 1))
    raise ValueError("indexing must be 'standard' or 'traditional', got %r" % (indexing,))


def classic_second_order(n: int, k: int, indexing: str = "standard") -> int:
    """Classic second-order Eulerian numbers via alternating Stirling sums.

    "standard":    <<n, k>> = sum_r (-1)^(k-r) C(2n+1, k-r) {n+r+1, r+1}
    "traditional": B(n, k)  = sum_r (-1)^(k-r) C(2n+1, k-r) {n+r, r}

    The two satisfy B(n, k) = <<n, k-1>> for n >= 1, 1 <= k <= n.  The
    standard indexing is the (1,0) instance of the order-2 triangle and the
    traditional one is its (0,1) instance.
    """
    from .numerics import stirling_subset

    if n < 0 or k < 0:
        raise ValueError("need n, k >= 0")
    if indexing == "standard":
        return sum(
            (-1) ** (k - r) * math.comb(2 * n + 1, k - r) * stirling_subset(n + r + 1, r + 1)
            for r in range(k + 1)
        )
    if indexing == "traditional":
        return sum(
            (-1) ** (k - r) * math.comb(2 * n + 1, k - r) * stirling_subset(n + r, r)
            for r in range(k + 1)
        )
    raise ValueError("indexing must be 'standard' or 'traditional', got %r" % (indexing,))


def s_minus_s_closed_forms(nu: int, n: int, k: int, s: int) -> int:
    """Entries of the degenerate t = -s triangles in closed form.

    Order 1 collapses to signed binomials, (-1)^k C(n, k) s^n.  Order 2 keeps
    one alternating double sum,

        s sum_r (1/r!) C(2n, k-r) sum_p C(r,p) (-1)^(k-p) (p+s)^(n+r-1),

    whose inner powers need rational arithmetic at n = 0 (exponent -1); the
    final value is asserted to be an integer.
    """
    if nu == 1:
        return (-1) ** k * binomial(n, k) * s**n
    if nu == 2:
        total = Fraction(0)
        for r in range(k + 1):
            inner = sum(
                math.comb(r, p) * (-1) ** (k - p) * Fraction(p + s) ** (n + r - 1)
                for p in range(r + 1)
            )
            total += Fraction(binomial(2 * n, k - r), math.factorial(r)) * inner
        total *= s
        if total.denominator != 1:
            raise ArithmeticError("t = -s order-2 sum came out non-integral: %r" % (total,))
        return int(total)
    raise ValueError("closed forms are available for nu in {1, 2}, got %r" % (nu,))
