"""Generalized (s,t)-Ward triangles and the Eulerian/Ward inverse pair.

The nu-order (s,t)-Ward numbers satisfy

    W(n, k) = (k + s) W(n-1, k) + (nu n + k + s + t - 1 - nu) W(n-1, k-1)

with W(0, 0) = 1, zero outside 0 <= k <= n.  They are binomially entangled
with the Eulerian triangle one order up:

    W(n, k) = sum_j E(n, j) C(n-j, n-k)          (order nu+1 Eulerian rows)
    E(n, k) = sum_j (-1)^(k-j) W(n, j) C(n-j, n-k)

Both directions are instances of a one-parameter family of mutually inverse
row transforms (``general_inverse_transform``); the classical orthogonality
relation behind the inversion is checkable directly
(``riordan_orthogonality_check``).  The s = 0, t = 1 column of order 1
recovers the classical Ward numbers, equal to associated Stirling subset
numbers, from which two Smiley-style summation identities follow
(``smiley_identities_check``).

As in ``eulerian``, the recurrence engine accepts any integer s and t; only
the combinatorial interpretation (see ``trees.ward_marked_count``) insists on
s >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .eulerian import (
    INT_MODE,
    Params,
    TriangleRows,
    classic_second_order,
    recurrence_rows,
    _symbols,
)
from .numerics import assoc_stirling_subset, binomial

__all__ = [
    "WardTriangle",
    "ward_table",
    "satisfies_recurrence",
    "euler_to_ward",
    "ward_to_euler",
    "general_inverse_transform",
    "riordan_orthogonality_check",
    "smiley_identities_check",
    "InversePairParams",
    "eulerian_pair_params",
    "ward_pair_params",
    "pair_rows",
]


class WardTriangle(TriangleRows):
    """Triangle built by the Ward recurrence (see ward_table)."""


def ward_table(p: Params, nmax: int, mode: str = INT_MODE) -> WardTriangle:
    """Build rows 0..nmax of the nu-order (s,t)-Ward triangle."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    s, t, one = _symbols(p, mode)
    nu = p.nu
    rows = recurrence_rows(
        nmax,
        lambda n, k: k + s,
        lambda n, k: nu * n + k - 1 - nu + s + t,
        one,
    )
    return WardTriangle(p, mode, rows)


def satisfies_recurrence(tri: WardTriangle) -> bool:
    """Re-check every stored entry against the Ward recurrence."""
    p, mode = tri.params, tri.mode
    s, t, one = _symbols(p, mode)
    nu = p.nu
    if tri.entry(0, 0) != one:
        return False
    for n in range(1, tri.nmax + 1):
        for k in range(n + 1):
            want = (k + s) * tri.entry(n - 1, k)
            if k >= 1:
                want = want + (nu * n + k - 1 - nu + s + t) * tri.entry(n - 1, k - 1)
            if tri.entry(n, k) != want:
                return False
    return True


def _check_row(row, n: int):
    if len(row) != n + 1:
        raise ValueError("row for index n = %d must have %d entries, got %d" % (n, n + 1, len(row)))


def euler_to_ward(euler_row, n: int) -> list:
    """Row n of the order-nu Ward triangle from row n of the order-(nu+1) Eulerian one.

    W(n, k) = sum_{j=0}^{k} E(n, j) C(n-j, n-k).
    """
    _check_row(euler_row, n)
    return [
        sum(euler_row[j] * binomial(n - j, n - k) for j in range(k + 1))
        for k in range(n + 1)
    ]


def ward_to_euler(ward_row, n: int) -> list:
    """Inverse of euler_to_ward: E(n, k) = sum_j (-1)^(k-j) W(n, j) C(n-j, n-k)."""
    _check_row(ward_row, n)
    return [
        sum((-1) ** (k - j) * ward_row[j] * binomial(n - j, n - k) for j in range(k + 1))
        for k in range(n + 1)
    ]


def _as_exact(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def general_inverse_transform(row, n: int, r, direction: str = "forward") -> list:
    """The ratio-r binomial row transform and its inverse.

    forward:  a_k = sum_j b_j C(n-j, n-k) r^(k-j)
    backward: the same sum with r replaced by -r

    The two compose to the identity for every r, which is exactly the
    orthogonality relation of riordan_orthogonality_check dressed with a
    geometric weight.  r = 1 reproduces euler_to_ward / ward_to_euler; r = 0
    is the identity transform.  Fractional r is fine; entries that come out
    integral are returned as ints.
    """
    _check_row(row, n)
    if direction == "forward":
        rr = Fraction(r)
    elif direction == "backward":
        rr = -Fraction(r)
    else:
        raise ValueError("direction must be 'forward' or 'backward', got %r" % (direction,))
    out = []
    for k in range(n + 1):
        acc = sum(Fraction(row[j]) * binomial(n - j, n - k) * rr ** (k - j) for j in range(k + 1))
        out.append(_as_exact(acc))
    return out


def riordan_orthogonality_check(n: int, kmax: int) -> bool:
    """Verify sum_{i=j}^{k} (-1)^(i+j) C(n-i, n-k) C(n-j, n-i) = delta_{kj}.

    This is the inverse-pair kernel: the signed binomial matrix is its own
    two-sided inverse up to the sign conjugation used above.
    """
    if not 0 <= kmax <= n:
        raise ValueError("need 0 <= kmax <= n")
    for k in range(kmax + 1):
        for j in range(k + 1):
            total = sum(
                (-1) ** (i + j) * binomial(n - i, n - k) * binomial(n - j, n - i)
                for i in range(j, k + 1)
            )
            if total != (1 if j == k else 0):
                return False
    return True


def smiley_identities_check(nmax: int) -> bool:
    """Verify the two summation identities tying <<n, k>> to {{n+k, k}}.

    For 1 <= n <= nmax and 0 <= k <= n:

        <<n, k>>   = sum_j (-1)^(k-j) {{n+j+1, j+1}} C(n-j-1, k-j)
        {{n+k, k}} = sum_j <<n, j>> C(n-j-1, k-j-1)

    The binomials run into negative upper arguments (C(-1, 0) = 1 at j = n),
    where the generalized convention of numerics.binomial is essential.
    """
    for n in range(1, nmax + 1):
        for k in range(n + 1):
            lhs1 = classic_second_order(n, k, "standard")
            rhs1 = sum(
                (-1) ** (k - j) * assoc_stirling_subset(n + j + 1, j + 1) * binomial(n - j - 1, k - j)
                for j in range(k + 1)
            )
            if lhs1 != rhs1:
                return False
            lhs2 = assoc_stirling_subset(n + k, k)
            rhs2 = sum(
                classic_second_order(n, j, "standard") * binomial(n - j - 1, k - j - 1)
                for j in range(k + 1)
            )
            if lhs2 != rhs2:
                return False
    return True


@dataclass(frozen=True)
class InversePairParams:
    """Coefficients (alpha n + beta k + gamma, alpha' n + beta' k + gamma') of a
    two-term triangle recurrence

        |n, k| = (alpha n + beta k + gamma) |n-1, k|
               + (alpha' n + beta' k + gamma') |n-1, k-1|  + delta seed.

    The ratio beta'/beta is the weight r under which the triangle's rows sit
    in the general_inverse_transform family: the Eulerian family carries
    r = -1 and the Ward family r = +1, and transforming one family's rows
    with the other's ratio lands exactly on the companion triangle.
    """

    alpha: int
    beta: int
    gamma: int
    alpha_p: int
    beta_p: int
    gamma_p: int

    def __post_init__(self):
        if self.beta == 0:
            raise ValueError("beta must be nonzero for the ratio to exist")

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.beta_p, self.beta)

    def upper_coeff(self, n: int, k: int) -> int:
        return self.alpha * n + self.beta * k + self.gamma

    def diag_coeff(self, n: int, k: int) -> int:
        return self.alpha_p * n + self.beta_p * k + self.gamma_p


def eulerian_pair_params(nu: int, s: int, t: int) -> InversePairParams:
    """The six recurrence coefficients of the nu-order (s,t)-Eulerian triangle."""
    return InversePairParams(0, 1, s, nu, -1, t + 1 - nu)


def ward_pair_params(nu: int, s: int, t: int) -> InversePairParams:
    """The six recurrence coefficients of the nu-order (s,t)-Ward triangle."""
    return InversePairParams(0, 1, s, nu, 1, s + t - 1 - nu)


def pair_rows(pair: InversePairParams, nmax: int) -> tuple:
    """Rows of the triangle a given coefficient sextuple generates."""
    return recurrence_rows(nmax, pair.upper_coeff, pair.diag_coeff)
