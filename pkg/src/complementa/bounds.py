"""Numeric bound formulas: n(m), the zeta(n) estimate, derived-length bounds,
and the exact order bound for elementary abelian minimal normal subgroups.

The bracketed expressions are exact floors.  m·log2(m) is irrational unless m
is a power of two, so the floating path floors behind a 1e-9 guard band and
powers of two take an exact integer shortcut.  The base-9 logarithm floor is
computed by exact big-integer comparison because (n-2)/8 can be an exact
power of 9^(1/5) (n = 74 gives exactly 15), where any guard band around the
boundary would be wrong.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp

from ._primes import is_prime
from .groups import PreconditionError

GUARD = 1e-9


@dataclass(frozen=True)
class BoundReport:
    """Bounds attached to a supercomplemented cyclic p-subgroup of order m."""

    m: int
    n: int
    zeta_n: int
    d_bound: float
    d_bound_floor: int
    d_bound_general: int
    factorial_bound: int
    q: int | None = None
    prop1: int | None = None

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "zeta": self.zeta_n,
            "d_bound": self.d_bound,
            "d_bound_floor": self.d_bound_floor,
            "d_bound_general": self.d_bound_general,
            "factorial_bound": self.factorial_bound,
            "q": self.q,
            "prop1_bound": self.prop1,
        }


def guarded_floor(value) -> int:
    """Floor of an extended-precision value, rejecting results within the
    guard band of an integer boundary."""
    f = int(mp.floor(value))
    frac = value - f
    if frac < GUARD or frac > 1 - GUARD:
        raise ArithmeticError(f"value {value} is within {GUARD} of an integer boundary")
    return f


def n_of_m(m: int) -> int:
    """floor(m(m-1) + m·log2(m)); 1 when m = 1."""
    if m < 1:
        raise PreconditionError("m must be >= 1")
    if m == 1:
        return 1
    if m & (m - 1) == 0:
        return m * (m - 1) + (m.bit_length() - 1) * m
    with mp.workdps(40):
        return guarded_floor(m * (m - 1) + m * mp.log(m, 2))


def floor_5log9(num: int, den: int) -> int:
    """floor(5·log9(num/den)) by exact integer comparison: the result k is
    the largest integer with 9^k · den^5 <= num^5.  Requires num >= den so
    the search stays in nonnegative exponents."""
    if num <= 0 or den <= 0 or num < den:
        raise PreconditionError("need num >= den > 0")
    k = int(5 * math.log(num / den, 9))
    num5, den5 = num ** 5, den ** 5
    while 9 ** (k + 1) * den5 <= num5:
        k += 1
    while 9 ** k * den5 > num5:
        k -= 1
    return k


def zeta_bound(n: int) -> int:
    """Piecewise upper estimate for the derived length of solvable linear
    groups of degree <= n: 2n for n <= 6, 14 for 7 <= n <= 73, and
    floor(5·log9((n-2)/8) + 10) beyond."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if n <= 6:
        return 2 * n
    if n <= 73:
        return 14
    return floor_5log9(n - 2, 8) + 10


def derived_length_bound(m: int) -> float:
    """Derived-length bound for a group with a supercomplemented cyclic
    p-subgroup of order m: 2, 11, 18 for m = 1, m = 2, 2 < m < 8, and the
    real value 5·log9((n-2)/8) + 13 for m >= 8."""
    if m < 1:
        raise PreconditionError("m must be >= 1")
    if m == 1:
        return 2
    if m == 2:
        return 11
    if m < 8:
        return 18
    n = n_of_m(m)
    return 5 * math.log((n - 2) / 8, 9) + 13


def derived_length_bound_floor(m: int) -> int:
    if m < 8:
        return int(derived_length_bound(m))
    return floor_5log9(n_of_m(m) - 2, 8) + 13


def derived_length_bound_general(m: int) -> int:
    """The general form zeta(n) + 3 with n = 1 for m = 1."""
    return zeta_bound(n_of_m(m)) + 3


def prop1_bound(q: int, m: int) -> int:
    """Exact order bound q^((m-1)m) · m^m for an elementary abelian minimal
    normal q-subgroup; exactly q when m = 1."""
    if not is_prime(q):
        raise PreconditionError(f"{q} is not prime")
    if m < 1:
        raise PreconditionError("m must be >= 1")
    if m == 1:
        return q
    return q ** ((m - 1) * m) * m ** m


def factorial_index_bound(m: int) -> int:
    """m! — index bound for the normal elementary abelian subgroup of a
    p-subgroup."""
    if m < 1:
        raise PreconditionError("m must be >= 1")
    return math.factorial(m)


def bound_report(m: int, q: int | None = None) -> BoundReport:
    d = derived_length_bound(m)
    return BoundReport(
        m=m,
        n=n_of_m(m),
        zeta_n=zeta_bound(n_of_m(m)),
        d_bound=d,
        d_bound_floor=derived_length_bound_floor(m),
        d_bound_general=derived_length_bound_general(m),
        factorial_bound=factorial_index_bound(m),
        q=q,
        prop1=prop1_bound(q, m) if q is not None else None,
    )
