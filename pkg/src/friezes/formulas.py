"""Closed-form counts: q-integers, q-binomials, frieze counts by width,
configuration counts, and moduli-space point counts.

Everything is exact arbitrary-precision integer arithmetic.  Divisions are
always exact (the expressions are polynomials in q); a remainder raises
NonIntegralResult because it can only mean an implementation bug.  The
functions accept any integer q >= 2, prime power or not, so the polynomial
identities can be tested on their own; only comparisons against enumeration
need a genuine field size.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import InvalidWidth, NonIntegralResult, OddN


def _exact_div(num: int, den: int) -> int:
    quo, rem = divmod(num, den)
    if rem:
        raise NonIntegralResult(f"{num} not divisible by {den}")
    return quo


def q_int(m: int, base: int) -> int:
    """The q-integer [m] at the given base: 1 + base + ... + base^(m-1)."""
    if m < 0:
        raise ValueError("q-integer needs m >= 0")
    return _exact_div(base**m - 1, base - 1)


def q_binom2(m: int, q: int) -> int:
    """The Gaussian binomial (m choose 2)_q = (q^m-1)(q^(m-1)-1) / ((q-1)(q^2-1))."""
    if m < 1:
        raise ValueError("q-binomial (m choose 2) needs m >= 1")
    return _exact_div((q**m - 1) * (q ** (m - 1) - 1), (q - 1) * (q**2 - 1))


def count_friezes(q: int, char_is_2: bool, w: int) -> int:
    """Number of tame friezes of width w over a field with q elements.

    Even w = 2m-2 gives [m] base q^2.  Odd w = 2m-3 gives (q-1)*(m choose 2)_q
    when the characteristic is odd and m is even, and gains an extra q^(m-1)
    term otherwise.
    """
    if w < 1:
        raise InvalidWidth(f"width must be >= 1, got {w}")
    if w % 2 == 0:
        m = (w + 2) // 2
        return q_int(m, q**2)
    m = (w + 3) // 2
    base = (q - 1) * q_binom2(m, q)
    if not char_is_2 and m % 2 == 0:
        return base
    return base + q ** (m - 1)


def oddwidth_alternating_sum(q: int, m: int) -> int:
    """(q-1)*(m choose 2)_q written as odd powers of q minus even powers:
    sum of q^e over odd e in [m-1, 2m-3] minus sum over even e in [0, m-2]."""
    pos = sum(q**e for e in range(2 * m - 3, m - 2, -2))
    neg_start = m - 2 if (m - 2) % 2 == 0 else m - 3
    neg = sum(q**e for e in range(neg_start, -1, -2))
    return pos - neg


def count_configurations(q: int, n: int) -> int:
    """|C_n|: cyclic tuples of n points of P^1 with adjacent entries distinct,
    which is q^n + (-1)^n q."""
    if n < 2:
        raise ValueError("configurations need n >= 2")
    return q**n + (-1) ** n * q


def count_configurations_by_recursion(q: int, n: int) -> int:
    """|C_n| via c_{n+2} = (q-1) c_{n+1} + q c_n from c_2, c_3 (cross-check)."""
    if n < 2:
        raise ValueError("configurations need n >= 2")
    c_prev, c_cur = q * (q + 1), (q + 1) * q * (q - 1)  # c_2, c_3
    if n == 2:
        return c_prev
    for _ in range(n - 3):
        c_prev, c_cur = c_cur, (q - 1) * c_cur + q * c_prev
    return c_cur


def count_moduli(q: int, n: int) -> int:
    """Number of PGL2 orbits of C_n: [m] base q^2 for n = 2m+1, and
    1 + q*[m-1] base q^2 for n = 2m."""
    if n < 2:
        raise ValueError("moduli count needs n >= 2")
    m, odd = divmod(n, 2)
    if odd:
        return q_int(m, q**2)
    return 1 + q * q_int(m - 1, q**2)


class SignedCounts(NamedTuple):
    plus: int
    minus: int


def count_signed_configurations(q: int, char_is_2: bool, n: int) -> SignedCounts:
    """|C_n^+| and |C_n^-| for even n via the coupled recursion
    c_n^(s) = c_{n-1} + q * c_{n-2}^(-s), from the n = 2 base cases."""
    if n % 2 or n < 2:
        raise OddN(f"signed configuration counts need even n >= 2, got {n}")
    c2 = q * (q + 1)
    plus, minus = (c2, c2) if char_is_2 else (c2, 0)
    for k in range(4, n + 1, 2):
        c_prev = count_configurations(q, k - 1)
        plus, minus = c_prev + q * minus, c_prev + q * plus
    return SignedCounts(plus, minus)


def count_moduli_plus(q: int, char_is_2: bool, m: int) -> int:
    """Number of PGL2 orbits of C_{2m}^+: (m choose 2)_q, plus [m-1]_q + 1
    unless the characteristic is odd and m is even."""
    if m < 1:
        raise ValueError("moduli-plus count needs m >= 1")
    binom = q_binom2(m, q)
    # the same quantity as a geometric sum; a mismatch means a bug
    as_sum = sum(q ** (k - 1) * q_int(m - k, q**2) for k in range(1, m))
    if as_sum != binom:
        raise NonIntegralResult(
            f"q-binomial identity failed at q={q}, m={m}: {as_sum} != {binom}"
        )
    if not char_is_2 and m % 2 == 0:
        return binom
    return binom + q_int(m - 1, q) + 1
