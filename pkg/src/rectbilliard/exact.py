"""Exact rationals and the number theory behind orbit counting.

``Rational`` is :class:`fractions.Fraction`: arbitrary-precision, always
stored in lowest terms with a positive denominator, so structural equality
is value equality.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import List

from .errors import BilliardError, ConsistencyError

Rational = Fraction

# Residual bound for the cosine-sum totient, enforced up to DFT_CHECK_LIMIT.
DFT_TOLERANCE = 1e-6
DFT_CHECK_LIMIT = 10_000

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"A/B"`` or an integer literal. Decimal and float forms are refused."""
    match = _RATIONAL_RE.match(str(text))
    if match is None:
        raise BilliardError(f"not a rational of the form A/B or an integer: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise BilliardError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two non-negative integers; ``gcd(0, 0) == 0``."""
    if a < 0 or b < 0:
        raise BilliardError(f"gcd expects non-negative integers, got ({a}, {b})")
    return math.gcd(a, b)


def coprime(a: int, b: int) -> bool:
    return math.gcd(a, b) == 1


def prime_factors(n: int) -> List[int]:
    """Distinct prime factors of ``n`` by trial division, ascending."""
    if n < 1:
        raise BilliardError(f"prime_factors expects a positive integer, got {n}")
    primes = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        primes.append(n)
    return primes


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BilliardError(f"totient is defined for positive integers, got {n!r}")


def totient_product(n: int) -> int:
    """Euler's product formula, evaluated in integers: n * prod (p - 1) / p."""
    _check_positive(n)
    result = n
    for p in prime_factors(n):
        result = result // p * (p - 1)
    return result


def totient_dft(n: int) -> int:
    """Totient from the gcd-weighted cosine sum over k = 1..n.

    The sum is an integer in exact arithmetic; the float result is rounded and,
    for n up to ``DFT_CHECK_LIMIT``, the rounding residual must stay below
    ``DFT_TOLERANCE``.
    """
    _check_positive(n)
    total = math.fsum(math.gcd(k, n) * math.cos(2.0 * math.pi * k / n) for k in range(1, n + 1))
    value = round(total)
    if n <= DFT_CHECK_LIMIT and abs(total - value) >= DFT_TOLERANCE:
        raise ConsistencyError(f"cosine-sum totient for N={n} drifted: {total!r}")
    return int(value)


def totient_bruteforce(n: int) -> int:
    _check_positive(n)
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def totatives(n: int) -> List[int]:
    """All k in 1..n with gcd(k, n) == 1, ascending."""
    _check_positive(n)
    return [k for k in range(1, n + 1) if math.gcd(k, n) == 1]


TOTIENT_METHODS = {
    "product": totient_product,
    "dft": totient_dft,
    "brute": totient_bruteforce,
}
