"""Exact integer and rational arithmetic primitives.

Everything downstream (cycle conversions, the super-number identities, the
lunar error function) is exact integer or rational arithmetic; floating
point never enters an identity check.  Rationals are ``fractions.Fraction``
(always in lowest terms, positive denominator).  Least common multiples are
computed by merging prime factorizations rather than by repeated pairwise
``a*b//gcd`` so that every LCM in the model is auditable against the prime
tables it came from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Exact rational type used throughout the package.
Rational = Fraction

#: All inputs the model factorizes fit in a signed 64-bit word; results
#: beyond this bound are reported as overflow, never wrapped.
INT63_MAX = 2**63 - 1


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """A multiset of (prime, multiplicity) pairs, primes strictly increasing.

    The represented integer is the product of ``prime**multiplicity`` over
    all entries; the empty factorization represents 1.
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        last = 1
        for prime, mult in self.factors:
            if prime <= last:
                raise ValueError(f"primes must be strictly increasing, got {prime} after {last}")
            if not is_prime(prime):
                raise ValueError(f"{prime} is not prime")
            if mult < 1:
                raise ValueError(f"multiplicity of {prime} must be >= 1, got {mult}")
            last = prime

    @property
    def value(self) -> int:
        n = 1
        for prime, mult in self.factors:
            n *= prime**mult
        return n

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for prime, mult in self.factors:
            parts.append(f"{prime}^{mult}" if mult > 1 else str(prime))
        return " × ".join(parts)


def factorize(n: int) -> Factorization:
    """Factor ``n`` by trial division (1 <= n <= 2**63 - 1).

    Trial division is deliberate: every period in the model factors into
    primes below 100, so the loop terminates almost immediately on the
    inputs the model cares about.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}: need a positive integer")
    if n > INT63_MAX:
        raise ValueError(f"{n} exceeds the 63-bit input bound")
    factors = []
    remaining = n
    for p in (2, 3):
        mult = 0
        while remaining % p == 0:
            remaining //= p
            mult += 1
        if mult:
            factors.append((p, mult))
    d = 5
    while d * d <= remaining:
        mult = 0
        while remaining % d == 0:
            remaining //= d
            mult += 1
        if mult:
            factors.append((d, mult))
        d += 2 if d % 6 == 5 else 4  # skip multiples of 2 and 3
    if remaining > 1:
        factors.append((remaining, 1))
    return Factorization(tuple(factors))


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two non-negative integers; gcd(0, b) = b."""
    if a < 0 or b < 0:
        raise ValueError("gcd arguments must be non-negative")
    return math.gcd(a, b)


def lcm_factorization(values: list[int] | tuple[int, ...]) -> Factorization:
    """LCM of positive integers as a merged factorization (max multiplicity per prime)."""
    if not values:
        raise ValueError("lcm of an empty list is undefined")
    merged: dict[int, int] = {}
    for v in values:
        if v < 1:
            raise ValueError(f"lcm arguments must be >= 1, got {v}")
        for prime, mult in factorize(v).factors:
            if mult > merged.get(prime, 0):
                merged[prime] = mult
    return Factorization(tuple(sorted(merged.items())))


def lcm_many(values: list[int] | tuple[int, ...]) -> int:
    """Exact LCM via factorization merge; overflow past 2**63 - 1 is an error."""
    result = lcm_factorization(values).value
    if result > INT63_MAX:
        raise OverflowError(f"lcm {result} exceeds 2**63 - 1")
    return result


def euclid_div(n: int, d: int) -> tuple[int, int]:
    """Euclidean division: n = d*q + r with 0 <= r < d."""
    if d == 0:
        raise ZeroDivisionError("euclid_div by zero")
    if d < 0:
        raise ValueError(f"divisor must be positive, got {d}")
    if n < 0:
        raise ValueError(f"dividend must be non-negative, got {n}")
    return divmod(n, d)


def round_nearest(r: Rational | int) -> int:
    """Nearest integer to ``r``; exact halves round away from zero."""
    f = Fraction(r)
    n, d = f.numerator, f.denominator
    if n >= 0:
        return (2 * n + d) // (2 * d)
    return -((2 * -n + d) // (2 * d))


def decimal_str(r: Rational | int, places: int) -> str:
    """Exact decimal rendering of a rational, rounded to ``places`` digits.

    Rounding matches :func:`round_nearest` (half away from zero) applied at
    the last printed digit, e.g. 4429/150 -> "29.526667" at 6 places.
    """
    if places < 0:
        raise ValueError("places must be >= 0")
    scaled = round_nearest(Fraction(r) * 10**places)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"
