"""Exact rationals and the small amount of elementary number theory the
rest of the package needs.

All inputs here are tiny (generators and wave indices of a partition
problem), so factorization is plain trial division.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

# Always in lowest terms with a positive denominator; 0 is 0/1.
Rational = Fraction


def format_rational(x: Fraction | int) -> str:
    """Canonical ``p/q`` string; ``q`` is omitted when it is 1."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def binomial(n: int, k: int) -> int:
    """n choose k, with the convention that it is 0 for k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial expects nonnegative arguments")
    return math.comb(n, k)


def multinomial(k: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {list(parts)}")
    if sum(parts) != k:
        raise ValueError(f"parts {list(parts)} do not sum to {k}")
    out = math.factorial(k)
    for p in parts:
        out //= math.factorial(p)
    return out


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def mobius(n: int) -> int:
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def totient(n: int) -> int:
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("divisors expects a positive integer")
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def divisor_set(d: Iterable[int]) -> list[int]:
    """Every positive integer dividing at least one element of ``d``."""
    d = list(d)
    if not d:
        raise ValueError("divisor_set needs at least one generator")
    out: set[int] = set()
    for x in set(d):
        out.update(divisors(x))
    return sorted(out)


def lcm(values: Iterable[int]) -> int:
    return math.lcm(*values)
