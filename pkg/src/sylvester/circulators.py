"""The prime circulator: the sum of rho**s over the primitive j-th roots of
unity rho.

This is Ramanujan's sum, evaluated exactly as
``sum_{k | gcd(j, s)} mobius(j / k) * k``. The complex-exponential
definition is kept only as a floating-point cross-check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from sylvester.arith import divisors, mobius, totient


@lru_cache(maxsize=None)
def _psi_table(j: int) -> tuple[int, ...]:
    return tuple(
        sum(mobius(j // k) * k for k in divisors(math.gcd(j, c)))
        for c in range(j)
    )


def psi(j: int, s: int) -> int:
    """Prime circulator of period ``j`` at integer ``s`` (any sign)."""
    if j < 1:
        raise ValueError("period must be positive")
    return _psi_table(j)[s % j]


@dataclass(frozen=True)
class CirculatorTable:
    j: int
    values: tuple[int, ...]

    @classmethod
    def build(cls, j: int) -> CirculatorTable:
        if j < 1:
            raise ValueError("period must be positive")
        return cls(j, _psi_table(j))

    def __call__(self, s: int) -> int:
        return self.values[s % self.j]


def psi_float_check(j: int) -> float:
    """Largest deviation between ``psi`` and the literal sum of complex
    exponentials ``exp(2 pi i n s / j)`` over ``n`` coprime to ``j``."""
    if j < 1:
        raise ValueError("period must be positive")
    roots = [n for n in range(j) if math.gcd(n, j) == 1]
    assert len(roots) == totient(j)
    worst = 0.0
    for s in range(j):
        total = sum(cmath.exp(2j * math.pi * n * s / j) for n in roots)
        worst = max(worst, abs(total - psi(j, s)))
    return worst
