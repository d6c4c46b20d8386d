"""Bernoulli numbers, Bernoulli polynomials and Norlund's higher-order
Bernoulli polynomials ``B_n^(m)(x, d)``.

The higher-order polynomials are generated by

    exp(x t) * prod_i d_i t / (exp(d_i t) - 1) = sum_n B_n^(m)(x, d) t^n / n!

and the constant terms ``B_n^(m)(0, d)`` are obtained by binomial
convolution of the scaled sequences ``B_k d_i^k``, one per generator.
Generators may be rationals here; the wave code only ever passes integers.
"""

from __future__ import annotations

import itertools
import threading
from fractions import Fraction
from typing import Sequence

from sylvester.arith import binomial
from sylvester.poly import Poly, poly_add, poly_shift

_numbers: list[Fraction] = [Fraction(1)]
_numbers_lock = threading.Lock()

# sorted generator tuple -> B_n^(m)(0, d) for n = 0..len-1
_hob_cache: dict[tuple[Fraction, ...], tuple[Fraction, ...]] = {}


def bernoulli_numbers(N: int) -> list[Fraction]:
    """B_0..B_N with B_1 = -1/2, from sum_{k<=n} C(n+1, k) B_k = 0."""
    global _numbers
    if N < 0:
        raise ValueError("N must be nonnegative")
    known = _numbers
    if len(known) <= N:
        with _numbers_lock:
            known = list(_numbers)
            for n in range(len(known), N + 1):
                acc = sum(binomial(n + 1, k) * known[k] for k in range(n))
                known.append(-acc / (n + 1))
            _numbers = known
    return known[: N + 1]


def bernoulli_poly(n: int) -> Poly:
    B = bernoulli_numbers(n)
    return Poly(binomial(n, k) * B[n - k] for k in range(n + 1))


def _binomial_convolve(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    return [
        sum(binomial(n, k) * a[k] * b[n - k] for k in range(n + 1))
        for n in range(min(len(a), len(b)))
    ]


def _key(d: Sequence) -> tuple[Fraction, ...]:
    if len(d) == 0:
        raise ValueError("need at least one generator")
    key = tuple(sorted(Fraction(x) for x in d))
    if key[0] <= 0:
        raise ValueError(f"generators must be positive, got {list(d)}")
    return key


def hob_constants(n_max: int, d: Sequence) -> list[Fraction]:
    """``B_n^(m)(0, d)`` for ``n = 0..n_max``."""
    key = _key(d)
    cached = _hob_cache.get(key)
    if cached is not None and len(cached) > n_max:
        return list(cached[: n_max + 1])

    B = bernoulli_numbers(n_max)
    seq: list[Fraction] | None = None
    for di in key:
        scaled = [B[k] * di**k for k in range(n_max + 1)]
        seq = scaled if seq is None else _binomial_convolve(seq, scaled)
    # The memo table is only written with finished values.
    cached = _hob_cache.get(key)
    if cached is None or len(cached) < len(seq):
        _hob_cache[key] = tuple(seq)
    return seq


def hob_poly(n: int, d: Sequence) -> Poly:
    """``B_n^(m)(x, d) = sum_k C(n, k) B_{n-k}^(m)(0, d) x^k`` (monic, degree n)."""
    const = hob_constants(n, d)
    return Poly(binomial(n, k) * const[n - k] for k in range(n + 1))


def multiplication_sum(k: int, d: Sequence, scale_factors: Sequence[int]) -> Poly:
    """Lattice sum of shifted ``B_k^(m)(s, d)`` appearing in the multiplication
    theorem: sum over ``0 <= r_i < m_i`` of ``B_k^(m)(s + sum_i r_i d_i / m_i, d)``.

    ``scale_factors[i]`` is ``m_i`` and applies to ``d[i]``.
    """
    if len(scale_factors) > len(d):
        raise ValueError("more scale factors than generators")
    if any(mi < 1 for mi in scale_factors):
        raise ValueError("scale factors must be positive")
    base = hob_poly(k, d)
    steps = [Fraction(d[i]) / mi for i, mi in enumerate(scale_factors)]
    total = Poly()
    for r in itertools.product(*(range(mi) for mi in scale_factors)):
        h = sum((ri * st for ri, st in zip(r, steps)), Fraction(0))
        total = poly_add(total, poly_shift(base, h))
    return total


def multiplication_rhs(k: int, d: Sequence, scale_factors: Sequence[int]) -> Poly:
    """Right-hand side of the multiplication theorem:
    ``(prod m_i) * B_k^(m)(s, {d_1/m_1, ..., d_p/m_p, d_{p+1}, ...})``."""
    if len(scale_factors) > len(d):
        raise ValueError("more scale factors than generators")
    scaled = [Fraction(x) for x in d]
    factor = 1
    for i, mi in enumerate(scale_factors):
        scaled[i] /= mi
        factor *= mi
    return hob_poly(k, scaled) * factor
