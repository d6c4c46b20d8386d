"""Ground-truth partition counts, computed two unrelated ways.

``dp_count`` is the in-place coin-change recurrence; ``series_count``
multiplies out the truncated product of geometric series
``prod_i 1 / (1 - x**d_i)`` by explicit convolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def _check(d: Sequence[int]) -> None:
    if not d:
        raise ValueError("need at least one generator")
    if any(x < 1 for x in d):
        raise ValueError(f"generators must be positive integers, got {list(d)}")


@dataclass(frozen=True)
class DenumerantTable:
    d: tuple[int, ...]
    s_max: int
    counts: tuple[int, ...]

    def __getitem__(self, s: int) -> int:
        return self.counts[s]


def dp_count(s_max: int, d: Sequence[int]) -> DenumerantTable:
    _check(d)
    if s_max < 0:
        raise ValueError("s_max must be nonnegative")
    counts = [0] * (s_max + 1)
    counts[0] = 1
    for di in d:
        for t in range(di, s_max + 1):
            counts[t] += counts[t - di]
    return DenumerantTable(tuple(d), s_max, tuple(counts))


def series_count(s_max: int, d: Sequence[int]) -> list[int]:
    _check(d)
    if s_max < 0:
        raise ValueError("s_max must be nonnegative")
    product = [1] + [0] * s_max
    for di in d:
        geometric = [1 if n % di == 0 else 0 for n in range(s_max + 1)]
        product = [
            sum(product[k] * geometric[n - k] for k in range(n + 1) if geometric[n - k])
            for n in range(s_max + 1)
        ]
    return product
