"""Sylvester waves of the restricted partition function ``W(s, d)``.

``W(s, d)`` counts the ways to write ``s`` as a nonnegative integer
combination of the generators ``d``. It splits into waves ``W_j``, one per
``j`` dividing some generator. ``W_1`` is a polynomial in ``s``. Every
other ``W_j`` is a period-``j`` quasipolynomial: a weighted sum of the
polynomial part with shifted arguments, the weights being prime circulators.

Each wave is built from the generator split for ``j``:

    divisible     generators that j divides        (k_j of them)
    nondivisible  the rest                         (m - k_j of them)
    modified      divisible + [j * x for x in nondivisible]

The shift vectors ``r`` range over ``{0..j-1}^(m-k_j)`` and enter only
through the dot product ``r . nondivisible``, so they are enumerated as
a multiset of shift values.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from sylvester.arith import binomial, divisor_set, lcm
from sylvester.bernoulli import hob_poly
from sylvester.circulators import psi
from sylvester.poly import Poly, poly_eval, poly_shift

DEFAULT_CAP = 10**7


class EnumerationCapExceeded(RuntimeError):
    """Raised when a wave would need more shift vectors than the cap allows."""

    def __init__(self, j: int, dims: int, cap: int):
        self.j = j
        self.dims = dims
        self.count = j**dims
        self.cap = cap
        super().__init__(
            f"wave j={j} needs {j}^{dims} = {self.count} shift vectors, "
            f"above the enumeration cap {cap}"
        )


@dataclass(frozen=True)
class GeneratorSet:
    d: tuple[int, ...]

    def __post_init__(self):
        d = tuple(self.d)
        if not d:
            raise ValueError("need at least one generator")
        for x in d:
            if isinstance(x, bool) or not isinstance(x, int) or x < 1:
                raise ValueError(f"generators must be positive integers, got {x!r}")
        object.__setattr__(self, "d", d)

    @classmethod
    def of(cls, d: Iterable[int]) -> GeneratorSet:
        return cls(tuple(d))

    @property
    def m(self) -> int:
        return len(self.d)

    @property
    def s_m(self) -> int:
        return sum(self.d)

    @property
    def pi_m(self) -> int:
        return math.prod(self.d)

    @property
    def period(self) -> int:
        return lcm(self.d)

    def wave_indices(self) -> list[int]:
        return divisor_set(self.d)

    def split(self, j: int) -> WaveSplit:
        if j < 2:
            raise ValueError("wave index must be at least 2; j=1 is the polynomial part")
        divisible = tuple(x for x in self.d if x % j == 0)
        if not divisible:
            raise ValueError(f"j={j} divides none of the generators {list(self.d)}")
        return WaveSplit(j, divisible, tuple(x for x in self.d if x % j))


@dataclass(frozen=True)
class WaveSplit:
    j: int
    divisible: tuple[int, ...]
    nondivisible: tuple[int, ...]

    @property
    def k_j(self) -> int:
        return len(self.divisible)

    @property
    def modified(self) -> tuple[int, ...]:
        return self.divisible + tuple(self.j * x for x in self.nondivisible)


@dataclass(frozen=True)
class QuasiPoly:
    period: int
    classes: tuple[Poly, ...]

    def __post_init__(self):
        classes = tuple(self.classes)
        if self.period < 1 or len(classes) != self.period:
            raise ValueError(f"period {self.period} with {len(classes)} classes")
        object.__setattr__(self, "classes", classes)

    def __call__(self, s: int) -> Fraction:
        return eval_quasipoly(self, s)

    @property
    def degree(self) -> int:
        return max(p.degree for p in self.classes)

    def lift(self, period: int) -> QuasiPoly:
        if period % self.period:
            raise ValueError(f"{period} is not a multiple of {self.period}")
        return QuasiPoly(period, tuple(self.classes[c % self.period] for c in range(period)))

    def __add__(self, other: QuasiPoly) -> QuasiPoly:
        L = math.lcm(self.period, other.period)
        a, b = self.lift(L), other.lift(L)
        return QuasiPoly(L, tuple(x + y for x, y in zip(a.classes, b.classes)))


def eval_quasipoly(q: QuasiPoly, s: int) -> Fraction:
    return poly_eval(q.classes[s % q.period], s)


def _check_cap(j: int, dims: int, cap: int) -> None:
    if j**dims > cap:
        raise EnumerationCapExceeded(j, dims, cap)


def _shift_counts(split: WaveSplit, offset: int) -> Counter:
    """Multiset of ``offset + r . nondivisible`` over all shift vectors ``r``."""
    dist = Counter({offset: 1})
    for x in split.nondivisible:
        nxt: Counter = Counter()
        for h, c in dist.items():
            for r in range(split.j):
                nxt[h + r * x] += c
        dist = nxt
    return dist


def _combine(terms: Iterable[tuple[Fraction | int, Poly]], size: int) -> Poly:
    out = [Fraction(0)] * size
    for w, p in terms:
        if w == 0:
            continue
        for k, c in enumerate(p.coeffs):
            out[k] += w * c
    return Poly(out)


def _wave_factor(split: WaveSplit, g: GeneratorSet) -> Fraction:
    return Fraction(
        split.j**split.k_j, split.j**g.m * math.factorial(g.m - 1) * g.pi_m
    )


def wave1(g: GeneratorSet) -> Poly:
    """Polynomial part ``B_{m-1}^(m)(s + s_m, d) / ((m-1)! pi_m)``."""
    base = poly_shift(hob_poly(g.m - 1, g.d), g.s_m)
    return base * Fraction(1, math.factorial(g.m - 1) * g.pi_m)


def _shifted_by_residue(split: WaveSplit, g: GeneratorSet) -> dict[int, Poly]:
    """Sum of ``B_{m-1}(s + h, modified)`` over shift values ``h``, grouped
    by ``h mod j``."""
    base = hob_poly(g.m - 1, split.modified)
    groups: dict[int, list] = {}
    for h, count in _shift_counts(split, g.s_m).items():
        groups.setdefault(h % split.j, []).append((count, poly_shift(base, h)))
    return {res: _combine(terms, g.m) for res, terms in groups.items()}


def wave_j(j: int, g: GeneratorSet, cap: int = DEFAULT_CAP) -> QuasiPoly:
    """Wave ``W_j`` as circulator-weighted shifts of one higher-order
    Bernoulli polynomial on the modified generator set."""
    split = g.split(j)
    _check_cap(j, g.m - split.k_j, cap)
    factor = _wave_factor(split, g)
    by_res = _shifted_by_residue(split, g)
    classes = []
    for c in range(j):
        terms = [(factor * psi(j, c + res), p) for res, p in by_res.items()]
        classes.append(_combine(terms, g.m))
    return QuasiPoly(j, tuple(classes))


def wave_j_reference(j: int, g: GeneratorSet, cap: int = DEFAULT_CAP) -> QuasiPoly:
    """Wave ``W_j`` from the truncated double sum: ``n`` runs only to
    ``k_j - 1`` and the inner factor is a scalar per residue class."""
    split = g.split(j)
    m, k = g.m, split.k_j
    _check_cap(j, m - k, cap)
    factor = _wave_factor(split, g)
    dist = _shift_counts(split, g.s_m)
    outer = [
        poly_shift(hob_poly(n, split.divisible), g.s_m) * binomial(m - 1, n)
        for n in range(k)
    ]
    inner_polys = (
        [hob_poly(m - n - 1, [j * x for x in split.nondivisible]) for n in range(k)]
        if split.nondivisible
        else None
    )

    def inner(n: int, c: int) -> Fraction:
        if inner_polys is None:
            # empty generator set: B_nu^(0)(0) is 1 for nu = 0, else 0
            return Fraction(psi(j, c + g.s_m)) if m - n - 1 == 0 else Fraction(0)
        return sum(
            (count * poly_eval(inner_polys[n], h - g.s_m) * psi(j, c + h)
             for h, count in dist.items()),
            Fraction(0),
        )

    classes = []
    for c in range(j):
        terms = [(factor * inner(n, c), outer[n]) for n in range(k)]
        classes.append(_combine(terms, m))
    return QuasiPoly(j, tuple(classes))


def unit_weight_lhs(j: int, g: GeneratorSet, cap: int = DEFAULT_CAP) -> Poly:
    """``wave_j`` with every circulator weight replaced by 1."""
    split = g.split(j)
    _check_cap(j, g.m - split.k_j, cap)
    factor = _wave_factor(split, g)
    by_res = _shifted_by_residue(split, g)
    return _combine(((factor, p) for p in by_res.values()), g.m)


def sylvester_waves(g: GeneratorSet, cap: int = DEFAULT_CAP) -> dict[int, QuasiPoly]:
    """All waves keyed by ``j``; ``1`` is the polynomial part as period 1."""
    waves = {1: QuasiPoly(1, (wave1(g),))}
    for j in g.wave_indices():
        if j > 1:
            waves[j] = wave_j(j, g, cap)
    return waves


def assemble(waves: Mapping[int, QuasiPoly], period: int) -> QuasiPoly:
    classes = []
    for c in range(period):
        terms = [(1, w.classes[c % w.period]) for w in waves.values()]
        size = max(len(p.coeffs) for _, p in terms) or 1
        classes.append(_combine(terms, size))
    return QuasiPoly(period, tuple(classes))


def partition_quasipoly(g: GeneratorSet, cap: int = DEFAULT_CAP) -> QuasiPoly:
    """``W(s, d)`` as a quasipolynomial of period ``lcm(d)``."""
    return assemble(sylvester_waves(g, cap), g.period)


def sigma(
    nu: int,
    s: int,
    t,
    d: Sequence[int],
    e: Sequence[int],
    j: int,
    cap: int = DEFAULT_CAP,
) -> Fraction:
    """Circulator-weighted lattice sum
    ``sum_r B_nu^(q)(t + r . d, e) * psi_j(s + r . d)`` over ``r in {0..j-1}^mu``.

    Vanishes for ``0 <= nu < len(d)`` whenever ``j`` divides no element of ``d``.
    """
    if j < 2:
        raise ValueError("j must be at least 2")
    if not d or not e:
        raise ValueError("d and e must be non-empty")
    if any(x % j == 0 for x in d):
        raise ValueError(f"j={j} must not divide any of {list(d)}")
    _check_cap(j, len(d), cap)
    t = Fraction(t)
    B = hob_poly(nu, e)
    total = Fraction(0)
    for r in itertools.product(range(j), repeat=len(d)):
        h = sum(ri * di for ri, di in zip(r, d))
        total += poly_eval(B, t + h) * psi(j, s + h)
    return total


def quasipoly_to_json(
    g: GeneratorSet,
    q: QuasiPoly,
    waves: Mapping[int, QuasiPoly] | None = None,
) -> dict:
    def shape(x: QuasiPoly) -> dict:
        return {
            "generators": list(g.d),
            "period": x.period,
            "degree_bound": g.m - 1,
            "classes": [p.to_json() for p in x.classes],
        }

    out = shape(q)
    if waves is not None:
        out["waves"] = {str(j): shape(w) for j, w in sorted(waves.items())}
    return out


def quasipoly_from_json(data: Mapping) -> tuple[GeneratorSet, QuasiPoly, dict[int, QuasiPoly] | None]:
    def parse(x: Mapping) -> QuasiPoly:
        return QuasiPoly(int(x["period"]), tuple(Poly.from_json(c) for c in x["classes"]))

    g = GeneratorSet.of(data["generators"])
    waves = None
    if "waves" in data:
        waves = {int(j): parse(w) for j, w in data["waves"].items()}
    return g, parse(data), waves


def format_quasipoly(q: QuasiPoly) -> str:
    return "\n".join(f"s = {c} mod {q.period}: {p}" for c, p in enumerate(q.classes))

