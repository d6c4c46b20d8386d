"""Dense univariate polynomials over the rationals.

A polynomial is stored as a tuple of coefficients in ascending degree with
trailing zeros stripped, so two equal polynomials always compare equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from sylvester.arith import binomial, format_rational, parse_rational


def _normalize(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _normalize((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(format_rational(c))
            else:
                mono = "s" if k == 1 else f"s^{k}"
                coef = "" if c == 1 else "-" if c == -1 else f"{format_rational(c)}*"
                terms.append(coef + mono)
        return " + ".join(reversed(terms)).replace("+ -", "- ")

    def __add__(self, other):
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return poly_scale(self, -1)

    def __sub__(self, other):
        return poly_add(self, -_coerce(other))

    def __rsub__(self, other):
        return poly_add(_coerce(other), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __call__(self, x):
        return poly_eval(self, x)

    def shift(self, h) -> Poly:
        return poly_shift(self, h)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list[str]) -> Poly:
        return cls(parse_rational(c) for c in data)


def _coerce(x) -> Poly:
    return x if isinstance(x, Poly) else Poly.constant(x)


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    out = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        out[i] += c
    return Poly(out)


def poly_scale(a: Poly, c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return Poly()
    return Poly(x * c for x in a.coeffs)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly()
    out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for k, y in enumerate(b.coeffs):
            out[i + k] += x * y
    return Poly(out)


def poly_eval(a: Poly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def poly_shift(a: Poly, h) -> Poly:
    """The polynomial ``x -> a(x + h)``.

    Each ``c_n (x + h)^n`` is re-expanded as ``sum_k C(n, k) h^(n-k) x^k``.
    """
    h = Fraction(h)
    if h == 0 or a.degree < 1:
        return a
    n_max = a.degree
    hpow = [Fraction(1)]
    for _ in range(n_max):
        hpow.append(hpow[-1] * h)
    out = [Fraction(0)] * (n_max + 1)
    for n, c in enumerate(a.coeffs):
        if c == 0:
            continue
        for k in range(n + 1):
            out[k] += c * binomial(n, k) * hpow[n - k]
    return Poly(out)
