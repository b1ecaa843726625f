"""Valued fields the plane oracles run over.

A handle bundles a field whose elements support the arithmetic operators
(+, -, *, /) with a valuation map, a uniformizer, and seeded samplers.
Two concrete handles: the rationals with a p-adic valuation, and the
finite-support series field with its min-exponent valuation.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ
from .hahn import SeriesElement, SeriesPoly, series_str
from .values import INFINITY


class PadicRationals:
    """Q with the p-adic valuation; elements are Fractions."""

    def __init__(self, p):
        if p < 2:
            raise ValueError(f"bad prime {p}")
        self.p = p
        self.name = f"{p}-adic rationals"
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def is_zero(self, x):
        return x == 0

    def valuation(self, x):
        if x == 0:
            return INFINITY
        p = self.p
        num, den = x.numerator, x.denominator
        v = 0
        while num % p == 0:
            num //= p
            v += 1
        while den % p == 0:
            den //= p
            v -= 1
        return Fraction(v)

    def uniformizer_power(self, q):
        q = Fraction(q)
        if q.denominator != 1:
            raise ValueError(f"p-adic value group is Z; got exponent {q}")
        return Fraction(self.p) ** int(q)

    def random_element(self, rng, allow_zero=True):
        if allow_zero and rng.random() < 0.08:
            return Fraction(0)
        a = rng.randint(1, 30) * rng.choice([1, -1])
        b = rng.randint(1, 30)
        return Fraction(a, b) * Fraction(self.p) ** rng.randint(-2, 3)

    def random_unit(self, rng):
        while True:
            x = self.random_element(rng, allow_zero=False)
            if self.valuation(x) == 0:
                return x

    def element_str(self, x):
        return str(x)

    def __repr__(self):
        return f"PadicRationals({self.p})"


class SeriesRationals:
    """The finite-support series field over a base field, with exponent
    denominators bounded by N for the sampled elements."""

    def __init__(self, base=QQ, exponent_denominator=2):
        self.base = base
        self.N = int(exponent_denominator)
        self.name = f"series over {base.name} (exponents in (1/{self.N})Z)"
        self.zero = SeriesElement.zero(base)
        self.one = SeriesElement.one(base)

    def is_zero(self, x):
        return x.is_zero()

    def valuation(self, x):
        return x.valuation()

    def uniformizer_power(self, q):
        return SeriesElement.t_power(self.base, q)

    def _random_poly(self, rng, max_terms=3, nonzero=False):
        n_terms = rng.randint(1 if nonzero else 0, max_terms)
        terms = []
        for _ in range(n_terms):
            e = Fraction(rng.randint(0, 5), self.N)
            c = self.base.random_nonzero(rng)
            terms.append((e, c))
        poly = SeriesPoly(self.base, terms)
        if nonzero and poly.is_zero():
            return SeriesPoly.one(self.base)
        return poly

    def random_element(self, rng, allow_zero=True):
        num = self._random_poly(rng, nonzero=not allow_zero)
        if rng.random() < 0.35:
            den = self._random_poly(rng, max_terms=2, nonzero=True)
        else:
            den = SeriesPoly.one(self.base)
        return SeriesElement(num, den)

    def random_unit(self, rng):
        x = self.random_element(rng, allow_zero=False)
        return x * SeriesElement.t_power(self.base, -x.valuation())

    def element_str(self, x):
        return series_str(x)

    def __repr__(self):
        return f"SeriesRationals(base={self.base!r}, N={self.N})"
