"""Finite-support series in t with nonnegative rational exponents, their
quotient field, and the twisted multiplication built from a coefficient
automorphism.

A SeriesPoly is a finite map {exponent -> nonzero coefficient}; a
SeriesElement is a quotient of two such polynomials, compared by
cross-multiplication (no gcd normalization exists here, since exponents are
rationals and coefficients may sit in any base field).  The valuation of a
nonzero element is min-exponent(numerator) - min-exponent(denominator);
the zero element has valuation INFINITY.

TwistContext implements the multiplication

    x (*) y  =  x * sigma^lam(x)(y),   lam(x) = (N * v(x)) mod ord(sigma)

on elements whose exponents lie in (1/N) * Z.  It is left distributive and
has unique left and right division, but is not right distributive unless
sigma is the identity.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import kernels
from .fields import QQ
from .values import INFINITY

# scaled-exponent keys recur constantly within one lattice, so memoize the
# Fraction construction; bounded to keep pathological exponent streams harmless
_EXP_CACHE = {}


def _exp_frac(e, scale):
    key = (e, scale)
    f = _EXP_CACHE.get(key)
    if f is None:
        if len(_EXP_CACHE) > 1 << 16:
            _EXP_CACHE.clear()
        f = _EXP_CACHE[key] = Fraction(e, scale)
    return f


class SeriesPoly:
    """Finite-support series with exponents in Q>=0."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=()):
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for e, c in items:
            e = Fraction(e)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if c == field.zero:
                continue
            if e in clean:
                c = field.add(clean[e], c)
                if c == field.zero:
                    del clean[e]
                    continue
            clean[e] = c
        self.field = field
        self.terms = clean

    @classmethod
    def _raw(cls, field, terms):
        obj = object.__new__(cls)
        obj.field = field
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, field):
        return cls._raw(field, {})

    @classmethod
    def one(cls, field):
        return cls._raw(field, {Fraction(0): field.one})

    @classmethod
    def constant(cls, field, c):
        return cls(field, [(Fraction(0), c)])

    @classmethod
    def monomial(cls, field, exp, coeff=None):
        if coeff is None:
            coeff = field.one
        return cls(field, [(exp, coeff)])

    def is_zero(self):
        return not self.terms

    def min_exponent(self):
        """Least exponent with nonzero coefficient; None for the zero poly."""
        return min(self.terms) if self.terms else None

    def _check(self, other):
        if not isinstance(other, SeriesPoly):
            raise TypeError(f"expected SeriesPoly, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError("series over different coefficient fields")

    def __add__(self, other):
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = F.add(out[e], c)
                if s == F.zero:
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return SeriesPoly._raw(F, out)

    def __neg__(self):
        F = self.field
        return SeriesPoly._raw(F, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        F = self.field
        if F is QQ and self.terms and other.terms:
            # rational coefficients add and multiply natively and have a
            # falsy zero, so the convolution can run in the kernel over
            # integer-scaled exponents (no Fraction hashing per key)
            scale = 1
            for e in self.terms:
                scale = scale * e.denominator // math.gcd(scale, e.denominator)
            for e in other.terms:
                scale = scale * e.denominator // math.gcd(scale, e.denominator)
            a = [(int(e * scale), c) for e, c in self.terms.items()]
            b = [(int(e * scale), c) for e, c in other.terms.items()]
            out = kernels.series_mul(a, b)
            return SeriesPoly._raw(F, {_exp_frac(e, scale): c for e, c in out.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                c = F.mul(c1, c2)
                if e in out:
                    s = F.add(out[e], c)
                    if s == F.zero:
                        del out[e]
                    else:
                        out[e] = s
                elif c != F.zero:
                    out[e] = c
        return SeriesPoly._raw(F, out)

    def scale(self, c):
        F = self.field
        if c == F.zero:
            return SeriesPoly.zero(F)
        return SeriesPoly._raw(F, {e: F.mul(c, x) for e, x in self.terms.items()})

    def shift(self, delta):
        """Multiply by t^delta; the result must keep exponents >= 0."""
        delta = Fraction(delta)
        if not self.terms:
            return self
        if self.min_exponent() + delta < 0:
            raise ValueError("shift would create a negative exponent")
        return SeriesPoly._raw(self.field, {e + delta: c for e, c in self.terms.items()})

    def sigma_pow(self, j=1):
        """Apply the coefficient automorphism j times, coefficient-wise."""
        F = self.field
        j %= F.sigma_order
        if j == 0:
            return self
        out = {}
        for e, c in self.terms.items():
            for _ in range(j):
                c = F.sigma(c)
            out[e] = c
        return SeriesPoly._raw(F, out)

    def __eq__(self, other):
        if not isinstance(other, SeriesPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"SeriesPoly({poly_str(self)!r})"


class SeriesElement:
    """Quotient of two SeriesPoly values (denominator nonzero).

    Construction strips the largest common monomial factor t^delta and,
    over the rationals, the common coefficient content; long chains of
    cross-multiplied arithmetic stay small that way without a full
    polynomial gcd."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = SeriesPoly.one(num.field)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.field != den.field:
            raise ValueError("numerator and denominator over different fields")
        if num.is_zero():
            den = SeriesPoly.one(num.field)
        else:
            delta = min(num.min_exponent(), den.min_exponent())
            if delta > 0:
                num = SeriesPoly._raw(num.field, {e - delta: c for e, c in num.terms.items()})
                den = SeriesPoly._raw(den.field, {e - delta: c for e, c in den.terms.items()})
            if num.field is QQ:
                g = l = None
                for poly in (num, den):
                    for c in poly.terms.values():
                        g = c.numerator if g is None else math.gcd(g, c.numerator)
                        l = c.denominator if l is None else math.lcm(l, c.denominator)
                content = Fraction(g, l)
                if content != 1:
                    num = SeriesPoly._raw(num.field, {e: c / content for e, c in num.terms.items()})
                    den = SeriesPoly._raw(den.field, {e: c / content for e, c in den.terms.items()})
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @classmethod
    def zero(cls, field):
        return cls(SeriesPoly.zero(field))

    @classmethod
    def one(cls, field):
        return cls(SeriesPoly.one(field))

    @classmethod
    def constant(cls, field, c):
        return cls(SeriesPoly.constant(field, c))

    @classmethod
    def t_power(cls, field, q):
        """t^q for any rational q (negative exponents go to the denominator)."""
        q = Fraction(q)
        if q >= 0:
            return cls(SeriesPoly.monomial(field, q))
        return cls(SeriesPoly.one(field), SeriesPoly.monomial(field, -q))

    def is_zero(self):
        return self.num.is_zero()

    def valuation(self):
        """min-exponent(num) - min-exponent(den); INFINITY for zero."""
        if self.num.is_zero():
            return INFINITY
        return self.num.min_exponent() - self.den.min_exponent()

    def _coerce(self, other):
        if isinstance(other, SeriesElement):
            if other.field != self.field:
                raise ValueError("elements over different coefficient fields")
            return other
        if isinstance(other, int):
            return SeriesElement.constant(self.field, self.field.from_int(other))
        if isinstance(other, Fraction) and self.field == QQ:
            return SeriesElement.constant(self.field, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return SeriesElement(self.num + o.num, self.den)
        return SeriesElement(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return SeriesElement(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SeriesElement(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero series")
        return SeriesElement(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def sigma_pow(self, j=1):
        return SeriesElement(self.num.sigma_pow(j), self.den.sigma_pow(j))

    def in_lattice(self, n):
        """True when every exponent of num and den lies in (1/n) * Z."""
        for poly in (self.num, self.den):
            for e in poly.terms:
                if (e * n).denominator != 1:
                    return False
        return True

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"SeriesElement({series_str(self)!r})"


def sigma_extend(x, j=1):
    """Coefficient-wise automorphism on a SeriesPoly or SeriesElement."""
    return x.sigma_pow(j)


class TwistContext:
    """Twisted multiplication on series elements with exponents in (1/N)Z.

    N is the exponent denominator bound; the twist exponent of a nonzero x
    is lam(x) = (N * v(x)) mod ord(sigma), an integer because N * v(x) is.
    """

    def __init__(self, field, exponent_denominator):
        n = int(exponent_denominator)
        if n < 1:
            raise ValueError("exponent denominator bound must be >= 1")
        self.field = field
        self.N = n

    @property
    def sigma_order(self):
        return self.field.sigma_order

    def check_element(self, x):
        if not isinstance(x, SeriesElement) or x.field != self.field:
            raise ValueError("element does not belong to this context")
        if not x.in_lattice(self.N):
            raise ValueError(
                f"exponents outside the (1/{self.N})Z lattice of this context"
            )
        return x

    def twist_exponent(self, x):
        """lam(x) for nonzero x."""
        self.check_element(x)
        if x.is_zero():
            raise ZeroDivisionError("twist exponent of zero")
        return int(self.N * x.valuation()) % self.sigma_order

    def multiply(self, x, y):
        """x (*) y = x * sigma^lam(x)(y)."""
        self.check_element(x)
        self.check_element(y)
        if x.is_zero() or y.is_zero():
            return SeriesElement.zero(self.field)
        return x * y.sigma_pow(self.twist_exponent(x))

    def left_divide(self, a, b):
        """The unique x with a (*) x = b, for nonzero a."""
        self.check_element(a)
        self.check_element(b)
        if a.is_zero():
            raise ZeroDivisionError("left division by zero")
        lam = self.twist_exponent(a)
        return (b / a).sigma_pow((-lam) % self.sigma_order)

    def right_divide(self, a, b):
        """The unique x with x (*) a = b, for nonzero a."""
        self.check_element(a)
        self.check_element(b)
        if a.is_zero():
            raise ZeroDivisionError("right division by zero")
        if b.is_zero():
            return SeriesElement.zero(self.field)
        k = int(self.N * (b.valuation() - a.valuation())) % self.sigma_order
        return b / a.sigma_pow(k)

    def __repr__(self):
        return f"TwistContext({self.field!r}, N={self.N})"


# ---------------------------------------------------------------------------
# text form: parsing and printing ("3*t^{1/2} + t^2 - 1")


def _exp_str(e):
    if e == 0:
        return ""
    if e == 1:
        return "t"
    if e.denominator == 1:
        return f"t^{e}"
    return f"t^{{{e}}}"


def poly_str(p):
    if not p.terms:
        return "0"
    parts = []
    for e in sorted(p.terms):
        c = p.terms[e]
        tpart = _exp_str(e)
        if isinstance(c, Fraction) or isinstance(c, int):
            neg = c < 0
            mag = -c if neg else c
            if tpart and mag == 1:
                body = tpart
            elif tpart:
                body = f"{mag}*{tpart}"
            else:
                body = str(mag)
        else:
            neg = False
            body = f"{c}*{tpart}" if tpart else str(c)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def series_str(x):
    num = poly_str(x.num)
    if x.den == SeriesPoly.one(x.field):
        return num
    den = poly_str(x.den)
    if len(x.num.terms) > 1:
        num = f"({num})"
    # a one-term denominator still needs parentheses when it is a product
    if len(x.den.terms) > 1 or "*" in den or den.startswith("-"):
        den = f"({den})"
    return f"{num}/{den}"


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch == "t":
            tokens.append(("t", None, i))
            i += 1
        elif ch in "+-*/^(){}":
            tokens.append((ch, None, i))
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} at position {i}")
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive descent over +, -, *, /, unary -, t^exponent, parentheses."""

    def __init__(self, text, field):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.field = field

    def peek(self):
        return self.tokens[self.pos][0]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind!r} at position {tok[2]}")
        self.pos += 1
        return tok

    def parse(self):
        x = self.expr()
        if self.peek() != "end":
            tok = self.tokens[self.pos]
            raise ValueError(f"unexpected {tok[0]!r} at position {tok[2]}")
        return x

    def expr(self):
        x = self.term()
        while self.peek() in "+-":
            op = self.take()[0]
            y = self.term()
            x = x + y if op == "+" else x - y
        return x

    def term(self):
        x = self.unary()
        while self.peek() in "*/":
            op = self.take()[0]
            y = self.unary()
            x = x * y if op == "*" else x / y
        return x

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.atom()

    def atom(self):
        kind = self.peek()
        if kind == "int":
            n = self.take()[1]
            return SeriesElement.constant(self.field, self.field.from_int(n))
        if kind == "t":
            self.take()
            if self.peek() == "^":
                self.take()
                return SeriesElement.t_power(self.field, self.exponent())
            return SeriesElement.t_power(self.field, 1)
        if kind == "(":
            self.take()
            x = self.expr()
            self.take(")")
            return x
        tok = self.tokens[self.pos]
        raise ValueError(f"unexpected {tok[0]!r} at position {tok[2]}")

    def exponent(self):
        kind = self.peek()
        if kind == "int":
            return Fraction(self.take()[1])
        if kind in "({":
            closing = ")" if kind == "(" else "}"
            self.take()
            num = self.take("int")[1]
            den = 1
            if self.peek() == "/":
                self.take()
                den = self.take("int")[1]
            self.take(closing)
            return Fraction(num, den)
        tok = self.tokens[self.pos]
        raise ValueError(f"expected exponent at position {tok[2]}")


def parse_series(text, field=QQ):
    """Parse an expression like "3*t^{1/2} + t^2 - 1" into a SeriesElement.

    Fractional exponents need braces or parentheses: t^{1/2}.  A bare
    "t^1/2" parses as (t^1)/2 by the usual precedence.
    """
    return _Parser(text, field).parse()
