"""Exact arithmetic in the cyclotomic fields Q(zeta_m).

A value is the canonical remainder modulo the m-th cyclotomic polynomial,
stored as an integer coefficient vector over a single positive denominator,
gcd-reduced.  Equality is therefore a plain tuple comparison, and every
identity asserted elsewhere (weight formulas, slope bookkeeping, the local
rebalancing identities) is decided exactly.

The trigonometric constants sin(k*pi/n) and cos(k*pi/n) are represented in
the field of index m = 4n, where zeta^n is the imaginary unit:

    sin(k*pi/n) = (zeta^(2k) - zeta^(-2k)) / (2 * zeta^n)
    cos(k*pi/n) = (zeta^(2k) + zeta^(-2k)) / 2

Floating-point evaluation exists for reporting only; it never decides
equality or sign on its own.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath

from .kernels import poly_mul, poly_rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, ascending degree, monic over the integers.

    Computed by dividing x^m - 1 by Phi_d for every proper divisor d of m.
    """
    if m < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _divexact(a, b):
    # exact quotient of integer polynomials, b monic
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for k in range(db + 1):
                a[i - db + k] -= c * b[k]
    if any(a):
        raise ArithmeticError("polynomial division was not exact")
    return q


@lru_cache(maxsize=None)
def _phi_list(m):
    return list(cyclotomic_polynomial(m))


def _normalize(num, den):
    while num and num[-1] == 0:
        num.pop()
    if not num:
        return (), 1
    g = den
    for c in num:
        g = math.gcd(g, c)
        if g == 1:
            break
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CycloNumber:
    """Element of Q(zeta_m).  Immutable; hashable; exact."""

    __slots__ = ("m", "num", "den")

    def __init__(self, m, coeffs=()):
        if m < 1:
            raise ValueError(f"cyclotomic index must be >= 1, got {m}")
        fracs = [Fraction(c) for c in coeffs]
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        vec = [int(f * den) for f in fracs]
        vec = poly_rem(vec, _phi_list(m))
        self.m = m
        self.num, self.den = _normalize(list(vec), den)

    @classmethod
    def _raw(cls, m, num, den):
        # assumes deg(num) < deg(Phi_m) already
        obj = object.__new__(cls)
        obj.m = m
        obj.num, obj.den = _normalize(list(num), den)
        return obj

    @classmethod
    def zero(cls, m):
        return cls._raw(m, [], 1)

    @classmethod
    def one(cls, m):
        return cls._raw(m, [1], 1)

    @classmethod
    def from_rational(cls, m, q):
        q = Fraction(q)
        return cls._raw(m, [q.numerator], q.denominator)

    @classmethod
    def zeta_power(cls, m, k):
        k %= m
        vec = [0] * (k + 1)
        vec[k] = 1
        return cls._raw(m, poly_rem(vec, _phi_list(m)), 1)

    @property
    def coeffs(self):
        """Canonical remainder as a tuple of Fractions."""
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self):
        return not self.num

    def is_rational(self):
        return len(self.num) <= 1

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("value is not rational")
        return Fraction(self.num[0], self.den) if self.num else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.m != self.m:
                raise ValueError(
                    f"incompatible cyclotomic contexts: m={self.m} and m={other.m}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.from_rational(self.m, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        den = math.lcm(self.den, o.den)
        fa, fb = den // self.den, den // o.den
        n = max(len(self.num), len(o.num))
        a, b = self.num, o.num
        vec = [
            (a[i] * fa if i < len(a) else 0) + (b[i] * fb if i < len(b) else 0)
            for i in range(n)
        ]
        return CycloNumber._raw(self.m, vec, den)

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber._raw(self.m, [-c for c in self.num], self.den)

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
        if len(o.num) <= 1:
            c = o.num[0] if o.num else 0
            return CycloNumber._raw(self.m, [a * c for a in self.num], self.den * o.den)
        if len(self.num) <= 1:
            c = self.num[0] if self.num else 0
            return CycloNumber._raw(self.m, [b * c for b in o.num], self.den * o.den)
        vec = poly_rem(poly_mul(list(self.num), list(o.num)), _phi_list(self.m))
        return CycloNumber._raw(self.m, vec, self.den * o.den)

    __rmul__ = __mul__

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

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNumber.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse, by the extended Euclidean algorithm
        against Phi_m over Q[x] (Phi_m is irreducible, so any nonzero
        remainder is a unit)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        a = [Fraction(c, self.den) for c in self.num]
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        r1 = a
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, rem = _frac_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        if len(r0) != 1:
            raise ArithmeticError("gcd with Phi_m is not constant")
        c = r0[0]
        inv = [x / c for x in s0]
        den = math.lcm(*(f.denominator for f in inv)) if inv else 1
        vec = poly_rem([int(f * den) for f in inv], _phi_list(self.m))
        return CycloNumber._raw(self.m, vec, den)

    def conjugate(self):
        """Image under zeta -> zeta^(-1) (complex conjugation)."""
        m = self.m
        vec = [0] * m
        for i, c in enumerate(self.num):
            vec[(m - i) % m] += c
        return CycloNumber._raw(m, poly_rem(vec, _phi_list(m)), self.den)

    def is_real(self):
        return self == self.conjugate()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNumber.from_rational(self.m, other)
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self.m == other.m and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.m, self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def _eval_mp(self):
        # at the caller's mpmath precision
        total = mpmath.mpc(0)
        for i, c in enumerate(self.num):
            if c:
                total += c * mpmath.expjpi(mpmath.mpf(2 * i) / self.m)
        return total / self.den

    def to_complex(self):
        with mpmath.workdps(40):
            return complex(self._eval_mp())

    def to_float(self):
        """Float value; requires exact realness.  Reporting only."""
        if not self.is_real():
            raise ValueError("value is not real")
        with mpmath.workdps(40):
            return float(self._eval_mp().real)

    def sign(self):
        """-1, 0 or 1.  Zero is decided exactly; otherwise the sign is read
        off a high-precision evaluation with an explicit error margin."""
        if self.is_zero():
            return 0
        if not self.is_real():
            raise ValueError("sign of a non-real value")
        scale = sum(abs(c) for c in self.num) / self.den + 1
        for dps in (40, 160, 640):
            with mpmath.workdps(dps):
                v = self._eval_mp().real
                margin = scale * mpmath.mpf(10) ** (8 - dps)
                if abs(v) > margin:
                    return 1 if v > 0 else -1
        raise ArithmeticError("could not separate value from zero numerically")

    def to_json(self):
        return {"m": self.m, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        return cls(data["m"], [Fraction(c) for c in data["coeffs"]])

    def __repr__(self):
        if not self.num:
            return f"CycloNumber(m={self.m}, 0)"
        parts = []
        for i, c in enumerate(self.num):
            if not c:
                continue
            q = Fraction(c, self.den)
            term = "z" if i == 1 else f"z^{i}" if i else ""
            mag = abs(q)
            if term and mag == 1:
                coef = ""
            else:
                coef = str(mag) + ("*" if term else "")
            s = coef + term
            parts.append(("- " if q < 0 else "+ " if parts else "") + s)
        body = " ".join(parts)
        if body.startswith("+ "):
            body = body[2:]
        return f"CycloNumber(m={self.m}, {body})"


def _frac_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _frac_sub(a, b):
    n = max(len(a), len(b))
    out = [
        (a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
        for i in range(n)
    ]
    return _frac_trim(out)


def _frac_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _frac_trim(out)


def _frac_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lead
        if c:
            q[i - db] = c
            for k in range(db + 1):
                a[i - db + k] -= c * b[k]
    return _frac_trim(q), _frac_trim(a[:db])


def sin_pi_frac(k, n):
    """Exact sin(k*pi/n) as a CycloNumber with m = 4n."""
    if n < 2:
        raise ValueError(f"denominator n must be >= 2, got {n}")
    return _sin_cached(k % (2 * n), n)


@lru_cache(maxsize=None)
def _sin_cached(k, n):
    m = 4 * n
    vec = [0] * m
    vec[(2 * k - n) % m] += 1
    vec[(-2 * k - n) % m] -= 1
    return CycloNumber._raw(m, poly_rem(vec, _phi_list(m)), 2)


def cos_pi_frac(k, n):
    """Exact cos(k*pi/n) as a CycloNumber with m = 4n."""
    if n < 2:
        raise ValueError(f"denominator n must be >= 2, got {n}")
    return _cos_cached(k % (2 * n), n)


@lru_cache(maxsize=None)
def _cos_cached(k, n):
    m = 4 * n
    vec = [0] * m
    vec[(2 * k) % m] += 1
    vec[(-2 * k) % m] += 1
    return CycloNumber._raw(m, poly_rem(vec, _phi_list(m)), 2)


@lru_cache(maxsize=None)
def sqrt2_element(m):
    if m % 8:
        raise ValueError(f"sqrt(2) does not lie in Q(zeta_{m})")
    vec = [0] * m
    vec[m // 8] += 1
    vec[m - m // 8] += 1
    return CycloNumber._raw(m, poly_rem(vec, _phi_list(m)), 1)


@lru_cache(maxsize=None)
def sqrt3_element(m):
    if m % 12:
        raise ValueError(f"sqrt(3) does not lie in Q(zeta_{m})")
    vec = [0] * m
    vec[m // 12] += 1
    vec[m - m // 12] += 1
    return CycloNumber._raw(m, poly_rem(vec, _phi_list(m)), 1)


def radical_string(x):
    """Readable exact form when one exists: a rational string, or a rational
    multiple of sqrt(2) or sqrt(3).  Returns None otherwise."""
    if x.is_rational():
        return str(x.as_fraction())
    roots = []
    if x.m % 8 == 0:
        roots.append((2, sqrt2_element(x.m)))
    if x.m % 12 == 0:
        roots.append((3, sqrt3_element(x.m)))
    for k, root in roots:
        q = x / root
        if q.is_rational():
            f = q.as_fraction()
            head = f"sqrt({k})" if abs(f.numerator) == 1 else f"{abs(f.numerator)}*sqrt({k})"
            if f.numerator < 0:
                head = "-" + head
            return head if f.denominator == 1 else f"{head}/{f.denominator}"
    return None
