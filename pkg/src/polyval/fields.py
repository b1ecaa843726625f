"""Coefficient fields for the series constructions.

Three kinds: the rationals (elements are Fractions), prime fields
(canonical ints in [0, p)), and small extension fields GF(p^k) encoded as
ints in [0, p^k) with base-p digits as polynomial coefficients, reduced
modulo a fixed irreducible.  Each field carries its Frobenius-generated
automorphism ``sigma`` (identity on Q and on prime fields) and its order.
"""

from __future__ import annotations

from fractions import Fraction


class Rationals:
    name = "Q"
    finite = False
    sigma_order = 1
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def sigma(self, a):
        return a

    def from_int(self, k):
        return Fraction(k)

    def random_element(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    def random_nonzero(self, rng):
        while True:
            a = self.random_element(rng)
            if a:
                return a

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")

    def __repr__(self):
        return "Rationals()"


QQ = Rationals()


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """GF(p); elements are canonical ints in [0, p)."""

    finite = True
    sigma_order = 1

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1 % p

    @property
    def order(self):
        return self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def sigma(self, a):
        return a % self.p

    def from_int(self, k):
        return k % self.p

    def elements(self):
        return range(self.p)

    def random_element(self, rng):
        return rng.randrange(self.p)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class ExtensionField:
    """GF(p^k) for k in {2, 3}, p^k small enough for full op tables.

    Elements are ints in [0, p^k): the base-p digits of e are the
    coefficients of a polynomial in the generator w, reduced modulo a fixed
    monic irreducible of degree k (the lexicographically first one).
    ``sigma`` is the Frobenius a -> a^p, of order k.
    """

    finite = True

    def __init__(self, p, k):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k not in (2, 3):
            raise ValueError(f"unsupported extension degree {k}")
        q = p**k
        if q > 512:
            raise ValueError(f"field order {q} too large for table-based GF")
        self.p = p
        self.k = k
        self.order = q
        self.name = f"F{q}"
        self.sigma_order = k
        self.zero = 0
        self.one = 1
        self.modulus = self._find_irreducible()
        self._mul_table = self._build_mul_table()
        self._sigma_table = [self._pow(a, p) for a in range(q)]

    def _find_irreducible(self):
        # monic deg-k poly with no root in GF(p); enough for k <= 3
        p, k = self.p, self.k
        for code in range(p**k):
            coeffs = self._digits(code) + [1]
            if all(self._eval_mod_p(coeffs, x) for x in range(p)):
                return coeffs
        raise AssertionError("no irreducible polynomial found")

    def _eval_mod_p(self, coeffs, x):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def _digits(self, e):
        out = []
        for _ in range(self.k):
            out.append(e % self.p)
            e //= self.p
        return out

    def _encode(self, digits):
        acc = 0
        for d in reversed(digits):
            acc = acc * self.p + (d % self.p)
        return acc

    def _mul_raw(self, a, b):
        p, k = self.p, self.k
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for i in range(len(prod) - 1, k - 1, -1):
            c = prod[i] % p
            prod[i] = 0
            if c:
                for t in range(k):
                    prod[i - k + t] -= c * self.modulus[t]
        return self._encode([c % p for c in prod[:k]])

    def _build_mul_table(self):
        q = self.order
        return [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]

    def _pow(self, a, e):
        acc = self.one
        base = a
        while e:
            if e & 1:
                acc = self._mul_raw(acc, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return acc

    def add(self, a, b):
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    def sub(self, a, b):
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x - y) % self.p for x, y in zip(da, db)])

    def neg(self, a):
        return self._encode([(-x) % self.p for x in self._digits(a)])

    def mul(self, a, b):
        return self._mul_table[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._pow(a, self.order - 2)

    def sigma(self, a):
        return self._sigma_table[a]

    def from_int(self, k):
        return k % self.p

    def elements(self):
        return range(self.order)

    def random_element(self, rng):
        return rng.randrange(self.order)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.order)

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.k == self.k
        )

    def __hash__(self):
        return hash(("ExtensionField", self.p, self.k))

    def __repr__(self):
        return f"ExtensionField({self.p}, {self.k})"


def finite_field(q):
    """GF(q) for a prime power q (extension degree at most 3)."""
    if q < 2:
        raise ValueError(f"not a prime power: {q}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            k = 0
            r = q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1:
                raise ValueError(f"not a prime power: {q}")
            return ExtensionField(p, k) if k > 1 else PrimeField(p)
        p += 1
    return PrimeField(q)
