"""The value set used by polygon valuations: rationals plus infinity.

INFINITY is a singleton that compares above every Fraction, so ``min`` and
``sorted`` work on mixed values.  Valuations of field elements may be
negative; the polygon-level checks enforce nonnegativity where required.
"""

from fractions import Fraction


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __neg__(self):
        raise ArithmeticError("cannot negate infinity")


INFINITY = _Infinity()


def is_finite(v):
    return v is not INFINITY


def val_str(v):
    """Render a value for reports: "3/2" or "inf"."""
    return "inf" if v is INFINITY else str(Fraction(v))


def parse_val(s):
    s = s.strip()
    if s == "inf":
        return INFINITY
    return Fraction(s)
