"""Rationals and the real/imaginary quadratic field Q(sqrt(d)).

Rat is a plain fractions.Fraction.  QuadElem is a + b*sqrt(d) with one
squarefree d fixed per computation context; arithmetic between elements
with different d is rejected, not coerced.
"""

from fractions import Fraction

from ..errors import InputError
from .intfactor import factorint

Rat = Fraction


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise InputError(f"expected a rational value, got {x!r}")


def is_squarefree(d: int) -> bool:
    if d == 0:
        return False
    return all(e == 1 for e in factorint(d).values())


def rational_sqrt(x: Fraction):
    """Exact square root of x if it is the square of a rational, else None."""
    if x < 0:
        return None
    from math import isqrt

    pn, pd = isqrt(x.numerator), isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


class QuadElem:
    """a + b*sqrt(d) with rational a, b and a fixed squarefree integer d."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=2):
        a = as_rat(a)
        b = as_rat(b)
        if d in (0, 1) or not is_squarefree(d):
            raise InputError(f"d must be a squarefree integer != 0, 1; got {d}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *_):
        raise AttributeError("QuadElem is immutable")

    def _coerce(self, other):
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise InputError(
                    f"mixed quadratic contexts: sqrt({self.d}) vs sqrt({other.d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(other, 0, self.d)
        return None

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def rational_value(self) -> Fraction:
        if self.b != 0:
            raise InputError(f"{self} is not rational")
        return self.a

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero quadratic element")
        return QuadElem(self.a / n, -self.b / n, self.d)

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

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadElem(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadElem):
            if other.d != self.d:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt({self.d})"


def quad_or_rat(x):
    """Normalize QuadElem with zero irrational part down to a Fraction."""
    if isinstance(x, QuadElem) and x.b == 0:
        return x.a
    return x
