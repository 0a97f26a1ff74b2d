"""Coefficient fields: exact rationals (the default) and prime fields.

Rationals are plain :class:`fractions.Fraction`. Prime-field elements are
:class:`GF` instances which support the same arithmetic operators, so the
generic algorithms in this package run unchanged over either field.
"""
from fractions import Fraction
from numbers import Rational


class GF:
    """An element of the prime field Z/pZ.

    Mixed arithmetic with ``int`` is supported; the modulus is carried by
    every element.

    >>> a = GF(3, 7)
    >>> a * 5, 1 / a
    (GF(1, 7), GF(5, 7))
    """

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        if isinstance(v, Fraction):
            if v.denominator % p == 0:
                raise ZeroDivisionError(f"denominator of {v} vanishes mod {p}")
            v = v.numerator * pow(v.denominator, -1, p)
        self.v = int(v) % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, GF):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return GF(other, self.p).v
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GF(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GF(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return GF(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e):
        return GF(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"GF({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Field:
    """A coefficient field tag: ``Field()`` is Q, ``Field(p)`` is GF(p)."""

    def __init__(self, p=None):
        if p is not None and (p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1))):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __call__(self, x):
        """Coerce an int, Fraction, or rational string into this field."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.p is None:
            if isinstance(x, GF):
                raise TypeError("cannot coerce a prime-field element to Q")
            return Fraction(x)
        if isinstance(x, GF):
            if x.p != self.p:
                raise ValueError("mixed prime fields")
            return x
        return GF(Fraction(x), self.p)

    @property
    def tag(self):
        return "q" if self.p is None else f"p:{self.p}"

    @classmethod
    def from_tag(cls, tag):
        if tag == "q":
            return cls()
        if tag.startswith("p:"):
            return cls(int(tag[2:]))
        raise ValueError(f"unknown field tag {tag!r}")

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(self.p)

    def __repr__(self):
        return f"Field({self.p})" if self.p else "Field()"


QQ = Field()


def scalar(x):
    """Normalize a number to an exact scalar; ints and strings become Fractions."""
    if isinstance(x, (Fraction, GF)):
        return x
    if isinstance(x, (int, Rational, str)):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def field_of(x):
    return Field(x.p) if isinstance(x, GF) else QQ


def format_scalar(x):
    """``p/q`` or ``p`` when the denominator is one; prime-field values as ints."""
    if isinstance(x, GF):
        return str(x.v)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
